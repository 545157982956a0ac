#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tailorder/copula.hpp"
#include "tailorder/diagonal.hpp"
#include "tailorder/generator.hpp"
#include "tailorder/tdf.hpp"

namespace tailorder {

enum class OrderStatus { holds, holds_strictly, fails, indistinguishable };

std::string to_string(OrderStatus s);

struct Witness {
  Point point;   // point u, direction w or abscissa t (as a 1-vector)
  double first;  // value of the left-hand object
  double second; // value of the right-hand object
};

struct OrderVerdict {
  OrderStatus status = OrderStatus::holds;
  std::optional<Witness> witness;  // always present for fails
  double margin = 0.0;             // worst signed gap (second - first)
  GridConfig grid;
  std::optional<double> epsilon;   // verified neighbourhood, when relevant
  std::vector<std::string> notes;

  bool holds() const { return status == OrderStatus::holds || status == OrderStatus::holds_strictly; }
};

nlohmann::json to_json(const OrderVerdict& v);

/// Cone {w in (0,inf)^d : min_k w_k >= c ||w||_1}, c in (0, 1/d].
struct ConeSpec {
  double c = 0.2;
};

/// Lambda1 <= Lambda2 on the simplex lattice; strict means a gap above tau on
/// every lattice point whose coordinates are all >= interior_margin.
OrderVerdict check_tdo(const TailDepFunction& first, const TailDepFunction& second, const GridConfig& g = {});

/// C1 <= C2 + tau on the lattice eps*(i_1,...,i_d)/n inside the Euclidean
/// ball of radius eps, plus any extra probe points inside the ball.
OrderVerdict check_loc(const Copula& first, const Copula& second, double eps, const GridConfig& g = {},
                       std::span<const Point> extra_probes = {});

/// Halving search eps = 2^-k, k = 0..20, for check_loc. Reports the first eps
/// that holds; if none does the verdict of the smallest eps is returned with a
/// note, which is not a refutation.
OrderVerdict search_loc(const Copula& first, const Copula& second, const GridConfig& g = {},
                        std::span<const Point> extra_probes = {});

/// Lower orthant order on the full lattice of [0,1]^d.
OrderVerdict check_lower_orthant(const Copula& first, const Copula& second, const GridConfig& g = {});

/// Per direction: C1(s w)/s <= C2(s w)/s + tau along the schedule, restricted
/// to s with s w in [0,1]^d.
std::vector<OrderVerdict> check_too(const Copula& first, const Copula& second, std::span<const Point> directions,
                                    const LimitSchedule& sched = {}, const GridConfig& g = {});

/// Aggregate of per-direction verdicts: fails if any fails, indistinguishable
/// if all are, holds otherwise.
OrderVerdict combine_directions(const std::vector<OrderVerdict>& per_direction);

/// 21-point simplex fan plus (1/2, 1) and (1, 1/2).
std::vector<Point> default_too_directions();

/// Scans the cone points with Euclidean norm <= eps. The strict tail order is
/// checked first; when it does not hold a note is attached.
OrderVerdict check_cone_order(const Copula& first, const Copula& second, const ConeSpec& cone, double eps,
                              const GridConfig& g = {});
OrderVerdict search_cone_order(const Copula& first, const Copula& second, const ConeSpec& cone,
                               const GridConfig& g = {});

/// Largest lattice prefix [0, eps] (t = i/n) on which delta1 <= delta2 + tau.
OrderVerdict check_diagonal_order(const DiagonalSection& first, const DiagonalSection& second,
                                  const GridConfig& g = {});

/// f = phi1 o phi2^[-1]; f(x+y) <= f(x) + f(y) + tau on x, y in [M, M*span]
/// (geometric lattice).
OrderVerdict subadditivity_check(const Generator& first, const Generator& second, double M,
                                 const GridConfig& g = {}, double span = 100.0);

/// phi1/phi2 nondecreasing within tau on t = eps*i/(n+1), i = 1..n.
OrderVerdict ratio_monotonicity_check(const Generator& first, const Generator& second, double eps,
                                      const GridConfig& g = {});

struct EquivalenceReport {
  bool strict_tdo = false;
  bool tdc_less = false;
  bool index_less = false;
  double alpha_first = 0.0;
  double alpha_second = 0.0;
  double tdc_first = 0.0;
  double tdc_second = 0.0;

  bool consistent() const { return strict_tdo == tdc_less && tdc_less == index_less; }
};

/// Strict tail order of the analytic Lambdas, lambda ordering through
/// d^(-1/alpha), and alpha ordering. Indices come from the generator when
/// known, otherwise from regular_variation_index (NumericalError if that does
/// not converge).
EquivalenceReport archimedean_order_equivalence(const Generator& first, const Generator& second, int dim = 2,
                                                const GridConfig& g = {});

/// Simplex lattice {w >= 0 : sum w = 1} with `resolution` steps per edge.
std::vector<Point> simplex_lattice(int dim, int resolution);

}  // namespace tailorder
