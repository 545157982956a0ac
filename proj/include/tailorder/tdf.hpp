#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include "tailorder/descriptor.hpp"
#include "tailorder/types.hpp"

namespace tailorder {

enum class Provenance { analytic, estimated };

/// Lower tail dependence function Lambda: R_+^d -> R_+.
class TailDepFunction {
 public:
  using Fn = std::function<double(std::span<const double>)>;

  TailDepFunction(int dim, Fn fn, Provenance provenance, TdfSpec spec);

  int dimension() const { return dim_; }
  Provenance provenance() const { return provenance_; }
  const TdfSpec& spec() const { return spec_; }

  /// Throws DimensionError on size mismatch and DomainError on negative input.
  double operator()(std::span<const double> w) const;
  double operator()(std::initializer_list<double> w) const {
    return (*this)(std::span(w.begin(), w.size()));
  }

 private:
  int dim_;
  Fn fn_;
  Provenance provenance_;
  TdfSpec spec_;
};

/// phi_Lambda(t) = Lambda(t, 1-t) on [0,1].
struct SimplexTdf {
  std::function<double(double)> phi;
  std::string label;

  double operator()(double t) const { return phi(t); }
};

/// Archimedean closed form for a generator regularly varying at 0 with
/// parameter -alpha: 0 (alpha = 0), (sum w_k^-alpha)^(-1/alpha), min_k w_k
/// (alpha = inf).
TailDepFunction archimedean_tdf(double alpha, int dim);

TailDepFunction zero_tdf(int dim = 2);
TailDepFunction min_tdf(int dim = 2);

SimplexTdf fig1_parabola();   // t (1 - t)
SimplexTdf fig1_piecewise();  // min{t/2, 1 - t}

/// (min_k w_k)^2: bounded and increasing but not homogeneous; used to
/// exercise the audit.
TailDepFunction broken_square_tdf(int dim = 2);

SimplexTdf simplex_restriction(const TailDepFunction& lambda);

/// Lambda(w) = (w1 + w2) phi(w1 / (w1 + w2)), Lambda(0,0) = 0. Rejects phi
/// violating 0 <= phi(t) <= min{t, 1-t} or midpoint concavity (tol 1e-9) on
/// a 257-point sample.
TailDepFunction lift(const SimplexTdf& phi);

TailDepFunction make_tdf(const TdfSpec& spec);

/// bounds, d_increasing, homogeneity, lipschitz, concavity.
ValidityReport validate_tdf(const TailDepFunction& lambda, const GridConfig& g = {},
                            double tolerance = 1e-9);

}  // namespace tailorder
