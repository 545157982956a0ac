#pragma once

#include <functional>
#include <initializer_list>
#include <memory>
#include <span>

#include "tailorder/descriptor.hpp"
#include "tailorder/types.hpp"

namespace tailorder {

/// An immutable d-dimensional copula.
///
/// `eval` checks the argument, clamps coordinates that overshoot [0,1] by at
/// most kBoundaryTolerance and, for the shipped families, answers exactly at
/// the boundary (0 when some u_k = 0, u_k when all other coordinates are 1).
/// `eval_raw` performs the same checks but always runs the family formula,
/// which is what the validity audits inspect.
class Copula {
 public:
  using Evaluator = std::function<double(std::span<const double>)>;

  Copula(int dim, Evaluator raw, Descriptor descriptor, bool exact_boundary = true);

  /// Wraps an arbitrary map; no boundary shortcuts are applied.
  static Copula from_function(int dim, Evaluator fn, std::string label = "custom");

  int dimension() const { return dim_; }
  const Descriptor& descriptor() const { return *descriptor_; }
  DescriptorPtr descriptor_ptr() const { return descriptor_; }

  double eval(std::span<const double> u) const;
  double eval(std::initializer_list<double> u) const { return eval(std::span(u.begin(), u.size())); }
  double operator()(std::span<const double> u) const { return eval(u); }
  double operator()(std::initializer_list<double> u) const { return eval(u); }

  double eval_raw(std::span<const double> u) const;

 private:
  void check_argument(std::span<const double> u, double* clamped) const;

  int dim_;
  std::shared_ptr<const Evaluator> raw_;
  DescriptorPtr descriptor_;
  bool exact_boundary_;
};

Copula independence(int dim = 2);
Copula comonotone(int dim = 2);
/// Lower Frechet bound; only a copula for d = 2.
Copula countermonotone();

/// Signed 2^d-corner inclusion-exclusion sum over the box.
double h_volume(const Copula& c, const Box& b);

/// Grounded / uniform margins / d-increasing on a lattice of `g.resolution`
/// points per axis. Negative volumes down to -volume_tolerance are accepted.
ValidityReport validate_copula(const Copula& c, const GridConfig& g = {},
                               double volume_tolerance = kVolumeTolerance);

/// Rescaled two-piece gluing of two bivariate copulas along `axis` (1 or 2)
/// at `split` in (0,1). For axis 1:
///   split * left(u1/split, u2)                                  if u1 <= split
///   split * u2 + (1-split) * right((u1-split)/(1-split), u2)    otherwise
Copula glue(const Copula& left, const Copula& right, int axis, double split);

/// (u, v) -> u + v - 1 + c(1-u, 1-v).
Copula survival(const Copula& c);

/// Diagonal section t -> C(t, ..., t).
double diagonal_value(const Copula& c, double t);

}  // namespace tailorder
