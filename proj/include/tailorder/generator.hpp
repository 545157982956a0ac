#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "tailorder/descriptor.hpp"

namespace tailorder {

/// Archimedean generator: continuous, strictly decreasing on [0,1], phi(1) = 0.
class Generator {
 public:
  using Fn = std::function<double(double)>;

  /// `inverse` may be empty, in which case the generalized inverse is found by
  /// bisection. `log_phi_tail(L)` returns log phi(exp(-L)); when empty it is
  /// derived from phi and limited to L where exp(-L) is representable.
  Generator(Fn phi, Fn inverse, bool strict, std::optional<double> rv_index_at_0, GeneratorSpec spec,
            Fn log_phi_tail = {});

  double phi(double t) const;
  double operator()(double t) const { return phi(t); }

  /// inf{ t in [0,1] : phi(t) <= x }.
  double generalized_inverse(double x) const;

  bool strict() const { return strict_; }
  double phi_at_zero() const { return phi_zero_; }

  /// alpha with phi regularly varying at 0 with parameter -alpha, when known
  /// analytically (+inf encodes rapid variation).
  std::optional<double> rv_index_at_0() const { return rv_index_; }

  double log_phi_tail(double neg_log_t) const;

  const GeneratorSpec& spec() const { return spec_; }

 private:
  double bisect_inverse(double x) const;

  Fn phi_;
  Fn inverse_;
  Fn log_phi_tail_;
  bool strict_;
  double phi_zero_;
  std::optional<double> rv_index_;
  GeneratorSpec spec_;
};

/// phi(t) = (t^-theta - 1)/theta, theta > 0; rv index theta.
Generator clayton_generator(double theta);
/// phi(t) = (-log t)^theta, theta >= 1; slowly varying at 0.
Generator gumbel_generator(double theta);
/// phi(t) = -log(1 - (1-t)^theta), theta >= 1; slowly varying at 0.
Generator joe_generator(double theta);
/// phi(t) = 1 - t; nonstrict, generates max(u1 + ... + ud - d + 1, 0).
Generator nonstrict_linear_generator();

Generator make_generator(const GeneratorSpec& spec);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace tailorder
