#include "tailorder/generator.hpp"

#include <cmath>
#include <string>

#include "tailorder/types.hpp"

namespace tailorder {

Generator::Generator(Fn phi, Fn inverse, bool strict, std::optional<double> rv_index_at_0, GeneratorSpec spec,
                     Fn log_phi_tail)
    : phi_(std::move(phi)),
      inverse_(std::move(inverse)),
      log_phi_tail_(std::move(log_phi_tail)),
      strict_(strict),
      phi_zero_(0.0),
      rv_index_(rv_index_at_0),
      spec_(std::move(spec)) {
  phi_zero_ = phi_(0.0);
}

double Generator::phi(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("generator argument outside [0,1]");
  return phi_(t);
}

double Generator::generalized_inverse(double x) const {
  if (std::isnan(x) || x < 0.0) throw DomainError("generalized inverse needs x >= 0");
  if (x >= phi_zero_) return 0.0;
  if (x == 0.0) return 1.0;
  if (inverse_) return inverse_(x);
  return bisect_inverse(x);
}

double Generator::bisect_inverse(double x) const {
  if (std::abs(phi_(1.0)) > 1e-12) {
    throw NumericalError("generalized inverse cannot bracket: phi(1) != 0");
  }
  double lo = 0.0;  // phi(lo) > x
  double hi = 1.0;  // phi(hi) <= x
  for (int it = 0; it < 200 && hi - lo >= 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = phi_(mid);
    if (std::isnan(v)) throw NumericalError("generator returned NaN during bisection");
    if (v <= x) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double Generator::log_phi_tail(double neg_log_t) const {
  if (log_phi_tail_) return log_phi_tail_(neg_log_t);
  const double t = std::exp(-neg_log_t);
  if (t == 0.0) throw NumericalError("log_phi_tail: exp(-L) underflows and no closed form is available");
  return std::log(phi_(t));
}

Generator clayton_generator(double theta) {
  if (!(theta > 0.0) || std::isinf(theta)) throw DomainError("Clayton parameter must be in (0, inf)");
  auto phi = [theta](double t) { return t == 0.0 ? kInfinity : std::expm1(-theta * std::log(t)) / theta; };
  auto inv = [theta](double x) { return std::exp(-std::log1p(theta * x) / theta); };
  auto tail = [theta](double L) { return theta * L + std::log(-std::expm1(-theta * L)) - std::log(theta); };
  return Generator(phi, inv, true, theta, GeneratorSpec{GeneratorSpec::Kind::clayton, theta, ""}, tail);
}

Generator gumbel_generator(double theta) {
  if (!(theta >= 1.0) || std::isinf(theta)) throw DomainError("Gumbel parameter must be in [1, inf)");
  auto phi = [theta](double t) { return t == 0.0 ? kInfinity : std::pow(-std::log(t), theta); };
  auto inv = [theta](double x) { return std::exp(-std::pow(x, 1.0 / theta)); };
  auto tail = [theta](double L) { return theta * std::log(L); };
  return Generator(phi, inv, true, 0.0, GeneratorSpec{GeneratorSpec::Kind::gumbel, theta, ""}, tail);
}

Generator joe_generator(double theta) {
  if (!(theta >= 1.0) || std::isinf(theta)) throw DomainError("Joe parameter must be in [1, inf)");
  auto phi = [theta](double t) { return -std::log(-std::expm1(theta * std::log1p(-t))); };
  auto inv = [theta](double x) { return -std::expm1(std::log1p(-std::exp(-x)) / theta); };
  auto tail = [theta](double L) {
    // 1 - (1 - e^-L)^theta = theta e^-L (1 + O(e^-L)); below exp(-700) only the
    // leading term survives in double precision anyway.
    if (L < 700.0) return std::log(-std::log(-std::expm1(theta * std::log1p(-std::exp(-L)))));
    return std::log(L - std::log(theta));
  };
  return Generator(phi, inv, true, 0.0, GeneratorSpec{GeneratorSpec::Kind::joe, theta, ""}, tail);
}

Generator nonstrict_linear_generator() {
  auto phi = [](double t) { return 1.0 - t; };
  auto inv = [](double x) { return x >= 1.0 ? 0.0 : 1.0 - x; };
  auto tail = [](double L) { return std::log(-std::expm1(-L)); };
  return Generator(phi, inv, false, 0.0, GeneratorSpec{GeneratorSpec::Kind::nonstrict_linear, 1.0, ""}, tail);
}

Generator make_generator(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::clayton:
      return clayton_generator(spec.theta);
    case GeneratorSpec::Kind::gumbel:
      return gumbel_generator(spec.theta);
    case GeneratorSpec::Kind::joe:
      return joe_generator(spec.theta);
    case GeneratorSpec::Kind::nonstrict_linear:
      return nonstrict_linear_generator();
    case GeneratorSpec::Kind::custom:
      break;
  }
  throw DescriptorError("custom generators cannot be rebuilt from a descriptor");
}

}  // namespace tailorder
