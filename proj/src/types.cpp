#include "tailorder/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tailorder {

Box::Box(Point lo, Point hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) {
    throw DimensionError("box corners have different dimensions");
  }
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (!(lower[k] <= upper[k])) {
      throw DomainError("box lower corner exceeds upper corner");
    }
  }
}

void GridConfig::validate() const {
  if (resolution < 8) throw DomainError("grid resolution must be at least 8");
  if (!(tau > 0.0)) throw DomainError("tau must be positive");
  if (!(interior_margin >= 0.0 && interior_margin < 0.5)) {
    throw DomainError("interior margin must lie in [0, 0.5)");
  }
}

void LimitSchedule::validate() const {
  if (!(s0 > 0.0 && s0 < 1.0)) throw DomainError("schedule s0 must lie in (0,1)");
  if (!(ratio > 0.0 && ratio < 1.0)) throw DomainError("schedule ratio must lie in (0,1)");
  if (steps < 3) throw DomainError("schedule needs at least 3 steps");
}

double LimitSchedule::at(int k) const { return s0 * std::pow(ratio, k); }

bool ValidityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& ValidityReport::at(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + std::string(name));
}

double l1_norm(const Point& p) {
  return std::accumulate(p.begin(), p.end(), 0.0, [](double a, double x) { return a + std::abs(x); });
}

double l2_norm(const Point& p) {
  double s = 0.0;
  for (double x : p) s += x * x;
  return std::sqrt(s);
}

}  // namespace tailorder
