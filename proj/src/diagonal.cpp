#include "tailorder/diagonal.hpp"

#include <algorithm>
#include <cmath>

namespace tailorder {

namespace {

constexpr double kTol = 1e-12;

void record(CheckResult& r, double violation, double t) {
  if (violation > kTol && violation > r.worst) {
    r.passed = false;
    r.worst = violation;
    r.witness = Point{t};
  }
}

std::vector<double> grid(int points) {
  if (points < 3) throw DomainError("diagonal audit needs at least 3 points");
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) t[i] = static_cast<double>(i) / (points - 1);
  return t;
}

}  // namespace

DiagonalSection power_diagonal(double p, int dim) {
  if (!(p > 0.0) || std::isinf(p)) throw DomainError("power diagonal exponent must be positive");
  return DiagonalSection{[p](double t) { return std::pow(t, p); }, dim,
                         DiagonalSpec{DiagonalSpec::Kind::power, p, ""}};
}

DiagonalSection clayton_diagonal(double theta) {
  if (!(theta > 0.0) || std::isinf(theta)) throw DomainError("Clayton parameter must be in (0, inf)");
  return DiagonalSection{[theta](double t) { return t == 0.0 ? 0.0 : t * std::pow(2.0 - std::pow(t, theta), -1.0 / theta); },
                         2, DiagonalSpec{DiagonalSpec::Kind::clayton, theta, ""}};
}

DiagonalSection diagonal_of(const Copula& c) {
  return DiagonalSection{[c](double t) { return diagonal_value(c, t); }, c.dimension(),
                         DiagonalSpec{DiagonalSpec::Kind::custom, 0.0, "diagonal of " + c.descriptor().family_name()}};
}

DiagonalSection make_diagonal(const DiagonalSpec& spec, int dim) {
  switch (spec.kind) {
    case DiagonalSpec::Kind::power:
      return power_diagonal(spec.param, dim);
    case DiagonalSpec::Kind::clayton:
      if (dim != 2) throw DescriptorError("clayton diagonal is bivariate");
      return clayton_diagonal(spec.param);
    case DiagonalSpec::Kind::custom:
      break;
  }
  throw DescriptorError("custom diagonals cannot be rebuilt from a descriptor");
}

ValidityReport validate_diagonal(const DiagonalSection& delta, int points) {
  const auto t = grid(points);
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = delta(t[i]);

  CheckResult endpoints{"endpoints"};
  CheckResult below{"below_identity"};
  CheckResult increasing{"increasing"};
  CheckResult lipschitz{"lipschitz"};
  record(endpoints, std::abs(v.front()), 0.0);
  record(endpoints, std::abs(v.back() - 1.0), 1.0);
  const double h = t[1] - t[0];
  for (std::size_t i = 0; i < t.size(); ++i) {
    record(below, v[i] - t[i], t[i]);
    if (i + 1 < t.size()) {
      record(increasing, v[i] - v[i + 1], t[i]);
      record(lipschitz, std::abs(v[i + 1] - v[i]) - delta.dim * h, t[i]);
    }
  }
  return ValidityReport{{endpoints, below, increasing, lipschitz}};
}

ValidityReport validate_semilinear_diagonal(const DiagonalSection& delta, int points) {
  auto report = validate_diagonal(delta, points);
  const auto t = grid(points);
  CheckResult ratio{"ratio_increasing"};
  CheckResult ratio_sq{"ratio_square_decreasing"};
  double prev_r = 0.0;
  double prev_q = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double v = delta(t[i]);
    const double r = v / t[i];
    const double q = r / t[i];
    if (i > 1) {
      record(ratio, (prev_r - r) / std::max(1.0, std::abs(prev_r)), t[i]);
      record(ratio_sq, (q - prev_q) / std::max(1.0, std::abs(prev_q)), t[i]);
    }
    prev_r = r;
    prev_q = q;
  }
  report.checks.push_back(ratio);
  report.checks.push_back(ratio_sq);
  return report;
}

}  // namespace tailorder
