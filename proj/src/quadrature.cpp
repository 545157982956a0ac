#include "tailorder/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/distributions/normal.hpp>

#include "tailorder/types.hpp"

namespace tailorder {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("normal quantile needs p in [0,1]");
  if (p == 0.0) return -std::numeric_limits<double>::infinity();
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double bivariate_normal_cdf(double h, double k, double rho, int nodes) {
  return bivariate_normal_cdf(h, k, rho, gauss_legendre(nodes));
}

double bivariate_normal_cdf(double h, double k, double rho, const QuadratureRule& rule) {
  if (!(std::abs(rho) < 1.0)) throw DomainError("bivariate normal CDF needs |rho| < 1");
  if (h == -INFINITY || k == -INFINITY) return 0.0;
  if (h == INFINITY) return normal_cdf(k);
  if (k == INFINITY) return normal_cdf(h);
  const double ph = normal_cdf(h);
  const double pk = normal_cdf(k);
  if (rho == 0.0) return ph * pk;

  const double top = std::asin(rho);
  const double half = 0.5 * top;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double a = half * (rule.nodes[i] + 1.0);
    const double c = std::cos(a);
    sum += rule.weights[i] * std::exp(-(h * h - 2.0 * h * k * std::sin(a) + k * k) / (2.0 * c * c));
  }
  const double value = ph * pk + half * sum / (2.0 * std::numbers::pi);
  return std::clamp(value, std::max(0.0, ph + pk - 1.0), std::min(ph, pk));
}

}  // namespace tailorder
