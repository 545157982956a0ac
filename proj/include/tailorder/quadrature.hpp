#pragma once

#include <vector>

namespace tailorder {

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes from Newton iteration on P_n.
QuadratureRule gauss_legendre(int n);

double normal_cdf(double x);
double normal_quantile(double p);

/// P(X <= h, Y <= k) for a standard bivariate normal with correlation rho,
/// |rho| < 1, via the arcsine substitution of the rho-integral:
///   Phi(h)Phi(k) + 1/(2 pi) int_0^asin(rho) exp(-(h^2 - 2hk sin a + k^2) / (2 cos^2 a)) da
double bivariate_normal_cdf(double h, double k, double rho, int nodes = 64);
double bivariate_normal_cdf(double h, double k, double rho, const QuadratureRule& rule);

}  // namespace tailorder
