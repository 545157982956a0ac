#include <doctest.h>

#include <cmath>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/owens_t.hpp>

#include "tailorder/families.hpp"
#include "tailorder/quadrature.hpp"
#include "tailorder/taildep.hpp"

using namespace tailorder;

namespace {

// Owen's T-function representation of the bivariate normal orthant probability.
double owen_bivariate(double h, double k, double rho) {
  const boost::math::normal n;
  const double r = std::sqrt(1.0 - rho * rho);
  const double ah = (k - rho * h) / (h * r);
  const double ak = (h - rho * k) / (k * r);
  const double beta = (h * k > 0.0 || (h * k == 0.0 && h + k >= 0.0)) ? 0.0 : 0.5;
  return 0.5 * cdf(n, h) + 0.5 * cdf(n, k) - boost::math::owens_t(h, ah) - boost::math::owens_t(k, ak) - beta;
}

double midpoint_2d(const TailDepFunction& lambda, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sum += lambda({(i + 0.5) / n, (j + 0.5) / n});
  }
  return sum / (static_cast<double>(n) * n);
}

}  // namespace

TEST_CASE("bivariate normal against Owen's T") {
  const boost::math::normal n;
  for (double rho : {-0.9, -0.5, 0.2, 0.5, 0.95}) {
    for (double u : {0.03, 0.3, 0.7}) {
      for (double v : {0.1, 0.45, 0.9}) {
        CAPTURE(rho);
        CAPTURE(u);
        CAPTURE(v);
        const double h = quantile(n, u);
        const double k = quantile(n, v);
        const double oracle = owen_bivariate(h, k, rho);
        CHECK(std::abs(bivariate_normal_cdf(h, k, rho) - oracle) <= 1e-10);
        CHECK(std::abs(gaussian(rho)({u, v}) - oracle) <= 1e-10);
      }
    }
  }
  CHECK(std::abs(normal_cdf(1.3) - cdf(n, 1.3)) <= 1e-15);
  CHECK(std::abs(normal_quantile(0.01) - quantile(n, 0.01)) <= 1e-12);
}

TEST_CASE("Spearman limit against brute-force grids") {
  // (d+1) times the integral over the unit square
  const double brute_min = 3.0 * midpoint_2d(min_tdf(), 2000);
  CHECK(std::abs(brute_min - 1.0) <= 1e-6);
  CHECK(std::abs(spearman_tdf_limit(min_tdf()).value - brute_min) <= 1e-6);

  const auto lambda = archimedean_tdf(1.0, 2);
  const double coarse = 3.0 * midpoint_2d(lambda, 1000);
  const double fine = 3.0 * midpoint_2d(lambda, 2000);
  CHECK(std::abs(coarse - fine) <= 1e-6);
  const auto q = spearman_tdf_limit(lambda);
  CHECK(std::abs(q.value - fine) <= 1e-6);
  CHECK(q.value >= 0.5);

  const auto fig = lift(fig1_piecewise());
  CHECK(std::abs(spearman_tdf_limit(fig).value - 3.0 * midpoint_2d(fig, 2000)) <= 1e-6);
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre(8);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 14);
  CHECK(std::abs(s - 2.0 / 15.0) <= 1e-15);
}
