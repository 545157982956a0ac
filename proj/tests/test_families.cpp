#include <doctest.h>

#include <cmath>

#include "tailorder/families.hpp"

using namespace tailorder;

namespace {

double max_gap_on_grid(const Copula& a, const std::function<double(double, double)>& b, int n = 32) {
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double u = static_cast<double>(i) / n;
      const double v = static_cast<double>(j) / n;
      worst = std::max(worst, std::abs(a({u, v}) - b(u, v)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(clayton_generator(1.0).phi(0.5) == 1.0);
  CHECK_FALSE(nonstrict_linear_generator().strict());
  CHECK(joe_generator(2.0).rv_index_at_0() == 0.0);
  CHECK(clayton_generator(3.0).rv_index_at_0() == 3.0);
  CHECK(std::isinf(gumbel_generator(2.0).phi(0.0)));

  CHECK_THROWS_AS(clayton_generator(0.0), DomainError);
  CHECK_THROWS_AS(gumbel_generator(0.5), DomainError);
  CHECK_THROWS_AS(joe_generator(0.99), DomainError);
}

TEST_CASE("joe generator is slowly varying at 0") {
  // brute-force ratio test in plain double arithmetic
  const auto g = joe_generator(2.0);
  const double r6 = g.phi(2e-6) / g.phi(1e-6);
  const double r8 = g.phi(2e-8) / g.phi(1e-8);
  CHECK(r6 > 0.9);
  CHECK(r8 > r6);
  CHECK(r8 < 1.0);
}

TEST_CASE("generalized inverse") {
  CHECK(nonstrict_linear_generator().generalized_inverse(2.0) == 0.0);
  CHECK(clayton_generator(1.0).generalized_inverse(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(clayton_generator(2.0).generalized_inverse(3.5) == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-14));
  CHECK(clayton_generator(2.0).generalized_inverse(0.0) == 1.0);
  CHECK_THROWS_AS(clayton_generator(2.0).generalized_inverse(-1.0), DomainError);

  // bisection path: Clayton phi without the closed-form inverse
  const auto ref = clayton_generator(2.0);
  const Generator bare([](double t) { return t == 0.0 ? kInfinity : (1.0 / (t * t) - 1.0) / 2.0; }, {}, true, 2.0,
                       GeneratorSpec{});
  for (double x : {0.01, 0.5, 3.5, 100.0}) {
    CHECK(bare.generalized_inverse(x) == doctest::Approx(ref.generalized_inverse(x)).epsilon(1e-12));
  }
  const Generator broken([](double t) { return 2.0 - t; }, {}, false, std::nullopt, GeneratorSpec{});
  CHECK_THROWS_AS(broken.generalized_inverse(1.5), NumericalError);
}

TEST_CASE("archimedean copulas") {
  const auto w = archimedean(nonstrict_linear_generator());
  CHECK(w({0.3, 0.4}) == 0.0);
  CHECK(w({0.7, 0.8}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(archimedean(clayton_generator(2.0))({0.5, 0.5}) == doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-14));
  CHECK(archimedean(clayton_generator(1.0), 3)({1.0, 1.0, 0.7}) == 0.7);
  CHECK_THROWS_AS(archimedean(nonstrict_linear_generator(), 3), DomainError);

  for (const auto& g : {clayton_generator(1.0), clayton_generator(4.0), gumbel_generator(2.0), joe_generator(2.0),
                        nonstrict_linear_generator()}) {
    CHECK(validate_copula(archimedean(g)).ok());
  }
  GridConfig coarse;
  coarse.resolution = 16;
  CHECK(validate_copula(archimedean(clayton_generator(2.0), 3), coarse).ok());
  CHECK(validate_copula(archimedean(gumbel_generator(2.0), 3), coarse).ok());
}

TEST_CASE("nonstrict copula is flat below the antidiagonal") {
  const auto w = archimedean(nonstrict_linear_generator());
  for (int i = 0; i <= 64; ++i) {
    for (int j = 0; i + j <= 64; ++j) CHECK(w({i / 64.0, j / 64.0}) == 0.0);
  }
}

TEST_CASE("marshall-olkin") {
  const auto m = marshall_olkin(0.5);
  CHECK(m({0.04, 0.2}) == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(m({0.25, 1.0}) == 0.25);
  CHECK(m({0.25, 0.25}) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(validate_copula(m).ok());
  CHECK_THROWS_AS(marshall_olkin(1.0), DomainError);
  CHECK_THROWS_AS(marshall_olkin(0.0), DomainError);
}

TEST_CASE("extreme value copulas") {
  CHECK(max_gap_on_grid(ev_copula(zero_tdf()), [](double u, double v) { return u * v; }) <= 1e-12);
  CHECK(max_gap_on_grid(ev_copula(min_tdf()), [](double u, double v) { return std::min(u, v); }) <= 1e-12);
  CHECK(ev_copula(archimedean_tdf(2.0, 2))({0.5, 0.5}) ==
        doctest::Approx(std::pow(2.0, -2.0 + std::pow(2.0, -0.5))).epsilon(1e-14));
  CHECK_THROWS_AS(ev_copula(broken_square_tdf()), DomainError);
  CHECK_THROWS_AS(ev_copula(min_tdf(3)), DimensionError);

  // the lower version is the survival copula of the upper one
  for (const auto& lambda : {archimedean_tdf(2.0, 2), lift(fig1_parabola()), lift(fig1_piecewise())}) {
    const auto lev = lower_ev_copula(lambda);
    const auto ref = survival(ev_copula(lambda));
    CHECK(max_gap_on_grid(lev, [&](double u, double v) { return ref({u, v}); }) <= 1e-12);
    CHECK(validate_copula(lev).ok());
  }
}

TEST_CASE("diagonal constructions") {
  CHECK(max_gap_on_grid(fredricks_nelsen(power_diagonal(1.0, 2)), [](double u, double v) { return std::min(u, v); }) ==
        0.0);
  CHECK(bertino(power_diagonal(2.0, 2))({0.3, 0.4}) == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(max_gap_on_grid(semilinear(power_diagonal(2.0, 2)), [](double u, double v) { return u * v; }) <= 1e-15);

  // t - delta(t) has interior local minima here, so the scan matters
  const DiagonalSection wavy{
      [](double t) { return t * t + 0.05 * t * (1.0 - t) * (1.0 + std::cos(6.0 * M_PI * t)); }, 2, DiagonalSpec{}};
  REQUIRE(validate_diagonal(wavy).ok());
  const auto b = bertino(wavy);
  for (const auto& [u, v] : {std::pair{0.1, 0.9}, std::pair{0.25, 0.6}, std::pair{0.05, 0.45}}) {
    double best = kInfinity;
    for (int i = 0; i <= 200000; ++i) {
      const double t = u + (v - u) * i / 200000.0;
      best = std::min(best, t - wavy(t));
    }
    CHECK(b({u, v}) == doctest::Approx(u - best).epsilon(1e-9));
  }
  for (double t = 0.0; t <= 1.0; t += 0.125) CHECK(diagonal_value(b, t) == doctest::Approx(wavy(t)).epsilon(1e-9));

  CHECK_THROWS_AS(fredricks_nelsen(power_diagonal(0.5, 2)), DomainError);
  CHECK_THROWS_AS(semilinear(power_diagonal(3.0, 2)), DomainError);
}

TEST_CASE("validate_diagonal") {
  CHECK(validate_diagonal(power_diagonal(1.0, 2)).ok());
  const auto sqrt_report = validate_diagonal(power_diagonal(0.5, 2));
  CHECK_FALSE(sqrt_report.at("below_identity").passed);
  CHECK(validate_diagonal(power_diagonal(2.0, 2)).ok());
  CHECK_FALSE(validate_diagonal(power_diagonal(3.0, 2)).at("lipschitz").passed);
  CHECK(validate_diagonal(power_diagonal(3.0, 3)).ok());
  CHECK(validate_semilinear_diagonal(power_diagonal(1.5, 2)).ok());
  CHECK_FALSE(validate_semilinear_diagonal(power_diagonal(2.5, 2)).at("ratio_square_decreasing").passed);
}

TEST_CASE("gaussian copula") {
  CHECK(gaussian(0.0)({0.5, 0.5}) == 0.25);
  CHECK(gaussian(1.0)({0.3, 0.7}) == 0.3);
  CHECK(gaussian(-1.0)({0.3, 0.4}) == 0.0);
  CHECK(gaussian(0.5)({0.5, 0.5}) == doctest::Approx(0.25 + std::asin(0.5) / (2.0 * M_PI)).epsilon(1e-12));
  CHECK(validate_copula(gaussian(0.5)).ok());
  CHECK(validate_copula(gaussian(-0.7)).ok());
  CHECK_THROWS_AS(gaussian(1.5), DomainError);
}

TEST_CASE("hierarchical copulas") {
  const auto pi3 = hierarchical(independence(), independence());
  CHECK(pi3({0.5, 0.4, 0.3}) == doctest::Approx(0.06).epsilon(1e-15));

  const auto c1 = archimedean(clayton_generator(1.0));
  const auto c2 = archimedean(clayton_generator(2.0));
  const auto h = hierarchical(c1, c2);
  CHECK(h.dimension() == 3);
  CHECK(h({1.0, 1.0, 0.4}) == 0.4);
  CHECK(h({0.5, 0.5, 0.5}) == doctest::Approx(c1({0.5, 1.0 / std::sqrt(7.0)})).epsilon(1e-14));
  GridConfig coarse;
  coarse.resolution = 16;
  CHECK(validate_copula(h, coarse).ok());
  CHECK_THROWS_AS(hierarchical(c2, c1), DomainError);
  CHECK_THROWS_AS(hierarchical(marshall_olkin(0.5), c1), DomainError);
  CHECK(validate_copula(hierarchical(archimedean(gumbel_generator(2.0)), archimedean(gumbel_generator(3.0))), coarse)
            .ok());
}

TEST_CASE("build from descriptors") {
  CHECK(build("clayton:1")({0.5, 0.5}) == doctest::Approx(1.0 / 3.0));
  CHECK(build("independence:3").dimension() == 3);
  CHECK(build("lev:clayton:2")({0.5, 0.5}) == doctest::Approx(lower_ev_copula(archimedean_tdf(2.0, 2))({0.5, 0.5})));
  CHECK(build("bertino:power:2")({0.3, 0.4}) == doctest::Approx(0.09));
  CHECK(build("gaussian:0.5")({0.5, 0.5}) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(build("clayton:-1"), DomainError);
  CHECK_THROWS_AS(build("frank:2"), DescriptorError);
}
