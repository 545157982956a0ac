#include <doctest.h>

#include <cmath>

#include "tailorder/families.hpp"
#include "tailorder/taildep.hpp"

using namespace tailorder;

TEST_CASE("estimate_tdf on closed-form cases") {
  const auto pi = estimate_tdf(independence(), {1.0, 1.0});
  CHECK(pi.converged);
  CHECK(pi.value == doctest::Approx(0.0).epsilon(1e-8));

  const auto cm = estimate_tdf(comonotone(), {0.3, 0.7});
  for (const auto& tp : cm.trace) CHECK(tp.ratio == doctest::Approx(0.3).epsilon(1e-15));

  const auto c1 = estimate_tdf(archimedean(clayton_generator(1.0)), {1.0, 1.0});
  CHECK(std::abs(c1.value - 0.5) <= 1e-4);
  for (const auto& tp : c1.trace) CHECK(tp.ratio == doctest::Approx(1.0 / (2.0 - tp.s)).epsilon(1e-12));

  for (std::size_t k = 1; k < c1.trace.size(); ++k) CHECK(c1.trace[k].s < c1.trace[k - 1].s);
}

TEST_CASE("estimate_tdf argument checks") {
  CHECK_THROWS_AS(estimate_tdf(independence(), {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(estimate_tdf(independence(), {200.0, 1.0}), DomainError);
  CHECK_THROWS_AS(estimate_tdf(independence(), {1.0, 1.0, 1.0}), DimensionError);
  CHECK_THROWS_AS(estimate_tdf(independence(), {1.0, 1.0}, LimitSchedule{1e-2, 1e-20, 20}), NumericalError);
  CHECK_THROWS_AS(estimate_tdf(independence(), {1.0, 1.0}, LimitSchedule{1e-2, 0.5, 2}), DomainError);
}

TEST_CASE("tdc") {
  CHECK(tdc(comonotone()).value == 1.0);
  CHECK(std::abs(tdc(marshall_olkin(0.5)).value) < 1e-4);
  CHECK(std::abs(tdc(archimedean(clayton_generator(2.0))).value - std::pow(2.0, -0.5)) <= 1e-4);
  CHECK_FALSE(tdc(gaussian(0.5)).converged);
}

TEST_CASE("archimedean_tdf") {
  CHECK(archimedean_tdf(0.0, 2)({0.4, 0.9}) == 0.0);
  CHECK(archimedean_tdf(kInfinity, 2)({0.2, 0.9}) == 0.2);
  CHECK(archimedean_tdf(2.0, 2)({1.0, 1.0}) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(archimedean_tdf(2.0, 3)({1.0, 1.0, 1.0}) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(archimedean_tdf(2.0, 2)({0.0, 1.0}) == 0.0);
  // huge alpha stays finite and approaches min
  CHECK(archimedean_tdf(500.0, 2)({0.3, 0.6}) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(archimedean_tdf(-1.0, 2), DomainError);
}

TEST_CASE("simplex restriction and lift") {
  CHECK(tdc_from_simplex(simplex_restriction(min_tdf())) == 1.0);
  CHECK(tdc_from_simplex(fig1_parabola()) == 0.5);
  CHECK(tdc_from_simplex(fig1_piecewise()) == 0.5);

  const auto m = simplex_restriction(min_tdf());
  for (double t : {0.0, 0.2, 0.5, 0.9}) CHECK(m(t) == std::min(t, 1.0 - t));
  CHECK(lift(fig1_parabola())({2.0, 2.0}) == 1.0);
  CHECK(lift(fig1_parabola())({0.0, 0.0}) == 0.0);

  const auto l2 = archimedean_tdf(2.0, 2);
  const auto round = lift(simplex_restriction(l2));
  for (int i = 0; i <= 20; ++i) {
    for (double r : {0.1, 1.0, 7.0}) {
      const Point w{r * i / 20.0, r * (1.0 - i / 20.0)};
      CHECK(std::abs(round(w) - l2(w)) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(lift(SimplexTdf{[](double t) { return t; }, "too big"}), DomainError);
  CHECK_THROWS_AS(lift(SimplexTdf{[](double t) { return t * (1.0 - t) * std::abs(t - 0.5) * 2.0; }, "not concave"}),
                  DomainError);
  CHECK_THROWS_AS(simplex_restriction(min_tdf(3)), DimensionError);
}

TEST_CASE("validate_tdf") {
  CHECK(validate_tdf(zero_tdf()).ok());
  CHECK(validate_tdf(archimedean_tdf(2.0, 2)).ok());
  CHECK(validate_tdf(lift(fig1_piecewise())).ok());
  const auto broken = validate_tdf(broken_square_tdf());
  CHECK_FALSE(broken.at("homogeneity").passed);
  CHECK(broken.at("homogeneity").witness.size() == 2);
  CHECK(broken.at("bounds").passed);
  CHECK_THROWS_AS(broken.at("nonsense"), std::out_of_range);

  // a function that is homogeneous but convex on the simplex
  const TailDepFunction convex(
      2, [](std::span<const double> w) { return std::max(0.0, std::min(w[0], w[1]) - 0.25 * (w[0] + w[1])); },
      Provenance::analytic, TdfSpec{});
  CHECK_FALSE(validate_tdf(convex).at("concavity").passed);
}

TEST_CASE("tail_expansion_residual") {
  const Point u{0.1, 0.3};
  CHECK(tail_expansion_residual(comonotone(), min_tdf(), u) == 0.0);
  const double s = 0.1;
  CHECK(tail_expansion_residual(archimedean(clayton_generator(1.0)), archimedean_tdf(1.0, 2), {s, s}) ==
        doctest::Approx(s / (4.0 * (2.0 - s))).epsilon(1e-12));
  CHECK(tail_expansion_residual(independence(), zero_tdf(), {s, s}) == doctest::Approx(s / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(tail_expansion_residual(independence(), zero_tdf(), {0.0, 0.0}), DomainError);
}

TEST_CASE("analytic_tdf and tdf_of") {
  CHECK(analytic_tdf(archimedean(clayton_generator(2.0))).has_value());
  CHECK_FALSE(analytic_tdf(glue(independence(), comonotone(), 1, 0.5)).has_value());
  const auto est = tdf_of(glue(archimedean(joe_generator(2.0)), comonotone(), 1, 0.5));
  CHECK(est.provenance() == Provenance::estimated);
  CHECK(std::abs(est({1.0, 1.0})) < 1e-6);
  const auto lev = tdf_of(lower_ev_copula(lift(fig1_parabola())));
  CHECK(lev({0.2, 0.8}) == doctest::Approx(0.16));
}

TEST_CASE("regular_variation_index") {
  const auto probe = default_index_probe();
  CHECK(std::abs(regular_variation_index(clayton_generator(2.0), probe).alpha - 2.0) <= 1e-3);
  CHECK(std::abs(regular_variation_index(gumbel_generator(2.0), probe).alpha) <= 1e-3);
  CHECK(std::abs(regular_variation_index(joe_generator(2.0), probe).alpha) <= 1e-3);
  const auto flat = regular_variation_index(nonstrict_linear_generator(), probe);
  CHECK(flat.degenerate);
  CHECK(flat.alpha == 0.0);

  // exp(1/t) - 1 varies rapidly at 0
  const Generator rapid([](double t) { return t == 0.0 ? kInfinity : std::expm1(1.0 / t); }, {}, true, std::nullopt,
                        GeneratorSpec{}, [](double L) { return std::exp(L) + std::log(-std::expm1(-std::exp(L))); });
  CHECK(std::isinf(regular_variation_index(rapid, probe).alpha));

  // no closed tail: probe stops where exp(-L) underflows
  const Generator plain([](double t) { return t == 0.0 ? kInfinity : std::expm1(-3.0 * std::log(t)) / 3.0; }, {}, true,
                        std::nullopt, GeneratorSpec{});
  const auto est = regular_variation_index(plain, LimitSchedule{1e-2, 1e-3, 200});
  CHECK(std::abs(est.alpha - 3.0) <= 1e-3);
}

TEST_CASE("spearman_tdf_limit") {
  CHECK(spearman_tdf_limit(zero_tdf()).value == 0.0);
  CHECK(std::abs(spearman_tdf_limit(min_tdf()).value - 1.0) <= 1e-6);
  const auto q = spearman_tdf_limit(archimedean_tdf(1.0, 2));
  CHECK(q.validated);
  CHECK(q.value >= 0.5);
  CHECK_THROWS_AS(spearman_tdf_limit(min_tdf(4)), DimensionError);
  // a non-smooth integrand that two resolutions cannot agree on
  const TailDepFunction kinked(
      2, [](std::span<const double> w) { return std::min(w[0], w[1]) * (std::sin(4000.0 * w[0] / (w[0] + w[1] + 1e-300)) > 0 ? 1.0 : 0.5); },
      Provenance::analytic, TdfSpec{});
  CHECK_THROWS_AS(spearman_tdf_limit(kinked), NumericalError);
}
