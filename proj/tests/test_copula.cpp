#include <doctest.h>

#include <cmath>

#include "tailorder/families.hpp"

using namespace tailorder;

TEST_CASE("eval on the basic copulas") {
  CHECK(independence()({0.5, 0.5}) == 0.25);
  CHECK(comonotone()({0.3, 0.7}) == 0.3);
  CHECK(archimedean(clayton_generator(1.0))({0.5, 0.5}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(countermonotone()({0.3, 0.4}) == 0.0);
  CHECK(countermonotone()({0.8, 0.4}) == doctest::Approx(0.2));
}

TEST_CASE("eval is exact on the boundary") {
  const auto c = archimedean(clayton_generator(2.0), 3);
  CHECK(c({0.0, 0.3, 0.9}) == 0.0);
  CHECK(c({1.0, 1.0, 0.7}) == 0.7);
  CHECK(c({1.0 + 5e-13, 0.4, 1.0}) == 0.4);
}

TEST_CASE("eval rejects bad arguments") {
  CHECK_THROWS_AS(independence()({0.5, 0.5, 0.5}), DimensionError);
  CHECK_THROWS_AS(independence()({0.5, 1.1}), DomainError);
  CHECK_THROWS_AS(independence()({-1e-9, 0.5}), DomainError);
  CHECK_THROWS_AS(independence()({std::nan(""), 0.5}), DomainError);
}

TEST_CASE("box corners must agree") {
  CHECK_THROWS_AS(Box({0.0}, {0.5, 0.5}), DimensionError);
  CHECK_THROWS_AS(Box({0.6, 0.0}, {0.5, 0.5}), DomainError);
}

TEST_CASE("h_volume") {
  CHECK(h_volume(independence(), Box({0.25, 0.25}, {0.75, 0.75})) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(h_volume(comonotone(), Box({0.0, 0.5}, {0.5, 1.0})) == 0.0);
  const double v = h_volume(archimedean(clayton_generator(1.0)), Box({0.2, 0.2}, {0.8, 0.8}));
  CHECK(v > 0.0);
  CHECK_THROWS_AS(h_volume(independence(), Box({0.1, 0.1, 0.1}, {0.2, 0.2, 0.2})), DimensionError);
}

TEST_CASE("validate_copula") {
  CHECK(validate_copula(independence()).ok());
  CHECK(validate_copula(fredricks_nelsen(power_diagonal(2.0, 2))).ok());

  const auto bad = Copula::from_function(2, [](std::span<const double> u) {
    const double w = std::max(u[0] + u[1] - 1.0, 0.0);
    return w * w;
  });
  const auto report = validate_copula(bad);
  CHECK_FALSE(report.at("uniform_margins").passed);
  CHECK(report.at("grounded").passed);
  CHECK_FALSE(report.at("uniform_margins").witness.empty());
}

TEST_CASE("glue") {
  const auto pp = glue(independence(), independence(), 1, 0.5);
  double worst = 0.0;
  for (int i = 0; i <= 32; ++i) {
    for (int j = 0; j <= 32; ++j) {
      const double u = i / 32.0;
      const double v = j / 32.0;
      worst = std::max(worst, std::abs(pp({u, v}) - u * v));
    }
  }
  CHECK(worst <= 1e-12);
  CHECK(glue(comonotone(), comonotone(), 1, 0.5)({0.2, 0.3}) == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(validate_copula(glue(archimedean(joe_generator(2.0)), comonotone(), 1, 0.5)).ok());
  CHECK(validate_copula(glue(archimedean(joe_generator(2.0)), comonotone(), 2, 0.5)).ok());
  CHECK_THROWS_AS(glue(independence(), independence(), 3, 0.5), DomainError);
  CHECK_THROWS_AS(glue(independence(), independence(), 1, 1.0), DomainError);
  CHECK_THROWS_AS(glue(independence(3), independence(), 1, 0.5), DimensionError);
}

TEST_CASE("survival") {
  const auto sp = survival(independence());
  const auto sm = survival(comonotone());
  const auto c = archimedean(clayton_generator(1.0));
  const auto ss = survival(survival(c));
  double wp = 0.0, wm = 0.0, wc = 0.0;
  for (int i = 0; i <= 32; ++i) {
    for (int j = 0; j <= 32; ++j) {
      const double u = i / 32.0;
      const double v = j / 32.0;
      wp = std::max(wp, std::abs(sp({u, v}) - u * v));
      wm = std::max(wm, std::abs(sm({u, v}) - std::min(u, v)));
      wc = std::max(wc, std::abs(ss({u, v}) - c({u, v})));
    }
  }
  CHECK(wp <= 1e-15);
  CHECK(wm <= 1e-15);
  CHECK(wc <= 1e-12);
  CHECK_THROWS_AS(survival(independence(3)), DimensionError);
}

TEST_CASE("diagonal_value") {
  CHECK(diagonal_value(independence(3), 0.5) == 0.125);
  CHECK(diagonal_value(comonotone(3), 0.4) == 0.4);
}
