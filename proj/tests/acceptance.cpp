#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "tailorder/families.hpp"
#include "tailorder/orders.hpp"
#include "tailorder/quadrature.hpp"
#include "tailorder/taildep.hpp"
#include "tailorder/verify.hpp"

using namespace tailorder;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
}

void run(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, title, ok, detail);
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Copula clayton(double theta, int d = 2) { return archimedean(clayton_generator(theta), d); }

std::vector<Point> fan() { return verify::simplex_fan(21); }

}  // namespace

int main() {
  run(1, "Clayton tail dependence coefficient", [](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double theta : {1.0, 2.0, 4.0}) {
      const double v = estimate_tdf(clayton(theta), {1.0, 1.0}).value;
      worst = std::max(worst, std::abs(v - std::pow(2.0, -1.0 / theta)));
    }
    const double elapsed = seconds_since(t0);
    detail = "max error " + num(worst) + " (tol 1e-3), " + num(elapsed) + " s (limit 1 s)";
    return worst <= 1e-3 && elapsed < 1.0;
  });

  run(2, "Clayton tail function surface", [](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto c = clayton(2.0);
    const auto lambda = archimedean_tdf(2.0, 2);
    double worst = 0.0;
    for (const auto& w : fan()) worst = std::max(worst, std::abs(estimate_tdf(c, w).value - lambda(w)));
    const double elapsed = seconds_since(t0);
    detail = "max error " + num(worst) + " over 21 directions (tol 5e-3), " + num(elapsed) + " s (limit 5 s)";
    return worst <= 5e-3 && elapsed < 5.0;
  });

  run(3, "lower extreme value roundtrip", [](std::string& detail) {
    const std::vector<TailDepFunction> lambdas{zero_tdf(), min_tdf(), archimedean_tdf(2.0, 2),
                                               lift(fig1_parabola()), lift(fig1_piecewise())};
    double worst = 0.0;
    for (const auto& lambda : lambdas) {
      const auto c = lower_ev_copula(lambda);
      for (const auto& w : fan()) worst = std::max(worst, std::abs(estimate_tdf(c, w).value - lambda(w)));
    }
    detail = "max error " + num(worst) + " over 5 functions (tol 5e-3)";
    return worst <= 5e-3;
  });

  run(4, "extreme value order equivalence", [](std::string& detail) {
    GridConfig g;
    g.resolution = 64;
    g.tau = 1e-9;
    const std::vector<std::pair<TailDepFunction, TailDepFunction>> pairs{
        {zero_tdf(), min_tdf()},
        {zero_tdf(), archimedean_tdf(2.0, 2)},
        {archimedean_tdf(1.0, 2), archimedean_tdf(2.0, 2)},
        {archimedean_tdf(2.0, 2), min_tdf()},
        {lift(fig1_parabola()), min_tdf()},
        {lift(fig1_piecewise()), min_tdf()}};
    int held = 0;
    double worst = kInfinity;
    for (const auto& [a, b] : pairs) {
      if (!check_tdo(a, b, g).holds()) continue;
      const auto v = check_lower_orthant(lower_ev_copula(a), lower_ev_copula(b), g);
      worst = std::min(worst, v.margin);
      if (v.holds() || v.status == OrderStatus::indistinguishable) ++held;
    }
    detail = std::to_string(held) + "/" + std::to_string(pairs.size()) + " global orders hold, min margin " +
             num(worst) + " (tau 1e-9)";
    return held == static_cast<int>(pairs.size());
  });

  run(5, "Marshall-Olkin against Clayton", [](std::string& detail) {
    const auto mo = marshall_olkin(0.5);
    const auto c1 = clayton(1.0);
    const bool strict = check_tdo(zero_tdf(), archimedean_tdf(1.0, 2)).status == OrderStatus::holds_strictly;
    bool loc_fails = true;
    double worst_curve = 0.0;
    for (double eps : {0.2, 0.1, 0.05}) {
      const auto v = check_loc(mo, c1, eps, {}, verify::power_curve_probes(0.5, eps));
      if (v.status != OrderStatus::fails) {
        loc_fails = false;
        continue;
      }
      const auto& p = v.witness->point;
      worst_curve = std::max(worst_curve, std::abs(p[1] - std::sqrt(p[0])));
    }
    const auto cone = search_cone_order(mo, c1, ConeSpec{0.2});
    const bool cone_ok = cone.holds() && cone.epsilon && *cone.epsilon >= std::ldexp(1.0, -20);
    detail = std::string("tdo ") + (strict ? "strict" : "not strict") + ", loc " + (loc_fails ? "fails" : "holds") +
             " (witness off-curve " + num(worst_curve) + "), cone eps " + (cone.epsilon ? num(*cone.epsilon) : "none");
    return strict && loc_fails && worst_curve <= 1e-12 && cone_ok;
  });

  run(6, "Archimedean proof pipeline", [](std::string& detail) {
    int forward = 0;
    int reversed = 0;
    for (auto [a, b] : {std::pair{1.0, 2.0}, {1.0, 4.0}, {2.0, 4.0}}) {
      const auto g1 = clayton_generator(a);
      const auto g2 = clayton_generator(b);
      forward += ratio_monotonicity_check(g1, g2, 0.5).holds() && subadditivity_check(g1, g2, 10.0).holds() &&
                 check_loc(clayton(a), clayton(b), 0.5).holds();
      reversed += ratio_monotonicity_check(g2, g1, 0.5).status == OrderStatus::fails &&
                  subadditivity_check(g2, g1, 10.0).status == OrderStatus::fails &&
                  check_loc(clayton(b), clayton(a), 0.5).status == OrderStatus::fails;
    }
    detail = std::to_string(forward) + "/3 pairs hold, " + std::to_string(reversed) + "/3 reversed pairs fail";
    return forward == 3 && reversed == 3;
  });

  run(7, "Archimedean equivalence chain", [](std::string& detail) {
    const std::vector<Generator> gens{clayton_generator(1.0), clayton_generator(2.0), clayton_generator(4.0),
                                      gumbel_generator(2.0), gumbel_generator(4.0)};
    int agree = 0;
    int total = 0;
    for (const auto& a : gens) {
      for (const auto& b : gens) {
        ++total;
        agree += archimedean_order_equivalence(a, b).consistent();
      }
    }
    detail = std::to_string(agree) + "/" + std::to_string(total) + " ordered pairs consistent";
    return agree == total;
  });

  run(8, "diagonal constructions", [](std::string& detail) {
    double diag_err = 0.0;
    double order_gap = 0.0;
    bool valid = true;
    for (double p : {1.0, 1.5, 2.0}) {
      const auto delta = power_diagonal(p);
      const auto fn = fredricks_nelsen(delta);
      const auto b = bertino(delta);
      for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        diag_err = std::max({diag_err, std::abs(fn({t, t}) - delta(t)), std::abs(b({t, t}) - delta(t))});
      }
      for (int i = 0; i <= 64; ++i) {
        for (int j = 0; j <= 64; ++j) {
          const Point u{i / 64.0, j / 64.0};
          order_gap = std::max(order_gap, b(u) - fn(u));
        }
      }
      valid = valid && validate_copula(fn).ok() && validate_copula(b).ok();
    }
    detail = "diagonal error " + num(diag_err) + " (tol 1e-9), worst C_B - C_FN " + num(order_gap) + " (tol 1e-12), validity " +
             (valid ? "ok" : "broken");
    return diag_err <= 1e-9 && order_gap <= kBoundaryTolerance && valid;
  });

  run(9, "glued Joe directional counterexample", [](std::string& detail) {
    const auto c1 = verify::glued_joe(1);
    const auto c2 = verify::glued_joe(2);
    double lam_gap = 0.0;
    for (const auto& w : fan()) {
      lam_gap = std::max(lam_gap, std::abs(estimate_tdf(c1, w).value - estimate_tdf(c2, w).value));
    }
    const std::vector<Point> dirs{{0.5, 1.0}, {1.0, 0.5}};
    const auto ab = check_too(c1, c2, dirs);
    const auto ba = check_too(c2, c1, dirs);
    const bool opposite = ab[0].status == OrderStatus::fails && ab[1].holds() && ba[0].holds() &&
                          ba[1].status == OrderStatus::fails;
    detail = "Lambda gap " + num(lam_gap) + " (tol 5e-3), C1<=C2 along (1/2,1) " + to_string(ab[0].status) +
             ", along (1,1/2) " + to_string(ab[1].status);
    return lam_gap <= 5e-3 && opposite;
  });

  run(10, "tail expansion residual", [](std::string& detail) {
    const auto c = clayton(1.0);
    const auto lambda = archimedean_tdf(1.0, 2);
    double worst = 0.0;
    double prev = kInfinity;
    bool monotone = true;
    for (double s : {0.1, 0.01, 0.001}) {
      const double r = tail_expansion_residual(c, lambda, {s, s});
      worst = std::max(worst, std::abs(r - s / (4.0 * (2.0 - s))));
      monotone = monotone && r > 0.0 && r < prev;
      prev = r;
    }
    detail = "max error " + num(worst) + " (tol 1e-9), " + (monotone ? "decreasing" : "not decreasing");
    return worst <= 1e-9 && monotone;
  });

  run(11, "tail function validity", [](std::string& detail) {
    const std::vector<TailDepFunction> good{zero_tdf(),
                                            min_tdf(),
                                            archimedean_tdf(1.0, 2),
                                            archimedean_tdf(2.0, 2),
                                            archimedean_tdf(4.0, 2),
                                            lift(fig1_parabola()),
                                            lift(fig1_piecewise()),
                                            min_tdf(3),
                                            zero_tdf(3),
                                            archimedean_tdf(2.0, 3)};
    int passed = 0;
    for (const auto& l : good) passed += validate_tdf(l).ok();
    const auto broken = validate_tdf(broken_square_tdf());
    bool witnessed = false;
    for (const auto& chk : broken.checks) witnessed = witnessed || (!chk.passed && !chk.witness.empty());
    detail = std::to_string(passed) + "/" + std::to_string(good.size()) + " fixtures valid, broken fixture " +
             (witnessed ? "rejected with witness" : "not rejected");
    return passed == static_cast<int>(good.size()) && !broken.ok() && witnessed;
  });

  run(12, "Spearman limit inequality", [](std::string& detail) {
    struct Pair {
      Copula c;
      TailDepFunction lambda;
    };
    const std::vector<Pair> pairs{{independence(), zero_tdf()},
                                  {comonotone(), min_tdf()},
                                  {marshall_olkin(0.5), zero_tdf()},
                                  {clayton(1.0), archimedean_tdf(1.0, 2)},
                                  {clayton(2.0), archimedean_tdf(2.0, 2)},
                                  {clayton(4.0), archimedean_tdf(4.0, 2)},
                                  {lower_ev_copula(lift(fig1_parabola())), lift(fig1_parabola())},
                                  {comonotone(3), min_tdf(3)},
                                  {clayton(2.0, 3), archimedean_tdf(2.0, 3)}};
    int held = 0;
    double worst = kInfinity;
    for (const auto& p : pairs) {
      const double lam = p.lambda(Point(p.c.dimension(), 1.0));
      const double bound = spearman_tdf_limit(p.lambda).value;
      worst = std::min(worst, bound - lam);
      held += lam <= bound + 1e-9;
    }
    const double eq = std::abs(spearman_tdf_limit(min_tdf()).value - 1.0);
    detail = std::to_string(held) + "/" + std::to_string(pairs.size()) + " pairs satisfy the bound, min slack " +
             num(worst) + ", |(d+1) int min - 1| = " + num(eq) + " (tol 1e-6)";
    return held == static_cast<int>(pairs.size()) && eq <= 1e-6;
  });

  run(13, "nonstrict generator flatness", [](std::string& detail) {
    const auto flat = archimedean(nonstrict_linear_generator());
    double worst = 0.0;
    for (int i = 0; i <= 256; ++i) {
      for (int j = 0; j <= 256; ++j) {
        const Point u{i / 256.0, j / 256.0};
        if (u[0] + u[1] <= 0.999) worst = std::max(worst, std::abs(flat(u)));
      }
    }
    const std::vector<Copula> others{independence(),
                                     comonotone(),
                                     countermonotone(),
                                     clayton(1.0),
                                     clayton(4.0),
                                     archimedean(gumbel_generator(2.0)),
                                     archimedean(joe_generator(2.0)),
                                     marshall_olkin(0.5),
                                     gaussian(0.5),
                                     gaussian(-0.5),
                                     lower_ev_copula(lift(fig1_piecewise())),
                                     fredricks_nelsen(power_diagonal(1.5)),
                                     bertino(power_diagonal(2.0))};
    int held = 0;
    for (const auto& o : others) {
      const auto v = check_loc(flat, o, 0.5);
      held += v.holds() || v.status == OrderStatus::indistinguishable;
    }
    detail = "max |C| below the line " + num(worst) + ", loc holds against " + std::to_string(held) + "/" +
             std::to_string(others.size()) + " fixtures";
    return worst == 0.0 && held == static_cast<int>(others.size());
  });

  run(14, "Gaussian sanity", [](std::string& detail) {
    const auto g0 = gaussian(0.0);
    double pi_err = 0.0;
    for (int i = 0; i <= 32; ++i) {
      for (int j = 0; j <= 32; ++j) {
        const Point u{i / 32.0, j / 32.0};
        pi_err = std::max(pi_err, std::abs(g0(u) - u[0] * u[1]));
      }
    }
    const double exact = 0.25 + std::asin(0.5) / (2.0 * std::numbers::pi);
    const double lib = gaussian(0.5)({0.5, 0.5});
    const double q64 = bivariate_normal_cdf(0.0, 0.0, 0.5, 64);
    const double q128 = bivariate_normal_cdf(0.0, 0.0, 0.5, 128);
    const double err = std::max({std::abs(lib - exact), std::abs(q64 - exact), std::abs(q128 - exact)});
    detail = "|C_0 - Pi| " + num(pi_err) + ", C_0.5(1/2,1/2) error " + num(err) + " at 64 and 128 nodes (tol 1e-8)";
    return pi_err <= 1e-15 && err <= 1e-8;
  });

  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
