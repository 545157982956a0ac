#include "tailorder/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "lattice.hpp"
#include "tailorder/families.hpp"
#include "tailorder/quadrature.hpp"

namespace tailorder::verify {

using nlohmann::json;

namespace {

struct Suite {
  std::string name;
  std::vector<Check> checks;

  void add(std::string check, bool passed, double value, double tolerance, std::string detail = {}) {
    checks.push_back(Check{name, std::move(check), passed, value, tolerance, std::move(detail)});
  }
};

std::string fmt(double x) { return detail::format_double(x); }

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + fmt(p[i]);
  return s + ")";
}

Copula clayton(double theta, int dim = 2) { return archimedean(clayton_generator(theta), dim); }

struct NamedTdf {
  std::string name;
  TailDepFunction lambda;
};

std::vector<NamedTdf> bivariate_tdf_fixtures() {
  return {{"zero", zero_tdf()},
          {"min", min_tdf()},
          {"clayton:2", archimedean_tdf(2.0, 2)},
          {"fig1-parabola", lift(fig1_parabola())},
          {"fig1-piecewise", lift(fig1_piecewise())}};
}

// ---------------------------------------------------------------- expansion

void expansion_suite(Suite& s, const GridConfig& g, const LimitSchedule& sched) {
  const auto c1 = clayton(1.0);
  const auto l1 = archimedean_tdf(1.0, 2);
  double prev = kInfinity;
  bool monotone = true;
  for (double t : {0.1, 0.01, 0.001}) {
    const double r = tail_expansion_residual(c1, l1, {t, t});
    const double expected = t / (4.0 * (2.0 - t));
    s.add("clayton residual at s=" + fmt(t), std::abs(r - expected) <= 1e-9, std::abs(r - expected), 1e-9,
          "R = " + fmt(r) + ", closed form " + fmt(expected));
    monotone = monotone && r < prev && r > 0.0;
    prev = r;
  }
  s.add("clayton residual decreases to 0", monotone, prev, 0.0);

  double worst = 0.0;
  for (const Point& u : {Point{0.1, 0.3}, Point{0.02, 0.01}, Point{0.5, 0.5}}) {
    worst = std::max(worst, std::abs(tail_expansion_residual(comonotone(), min_tdf(), u)));
  }
  s.add("comonotone expansion is exact", worst == 0.0, worst, 0.0);
  const double rp = tail_expansion_residual(independence(), zero_tdf(), {0.01, 0.01});
  s.add("independence residual s/2", std::abs(rp - 0.005) <= 1e-15, std::abs(rp - 0.005), 1e-15);

  std::vector<NamedTdf> analytic = bivariate_tdf_fixtures();
  analytic.push_back({"clayton:1", archimedean_tdf(1.0, 2)});
  analytic.push_back({"clayton:4", archimedean_tdf(4.0, 2)});
  analytic.push_back({"clayton:2:3", archimedean_tdf(2.0, 3)});
  analytic.push_back({"min:3", min_tdf(3)});
  for (const auto& [name, lambda] : analytic) {
    GridConfig audit = g;
    if (lambda.dimension() == 3) audit.resolution = std::min(g.resolution, 32);
    const auto report = validate_tdf(lambda, audit, 1e-9);
    std::string failed;
    for (const auto& c : report.checks) {
      if (!c.passed) failed += c.name + " ";
    }
    s.add("tail function valid: " + name, report.ok(), 0.0, 1e-9, failed.empty() ? "" : "failed: " + failed);

    if (lambda.dimension() == 2) {
      const double direct = lambda({1.0, 1.0});
      const double via_simplex = tdc_from_simplex(simplex_restriction(lambda));
      s.add("tdc via simplex: " + name, direct == via_simplex, std::abs(direct - via_simplex), 0.0);
    }
  }
  const auto broken = validate_tdf(broken_square_tdf(), g, 1e-9);
  const auto& hom = broken.at("homogeneity");
  s.add("non-homogeneous fixture rejected", !hom.passed && !hom.witness.empty(), hom.worst, 1e-9,
        "witness " + point_text(hom.witness));

  for (const auto& [label, c] : std::vector<std::pair<std::string, Copula>>{
           {"independence", independence()}, {"comonotone", comonotone()}, {"marshall-olkin:0.5", marshall_olkin(0.5)}}) {
    const auto est = tdc(c, sched);
    const double expected = label == "comonotone" ? 1.0 : 0.0;
    s.add("tdc estimate: " + label, est.converged && std::abs(est.value - expected) <= 1e-3,
          std::abs(est.value - expected), 1e-3);
  }
  const auto gauss = tdc(gaussian(0.5), sched);
  s.add("gaussian 0.5 flagged non-converged", !gauss.converged, gauss.error_estimate, 1e-4,
        "last iterate " + fmt(gauss.value));

  double diff0 = 0.0;
  const auto g0 = gaussian(0.0);
  for (int i = 0; i <= 16; ++i) {
    for (int j = 0; j <= 16; ++j) {
      const double u = i / 16.0;
      const double v = j / 16.0;
      diff0 = std::max(diff0, std::abs(g0({u, v}) - u * v));
    }
  }
  s.add("gaussian rho=0 is independence", diff0 <= 1e-8, diff0, 1e-8);
  const double exact = 0.25 + std::asin(0.5) / (2.0 * std::numbers::pi);
  const double q64 = gaussian(0.5)({0.5, 0.5});
  const double q32 = bivariate_normal_cdf(0.0, 0.0, 0.5, 32);
  s.add("gaussian rho=0.5 at the median", std::abs(q64 - exact) <= 1e-8 && std::abs(q32 - exact) <= 1e-8,
        std::max(std::abs(q64 - exact), std::abs(q32 - exact)), 1e-8);
}

// ---------------------------------------------------------------- archimedean

void archimedean_suite(Suite& s, const GridConfig& g, const LimitSchedule& sched) {
  for (double theta : {1.0, 2.0, 4.0}) {
    const auto est = tdc(clayton(theta), sched);
    const double expected = std::pow(2.0, -1.0 / theta);
    s.add("clayton tdc theta=" + fmt(theta), std::abs(est.value - expected) <= 1e-3, std::abs(est.value - expected),
          1e-3);
  }
  {
    const auto c = clayton(2.0);
    const auto lambda = archimedean_tdf(2.0, 2);
    double worst = 0.0;
    for (const auto& w : simplex_fan()) worst = std::max(worst, std::abs(estimate_tdf(c, w, sched).value - lambda(w)));
    s.add("clayton theta=2 surface", worst <= 5e-3, worst, 5e-3);
  }
  for (const auto& gen : {clayton_generator(2.0), gumbel_generator(2.0), joe_generator(2.0)}) {
    const auto est = regular_variation_index(gen, default_index_probe());
    const double expected = gen.spec().kind == GeneratorSpec::Kind::clayton ? 2.0 : 0.0;
    s.add("regular variation index: " + to_json(gen.spec()).dump(), std::abs(est.alpha - expected) <= 1e-3,
          std::abs(est.alpha - expected), 1e-3);
  }

  const std::vector<std::pair<double, double>> pairs{{1, 2}, {1, 4}, {2, 4}};
  for (const auto& [a, b] : pairs) {
    for (bool reversed : {false, true}) {
      const double t1 = reversed ? b : a;
      const double t2 = reversed ? a : b;
      const auto g1 = clayton_generator(t1);
      const auto g2 = clayton_generator(t2);
      const std::string tag = "(" + fmt(t1) + ", " + fmt(t2) + ")";
      const bool want = !reversed;
      const auto ratio = ratio_monotonicity_check(g1, g2, 0.5, g);
      const auto sub = subadditivity_check(g1, g2, 10.0, g);
      const auto loc = check_loc(clayton(t1), clayton(t2), 0.2, g);
      s.add("ratio monotonicity " + tag, ratio.holds() == want, ratio.margin, g.tau, to_string(ratio.status));
      s.add("subadditivity " + tag, sub.holds() == want, sub.margin, g.tau, to_string(sub.status));
      s.add("local orthant order " + tag, loc.holds() == want, loc.margin, g.tau, to_string(loc.status));
    }
  }

  const std::vector<std::pair<std::string, Generator>> gens{{"clayton:1", clayton_generator(1.0)},
                                                            {"clayton:2", clayton_generator(2.0)},
                                                            {"clayton:4", clayton_generator(4.0)},
                                                            {"gumbel:2", gumbel_generator(2.0)},
                                                            {"gumbel:4", gumbel_generator(4.0)}};
  for (const auto& [n1, g1] : gens) {
    for (const auto& [n2, g2] : gens) {
      const auto r = archimedean_order_equivalence(g1, g2, 2, g);
      s.add("equivalence " + n1 + " vs " + n2, r.consistent(), 0.0, 0.0,
            std::string("tdo ") + (r.strict_tdo ? "1" : "0") + ", tdc " + (r.tdc_less ? "1" : "0") + ", index " +
                (r.index_less ? "1" : "0"));
    }
  }

  const auto flat = archimedean(nonstrict_linear_generator());
  double worst = 0.0;
  for (int i = 0; i <= g.resolution; ++i) {
    for (int j = 0; j <= g.resolution; ++j) {
      const double u = static_cast<double>(i) / g.resolution;
      const double v = static_cast<double>(j) / g.resolution;
      if (u + v <= 0.999) worst = std::max(worst, std::abs(flat({u, v})));
    }
  }
  s.add("nonstrict copula vanishes below u1+u2=0.999", worst == 0.0, worst, 0.0);
  const std::vector<std::pair<std::string, Copula>> others{
      {"independence", independence()},       {"comonotone", comonotone()},
      {"countermonotone", countermonotone()}, {"clayton:1", clayton(1.0)},
      {"clayton:4", clayton(4.0)},            {"gumbel:2", archimedean(gumbel_generator(2.0))},
      {"joe:2", archimedean(joe_generator(2.0))}, {"marshall-olkin:0.5", marshall_olkin(0.5)},
      {"gaussian:0.5", gaussian(0.5)},        {"lev:fig1-parabola", lower_ev_copula(lift(fig1_parabola()))}};
  for (const auto& [name, c] : others) {
    const auto v = check_loc(flat, c, 0.5, g);
    s.add("nonstrict below " + name, v.holds() || v.status == OrderStatus::indistinguishable, v.margin, g.tau,
          to_string(v.status));
  }
}

// ---------------------------------------------------------------- ev

void ev_suite(Suite& s, const GridConfig& g, const LimitSchedule& sched) {
  const auto fan = simplex_fan();
  for (const auto& [name, lambda] : bivariate_tdf_fixtures()) {
    const auto c = lower_ev_copula(lambda);
    double worst = 0.0;
    for (const auto& w : fan) worst = std::max(worst, std::abs(estimate_tdf(c, w, sched).value - lambda(w)));
    s.add("lower extreme value roundtrip: " + name, worst <= 5e-3, worst, 5e-3);
  }

  GridConfig strict = g;
  strict.tau = 1e-9;
  const std::vector<std::pair<std::string, std::string>> ordered{
      {"zero", "clayton:2"},          {"clayton:1", "clayton:2"},      {"clayton:2", "min"},
      {"zero", "fig1-parabola"},      {"fig1-parabola", "min"},        {"zero", "fig1-piecewise"},
      {"fig1-piecewise", "min"}};
  for (const auto& [a, b] : ordered) {
    const auto la = make_tdf(parse_tdf_spec(a));
    const auto lb = make_tdf(parse_tdf_spec(b));
    const auto tdo = check_tdo(la, lb, g);
    const auto v = check_lower_orthant(lower_ev_copula(la), lower_ev_copula(lb), strict);
    s.add("global order from " + a + " <= " + b, tdo.holds() && v.holds(), v.margin, strict.tau, to_string(v.status));
  }

  const auto p1 = lift(fig1_parabola());
  const auto p2 = lift(fig1_piecewise());
  const double t1 = tdc_from_simplex(fig1_parabola());
  const double t2 = tdc_from_simplex(fig1_piecewise());
  const auto forward = check_tdo(p1, p2, g);
  const auto backward = check_tdo(p2, p1, g);
  s.add("fig1 pair: equal tdc yet unordered",
        t1 == t2 && forward.status == OrderStatus::fails && backward.status == OrderStatus::fails,
        std::abs(t1 - t2), 0.0,
        "witnesses " + point_text(forward.witness->point) + " and " + point_text(backward.witness->point));
}

// ---------------------------------------------------------------- diagonal

void diagonal_suite(Suite& s, const GridConfig& g) {
  GridConfig fine = g;
  fine.tau = 1e-9;
  for (double p : {1.0, 1.5, 2.0}) {
    const auto delta = power_diagonal(p, 2);
    const auto fn = fredricks_nelsen(delta);
    const auto b = bertino(delta);
    double dfn = 0.0;
    double db = 0.0;
    for (int i = 0; i <= g.resolution; ++i) {
      const double t = static_cast<double>(i) / g.resolution;
      dfn = std::max(dfn, std::abs(diagonal_value(fn, t) - delta(t)));
      db = std::max(db, std::abs(diagonal_value(b, t) - delta(t)));
    }
    const std::string tag = " p=" + fmt(p);
    s.add("fredricks-nelsen diagonal" + tag, dfn <= 1e-9, dfn, 1e-9);
    s.add("bertino diagonal" + tag, db <= 1e-9, db, 1e-9);
    const auto order = check_lower_orthant(b, fn, fine);
    s.add("bertino below fredricks-nelsen" + tag, order.holds() || order.status == OrderStatus::indistinguishable,
          order.margin, fine.tau, to_string(order.status));
    s.add("fredricks-nelsen is a copula" + tag, validate_copula(fn, g).ok(), 0.0, kVolumeTolerance);
    s.add("bertino is a copula" + tag, validate_copula(b, g).ok(), 0.0, kVolumeTolerance);
  }
  const auto sl = semilinear(power_diagonal(1.5, 2));
  s.add("semilinear is a copula p=1.5", validate_copula(sl, g).ok(), 0.0, kVolumeTolerance);

  const auto cd = check_diagonal_order(clayton_diagonal(1.0), clayton_diagonal(2.0), g);
  s.add("clayton diagonals ordered near 0", cd.holds(), cd.epsilon.value_or(0.0), g.tau);
  const auto sq = check_diagonal_order(power_diagonal(2.0, 2), power_diagonal(1.0, 2), g);
  s.add("t^2 below t on [0, 1]", sq.holds() && sq.epsilon == 1.0, sq.epsilon.value_or(0.0), g.tau);
  const auto rev = check_diagonal_order(power_diagonal(1.0, 2), power_diagonal(2.0, 2), g);
  s.add("t above t^2 fails at once", rev.status == OrderStatus::fails, rev.margin, g.tau);
}

// ---------------------------------------------------------------- cone

void cone_suite(Suite& s, const GridConfig& g, const LimitSchedule& sched) {
  const double alpha = 0.5;
  const auto mo = marshall_olkin(alpha);
  const auto c1 = clayton(1.0);
  const auto tdo = check_tdo(analytic_tdf(mo).value(), analytic_tdf(c1).value(), g);
  s.add("marshall-olkin strictly below clayton in tail order", tdo.status == OrderStatus::holds_strictly, tdo.margin,
        g.tau, to_string(tdo.status));
  for (double eps : {0.2, 0.1, 0.05}) {
    const auto probes = power_curve_probes(alpha, eps);
    const auto v = check_loc(mo, c1, eps, g, probes);
    const bool on_curve =
        v.witness && std::abs(v.witness->point[1] - std::pow(v.witness->point[0], alpha)) <= 1e-12;
    s.add("local order fails at eps=" + fmt(eps), v.status == OrderStatus::fails && on_curve, v.margin, g.tau,
          v.witness ? "witness " + point_text(v.witness->point) : "no witness");
  }
  const auto found = search_cone_order(mo, c1, ConeSpec{0.2}, g);
  s.add("cone c=0.2 order found by halving", found.holds() && found.epsilon.value_or(0.0) >= std::ldexp(1.0, -20),
        found.epsilon.value_or(0.0), g.tau);
  const auto thin = check_cone_order(mo, c1, ConeSpec{0.001}, 0.05, g);
  s.add("cone c=0.001 admits curve points", thin.status == OrderStatus::fails, thin.margin, g.tau);
  const auto trivial = check_cone_order(independence(), comonotone(), ConeSpec{0.2}, 0.3, g);
  s.add("independence below comonotone on a cone", trivial.holds(), trivial.margin, g.tau);
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1, 2}, {1, 4}, {2, 4}}) {
    const auto v = search_cone_order(clayton(a), clayton(b), ConeSpec{0.2}, g);
    s.add("cone order found for clayton (" + fmt(a) + ", " + fmt(b) + ")", v.holds(), v.epsilon.value_or(0.0), g.tau);
  }

  const auto j1 = glued_joe(1);
  const auto j2 = glued_joe(2);
  double tdf_gap = 0.0;
  for (const auto& w : simplex_fan()) {
    tdf_gap = std::max(tdf_gap, std::abs(estimate_tdf(j1, w, sched).value - estimate_tdf(j2, w, sched).value));
  }
  s.add("glued joe tail functions agree", tdf_gap <= 5e-3, tdf_gap, 5e-3);
  const std::vector<Point> dirs{{0.5, 1.0}, {1.0, 0.5}};
  const auto fwd = check_too(j1, j2, dirs, sched, g);
  const auto bwd = check_too(j2, j1, dirs, sched, g);
  s.add("glued joe: first fails along (1/2, 1), second along (1, 1/2)",
        fwd[0].status == OrderStatus::fails && fwd[1].holds() && bwd[0].holds() && bwd[1].status == OrderStatus::fails,
        std::min(fwd[0].margin, bwd[1].margin), g.tau);
}

// ---------------------------------------------------------------- spearman

void spearman_suite(Suite& s, const LimitSchedule& sched) {
  struct Pair {
    std::string name;
    Copula c;
    TailDepFunction lambda;
  };
  const std::vector<Pair> pairs{
      {"independence", independence(), zero_tdf()},
      {"comonotone", comonotone(), min_tdf()},
      {"marshall-olkin:0.5", marshall_olkin(0.5), zero_tdf()},
      {"clayton:1", clayton(1.0), archimedean_tdf(1.0, 2)},
      {"clayton:2", clayton(2.0), archimedean_tdf(2.0, 2)},
      {"clayton:4", clayton(4.0), archimedean_tdf(4.0, 2)},
      {"lev:fig1-parabola", lower_ev_copula(lift(fig1_parabola())), lift(fig1_parabola())},
      {"lev:fig1-piecewise", lower_ev_copula(lift(fig1_piecewise())), lift(fig1_piecewise())},
      {"clayton:2:3", clayton(2.0, 3), archimedean_tdf(2.0, 3)},
      {"comonotone:3", comonotone(3), min_tdf(3)},
  };
  for (const auto& [name, c, lambda] : pairs) {
    const double lam = lambda(Point(c.dimension(), 1.0));
    const double estimated = tdc(c, sched).value;
    s.add("tdc estimate matches tail function: " + name, std::abs(estimated - lam) <= 5e-3, std::abs(estimated - lam),
          5e-3);
    const auto q = spearman_tdf_limit(lambda);
    s.add("tdc below Spearman limit: " + name, lam <= q.value + 1e-9, q.value - lam, 1e-9,
          "lambda " + fmt(lam) + ", limit " + fmt(q.value));
  }
  const auto qm = spearman_tdf_limit(min_tdf());
  s.add("Spearman limit of min equals 1", std::abs(qm.value - 1.0) <= 1e-6, std::abs(qm.value - 1.0), 1e-6);
  const auto qz = spearman_tdf_limit(zero_tdf());
  s.add("Spearman limit of zero is 0", qz.value == 0.0, qz.value, 0.0);
}

using Runner = std::function<void(Suite&, const GridConfig&, const LimitSchedule&)>;

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> table{
      {"expansion", [](Suite& s, const GridConfig& g, const LimitSchedule& l) { expansion_suite(s, g, l); }},
      {"archimedean", [](Suite& s, const GridConfig& g, const LimitSchedule& l) { archimedean_suite(s, g, l); }},
      {"ev", [](Suite& s, const GridConfig& g, const LimitSchedule& l) { ev_suite(s, g, l); }},
      {"diagonal", [](Suite& s, const GridConfig& g, const LimitSchedule&) { diagonal_suite(s, g); }},
      {"cone", [](Suite& s, const GridConfig& g, const LimitSchedule& l) { cone_suite(s, g, l); }},
      {"spearman", [](Suite& s, const GridConfig&, const LimitSchedule& l) { spearman_suite(s, l); }},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names{"all"};
  for (const auto& [n, r] : runners()) names.push_back(n);
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const GridConfig& g, const LimitSchedule& sched) {
  g.validate();
  sched.validate();
  std::vector<Check> out;
  bool matched = false;
  for (const auto& [name, run] : runners()) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    Suite s{name, {}};
    try {
      run(s, g, sched);
    } catch (const Error& e) {
      s.add("suite raised an error", false, 0.0, 0.0, e.what());
    }
    out.insert(out.end(), s.checks.begin(), s.checks.end());
  }
  if (!matched) throw DescriptorError("unknown suite '" + suite + "'");
  return out;
}

json to_json(const Check& c) {
  return {{"suite", c.suite},         {"check", c.name},         {"passed", c.passed},
          {"value", c.value},         {"tolerance", c.tolerance}, {"detail", c.detail}};
}

Copula glued_joe(int axis) { return glue(archimedean(joe_generator(2.0)), comonotone(), axis, 0.5); }

std::vector<Point> power_curve_probes(double alpha, double eps, int n) {
  std::vector<Point> pts;
  for (int i = 1; i <= n; ++i) {
    const double t = std::min(1.0, eps * eps) * i / n;
    Point p{t, std::pow(t, alpha)};
    if (l2_norm(p) <= eps) pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Point> simplex_fan(int n) {
  std::vector<Point> dirs;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    dirs.push_back({t, 1.0 - t});
  }
  return dirs;
}

std::vector<std::string> repro_names() { return {"mo-clayton", "glued-joe", "fig1-tdfs"}; }

Table repro(const std::string& name, const GridConfig& g, const LimitSchedule& sched) {
  g.validate();
  sched.validate();
  Table t;
  const int n = g.resolution;
  if (name == "mo-clayton") {
    const double alpha = 0.5;
    const double theta = 1.0;
    const auto mo = marshall_olkin(alpha);
    const auto c = clayton(theta);
    t.header = {"t", "M", "C"};
    bool all_rows = true;
    for (int i = 1; i < n; ++i) {
      const double x = static_cast<double>(i) / n;
      const double y = std::pow(x, alpha);
      const double m = mo({x, y});
      const double cv = c({x, y});
      all_rows = all_rows && cv < x && m == x;
      t.rows.push_back({x, m, cv});
    }
    t.summary = {{"alpha", alpha}, {"theta", theta}, {"rows_satisfy_C_lt_t_eq_M", all_rows}};
  } else if (name == "fig1-tdfs") {
    const auto p1 = fig1_parabola();
    const auto p2 = fig1_piecewise();
    t.header = {"t", "phi1", "phi2"};
    for (int i = 0; i <= n; ++i) {
      const double x = static_cast<double>(i) / n;
      t.rows.push_back({x, p1(x), p2(x)});
    }
    t.summary = {{"tdc_phi1", tdc_from_simplex(p1)},
                 {"tdc_phi2", tdc_from_simplex(p2)},
                 {"phi1_below_phi2", to_json(check_tdo(lift(p1), lift(p2), g))},
                 {"phi2_below_phi1", to_json(check_tdo(lift(p2), lift(p1), g))}};
  } else if (name == "glued-joe") {
    const auto c1 = glued_joe(1);
    const auto c2 = glued_joe(2);
    const std::vector<Point> dirs{{0.5, 1.0}, {1.0, 0.5}};
    t.header = {"w1", "w2", "s", "C1_over_s", "C2_over_s", "gap"};
    for (const auto& w : dirs) {
      for (int k = 0; k < sched.steps; ++k) {
        const double s = sched.at(k);
        if (s * std::max(w[0], w[1]) > 1.0) continue;
        const double a = c1({s * w[0], s * w[1]}) / s;
        const double b = c2({s * w[0], s * w[1]}) / s;
        t.rows.push_back({w[0], w[1], s, a, b, b - a});
      }
    }
    const auto fwd = check_too(c1, c2, dirs, sched, g);
    const auto bwd = check_too(c2, c1, dirs, sched, g);
    t.summary = {{"first_below_second", {{"(0.5,1)", to_json(fwd[0])}, {"(1,0.5)", to_json(fwd[1])}}},
                 {"second_below_first", {{"(0.5,1)", to_json(bwd[0])}, {"(1,0.5)", to_json(bwd[1])}}}};
  } else {
    throw DescriptorError("unknown counterexample '" + name + "'");
  }
  return t;
}

}  // namespace tailorder::verify
