#include "tailorder/orders.hpp"

#include <algorithm>
#include <cmath>

#include "lattice.hpp"
#include "tailorder/taildep.hpp"

namespace tailorder {

using nlohmann::json;

std::string to_string(OrderStatus s) {
  switch (s) {
    case OrderStatus::holds:
      return "Holds";
    case OrderStatus::holds_strictly:
      return "HoldsStrictly";
    case OrderStatus::fails:
      return "Fails";
    case OrderStatus::indistinguishable:
      return "Indistinguishable";
  }
  return "Unknown";
}

json to_json(const OrderVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  if (v.witness) {
    j["witness"] = {{"point", v.witness->point}, {"values", {v.witness->first, v.witness->second}}};
  } else {
    j["witness"] = nullptr;
  }
  j["margin"] = v.margin;
  j["grid"] = {{"resolution", v.grid.resolution}, {"tau", v.grid.tau}, {"interior_margin", v.grid.interior_margin}};
  j["tolerance"] = v.grid.tau;
  j["epsilon"] = v.epsilon ? json(*v.epsilon) : json(nullptr);
  j["notes"] = v.notes;
  return j;
}

std::vector<Point> simplex_lattice(int dim, int resolution) {
  if (dim < 2) throw DimensionError("simplex lattice needs d >= 2");
  if (resolution < 1) throw DomainError("simplex lattice needs resolution >= 1");
  std::vector<Point> out;
  std::vector<int> idx(dim, 0);
  // Compositions of `resolution` into dim parts, lexicographic in idx.
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == dim - 1) {
      idx[k] = left;
      Point w(dim);
      for (int i = 0; i < dim; ++i) w[i] = static_cast<double>(idx[i]) / resolution;
      out.push_back(std::move(w));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      idx[k] = v;
      self(self, k + 1, left - v);
    }
  };
  rec(rec, 0, resolution);
  return out;
}

namespace {

// Tracks the smallest gap; ties keep the lexicographically smallest point.
struct Worst {
  double gap = kInfinity;
  Witness witness;
  bool seen = false;

  void offer(double g, const Point& p, double first, double second) {
    if (!seen || g < gap || (g == gap && p < witness.point)) {
      gap = g;
      witness = Witness{p, first, second};
      seen = true;
    }
  }
};

OrderVerdict scan_points(const Copula& first, const Copula& second, std::vector<Point> points, const GridConfig& g) {
  if (points.empty()) throw DomainError("empty sample: the region contains no lattice points");
  std::sort(points.begin(), points.end());
  OrderVerdict v;
  v.grid = g;
  Worst worst;
  double max_abs = 0.0;
  for (const auto& p : points) {
    const double a = first.eval(p);
    const double b = second.eval(p);
    worst.offer(b - a, p, a, b);
    max_abs = std::max(max_abs, std::abs(b - a));
  }
  v.margin = worst.gap;
  v.witness = worst.witness;
  if (worst.gap < -g.tau) {
    v.status = OrderStatus::fails;
  } else if (max_abs <= g.tau) {
    v.status = OrderStatus::indistinguishable;
  } else {
    v.status = OrderStatus::holds;
  }
  return v;
}

void require_same_dimension(int a, int b) {
  if (a != b) throw DimensionError("compared objects have different dimensions");
}

}  // namespace

OrderVerdict check_tdo(const TailDepFunction& first, const TailDepFunction& second, const GridConfig& g) {
  g.validate();
  require_same_dimension(first.dimension(), second.dimension());
  const auto lattice = simplex_lattice(first.dimension(), g.resolution);
  OrderVerdict v;
  v.grid = g;
  Worst worst;
  Worst reverse;
  double interior_min = kInfinity;
  double max_abs = 0.0;
  for (const auto& w : lattice) {
    const double a = first(w);
    const double b = second(w);
    worst.offer(b - a, w, a, b);
    reverse.offer(a - b, w, a, b);
    max_abs = std::max(max_abs, std::abs(b - a));
    const bool interior = std::all_of(w.begin(), w.end(), [&](double x) { return x >= g.interior_margin; });
    if (interior) interior_min = std::min(interior_min, b - a);
  }
  v.witness = worst.witness;
  v.margin = worst.gap;
  if (worst.gap < -g.tau) {
    v.status = OrderStatus::fails;
    if (reverse.gap < -g.tau) {
      v.notes.push_back("the converse order fails too; largest opposite gap at w = [" +
                        detail::format_double(reverse.witness.point[0]) + ", ...] with values " +
                        detail::format_double(reverse.witness.first) + " < " +
                        detail::format_double(reverse.witness.second));
    }
  } else if (max_abs <= g.tau) {
    v.status = OrderStatus::indistinguishable;
  } else if (interior_min > g.tau) {
    v.status = OrderStatus::holds_strictly;
    v.margin = interior_min;
  } else {
    v.status = OrderStatus::holds;
  }
  return v;
}

namespace {

std::vector<Point> ball_lattice(int dim, double eps, int n) {
  std::vector<Point> pts;
  detail::for_each_index(dim, n, [&](const std::vector<int>& idx) {
    Point p(dim);
    for (int k = 0; k < dim; ++k) p[k] = eps * idx[k] / n;
    if (l2_norm(p) > eps * (1.0 + 1e-12)) return;
    if (std::any_of(p.begin(), p.end(), [](double x) { return x > 1.0; })) return;
    pts.push_back(std::move(p));
  });
  return pts;
}

}  // namespace

OrderVerdict check_loc(const Copula& first, const Copula& second, double eps, const GridConfig& g,
                       std::span<const Point> extra_probes) {
  g.validate();
  const int d = first.dimension();
  require_same_dimension(d, second.dimension());
  if (!(eps > 0.0 && eps <= std::sqrt(static_cast<double>(d)) + 1e-12)) {
    throw DomainError("eps must lie in (0, sqrt(d)]");
  }
  auto pts = ball_lattice(d, eps, g.resolution);
  for (const auto& p : extra_probes) {
    require_same_dimension(d, static_cast<int>(p.size()));
    if (l2_norm(p) <= eps && std::all_of(p.begin(), p.end(), [](double x) { return x >= 0.0 && x <= 1.0; })) {
      pts.push_back(p);
    }
  }
  auto v = scan_points(first, second, std::move(pts), g);
  v.epsilon = eps;
  return v;
}

OrderVerdict search_loc(const Copula& first, const Copula& second, const GridConfig& g,
                        std::span<const Point> extra_probes) {
  OrderVerdict last;
  for (int k = 0; k <= 20; ++k) {
    last = check_loc(first, second, std::ldexp(1.0, -k), g, extra_probes);
    if (last.status != OrderStatus::fails) return last;
  }
  last.notes.push_back("no eps found at this resolution (searched 2^-k, k <= 20)");
  return last;
}

OrderVerdict check_lower_orthant(const Copula& first, const Copula& second, const GridConfig& g) {
  g.validate();
  const int d = first.dimension();
  require_same_dimension(d, second.dimension());
  std::vector<Point> pts;
  detail::for_each_index(d, g.resolution, [&](const std::vector<int>& idx) {
    Point p(d);
    for (int k = 0; k < d; ++k) p[k] = static_cast<double>(idx[k]) / g.resolution;
    pts.push_back(std::move(p));
  });
  return scan_points(first, second, std::move(pts), g);
}

std::vector<OrderVerdict> check_too(const Copula& first, const Copula& second, std::span<const Point> directions,
                                    const LimitSchedule& sched, const GridConfig& g) {
  g.validate();
  sched.validate();
  const int d = first.dimension();
  require_same_dimension(d, second.dimension());
  std::vector<OrderVerdict> out;
  for (const auto& w : directions) {
    require_same_dimension(d, static_cast<int>(w.size()));
    const double wmax = *std::max_element(w.begin(), w.end());
    if (!(wmax > 0.0) || std::any_of(w.begin(), w.end(), [](double x) { return x < 0.0; })) {
      throw DomainError("directions must be nonzero and lie in R_+^d");
    }
    OrderVerdict v;
    v.grid = g;
    Worst worst;
    double max_abs = 0.0;
    int used = 0;
    for (int k = 0; k < sched.steps; ++k) {
      const double s = sched.at(k);
      if (s * wmax > 1.0) continue;
      Point u(d);
      for (int i = 0; i < d; ++i) u[i] = s * w[i];
      const double a = first.eval(u);
      const double b = second.eval(u);
      const double gap = (b - a) / s;
      worst.offer(gap, u, a, b);
      max_abs = std::max(max_abs, std::abs(gap));
      ++used;
    }
    if (used == 0) throw DomainError("no schedule point keeps s w inside the unit cube");
    v.margin = worst.gap;
    v.witness = worst.witness;
    if (worst.gap < -g.tau) {
      v.status = OrderStatus::fails;
    } else if (max_abs <= g.tau) {
      v.status = OrderStatus::indistinguishable;
    } else {
      v.status = OrderStatus::holds;
    }
    v.notes.push_back("gaps are compared on the scale C(s w) / s");
    out.push_back(std::move(v));
  }
  return out;
}

OrderVerdict combine_directions(const std::vector<OrderVerdict>& per_direction) {
  if (per_direction.empty()) throw DomainError("no directions to combine");
  OrderVerdict out = per_direction.front();
  out.notes.clear();
  bool any_fail = false;
  bool all_indist = true;
  for (const auto& v : per_direction) {
    if (v.margin < out.margin) {
      out.margin = v.margin;
      out.witness = v.witness;
    }
    any_fail = any_fail || v.status == OrderStatus::fails;
    all_indist = all_indist && v.status == OrderStatus::indistinguishable;
  }
  out.status = any_fail ? OrderStatus::fails : all_indist ? OrderStatus::indistinguishable : OrderStatus::holds;
  return out;
}

std::vector<Point> default_too_directions() {
  std::vector<Point> dirs;
  for (int i = 0; i <= 20; ++i) dirs.push_back({i / 20.0, 1.0 - i / 20.0});
  dirs.push_back({0.5, 1.0});
  dirs.push_back({1.0, 0.5});
  return dirs;
}

OrderVerdict check_cone_order(const Copula& first, const Copula& second, const ConeSpec& cone, double eps,
                              const GridConfig& g) {
  g.validate();
  const int d = first.dimension();
  require_same_dimension(d, second.dimension());
  if (!(cone.c > 0.0 && cone.c <= 1.0 / d + 1e-12)) throw DomainError("cone parameter must lie in (0, 1/d]");
  if (!(eps > 0.0 && eps <= std::sqrt(static_cast<double>(d)) + 1e-12)) {
    throw DomainError("eps must lie in (0, sqrt(d)]");
  }

  std::vector<Point> pts;
  for (const auto& w : simplex_lattice(d, g.resolution)) {
    if (*std::min_element(w.begin(), w.end()) < cone.c * (1.0 - 1e-12)) continue;
    const double norm = l2_norm(w);
    for (int j = 1; j <= g.resolution; ++j) {
      const double r = eps * j / g.resolution;
      Point p(d);
      for (int k = 0; k < d; ++k) p[k] = std::min(1.0, r * w[k] / norm);
      pts.push_back(std::move(p));
    }
  }
  auto v = scan_points(first, second, std::move(pts), g);
  v.epsilon = eps;

  const auto tdo = check_tdo(tdf_of(first), tdf_of(second), g);
  if (tdo.status != OrderStatus::holds_strictly) {
    v.notes.push_back("warning: the tail dependence functions are not strictly ordered (" + to_string(tdo.status) +
                      "), so no cone neighbourhood is guaranteed");
  }
  return v;
}

OrderVerdict search_cone_order(const Copula& first, const Copula& second, const ConeSpec& cone,
                               const GridConfig& g) {
  OrderVerdict last;
  for (int k = 0; k <= 20; ++k) {
    last = check_cone_order(first, second, cone, std::ldexp(1.0, -k), g);
    if (last.status != OrderStatus::fails) return last;
  }
  last.notes.push_back("no eps found at this resolution (searched 2^-k, k <= 20)");
  return last;
}

OrderVerdict check_diagonal_order(const DiagonalSection& first, const DiagonalSection& second,
                                  const GridConfig& g) {
  g.validate();
  const int n = g.resolution;
  OrderVerdict v;
  v.grid = g;
  Worst worst;
  int verified = -1;
  std::optional<Witness> violation;
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double a = first(t);
    const double b = second(t);
    if (b - a < -g.tau) {
      violation = Witness{{t}, a, b};
      break;
    }
    worst.offer(b - a, {t}, a, b);
    verified = i;
  }
  v.margin = worst.gap;
  if (!violation) {
    v.status = OrderStatus::holds;
    v.witness = worst.witness;
    v.epsilon = 1.0;
    return v;
  }
  v.witness = violation;
  if (verified <= 0) {
    v.status = OrderStatus::fails;
    v.margin = violation->second - violation->first;
    v.epsilon = 0.0;
    return v;
  }
  v.status = OrderStatus::holds;
  v.epsilon = static_cast<double>(verified) / n;
  v.notes.push_back("ordered on [0, " + detail::format_double(*v.epsilon) + "] only; first violation at t = " +
                    detail::format_double(violation->point[0]));
  return v;
}

namespace {

void require_strict(const Generator& a, const Generator& b) {
  if (!a.strict() || !b.strict()) throw DomainError("generator criteria need strict generators");
}

}  // namespace

OrderVerdict subadditivity_check(const Generator& first, const Generator& second, double M, const GridConfig& g,
                                 double span) {
  g.validate();
  require_strict(first, second);
  if (!(M > 0.0) || !(span > 1.0)) throw DomainError("subadditivity needs M > 0 and span > 1");
  auto f = [&](double x) { return first.phi(second.generalized_inverse(x)); };
  const int n = g.resolution;
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = M * std::pow(span, static_cast<double>(i) / (n - 1));

  OrderVerdict v;
  v.grid = g;
  Worst worst;
  bool failed = false;
  int skipped = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double lhs = f(xs[i] + xs[j]);
      const double rhs = f(xs[i]) + f(xs[j]);
      if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        ++skipped;
        continue;
      }
      const double scale = std::max(1.0, std::abs(lhs));
      const double gap = (rhs - lhs) / scale;
      worst.offer(gap, {xs[i], xs[j]}, lhs, rhs);
      if (gap < -g.tau) failed = true;
    }
  }
  if (!worst.seen) throw NumericalError("f = phi1 o phi2^[-1] is not finite anywhere on the sample");
  v.margin = worst.gap;
  v.witness = worst.witness;
  v.status = failed ? OrderStatus::fails : OrderStatus::holds;
  v.notes.push_back("gaps relative to max(1, |f(x+y)|)");
  if (skipped > 0) v.notes.push_back(std::to_string(skipped) + " pairs skipped: f not finite in double precision");
  return v;
}

OrderVerdict ratio_monotonicity_check(const Generator& first, const Generator& second, double eps,
                                      const GridConfig& g) {
  g.validate();
  require_strict(first, second);
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("eps must lie in (0, 1]");
  const int n = g.resolution;
  OrderVerdict v;
  v.grid = g;
  v.epsilon = eps;
  Worst worst;
  double prev_t = 0.0;
  double prev = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double t = eps * i / (n + 1);
    const double psi = first.phi(t) / second.phi(t);
    if (i > 1) {
      const double gap = (psi - prev) / std::max(1.0, std::abs(prev));
      worst.offer(gap, {prev_t, t}, prev, psi);
    }
    prev_t = t;
    prev = psi;
  }
  v.margin = worst.gap;
  v.witness = worst.witness;
  v.status = worst.gap < -g.tau ? OrderStatus::fails : OrderStatus::holds;
  return v;
}

EquivalenceReport archimedean_order_equivalence(const Generator& first, const Generator& second, int dim,
                                                const GridConfig& g) {
  require_strict(first, second);
  auto index_of = [](const Generator& gen) {
    if (auto a = gen.rv_index_at_0()) return *a;
    const auto est = regular_variation_index(gen, default_index_probe());
    if (!est.converged) throw NumericalError("regular variation index estimate did not converge");
    return est.alpha;
  };
  auto lambda_of = [dim](double alpha) {
    if (alpha == 0.0) return 0.0;
    if (std::isinf(alpha)) return 1.0;
    return std::pow(static_cast<double>(dim), -1.0 / alpha);
  };
  EquivalenceReport r;
  r.alpha_first = index_of(first);
  r.alpha_second = index_of(second);
  r.tdc_first = lambda_of(r.alpha_first);
  r.tdc_second = lambda_of(r.alpha_second);
  const auto verdict = check_tdo(archimedean_tdf(r.alpha_first, dim), archimedean_tdf(r.alpha_second, dim), g);
  r.strict_tdo = verdict.status == OrderStatus::holds_strictly;
  r.tdc_less = r.tdc_first < r.tdc_second;
  r.index_less = r.alpha_first < r.alpha_second;
  return r;
}

}  // namespace tailorder
