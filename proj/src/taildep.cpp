#include "tailorder/taildep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tailorder/quadrature.hpp"

namespace tailorder {

namespace {

constexpr double kUnderflow = 1e-300;

bool converged_trace(const std::vector<TracePoint>& trace, const ConvergenceCriteria& crit) {
  const int n = static_cast<int>(trace.size());
  if (n < crit.window + 1) return false;
  std::vector<double> diff;
  for (int k = n - crit.window; k < n; ++k) diff.push_back(std::abs(trace[k].ratio - trace[k - 1].ratio));
  for (std::size_t k = 1; k < diff.size(); ++k) {
    if (diff[k] > diff[k - 1] * (1.0 + 1e-9) + 1e-13) return false;
  }
  return diff.back() < crit.max_last_gap;
}

}  // namespace

TdfEstimate estimate_tdf(const Copula& c, const Point& w, const LimitSchedule& sched,
                         const ConvergenceCriteria& crit) {
  sched.validate();
  if (static_cast<int>(w.size()) != c.dimension()) throw DimensionError("direction dimension does not match copula");
  double wmax = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || std::isinf(x)) throw DomainError("direction must lie in R_+^d");
    wmax = std::max(wmax, x);
  }
  if (wmax == 0.0) throw DomainError("direction must be nonzero");
  if (sched.s0 * wmax > 1.0 + kBoundaryTolerance) throw DomainError("s0 * max_k w_k must not exceed 1");
  if (sched.at(sched.steps - 1) < kUnderflow) throw NumericalError("limit schedule underflows below 1e-300");

  TdfEstimate est;
  Point u(w.size());
  for (int k = 0; k < sched.steps; ++k) {
    const double s = sched.at(k);
    for (std::size_t i = 0; i < w.size(); ++i) u[i] = std::min(1.0, s * w[i]);
    est.trace.push_back({s, c.eval(u) / s});
  }
  const std::size_t n = est.trace.size();
  est.value = est.trace.back().ratio;
  est.error_estimate = std::abs(est.trace[n - 1].ratio - est.trace[n - 2].ratio);
  est.converged = converged_trace(est.trace, crit);
  return est;
}

TdfEstimate tdc(const Copula& c, const LimitSchedule& sched, const ConvergenceCriteria& crit) {
  return estimate_tdf(c, Point(c.dimension(), 1.0), sched, crit);
}

double tdc_from_simplex(const SimplexTdf& phi) { return 2.0 * phi(0.5); }

std::optional<TailDepFunction> analytic_tdf(const Copula& c) {
  const int d = c.dimension();
  const auto& node = c.descriptor().node;
  if (std::holds_alternative<family::Independence>(node) || std::holds_alternative<family::Countermonotone>(node) ||
      std::holds_alternative<family::MarshallOlkin>(node)) {
    return zero_tdf(d);
  }
  if (std::holds_alternative<family::Comonotone>(node)) return min_tdf(d);
  if (const auto* a = std::get_if<family::Archimedean>(&node)) {
    switch (a->generator.kind) {
      case GeneratorSpec::Kind::clayton:
        return archimedean_tdf(a->generator.theta, d);
      case GeneratorSpec::Kind::gumbel:
      case GeneratorSpec::Kind::joe:
      case GeneratorSpec::Kind::nonstrict_linear:
        return zero_tdf(d);
      case GeneratorSpec::Kind::custom:
        return std::nullopt;
    }
  }
  if (const auto* g = std::get_if<family::Gaussian>(&node)) {
    // Matches the constructor, which routes rho > 0.999 to the upper bound.
    return g->rho > 0.999 ? min_tdf(2) : zero_tdf(2);
  }
  if (const auto* l = std::get_if<family::LowerExtremeValue>(&node)) {
    if (l->tdf.kind != TdfSpec::Kind::custom) return make_tdf(l->tdf);
  }
  return std::nullopt;
}

TailDepFunction tdf_of(const Copula& c, const LimitSchedule& sched) {
  if (auto lambda = analytic_tdf(c)) return *lambda;
  auto fn = [c, sched](std::span<const double> w) {
    const double norm = std::accumulate(w.begin(), w.end(), 0.0);
    if (norm == 0.0) return 0.0;
    Point dir(w.begin(), w.end());
    for (double& x : dir) x /= norm;
    return norm * std::max(0.0, estimate_tdf(c, dir, sched).value);
  };
  return TailDepFunction(c.dimension(), fn, Provenance::estimated,
                         TdfSpec{TdfSpec::Kind::custom, 0.0, c.dimension(), "estimated"});
}

double tail_expansion_residual(const Copula& c, const TailDepFunction& lambda, const Point& u) {
  if (lambda.dimension() != c.dimension() || static_cast<int>(u.size()) != c.dimension()) {
    throw DimensionError("residual arguments have mismatched dimensions");
  }
  const double norm = l1_norm(u);
  if (norm == 0.0) throw DomainError("tail expansion residual needs u != 0");
  return (c.eval(u) - lambda(u)) / norm;
}

LimitSchedule default_index_probe() { return LimitSchedule{1e-2, 1e-20, 200}; }

IndexEstimate regular_variation_index(const Generator& g, const LimitSchedule& probe) {
  probe.validate();
  IndexEstimate est;
  if (!g.strict()) {
    est.degenerate = true;
    est.converged = true;
    return est;
  }
  const double ln2 = std::log(2.0);
  const double log_divergence = std::log(1e6);
  const double L0 = -std::log(probe.s0);
  const double dL = -std::log(probe.ratio);
  for (int k = 0; k < probe.steps; ++k) {
    const double L = L0 + dL * k;
    double log_ratio = 0.0;  // log(phi(s) / phi(2s))
    try {
      const double hi = g.log_phi_tail(L);
      const double lo = g.log_phi_tail(L - ln2);
      if (!std::isfinite(hi) || !std::isfinite(lo)) throw NumericalError("generator tail is not representable");
      log_ratio = hi - lo;
    } catch (const NumericalError&) {
      if (est.trace.size() < 2) throw;
      break;
    }
    est.trace.push_back(log_ratio > log_divergence ? kInfinity : log_ratio / ln2);
  }
  if (est.trace.empty()) throw NumericalError("index probe produced no values");
  est.alpha = std::max(0.0, est.trace.back());
  if (est.trace.size() >= 2) {
    const double a = est.trace[est.trace.size() - 2];
    const double b = est.trace.back();
    est.converged = (std::isinf(a) && std::isinf(b)) || std::abs(a - b) <= 1e-3;
  }
  return est;
}

double spearman_tdf_integral(const TailDepFunction& lambda, int panels) {
  const int d = lambda.dimension();
  if (d > 3) throw DimensionError("the Spearman limit quadrature supports d <= 3");
  if (panels < 1) throw DomainError("quadrature needs at least one panel");

  const auto base = gauss_legendre(4);
  std::vector<double> x;
  std::vector<double> wt;
  const double h = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
      x.push_back(h * (p + 0.5 * (base.nodes[i] + 1.0)));
      wt.push_back(0.5 * h * base.weights[i]);
    }
  }

  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> z(d);
  Point w(d);
  double total = 0.0;
  do {
    if (d == 2) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        z = {1.0, x[i]};
        for (int k = 0; k < d; ++k) w[perm[k]] = z[k];
        total += wt[i] * lambda(w);
      }
    } else {
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
          z = {1.0, x[i], x[i] * x[j]};
          for (int k = 0; k < d; ++k) w[perm[k]] = z[k];
          total += wt[i] * wt[j] * x[i] * lambda(w);
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

QuadratureValue spearman_tdf_limit(const TailDepFunction& lambda, int panels) {
  QuadratureValue q;
  const double coarse = spearman_tdf_integral(lambda, panels);
  const double fine = spearman_tdf_integral(lambda, panels + panels / 2);
  q.value = fine;
  q.resolution_gap = std::abs(fine - coarse);
  q.validated = q.resolution_gap <= 1e-6;
  if (!q.validated) throw NumericalError("Spearman limit quadrature did not settle between resolutions");
  return q;
}

}  // namespace tailorder
