#include "tailorder/tdf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lattice.hpp"
#include "tailorder/generator.hpp"

namespace tailorder {

TailDepFunction::TailDepFunction(int dim, Fn fn, Provenance provenance, TdfSpec spec)
    : dim_(dim), fn_(std::move(fn)), provenance_(provenance), spec_(std::move(spec)) {
  if (dim_ < 2) throw DimensionError("tail dependence function needs d >= 2");
  spec_.dim = dim_;
}

double TailDepFunction::operator()(std::span<const double> w) const {
  if (static_cast<int>(w.size()) != dim_) {
    throw DimensionError("direction has dimension " + std::to_string(w.size()) + ", expected " +
                         std::to_string(dim_));
  }
  for (double x : w) {
    if (!(x >= 0.0)) throw DomainError("tail dependence functions live on R_+^d");
  }
  return fn_(w);
}

TailDepFunction zero_tdf(int dim) {
  return TailDepFunction(
      dim, [](std::span<const double>) { return 0.0; }, Provenance::analytic,
      TdfSpec{TdfSpec::Kind::zero, 0.0, dim, ""});
}

TailDepFunction min_tdf(int dim) {
  return TailDepFunction(
      dim, [](std::span<const double> w) { return *std::min_element(w.begin(), w.end()); }, Provenance::analytic,
      TdfSpec{TdfSpec::Kind::min, 0.0, dim, ""});
}

TailDepFunction archimedean_tdf(double alpha, int dim) {
  if (std::isnan(alpha) || alpha < 0.0) throw DomainError("regular variation index must lie in [0, inf]");
  if (alpha == 0.0) return zero_tdf(dim);
  if (std::isinf(alpha)) return min_tdf(dim);
  auto fn = [alpha](std::span<const double> w) {
    // Factor out the minimum so that every power is <= 1.
    const double m = *std::min_element(w.begin(), w.end());
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double x : w) s += std::pow(x / m, -alpha);
    return m * std::pow(s, -1.0 / alpha);
  };
  return TailDepFunction(dim, fn, Provenance::analytic, TdfSpec{TdfSpec::Kind::clayton, alpha, dim, ""});
}

SimplexTdf fig1_parabola() {
  return SimplexTdf{[](double t) { return t * (1.0 - t); }, "fig1-parabola"};
}

SimplexTdf fig1_piecewise() {
  return SimplexTdf{[](double t) { return std::min(0.5 * t, 1.0 - t); }, "fig1-piecewise"};
}

TailDepFunction broken_square_tdf(int dim) {
  auto fn = [](std::span<const double> w) {
    const double m = *std::min_element(w.begin(), w.end());
    return m * m;
  };
  return TailDepFunction(dim, fn, Provenance::analytic, TdfSpec{TdfSpec::Kind::custom, 0.0, dim, "broken-square"});
}

SimplexTdf simplex_restriction(const TailDepFunction& lambda) {
  if (lambda.dimension() != 2) throw DimensionError("simplex restriction is defined for d = 2");
  std::string label = lambda.spec().label;
  return SimplexTdf{[lambda](double t) { return lambda({t, 1.0 - t}); }, label};
}

TailDepFunction lift(const SimplexTdf& phi) {
  constexpr int n = 256;
  constexpr double tol = 1e-9;
  std::vector<double> v(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    v[i] = phi(t);
    if (!(v[i] >= -tol && v[i] <= std::min(t, 1.0 - t) + tol)) {
      throw DomainError("phi violates 0 <= phi(t) <= min{t, 1-t} at t = " + detail::format_double(t));
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 2; j <= n; j += 2) {
      if (v[(i + j) / 2] < 0.5 * (v[i] + v[j]) - tol) {
        throw DomainError("phi is not midpoint concave near t = " + detail::format_double(0.5 * (i + j) / n));
      }
    }
  }
  auto fn = [phi](std::span<const double> w) {
    const double s = w[0] + w[1];
    if (s == 0.0) return 0.0;
    return s * phi(w[0] / s);
  };
  TdfSpec spec{TdfSpec::Kind::custom, 0.0, 2, phi.label};
  if (phi.label == "fig1-parabola") spec.kind = TdfSpec::Kind::fig1_parabola;
  if (phi.label == "fig1-piecewise") spec.kind = TdfSpec::Kind::fig1_piecewise;
  return TailDepFunction(2, fn, Provenance::analytic, spec);
}

TailDepFunction make_tdf(const TdfSpec& spec) {
  switch (spec.kind) {
    case TdfSpec::Kind::zero:
      return zero_tdf(spec.dim);
    case TdfSpec::Kind::min:
      return min_tdf(spec.dim);
    case TdfSpec::Kind::clayton:
      if (!(spec.alpha > 0.0)) throw DescriptorError("clayton tail dependence function needs alpha > 0");
      return archimedean_tdf(spec.alpha, spec.dim);
    case TdfSpec::Kind::fig1_parabola:
    case TdfSpec::Kind::fig1_piecewise:
      if (spec.dim != 2) throw DescriptorError("fig1 tail dependence functions are bivariate");
      return lift(spec.kind == TdfSpec::Kind::fig1_parabola ? fig1_parabola() : fig1_piecewise());
    case TdfSpec::Kind::custom:
      break;
  }
  throw DescriptorError("custom tail dependence functions cannot be rebuilt from a descriptor");
}

namespace {

void record(CheckResult& r, double violation, Point where, double tol) {
  if (violation > tol && violation > r.worst) {
    r.passed = false;
    r.worst = violation;
    r.witness = std::move(where);
  }
}

Point concat(const Point& a, const Point& b) {
  Point p(a);
  p.insert(p.end(), b.begin(), b.end());
  return p;
}

}  // namespace

ValidityReport validate_tdf(const TailDepFunction& lambda, const GridConfig& g, double tolerance) {
  const int d = lambda.dimension();
  const int n = std::max(g.resolution, 2);
  CheckResult bounds{"bounds"};
  CheckResult increasing{"d_increasing"};
  CheckResult homogeneity{"homogeneity"};
  CheckResult lipschitz{"lipschitz"};
  CheckResult concavity{"concavity"};

  static constexpr double kScales[] = {0.25, 0.5, 2.0, 4.0};
  std::vector<double> values;
  Point w(d);
  Point sw(d);
  detail::for_each_index(d, n, [&](const std::vector<int>& idx) {
    for (int k = 0; k < d; ++k) w[k] = static_cast<double>(idx[k]) / n;
    const double v = lambda(w);
    values.push_back(v);
    const double m = *std::min_element(w.begin(), w.end());
    record(bounds, std::max(-v, v - m), w, tolerance);
    for (double s : kScales) {
      for (int k = 0; k < d; ++k) sw[k] = s * w[k];
      record(homogeneity, std::abs(lambda(sw) - s * v), w, tolerance);
    }
  });

  std::vector<std::size_t> stride(d, 1);
  for (int k = d - 2; k >= 0; --k) stride[k] = stride[k + 1] * (n + 1);
  detail::for_each_index(d, n - 1, [&](const std::vector<int>& idx) {
    std::size_t base = 0;
    for (int k = 0; k < d; ++k) base += idx[k] * stride[k];
    double vol = 0.0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::size_t off = base;
      int lower_count = d;
      for (int k = 0; k < d; ++k) {
        if (mask & (1u << k)) {
          off += stride[k];
          --lower_count;
        }
      }
      vol += (lower_count % 2 == 0) ? values[off] : -values[off];
    }
    if (-vol > tolerance) {
      Point corner(d);
      for (int k = 0; k < d; ++k) corner[k] = static_cast<double>(idx[k]) / n;
      record(increasing, -vol, corner, tolerance);
    }
  });

  const unsigned pairs = static_cast<unsigned>(n) * static_cast<unsigned>(n);
  Point a(d);
  Point b(d);
  Point mid(d);
  for (unsigned i = 0; i < pairs; ++i) {
    const auto h = detail::halton(i, 2 * d);
    double dist = 0.0;
    for (int k = 0; k < d; ++k) {
      a[k] = h[k];
      b[k] = h[d + k];
      mid[k] = 0.5 * (a[k] + b[k]);
      dist += std::abs(a[k] - b[k]);
    }
    const double la = lambda(a);
    const double lb = lambda(b);
    record(lipschitz, std::abs(la - lb) - dist, concat(a, b), tolerance);
    record(concavity, 0.5 * (la + lb) - lambda(mid), concat(a, b), tolerance);
  }

  return ValidityReport{{bounds, increasing, homogeneity, lipschitz, concavity}};
}

}  // namespace tailorder
