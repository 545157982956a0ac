#include "tailorder/copula.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lattice.hpp"

namespace tailorder {

Copula::Copula(int dim, Evaluator raw, Descriptor descriptor, bool exact_boundary)
    : dim_(dim),
      raw_(std::make_shared<const Evaluator>(std::move(raw))),
      descriptor_(std::make_shared<const Descriptor>(std::move(descriptor))),
      exact_boundary_(exact_boundary) {
  if (dim_ < 2) throw DimensionError("copula dimension must be at least 2");
}

Copula Copula::from_function(int dim, Evaluator fn, std::string label) {
  return Copula(dim, std::move(fn), Descriptor{family::Custom{std::move(label), dim}}, false);
}

void Copula::check_argument(std::span<const double> u, double* clamped) const {
  if (static_cast<int>(u.size()) != dim_) {
    throw DimensionError("point has dimension " + std::to_string(u.size()) + ", copula has dimension " +
                         std::to_string(dim_));
  }
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double x = u[k];
    if (!(x >= -kBoundaryTolerance && x <= 1.0 + kBoundaryTolerance)) {
      throw DomainError("coordinate " + std::to_string(k) + " outside [0,1]: " + detail::format_double(x));
    }
    clamped[k] = std::clamp(x, 0.0, 1.0);
  }
}

double Copula::eval(std::span<const double> u) const {
  std::vector<double> v(u.size());
  check_argument(u, v.data());
  if (exact_boundary_) {
    int not_one = -1;
    int count_not_one = 0;
    for (int k = 0; k < dim_; ++k) {
      if (v[k] == 0.0) return 0.0;
      if (v[k] != 1.0) {
        not_one = k;
        ++count_not_one;
      }
    }
    if (count_not_one == 0) return 1.0;
    if (count_not_one == 1) return v[not_one];
  }
  return (*raw_)(v);
}

double Copula::eval_raw(std::span<const double> u) const {
  std::vector<double> v(u.size());
  check_argument(u, v.data());
  return (*raw_)(v);
}

Copula independence(int dim) {
  return Copula(
      dim,
      [](std::span<const double> u) {
        double p = 1.0;
        for (double x : u) p *= x;
        return p;
      },
      Descriptor{family::Independence{dim}});
}

Copula comonotone(int dim) {
  return Copula(
      dim, [](std::span<const double> u) { return *std::min_element(u.begin(), u.end()); },
      Descriptor{family::Comonotone{dim}});
}

Copula countermonotone() {
  return Copula(
      2, [](std::span<const double> u) { return std::max(u[0] + u[1] - 1.0, 0.0); },
      Descriptor{family::Countermonotone{}});
}

double h_volume(const Copula& c, const Box& b) {
  const int d = c.dimension();
  if (static_cast<int>(b.dimension()) != d) throw DimensionError("box and copula dimensions differ");
  double vol = 0.0;
  Point corner(d);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    int lower_count = 0;
    for (int k = 0; k < d; ++k) {
      if (mask & (1u << k)) {
        corner[k] = b.upper[k];
      } else {
        corner[k] = b.lower[k];
        ++lower_count;
      }
    }
    const double v = c.eval(corner);
    vol += (lower_count % 2 == 0) ? v : -v;
  }
  return vol;
}

namespace {

void record(CheckResult& r, double violation, const Point& where, double tol) {
  if (violation > tol && violation > r.worst) {
    r.passed = false;
    r.worst = violation;
    r.witness = where;
  }
}

}  // namespace

ValidityReport validate_copula(const Copula& c, const GridConfig& g, double volume_tolerance) {
  const int d = c.dimension();
  const int n = std::max(g.resolution, 2);
  CheckResult grounded{"grounded"};
  CheckResult margins{"uniform_margins"};
  CheckResult increasing{"d_increasing"};

  // Lattice values, row-major over {0..n}^d.
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(std::pow(n + 1, d)));
  Point u(d);
  detail::for_each_index(d, n, [&](const std::vector<int>& idx) {
    for (int k = 0; k < d; ++k) u[k] = static_cast<double>(idx[k]) / n;
    const double v = c.eval_raw(u);
    values.push_back(v);
    const bool on_zero_face = std::any_of(idx.begin(), idx.end(), [](int i) { return i == 0; });
    if (on_zero_face) record(grounded, std::abs(v), u, volume_tolerance);
    int not_one = -1;
    int count_not_one = 0;
    for (int k = 0; k < d; ++k) {
      if (idx[k] != n) {
        not_one = k;
        ++count_not_one;
      }
    }
    if (count_not_one <= 1) {
      const double expected = count_not_one == 0 ? 1.0 : u[not_one];
      record(margins, std::abs(v - expected), u, volume_tolerance);
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
    if (-vol > volume_tolerance) {
      for (int k = 0; k < d; ++k) u[k] = static_cast<double>(idx[k]) / n;
      record(increasing, -vol, u, volume_tolerance);
    }
  });

  return ValidityReport{{grounded, margins, increasing}};
}

Copula glue(const Copula& left, const Copula& right, int axis, double split) {
  if (left.dimension() != 2 || right.dimension() != 2) throw DimensionError("glue needs bivariate copulas");
  if (axis != 1 && axis != 2) throw DomainError("glue axis must be 1 or 2");
  if (!(split > 0.0 && split < 1.0)) throw DomainError("glue split must lie in (0,1)");
  const int a = axis - 1;
  const int o = 1 - a;
  auto eval = [left, right, a, o, split](std::span<const double> u) {
    double p[2];
    if (u[a] <= split) {
      p[a] = u[a] / split;
      p[o] = u[o];
      return split * left.eval(std::span<const double>(p, 2));
    }
    p[a] = std::min((u[a] - split) / (1.0 - split), 1.0);
    p[o] = u[o];
    return split * u[o] + (1.0 - split) * right.eval(std::span<const double>(p, 2));
  };
  return Copula(2, eval,
                Descriptor{family::Glue{axis, split, left.descriptor_ptr(), right.descriptor_ptr()}});
}

Copula survival(const Copula& c) {
  if (c.dimension() != 2) throw DimensionError("survival copula is implemented for d = 2 only");
  auto eval = [c](std::span<const double> u) {
    const double q[2] = {1.0 - u[0], 1.0 - u[1]};
    return std::max(0.0, u[0] + u[1] - 1.0 + c.eval(std::span<const double>(q, 2)));
  };
  return Copula(2, eval, Descriptor{family::Survival{c.descriptor_ptr()}});
}

double diagonal_value(const Copula& c, double t) {
  Point u(c.dimension(), t);
  return c.eval(u);
}

}  // namespace tailorder
