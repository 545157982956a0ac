#include "tailorder/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tailorder/quadrature.hpp"

namespace tailorder {

Copula archimedean(const Generator& g, int dim) {
  if (dim < 2) throw DimensionError("Archimedean copulas need d >= 2");
  if (g.spec().kind == GeneratorSpec::Kind::nonstrict_linear && dim > 2) {
    throw DomainError("the linear generator does not generate a copula for d > 2");
  }
  auto eval = [g](std::span<const double> u) {
    double sum = 0.0;
    for (double x : u) sum += g.phi(x);
    return g.generalized_inverse(sum);
  };
  return Copula(dim, eval, Descriptor{family::Archimedean{g.spec(), dim}});
}

Copula marshall_olkin(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("Marshall-Olkin parameter must lie in (0,1)");
  auto eval = [alpha](std::span<const double> u) { return std::min(std::pow(u[0], 1.0 - alpha) * u[1], u[0]); };
  return Copula(2, eval, Descriptor{family::MarshallOlkin{alpha}});
}

namespace {

void require_valid_tdf(const TailDepFunction& lambda) {
  if (lambda.dimension() != 2) throw DimensionError("extreme value copulas are built from bivariate Lambda");
  GridConfig coarse;
  coarse.resolution = 16;
  const auto report = validate_tdf(lambda, coarse);
  for (const auto& c : report.checks) {
    if (!c.passed) throw DomainError("invalid tail dependence function: " + c.name + " check fails");
  }
}

}  // namespace

Copula ev_copula(const TailDepFunction& lambda) {
  require_valid_tdf(lambda);
  auto eval = [lambda](std::span<const double> u) {
    if (u[0] == 0.0 || u[1] == 0.0) return 0.0;
    if (u[0] == 1.0) return u[1];
    if (u[1] == 1.0) return u[0];
    const double a = -std::log(u[0]);
    const double b = -std::log(u[1]);
    return std::exp(-a - b + lambda({a, b}));
  };
  return Copula(2, eval, Descriptor{family::ExtremeValue{lambda.spec()}});
}

Copula lower_ev_copula(const TailDepFunction& lambda) {
  require_valid_tdf(lambda);
  auto eval = [lambda](std::span<const double> u) {
    if (u[0] == 0.0 || u[1] == 0.0) return 0.0;
    if (u[0] == 1.0) return u[1];
    if (u[1] == 1.0) return u[0];
    const double a = -std::log1p(-u[0]);
    const double b = -std::log1p(-u[1]);
    const double v = u[0] + u[1] + std::expm1(-a - b + lambda({a, b}));
    return std::clamp(v, 0.0, std::min(u[0], u[1]));
  };
  return Copula(2, eval, Descriptor{family::LowerExtremeValue{lambda.spec()}});
}

namespace {

void require_valid_diagonal(const DiagonalSection& delta) {
  if (delta.dim != 2) throw DimensionError("diagonal constructions are bivariate");
  const auto report = validate_diagonal(delta);
  for (const auto& c : report.checks) {
    if (!c.passed) throw DomainError("invalid diagonal: " + c.name + " check fails");
  }
}

// min over t in [lo, hi] of t - delta(t): dense scan, then golden-section
// refinement around the best scan node.
double min_gap(const DiagonalSection& delta, double lo, double hi) {
  auto gap = [&](double t) { return t - delta(t); };
  if (hi <= lo) return gap(lo);
  constexpr int kScan = 1024;
  const double h = (hi - lo) / (kScan - 1);
  int best = 0;
  double best_val = gap(lo);
  for (int i = 1; i < kScan; ++i) {
    const double t = (i == kScan - 1) ? hi : lo + h * i;
    const double v = gap(t);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = std::max(lo, lo + h * (best - 1));
  double b = std::min(hi, lo + h * (best + 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = gap(x1);
  double f2 = gap(x2);
  while (b - a > 1e-12) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = gap(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = gap(x2);
    }
  }
  return std::min({best_val, f1, f2});
}

}  // namespace

Copula fredricks_nelsen(const DiagonalSection& delta) {
  require_valid_diagonal(delta);
  auto eval = [delta](std::span<const double> u) {
    return std::min({u[0], u[1], 0.5 * (delta(u[0]) + delta(u[1]))});
  };
  return Copula(2, eval, Descriptor{family::FredricksNelsen{delta.spec}});
}

Copula bertino(const DiagonalSection& delta) {
  require_valid_diagonal(delta);
  auto eval = [delta](std::span<const double> u) {
    const double lo = std::min(u[0], u[1]);
    const double hi = std::max(u[0], u[1]);
    return std::max(0.0, lo - min_gap(delta, lo, hi));
  };
  return Copula(2, eval, Descriptor{family::Bertino{delta.spec}});
}

Copula semilinear(const DiagonalSection& delta) {
  if (delta.dim != 2) throw DimensionError("semilinear copulas are bivariate");
  const auto report = validate_semilinear_diagonal(delta);
  for (const auto& c : report.checks) {
    if (!c.passed) throw DomainError("diagonal not admissible for a semilinear copula: " + c.name);
  }
  auto eval = [delta](std::span<const double> u) {
    const double hi = std::max(u[0], u[1]);
    if (hi == 0.0) return 0.0;
    return std::min(u[0], u[1]) * delta(hi) / hi;
  };
  return Copula(2, eval, Descriptor{family::Semilinear{delta.spec}});
}

Copula gaussian(double rho) {
  if (!(rho >= -1.0 && rho <= 1.0)) throw DomainError("Gaussian correlation must lie in [-1,1]");
  Descriptor desc{family::Gaussian{rho}};
  if (rho > 0.999) {
    return Copula(2, [](std::span<const double> u) { return std::min(u[0], u[1]); }, desc);
  }
  if (rho < -0.999) {
    return Copula(2, [](std::span<const double> u) { return std::max(u[0] + u[1] - 1.0, 0.0); }, desc);
  }
  if (rho == 0.0) {
    return Copula(2, [](std::span<const double> u) { return u[0] * u[1]; }, desc);
  }
  auto eval = [rho, rule = gauss_legendre(64)](std::span<const double> u) {
    return bivariate_normal_cdf(normal_quantile(u[0]), normal_quantile(u[1]), rho, rule);
  };
  return Copula(2, eval, desc);
}

Copula hierarchical(const Copula& outer, const Copula& inner) {
  if (outer.dimension() != 2 || inner.dimension() != 2) {
    throw DimensionError("hierarchical nodes must be bivariate");
  }
  auto archimedean_node = [](const Copula& c) -> const family::Archimedean* {
    return std::get_if<family::Archimedean>(&c.descriptor().node);
  };
  auto node_ok = [&](const Copula& c) {
    return archimedean_node(c) != nullptr || std::holds_alternative<family::Independence>(c.descriptor().node);
  };
  if (!node_ok(outer) || !node_ok(inner)) throw DomainError("hierarchical nodes must be Archimedean");

  auto eval = [outer, inner](std::span<const double> u) {
    const double v = inner.eval({u[1], u[2]});
    return outer.eval({u[0], v});
  };
  Copula nested(3, eval, Descriptor{family::Hierarchical{outer.descriptor_ptr(), inner.descriptor_ptr()}});

  const auto* o = archimedean_node(outer);
  const auto* i = archimedean_node(inner);
  if (o && i && o->generator.kind == GeneratorSpec::Kind::clayton &&
      i->generator.kind == GeneratorSpec::Kind::clayton) {
    if (o->generator.theta > i->generator.theta) {
      throw DomainError("Clayton nesting needs outer theta <= inner theta");
    }
    return nested;
  }
  GridConfig audit;
  audit.resolution = 16;
  if (!validate_copula(nested, audit).ok()) throw DomainError("nested composition is not a 3-copula");
  return nested;
}

Copula build(const Descriptor& d) {
  return std::visit(
      [](const auto& node) -> Copula {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, family::Independence>) {
          return independence(node.dim);
        } else if constexpr (std::is_same_v<T, family::Comonotone>) {
          return comonotone(node.dim);
        } else if constexpr (std::is_same_v<T, family::Countermonotone>) {
          return countermonotone();
        } else if constexpr (std::is_same_v<T, family::Archimedean>) {
          return archimedean(make_generator(node.generator), node.dim);
        } else if constexpr (std::is_same_v<T, family::MarshallOlkin>) {
          return marshall_olkin(node.alpha);
        } else if constexpr (std::is_same_v<T, family::ExtremeValue>) {
          return ev_copula(make_tdf(node.tdf));
        } else if constexpr (std::is_same_v<T, family::LowerExtremeValue>) {
          return lower_ev_copula(make_tdf(node.tdf));
        } else if constexpr (std::is_same_v<T, family::FredricksNelsen>) {
          return fredricks_nelsen(make_diagonal(node.diagonal));
        } else if constexpr (std::is_same_v<T, family::Bertino>) {
          return bertino(make_diagonal(node.diagonal));
        } else if constexpr (std::is_same_v<T, family::Semilinear>) {
          return semilinear(make_diagonal(node.diagonal));
        } else if constexpr (std::is_same_v<T, family::Gaussian>) {
          return gaussian(node.rho);
        } else if constexpr (std::is_same_v<T, family::Glue>) {
          return glue(build(*node.left), build(*node.right), node.axis, node.split);
        } else if constexpr (std::is_same_v<T, family::Survival>) {
          return survival(build(*node.inner));
        } else if constexpr (std::is_same_v<T, family::Hierarchical>) {
          return hierarchical(build(*node.outer), build(*node.inner));
        } else {
          throw DescriptorError("custom copulas cannot be rebuilt from a descriptor");
        }
      },
      d.node);
}

Copula build(const std::string& text) { return build(parse_descriptor(text)); }

}  // namespace tailorder
