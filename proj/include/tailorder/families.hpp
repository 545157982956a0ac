#pragma once

#include "tailorder/copula.hpp"
#include "tailorder/diagonal.hpp"
#include "tailorder/generator.hpp"
#include "tailorder/tdf.hpp"

namespace tailorder {

/// C(u) = phi^[-1](sum_k phi(u_k)).
Copula archimedean(const Generator& g, int dim = 2);

/// M_alpha(u) = min{u1^(1-alpha) u2, u1}, alpha in (0,1).
Copula marshall_olkin(double alpha);

/// exp(log u1 + log u2 + Lambda(-log u1, -log u2)); requires a bivariate
/// Lambda passing validate_tdf.
Copula ev_copula(const TailDepFunction& lambda);
/// Survival copula of ev_copula(lambda); evaluated through log1p/expm1 so the
/// lower tail keeps its relative accuracy.
Copula lower_ev_copula(const TailDepFunction& lambda);

/// min{u, v, (delta(u) + delta(v))/2}.
Copula fredricks_nelsen(const DiagonalSection& delta);
/// min(u,v) - min over t in [min, max] of (t - delta(t)).
Copula bertino(const DiagonalSection& delta);
/// min(u,v) delta(max) / max; requires validate_semilinear_diagonal.
Copula semilinear(const DiagonalSection& delta);

/// Bivariate Gaussian copula. |rho| > 0.999 is routed to the comonotone or
/// countermonotone closed form, which is accurate only to O(sqrt(1-|rho|)).
Copula gaussian(double rho);

/// C(u1,u2,u3) = outer(u1, inner(u2, u3)). Clayton/Clayton nests need
/// outer theta <= inner theta; other combinations must pass validate_copula
/// at resolution 16.
Copula hierarchical(const Copula& outer, const Copula& inner);

Copula build(const Descriptor& d);
Copula build(const std::string& text);

}  // namespace tailorder
