#pragma once

#include <functional>

#include "tailorder/copula.hpp"
#include "tailorder/descriptor.hpp"
#include "tailorder/types.hpp"

namespace tailorder {

struct DiagonalSection {
  std::function<double(double)> delta;
  int dim = 2;
  DiagonalSpec spec;

  double operator()(double t) const { return delta(t); }
};

DiagonalSection power_diagonal(double p, int dim = 2);
/// Diagonal of the bivariate Clayton copula, (2 t^-theta - 1)^(-1/theta).
DiagonalSection clayton_diagonal(double theta);
DiagonalSection diagonal_of(const Copula& c);
DiagonalSection make_diagonal(const DiagonalSpec& spec, int dim = 2);

/// endpoints, below_identity, increasing, lipschitz on `points` grid nodes.
ValidityReport validate_diagonal(const DiagonalSection& delta, int points = 10001);

/// Adds ratio_increasing (delta(t)/t) and ratio_square_decreasing
/// (delta(t)/t^2), both checked in the weak sense.
ValidityReport validate_semilinear_diagonal(const DiagonalSection& delta, int points = 10001);

}  // namespace tailorder
