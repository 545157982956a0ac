#pragma once

#include <optional>
#include <vector>

#include "tailorder/copula.hpp"
#include "tailorder/generator.hpp"
#include "tailorder/tdf.hpp"

namespace tailorder {

struct TracePoint {
  double s;
  double ratio;  // C(s w) / s
};

struct TdfEstimate {
  double value = 0.0;
  double error_estimate = 0.0;  // last successive difference
  bool converged = false;
  std::vector<TracePoint> trace;  // ordered by decreasing s
};

/// Thresholds of the convergence flag.
struct ConvergenceCriteria {
  int window = 5;            // number of trailing differences that must not grow
  double max_last_gap = 1e-4;
};

/// Lambda(w; C) as the last iterate of C(s w)/s along the schedule.
TdfEstimate estimate_tdf(const Copula& c, const Point& w, const LimitSchedule& sched = {},
                         const ConvergenceCriteria& crit = {});

/// lambda(C) = Lambda(1; C).
TdfEstimate tdc(const Copula& c, const LimitSchedule& sched = {}, const ConvergenceCriteria& crit = {});

/// lambda = 2 phi_Lambda(1/2).
double tdc_from_simplex(const SimplexTdf& phi);

/// Closed-form Lambda for descriptors that have one (independence, comonotone,
/// Archimedean with known index, Marshall-Olkin, Gaussian, lower extreme value).
std::optional<TailDepFunction> analytic_tdf(const Copula& c);

/// Analytic Lambda when available, otherwise an estimated one that runs
/// estimate_tdf for every query.
TailDepFunction tdf_of(const Copula& c, const LimitSchedule& sched = {});

/// R(u) = (C(u) - Lambda(u)) / ||u||_1.
double tail_expansion_residual(const Copula& c, const TailDepFunction& lambda, const Point& u);

struct IndexEstimate {
  double alpha = 0.0;       // +inf for rapid variation
  bool degenerate = false;  // nonstrict generator
  bool converged = false;   // last two probes agree within 1e-3 (or both infinite)
  std::vector<double> trace;
};

/// Ratio test phi(2s)/phi(s) -> 2^-alpha along the probe schedule, evaluated
/// in log space (log phi(exp(-L))) so the probe can go far below the
/// smallest double.
IndexEstimate regular_variation_index(const Generator& g, const LimitSchedule& probe);
LimitSchedule default_index_probe();

struct QuadratureValue {
  double value = 0.0;
  double resolution_gap = 0.0;  // |coarse - fine|
  bool validated = false;       // gap within 1e-6
};

/// (d+1) * integral of Lambda over [0,1]^d for d <= 3. Homogeneity reduces the
/// integral over each ordered cone w_s1 >= ... >= w_sd to an integral over the
/// direction cube; that one is done by composite 4-point Gauss-Legendre with
/// `panels` and 1.5 * `panels` panels per axis. Throws NumericalError if the
/// two resolutions disagree by more than 1e-6.
QuadratureValue spearman_tdf_limit(const TailDepFunction& lambda, int panels = 64);

/// Same integral at one resolution, no validation.
double spearman_tdf_integral(const TailDepFunction& lambda, int panels);

}  // namespace tailorder
