#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tailorder/copula.hpp"
#include "tailorder/orders.hpp"
#include "tailorder/taildep.hpp"

namespace tailorder::verify {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  double value = 0.0;      // the measured quantity (gap, error, margin)
  double tolerance = 0.0;
  std::string detail;
};

std::vector<std::string> suite_names();

/// Runs one named suite or "all". Throws DescriptorError for unknown names.
std::vector<Check> run_suite(const std::string& suite, const GridConfig& g = {}, const LimitSchedule& sched = {});

nlohmann::json to_json(const Check& c);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  nlohmann::json summary;  // verdicts that accompany the rows
};

std::vector<std::string> repro_names();

/// Counterexample data: "mo-clayton", "glued-joe", "fig1-tdfs".
Table repro(const std::string& name, const GridConfig& g = {}, const LimitSchedule& sched = {});

/// glue(Joe(2), C+, axis, 1/2).
Copula glued_joe(int axis);

/// Points (t, t^alpha) with Euclidean norm <= eps, t = eps^2 * i / n.
std::vector<Point> power_curve_probes(double alpha, double eps, int n = 256);

/// Simplex directions (i/(n-1), 1 - i/(n-1)), i = 0..n-1.
std::vector<Point> simplex_fan(int n = 21);

}  // namespace tailorder::verify
