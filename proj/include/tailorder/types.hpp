#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tailorder {

// Errors. Everything thrown by the library derives from Error so callers
// (the CLI in particular) can map failures to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument dimension does not match the object it is applied to.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A parameter or coordinate lies outside its admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unknown copula / fixture description.
class DescriptorError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not deliver a trustworthy value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Coordinates of a point in [0,1]^d (or a direction in R_+^d).
using Point = std::vector<double>;

/// Coordinates are clamped to [0,1] when they overshoot by at most this much.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Tolerance on negative H-volumes for a genuine copula.
inline constexpr double kVolumeTolerance = 1e-9;

struct Box {
  Point lower;
  Point upper;

  Box(Point lo, Point hi);
  std::size_t dimension() const { return lower.size(); }
};

/// Sampling parameters shared by audits and order checks.
struct GridConfig {
  int resolution = 64;
  double tau = 1e-6;              // strictness / indistinguishability threshold
  double interior_margin = 1e-3;  // excluded band near the simplex boundary

  void validate() const;
};

/// Geometric schedule s_k = s0 * ratio^k, k = 0..steps-1.
struct LimitSchedule {
  double s0 = 1e-2;
  double ratio = 0.5;
  int steps = 24;

  void validate() const;
  double at(int k) const;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  double worst = 0.0;  // largest violation magnitude seen (0 when none)
  Point witness;       // where the worst violation occurred
};

struct ValidityReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  /// Throws std::out_of_range for an unknown check name.
  const CheckResult& at(std::string_view name) const;
};

double l1_norm(const Point& p);
double l2_norm(const Point& p);

}  // namespace tailorder
