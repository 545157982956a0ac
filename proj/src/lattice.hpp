#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace tailorder::detail {

/// Visits every index vector in {0..n}^dim in lexicographic order.
inline void for_each_index(int dim, int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(dim, 0);
  while (true) {
    visit(idx);
    int k = dim - 1;
    while (k >= 0 && idx[k] == n) {
      idx[k] = 0;
      --k;
    }
    if (k < 0) return;
    ++idx[k];
  }
}

/// Radical inverse in the given prime base (Halton component).
inline double radical_inverse(unsigned index, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * (index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

inline constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

/// i-th point of the Halton sequence in [0,1]^dim (dim <= 8), skipping 0.
inline std::vector<double> halton(unsigned i, int dim) {
  std::vector<double> p(dim);
  for (int k = 0; k < dim; ++k) p[k] = radical_inverse(i + 1, kPrimes[k]);
  return p;
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace tailorder::detail
