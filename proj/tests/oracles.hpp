#pragma once

// Test-only reference computations, written independently of the library's
// update paths.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace opact::testing {

/// Brute-force argmax of the utility over a uniform grid on [0,1].
/// Returns (argmax, grid step).
inline std::pair<double, double> grid_argmax(double x_new, double y_avg, double phi,
                                             std::size_t points = 100001) {
  const double h = 1.0 / static_cast<double>(points - 1);
  double best_y = 0.0, best_u = -INFINITY;
  for (std::size_t k = 0; k < points; ++k) {
    const double y = static_cast<double>(k) * h;
    const double u = -phi * (y - x_new) * (y - x_new) - (1.0 - phi) * (y - y_avg) * (y - y_avg);
    if (u > best_u) {
      best_u = u;
      best_y = y;
    }
  }
  return {best_y, h};
}

/// Classical bounded-confidence step over an adjacency matrix; the agent
/// always sees itself. adjacency[i][j] is ignored on the diagonal.
inline std::vector<double> hk_step(const std::vector<double>& x, double eps,
                                   const std::vector<std::vector<bool>>& adjacency) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if ((i == j || adjacency[i][j]) && std::fabs(x[i] - x[j]) <= eps) {
        sum += x[j];
        ++count;
      }
    }
    out[i] = sum / count;
  }
  return out;
}

inline std::vector<std::vector<bool>> full_adjacency(std::size_t n) {
  return std::vector<std::vector<bool>>(n, std::vector<bool>(n, true));
}

}  // namespace opact::testing
