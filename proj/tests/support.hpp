#pragma once

#include <fstream>
#include <random>
#include <string>

#include "tropdet/matrix.hpp"
#include "tropdet/params.hpp"

namespace tropical::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(TROPDET_FIXTURE_DIR) + "/" + name;
}

inline IntMatrix fixture(const std::string& name) {
  return read_matrix_file(fixture_path(name));
}

// Uniform entries in [lo, hi], dimensions in [1, max_rows] x [1, max_cols].
inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_rows,
                               std::size_t max_cols, Entry lo = 0, Entry hi = 9) {
  std::uniform_int_distribution<std::size_t> rows_dist(1, max_rows);
  std::uniform_int_distribution<std::size_t> cols_dist(1, max_cols);
  std::uniform_int_distribution<Entry> entry(lo, hi);
  const std::size_t rows = rows_dist(rng);
  const std::size_t cols = cols_dist(rng);
  std::vector<Entry> entries(rows * cols);
  for (auto& e : entries) e = entry(rng);
  return IntMatrix(rows, cols, std::move(entries));
}

// Exhaustive grid scan of the (x, y) program, independent of solve_xy.
struct GridOptimum {
  Int x = 0;
  Int y = 0;
  Int sum = 0;
};

inline GridOptimum xy_grid_scan(const ProblemParams& p) {
  const Int limit = p.rows + p.r * p.l;
  GridOptimum best{0, 0, -1};
  for (Int x = p.r * p.k; x <= limit; ++x) {
    for (Int y = p.r * p.l; y <= limit; ++y) {
      const Int lhs = p.q * x * y + p.r * (x * p.l + y * p.k);
      if (lhs < p.k * p.l * p.n * p.r) continue;
      if (best.sum < 0 || x + y < best.sum) best = {x, y, x + y};
    }
  }
  return best;
}

}  // namespace tropical::testing
