#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tropdet/matrix.hpp"

namespace tropical {

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// One cell per line of the shorter side, all rows and all columns distinct.
// Cells are sorted by (row, col).
struct Transversal {
  std::vector<Cell> cells;
  Entry value = 0;
};

// Max-plus determinant: the largest transversal sum. Only the value is
// contractual; the witness is some optimal transversal, chosen
// deterministically by the solver.
Transversal tdet(const IntMatrix& a);

// Min-plus variant: the smallest transversal sum.
Transversal tropdet(const IntMatrix& a);

// Checks shape, distinctness and that the stored value matches the entries.
bool is_transversal_of(const IntMatrix& a, const Transversal& t);

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

// Exhaustive optimum over every injection of the shorter side into the
// longer one. Throws Errc::TooLarge when min(rows, cols) > 8 or the number
// of transversals exceeds `cap`.
Entry tdet_bruteforce(const IntMatrix& a, bool minimize,
                      std::uint64_t cap = kDefaultBruteForceCap);

// True iff some transversal uses only entries >= threshold.
bool threshold_transversal_exists(const IntMatrix& a, Entry threshold);

// A submatrix, up to row/column permutation, whose entries are all
// <= threshold and whose dimension sum is maximal.
struct LowBlock {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t d1() const noexcept { return rows.size(); }
  std::size_t d2() const noexcept { return cols.size(); }
  std::size_t dim_sum() const noexcept { return rows.size() + cols.size(); }
};

// Witness from Konig's theorem: the complement of a minimum vertex cover of
// the "entry > threshold" bipartite graph.
LowBlock max_low_block(const IntMatrix& a, Entry threshold);
std::pair<std::size_t, std::size_t> max_low_block_dims(const IntMatrix& a,
                                                        Entry threshold);

// Ball-sorting view of a color x pail matrix: rows are colors with R balls
// each, columns are pails. `moves` = rows * R - tdet, the fewest single-ball
// moves that sort every color into its own pail; `assignment` maps each
// color (row) to its pail (column).
struct SortingPlan {
  Entry moves = 0;
  Transversal assignment;
};

// Throws Errc::WrongOrientation if rows > cols and Errc::UnequalRowSums if
// the rows do not share one sum.
SortingPlan sorting_plan(const IntMatrix& a);
Entry sorting_cost(const IntMatrix& a);

}  // namespace tropical
