#include "tropdet/assignment.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "tropdet/error.hpp"

namespace tropical {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Minimum-cost assignment of every row into a distinct column for a
// rows <= cols cost matrix (shortest augmenting paths with potentials).
// Rows are inserted in index order, which fixes the witness among ties.
std::vector<std::size_t> solve_min_assignment(const IntMatrix& cost) {
  const std::size_t n = cost.rows();
  const std::size_t m = cost.cols();

  // Potentials stay within (n + 1) * max cost in magnitude.
  const Entry bound = std::numeric_limits<Entry>::max() / 4;
  if (cost.max_entry() > bound / static_cast<Entry>(m + 2)) {
    throw Error(Errc::Overflow, "matrix entries too large for the solver");
  }
  const Entry inf = bound;

  std::vector<Entry> u(n + 1, 0), v(m + 1, 0), minv(m + 1);
  std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
  std::vector<char> used(m + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = owner[j0];
      Entry delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const Entry cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> row_to_col(n, kNone);
  for (std::size_t j = 1; j <= m; ++j) {
    if (owner[j] != 0) row_to_col[owner[j] - 1] = j - 1;
  }
  return row_to_col;
}

Transversal optimal_transversal(const IntMatrix& a, bool maximize) {
  const bool flip = a.rows() > a.cols();
  const IntMatrix oriented = flip ? a.transposed() : a;

  // Maximization runs the same solver on (max - a), which stays nonnegative.
  IntMatrix cost = oriented;
  if (maximize) {
    const Entry top = oriented.max_entry();
    for (std::size_t i = 0; i < cost.rows(); ++i) {
      for (std::size_t j = 0; j < cost.cols(); ++j) {
        cost.set(i, j, top - oriented(i, j));
      }
    }
  }

  const auto row_to_col = solve_min_assignment(cost);
  Transversal t;
  t.cells.reserve(row_to_col.size());
  for (std::size_t i = 0; i < row_to_col.size(); ++i) {
    const std::size_t j = row_to_col[i];
    t.cells.push_back(flip ? Cell{j, i} : Cell{i, j});
    t.value += oriented(i, j);
  }
  std::sort(t.cells.begin(), t.cells.end());
  return t;
}

// Maximum bipartite matching, rows on the left. Returns the column matched
// to each row (kNone if unmatched).
std::vector<std::size_t> max_matching(
    std::size_t rows, std::size_t cols,
    const std::function<bool(std::size_t, std::size_t)>& edge) {
  std::vector<std::size_t> row_match(rows, kNone), col_match(cols, kNone);
  std::vector<char> seen(cols);

  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (seen[j] || !edge(i, j)) continue;
      seen[j] = 1;
      if (col_match[j] == kNone || augment(col_match[j])) {
        col_match[j] = i;
        row_match[i] = j;
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < rows; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(i);
  }
  return row_match;
}

}  // namespace

Transversal tdet(const IntMatrix& a) { return optimal_transversal(a, true); }

Transversal tropdet(const IntMatrix& a) {
  return optimal_transversal(a, false);
}

bool is_transversal_of(const IntMatrix& a, const Transversal& t) {
  if (t.cells.size() != std::min(a.rows(), a.cols())) return false;
  std::vector<char> row_used(a.rows()), col_used(a.cols());
  Entry value = 0;
  for (const Cell& c : t.cells) {
    if (c.row >= a.rows() || c.col >= a.cols()) return false;
    if (row_used[c.row] || col_used[c.col]) return false;
    row_used[c.row] = col_used[c.col] = 1;
    value += a(c.row, c.col);
  }
  return value == t.value;
}

Entry tdet_bruteforce(const IntMatrix& a, bool minimize, std::uint64_t cap) {
  const bool flip = a.rows() > a.cols();
  const IntMatrix oriented = flip ? a.transposed() : a;
  const std::size_t s = oriented.rows();
  const std::size_t t = oriented.cols();

  if (s > 8) {
    throw Error(Errc::TooLarge, "brute force limited to 8 lines on the short side");
  }
  // Number of injections: t * (t - 1) * ... * (t - s + 1).
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < s; ++i) {
    if (__builtin_mul_overflow(count, t - i, &count) || count > cap) {
      throw Error(Errc::TooLarge, "transversal count exceeds the cap of " +
                                      std::to_string(cap));
    }
  }

  std::vector<char> used(t, 0);
  Entry best = minimize ? std::numeric_limits<Entry>::max()
                        : std::numeric_limits<Entry>::min();
  std::function<void(std::size_t, Entry)> walk = [&](std::size_t row,
                                                     Entry acc) {
    if (row == s) {
      best = minimize ? std::min(best, acc) : std::max(best, acc);
      return;
    }
    for (std::size_t j = 0; j < t; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      walk(row + 1, acc + oriented(row, j));
      used[j] = 0;
    }
  };
  walk(0, 0);
  return best;
}

bool threshold_transversal_exists(const IntMatrix& a, Entry threshold) {
  const auto match =
      max_matching(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
        return a(i, j) >= threshold;
      });
  const auto matched = static_cast<std::size_t>(
      std::count_if(match.begin(), match.end(),
                    [](std::size_t j) { return j != kNone; }));
  return matched == std::min(a.rows(), a.cols());
}

LowBlock max_low_block(const IntMatrix& a, Entry threshold) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  auto high = [&](std::size_t i, std::size_t j) { return a(i, j) > threshold; };
  const auto row_match = max_matching(rows, cols, high);

  std::vector<std::size_t> col_match(cols, kNone);
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_match[i] != kNone) col_match[row_match[i]] = i;
  }

  // Alternating reachability from the unmatched rows.
  std::vector<char> row_seen(rows, 0), col_seen(cols, 0);
  std::queue<std::size_t> frontier;
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_match[i] == kNone) {
      row_seen[i] = 1;
      frontier.push(i);
    }
  }
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < cols; ++j) {
      if (col_seen[j] || !high(i, j)) continue;
      col_seen[j] = 1;
      const std::size_t next = col_match[j];
      if (next != kNone && !row_seen[next]) {
        row_seen[next] = 1;
        frontier.push(next);
      }
    }
  }

  // Reached rows and unreached columns span no "high" entry.
  LowBlock block;
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_seen[i]) block.rows.push_back(i);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (!col_seen[j]) block.cols.push_back(j);
  }
  return block;
}

std::pair<std::size_t, std::size_t> max_low_block_dims(const IntMatrix& a,
                                                        Entry threshold) {
  const LowBlock block = max_low_block(a, threshold);
  return {block.d1(), block.d2()};
}

SortingPlan sorting_plan(const IntMatrix& a) {
  if (a.rows() > a.cols()) {
    throw Error(Errc::WrongOrientation,
                "sorting needs at least as many pails (columns) as colors (rows)");
  }
  const auto sums = row_sums(a);
  if (std::adjacent_find(sums.begin(), sums.end(), std::not_equal_to<>()) !=
      sums.end()) {
    throw Error(Errc::UnequalRowSums, "every color must have the same ball count");
  }
  SortingPlan plan;
  plan.assignment = tdet(a);
  plan.moves = static_cast<Entry>(a.rows()) * sums.front() - plan.assignment.value;
  return plan;
}

Entry sorting_cost(const IntMatrix& a) { return sorting_plan(a).moves; }

}  // namespace tropical
