#include "tropdet/constructions.hpp"

#include <string>
#include <vector>

#include "tropdet/assignment.hpp"
#include "tropdet/bounds.hpp"
#include "tropdet/error.hpp"

namespace tropical {
namespace {

// Row-major scratch buffer; converted to an IntMatrix once complete.
class Canvas {
 public:
  Canvas(Int rows, Int cols, Entry fill)
      : cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

  Entry& operator()(Int i, Int j) {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }

  IntMatrix finish(const ProblemParams& p) && {
    return IntMatrix(static_cast<std::size_t>(p.rows),
                     static_cast<std::size_t>(p.cols), std::move(data_));
  }

 private:
  Int cols_;
  std::vector<Entry> data_;
};

// Position j of a row holds `run` consecutive raised slots, starting at
// `start`, on a cycle of length `width`.
bool in_cyclic_run(Int j, Int start, Int run, Int width) {
  return ((j - start) % width + width) % width < run;
}

}  // namespace

IntMatrix construct_lower_uniform(const ProblemParams& p) {
  const Int run = p.r * p.l;
  Canvas a(p.rows, p.cols, p.q);
  for (Int i = 0; i < p.rows; ++i) {
    const Int start = (i % p.cols) * run % p.cols;
    for (Int j = 0; j < p.cols; ++j) {
      if (in_cyclic_run(j, start, run, p.cols)) a(i, j) += 1;
    }
  }
  return std::move(a).finish(p);
}

IntMatrix construct_lower_blocks(const ProblemParams& p, Int x, Int y) {
  const Int rk = p.r * p.k;
  const Int rl = p.r * p.l;
  if (x < rk || y < rl || x + y > p.rows || !xy_feasible(p, x, y)) {
    throw Error(Errc::InfeasiblePair,
                "(x, y) = (" + std::to_string(x) + ", " + std::to_string(y) +
                    ") violates x >= rk, y >= rl, x + y <= nk or the "
                    "quadratic constraint");
  }

  Canvas a(p.rows, p.cols, p.q);

  // Y: x rows by (nl - y) columns, rk raised slots per column.
  if (rk > 0) {
    for (Int jj = 0; jj < p.cols - y; ++jj) {
      const Int start = jj * rk % x;
      for (Int t = 0; t < rk; ++t) a((start + t) % x, y + jj) += 1;
    }
  }

  // Z: (nk - x) rows by y columns, rl raised slots per row.
  if (rl > 0) {
    for (Int ii = 0; ii < p.rows - x; ++ii) {
      const Int start = ii * rl % y;
      for (Int t = 0; t < rl; ++t) a(x + ii, (start + t) % y) += 1;
    }
  }

  // X: the remaining mass, walked right-to-left through the rows from the
  // bottom up, each row continuing where the row below stopped.
  const Int mass = p.q * x * y + p.r * (x * p.l + y * p.k) - p.k * p.l * p.n * p.r;
  if (x > 0 && y > 0) {
    const Int c = mass / x;
    const Int d = mass % x;
    Int cursor = 0;
    for (Int i = x - 1; i >= 0; --i) {
      const Int row_total = i >= x - d ? c + 1 : c;
      const Int base = row_total / y;
      const Int extra = row_total % y;
      for (Int j = 0; j < y; ++j) a(i, j) = base;
      for (Int t = 0; t < extra; ++t) a(i, y - 1 - (cursor + t) % y) += 1;
      cursor = (cursor + extra) % y;
    }
  }

  IntMatrix result = std::move(a).finish(p);

  if (!validate_membership(result, p).is_member) {
    throw Error(Errc::PostconditionFailed, "block construction is not a member");
  }
  for (Int i = 0; i < x; ++i) {
    for (Int j = 0; j < y; ++j) {
      if (result(i, j) > p.q) {
        throw Error(Errc::PostconditionFailed, "X block entry exceeds q");
      }
    }
  }
  if (tdet(result).value > p.rows * p.q + x + y) {
    throw Error(Errc::PostconditionFailed, "block construction exceeds nkq + x + y");
  }
  return result;
}

IntMatrix construct_lower(const ProblemParams& p) {
  const XYSolution xy = solve_xy(p);
  if (xy.sum >= p.rows) return construct_lower_uniform(p);
  return construct_lower_blocks(p, xy.x, xy.y);
}

IntMatrix construct_upper(const ProblemParams& p) {
  const Int rk = p.r * p.k;
  const Int rl = p.r * p.l;
  if (p.r == 0 || p.r * (p.k + p.l) < p.cols) {
    return construct_lower_uniform(p);
  }

  Canvas a(p.rows, p.cols, p.q);
  for (Int i = 0; i < rk; ++i) {
    for (Int j = 0; j < rl; ++j) a(i, j) += 1;
  }

  // Lift the (nk - rk) x (nl - rl) corner by rl per row and rk per column.
  const Int width = p.cols - rl;
  const Int lift = rl / width;
  const Int spill = rl % width;
  for (Int ii = 0; ii < p.rows - rk; ++ii) {
    const Int start = ii * spill % width;
    for (Int jj = 0; jj < width; ++jj) {
      a(rk + ii, rl + jj) += lift + (in_cyclic_run(jj, start, spill, width) ? 1 : 0);
    }
  }
  return std::move(a).finish(p);
}

}  // namespace tropical
