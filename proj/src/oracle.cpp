#include "tropdet/oracle.hpp"

#include <algorithm>
#include <string>

#include "tropdet/assignment.hpp"
#include "tropdet/bounds.hpp"
#include "tropdet/error.hpp"

namespace tropical {
namespace {

// Row-major backtracking over the margins. Each free cell ranges over
// [max(0, row_left - capacity of the cells to its right), min(row_left,
// col_left)], which makes the forced last column and last row always valid:
// every leaf is a point and no branch dead-ends.
template <typename Leaf>
class MarginWalker {
 public:
  MarginWalker(const ProblemParams& p, Leaf& leaf)
      : rows_(p.rows),
        cols_(p.cols),
        cells_(static_cast<std::size_t>(p.rows * p.cols), 0),
        row_left_(static_cast<std::size_t>(p.rows), p.row_sum),
        col_left_(static_cast<std::size_t>(p.cols), p.col_sum),
        leaf_(leaf) {}

  void run() { place(0, 0); }

 private:
  Entry& cell(Int i, Int j) { return cells_[static_cast<std::size_t>(i * cols_ + j)]; }

  void place(Int i, Int j) {
    if (i == rows_ - 1) {
      for (Int jj = 0; jj < cols_; ++jj) cell(i, jj) = col_left_[jj];
      leaf_(cells_);
      return;
    }
    if (j == cols_ - 1) {
      const Entry v = row_left_[i];
      cell(i, j) = v;
      col_left_[j] -= v;
      row_left_[i] = 0;
      place(i + 1, 0);
      row_left_[i] = v;
      col_left_[j] += v;
      return;
    }

    Entry capacity = 0;
    for (Int jj = j + 1; jj < cols_; ++jj) capacity += col_left_[jj];
    const Entry lo = std::max<Entry>(0, row_left_[i] - capacity);
    const Entry hi = std::min(row_left_[i], col_left_[j]);
    for (Entry v = lo; v <= hi; ++v) {
      cell(i, j) = v;
      row_left_[i] -= v;
      col_left_[j] -= v;
      place(i, j + 1);
      row_left_[i] += v;
      col_left_[j] += v;
    }
  }

  Int rows_;
  Int cols_;
  std::vector<Entry> cells_;
  std::vector<Entry> row_left_;
  std::vector<Entry> col_left_;
  Leaf& leaf_;
};

template <typename Leaf>
void walk_margins(const ProblemParams& p, Leaf& leaf) {
  MarginWalker<Leaf> walker(p, leaf);
  walker.run();
}

}  // namespace

std::uint64_t count_points(const ProblemParams& p, std::uint64_t cap) {
  std::uint64_t count = 0;
  auto leaf = [&](const std::vector<Entry>&) {
    if (++count > cap) {
      throw Error(Errc::CapExceeded, "polytope has more than " +
                                         std::to_string(cap) + " integer points");
    }
  };
  walk_margins(p, leaf);
  return count;
}

std::uint64_t enumerate_points(const ProblemParams& p, std::uint64_t cap,
                               const PointVisitor& visit) {
  const std::uint64_t total = count_points(p, cap);
  const auto rows = static_cast<std::size_t>(p.rows);
  const auto cols = static_cast<std::size_t>(p.cols);
  auto leaf = [&](const std::vector<Entry>& cells) {
    visit(IntMatrix(rows, cols, cells));
  };
  walk_margins(p, leaf);
  return total;
}

std::vector<IntMatrix> collect_points(const ProblemParams& p,
                                      std::uint64_t cap) {
  std::vector<IntMatrix> points;
  enumerate_points(p, cap, [&](const IntMatrix& a) { points.push_back(a); });
  return points;
}

VerificationReport verify_bounds(const ProblemParams& p, std::uint64_t cap) {
  VerificationReport report;
  report.params = p;
  report.formula_lower = lower_bound(p);
  report.formula_upper = upper_bound(p);

  report.points_enumerated = enumerate_points(p, cap, [&](const IntMatrix& a) {
    const Int hi = tdet(a).value;
    const Int lo = tropdet(a).value;
    if (!report.argmin_example || hi < report.oracle_min_tdet) {
      report.oracle_min_tdet = hi;
      report.argmin_example = a;
    }
    if (!report.argmax_example || lo > report.oracle_max_tropdet) {
      report.oracle_max_tropdet = lo;
      report.argmax_example = a;
    }
    if (hi < report.formula_lower || lo > report.formula_upper) {
      ++report.one_sided_violations;
    }
  });

  report.lower_match = report.oracle_min_tdet == report.formula_lower;
  report.upper_match = report.oracle_max_tropdet == report.formula_upper;
  return report;
}

}  // namespace tropical
