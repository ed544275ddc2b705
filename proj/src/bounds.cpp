#include "tropdet/bounds.hpp"

#include <algorithm>

#include "tropdet/error.hpp"

namespace tropical {
namespace {

// q*x*y can exceed the 64-bit budget by a small factor inside the scan.
__extension__ typedef __int128 Wide;

Int ceil_div(Int num, Int den) { return (num + den - 1) / den; }

}  // namespace

bool xy_feasible(const ProblemParams& p, Int x, Int y) {
  if (x < p.r * p.k || y < p.r * p.l) return false;
  const Wide lhs = Wide(p.q) * x * y + Wide(p.r) * (Wide(x) * p.l + Wide(y) * p.k);
  const Wide rhs = Wide(p.k) * p.l * p.n * p.r;
  return lhs >= rhs;
}

XYSolution solve_xy(const ProblemParams& p) {
  if (p.r == 0) return {};

  const Int x_min = p.r * p.k;
  const Int x_max = p.rows + p.r * p.l;
  // Proof obligation for the scan range: (nk, rl) is always feasible since
  // r * nk * l == k l n r, so the optimum never needs x beyond nk + rl.
  if (!xy_feasible(p, p.rows, p.r * p.l)) {
    throw Error(Errc::PostconditionFailed, "(nk, rl) witness infeasible");
  }

  XYSolution best{0, 0, 0, true};
  bool found = false;
  for (Int x = x_min; x <= x_max; ++x) {
    // y * (q x + r k) >= r l (k n - x); the denominator is positive as r > 0.
    Int y = p.r * p.l;
    const Int num = p.r * p.l * (p.k * p.n - x);
    if (num > 0) y = std::max(y, ceil_div(num, p.q * x + p.r * p.k));
    if (!found || x + y < best.sum) {
      best.x = x;
      best.y = y;
      best.sum = x + y;
      found = true;
    }
  }
  return best;
}

Int lower_bound(const ProblemParams& p) {
  return p.rows * p.q + std::min(p.rows, solve_xy(p).sum);
}

Int upper_bound(const ProblemParams& p) {
  const Int base = p.rows * p.q;
  return std::max(base, base + p.r * (p.k + p.l) - p.cols);
}

const char* to_string(LowerRegime regime) noexcept {
  return regime == LowerRegime::Saturated ? "saturated" : "interior";
}

const char* to_string(UpperRegime regime) noexcept {
  return regime == UpperRegime::Flat ? "flat" : "excess";
}

BoundReport analyze_bounds(const ProblemParams& p) {
  BoundReport report;
  report.params = p;
  report.xy = solve_xy(p);
  report.lower = p.rows * p.q + std::min(p.rows, report.xy.sum);
  report.upper = upper_bound(p);
  report.lower_regime = p.rows <= report.xy.sum ? LowerRegime::Saturated
                                                : LowerRegime::Interior;
  report.upper_regime = p.r * (p.k + p.l) >= p.cols && p.r > 0
                            ? UpperRegime::Excess
                            : UpperRegime::Flat;
  return report;
}

std::optional<Int> lower_bound_corollaries(const ProblemParams& p) {
  const Int base = p.rows * p.q;
  if (p.r == 0) return base;
  if (p.r * (p.q + 2) >= p.n) return base + std::min(p.rows, p.r * (p.k + p.l));
  return std::nullopt;
}

bool dhs_applicable(const ProblemParams& p) noexcept {
  return p.k == 1 && p.l == 1 && p.r >= 1 && p.r * (p.q + 2) < p.n;
}

DhsSolution dhs_x(const ProblemParams& p) {
  if (!dhs_applicable(p)) {
    throw Error(Errc::PreconditionViolated,
                "requires k = l = 1, r >= 1 and r(q + 2) < n");
  }
  const Wide q = p.q, r = p.r, n = p.n;
  // x = n satisfies the first inequality, so the loop terminates.
  for (Int x = 1; x <= p.n; ++x) {
    const Wide w = x;
    if (q * w * w + 2 * r * w - n * r >= 0) {
      return {x, DhsParity::Equal, p.n * p.q + 2 * x};
    }
    if (q * w * w + (2 * r + q) * w + r - n * r >= 0) {
      return {x, DhsParity::OffByOne, p.n * p.q + 2 * x + 1};
    }
  }
  throw Error(Errc::PostconditionFailed, "no x found up to n");
}

}  // namespace tropical
