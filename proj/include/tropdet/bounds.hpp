#pragma once

#include <optional>

#include "tropdet/params.hpp"

namespace tropical {

// Optimum of the two-variable program
//   minimize x + y  s.t.  q*x*y + r*(x*l + y*k) >= k*l*n*r,  x >= r*k,  y >= r*l.
struct XYSolution {
  Int x = 0;
  Int y = 0;
  Int sum = 0;
  // Set when the scan range was bounded by the analytic witness (nk, rl),
  // i.e. whenever r > 0; the r = 0 case is closed-form.
  bool feasible_witness_used = false;

  friend bool operator==(const XYSolution&, const XYSolution&) = default;
};

// The three constraints of the program above, in exact wide arithmetic.
bool xy_feasible(const ProblemParams& p, Int x, Int y);

// Minimal-sum feasible pair; ties go to the smallest x.
XYSolution solve_xy(const ProblemParams& p);

// min tdet over D^{k,l}(m,n):  nkq + min(nk, x + y).
Int lower_bound(const ProblemParams& p);

// max tropdet over D^{k,l}(m,n):  max(nkq, nkq + r(k + l) - nl).
Int upper_bound(const ProblemParams& p);

enum class LowerRegime { Saturated, Interior };  // nk <= x + y, or not
enum class UpperRegime { Flat, Excess };         // r(k + l) < nl, or not

const char* to_string(LowerRegime regime) noexcept;
const char* to_string(UpperRegime regime) noexcept;

struct BoundReport {
  ProblemParams params;
  XYSolution xy;
  Int lower = 0;
  Int upper = 0;
  LowerRegime lower_regime = LowerRegime::Saturated;
  UpperRegime upper_regime = UpperRegime::Flat;
};

BoundReport analyze_bounds(const ProblemParams& p);

// Closed forms that bypass the (x, y) search: nkq when r = 0, and
// nkq + min(nk, r(k + l)) when r(q + 2) >= n. Empty otherwise.
std::optional<Int> lower_bound_corollaries(const ProblemParams& p);

enum class DhsParity { Equal, OffByOne };

struct DhsSolution {
  Int x = 0;
  DhsParity parity = DhsParity::Equal;
  Int lower = 0;  // nq + 2x, plus one for OffByOne
};

// Doubly stochastic case k = l = 1 with 1 <= r and r(q + 2) < n.
bool dhs_applicable(const ProblemParams& p) noexcept;

// Smallest positive x with  q x^2 + 2 r x - n r >= 0  (Equal) or
// q x^2 + (2r + q) x + r - n r >= 0  (OffByOne). Throws
// Errc::PreconditionViolated outside dhs_applicable.
DhsSolution dhs_x(const ProblemParams& p);

}  // namespace tropical
