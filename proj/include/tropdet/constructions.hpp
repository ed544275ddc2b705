#pragma once

#include "tropdet/matrix.hpp"
#include "tropdet/params.hpp"

namespace tropical {

// Entries q and q+1. Row 0 holds q+1 in columns [0, rl); each following row
// is the previous one rotated right by rl. Every row carries rl and every
// column rk entries equal to q+1, so tdet <= nk(q+1).
IntMatrix construct_lower_uniform(const ProblemParams& p);

// Four-block matrix [[X, Y], [Z, W]] with X of shape x by y, for any pair
// with x >= rk, y >= rl, x + y <= nk and q x y + r(x l + y k) >= k l n r:
//   W  all q;
//   Y  q plus a cyclic run of rk extra units per column, column j's run
//      starting at row (j * rk) mod x;
//   Z  q plus a cyclic run of rl extra units per row, row i's run starting
//      at column (i * rl) mod y;
//   X  the leftover mass q x y + r(x l + y k) - k l n r spread as evenly as
//      possible, heavier rows at the bottom and heavier columns at the right.
// Every X entry is <= q, hence tdet <= nkq + x + y.
//
// Throws Errc::InfeasiblePair if (x, y) violates the conditions above and
// Errc::PostconditionFailed if the result is not a member, has an X entry
// above q, or exceeds the tdet bound.
IntMatrix construct_lower_blocks(const ProblemParams& p, Int x, Int y);

// A matrix attaining the lower bound: the uniform pattern when the optimal
// x + y reaches nk, the block pattern on the optimal pair otherwise.
IntMatrix construct_lower(const ProblemParams& p);

// A matrix attaining the upper bound on tropdet. When r(k + l) < nl this is
// the uniform pattern (all entries >= q). Otherwise it is the block matrix
// with an rk x rl block of q+1, q in the off-diagonal blocks, and the
// remaining block lifted cyclically so that the margins close.
IntMatrix construct_upper(const ProblemParams& p);

}  // namespace tropical
