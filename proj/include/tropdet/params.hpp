#pragma once

#include <cstdint>

namespace tropical {

using Int = std::int64_t;

// Parameters of the integer transportation polytope D^{k,l}(m,n): the
// nk x nl nonnegative integer matrices with row sums ml and column sums mk.
struct ProblemParams {
  Int k = 1;
  Int l = 1;
  Int m = 1;
  Int n = 1;
  Int q = 1;  // m / n
  Int r = 0;  // m % n
  Int rows = 1;
  Int cols = 1;
  Int row_sum = 1;
  Int col_sum = 1;

  friend bool operator==(const ProblemParams&, const ProblemParams&) = default;
};

// Validates (k, l, m, n) and fills in the derived quantities.
//
// Requires every argument >= 1, gcd(k, l) == 1 and k <= l. Rejects tuples
// where k*l*m*n*max(nk, nl) does not fit in a signed 64-bit integer, which
// keeps every sum computed downstream (margins, transversal values, bound
// formulas) exact.
ProblemParams derive_params(Int k, Int l, Int m, Int n);

}  // namespace tropical
