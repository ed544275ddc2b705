#include "tropdet/params.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tropdet/error.hpp"

namespace tropical {

namespace {

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::Overflow, "parameters exceed the 64-bit budget");
  }
  return out;
}

}  // namespace

ProblemParams derive_params(Int k, Int l, Int m, Int n) {
  if (k < 1 || l < 1 || m < 1 || n < 1) {
    throw Error(Errc::InvalidArgument,
                "k, l, m, n must all be positive integers");
  }
  if (std::gcd(k, l) != 1) {
    throw Error(Errc::NonCoprime, "gcd(" + std::to_string(k) + ", " +
                                      std::to_string(l) + ") != 1");
  }
  if (k > l) {
    throw Error(Errc::WrongOrder, "k = " + std::to_string(k) +
                                      " exceeds l = " + std::to_string(l));
  }

  ProblemParams p;
  p.k = k;
  p.l = l;
  p.m = m;
  p.n = n;
  p.q = m / n;
  p.r = m % n;
  p.rows = checked_mul(n, k);
  p.cols = checked_mul(n, l);
  p.row_sum = checked_mul(m, l);
  p.col_sum = checked_mul(m, k);

  // Worst intermediate used anywhere downstream.
  const Int mass = checked_mul(checked_mul(checked_mul(k, l), m), n);
  checked_mul(mass, std::max(p.rows, p.cols));
  return p;
}

}  // namespace tropical
