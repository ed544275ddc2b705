#include <doctest.h>

#include <limits>
#include <numeric>

#include "tropdet/error.hpp"
#include "tropdet/params.hpp"

using namespace tropical;

namespace {

Errc error_code(Int k, Int l, Int m, Int n) {
  try {
    derive_params(k, l, m, n);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("derive_params fills derived quantities") {
  SUBCASE("balls-in-pails example (1,2,6,5)") {
    const auto p = derive_params(1, 2, 6, 5);
    CHECK(p.q == 1);
    CHECK(p.r == 1);
    CHECK(p.rows == 5);
    CHECK(p.cols == 10);
    CHECK(p.row_sum == 12);
    CHECK(p.col_sum == 6);
  }
  SUBCASE("n divides m") {
    const auto p = derive_params(1, 1, 4, 2);
    CHECK(p.q == 2);
    CHECK(p.r == 0);
    CHECK(p.rows == 2);
    CHECK(p.cols == 2);
    CHECK(p.row_sum == 4);
    CHECK(p.col_sum == 4);
  }
  SUBCASE("(2,3,6,5)") {
    const auto p = derive_params(2, 3, 6, 5);
    CHECK(p.q == 1);
    CHECK(p.r == 1);
    CHECK(p.rows == 10);
    CHECK(p.cols == 15);
    CHECK(p.row_sum == 18);
    CHECK(p.col_sum == 12);
  }
}

TEST_CASE("derive_params rejects invalid tuples") {
  CHECK(error_code(2, 4, 3, 3) == Errc::NonCoprime);
  CHECK(error_code(3, 3, 1, 1) == Errc::NonCoprime);
  CHECK(error_code(3, 2, 1, 1) == Errc::WrongOrder);
  CHECK(error_code(0, 1, 1, 1) == Errc::InvalidArgument);
  CHECK(error_code(1, 1, 0, 1) == Errc::InvalidArgument);
  CHECK(error_code(1, 1, 1, -4) == Errc::InvalidArgument);
}

TEST_CASE("derive_params enforces the 64-bit budget") {
  CHECK_NOTHROW(derive_params(1, 2, 1'000'000, 3));
  CHECK(error_code(1, 2, std::numeric_limits<Int>::max() / 4, 3) == Errc::Overflow);
  // k l m n max(nk, nl): 4e18 fits, 1.2e19 does not.
  CHECK_NOTHROW(derive_params(1, 2, 1'000'000, 1'000'000));
  CHECK(error_code(1, 2, 3'000'000, 1'000'000) == Errc::Overflow);
  CHECK(error_code(1, 1, 1, 4'000'000'000LL) == Errc::Overflow);
}

TEST_CASE("division and mass identities hold on a sweep") {
  for (Int k = 1; k <= 4; ++k) {
    for (Int l = k; l <= 6; ++l) {
      if (std::gcd(k, l) != 1) continue;
      for (Int n = 1; n <= 9; ++n) {
        for (Int m = 1; m <= 25; ++m) {
          const auto p = derive_params(k, l, m, n);
          CHECK(p.r >= 0);
          CHECK(p.r < p.n);
          CHECK(p.m == p.q * p.n + p.r);
          CHECK(p.rows * p.row_sum == p.cols * p.col_sum);
          CHECK(p.rows * p.row_sum == k * l * m * n);
        }
      }
    }
  }
}
