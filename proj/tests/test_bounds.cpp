#include <doctest.h>

#include <array>
#include <numeric>
#include <string>

#include "support.hpp"
#include "tropdet/bounds.hpp"
#include "tropdet/error.hpp"

using namespace tropical;

TEST_CASE("solve_xy examples") {
  SUBCASE("(1,2,6,5)") {
    const auto s = solve_xy(derive_params(1, 2, 6, 5));
    CHECK(s.x == 2);
    CHECK(s.y == 2);
    CHECK(s.sum == 4);
    CHECK(s.feasible_witness_used);
  }
  SUBCASE("r = 0 is (0, 0)") {
    for (auto [k, l, m, n] : {std::array<Int, 4>{1, 1, 4, 2}, {2, 3, 10, 5}, {1, 4, 3, 1}}) {
      const auto s = solve_xy(derive_params(k, l, m, n));
      CHECK(s == XYSolution{0, 0, 0, false});
    }
  }
  SUBCASE("(1,1,7,5)") {
    const auto s = solve_xy(derive_params(1, 1, 7, 5));
    CHECK(s.x == 2);
    CHECK(s.y == 2);
  }
  SUBCASE("(1,1,5,4) ties broken towards the smaller x") {
    const auto s = solve_xy(derive_params(1, 1, 5, 4));
    CHECK(s.sum == 3);
    CHECK(s.x == 1);
    CHECK(s.y == 2);
  }
  SUBCASE("(2,3,6,5)") {
    const auto s = solve_xy(derive_params(2, 3, 6, 5));
    CHECK(s.x == 4);
    CHECK(s.y == 3);
  }
}

TEST_CASE("lower and upper bound examples") {
  CHECK(lower_bound(derive_params(1, 2, 6, 5)) == 9);
  CHECK(lower_bound(derive_params(1, 1, 4, 2)) == 4);
  CHECK(lower_bound(derive_params(1, 1, 3, 2)) == 4);

  CHECK(upper_bound(derive_params(1, 1, 3, 2)) == 2);
  CHECK(upper_bound(derive_params(1, 2, 3, 1)) == 3);
  CHECK(upper_bound(derive_params(1, 1, 1, 2)) == 0);
  CHECK(upper_bound(derive_params(1, 2, 6, 5)) == 5);
}

TEST_CASE("analyze_bounds regimes") {
  const auto interior = analyze_bounds(derive_params(1, 2, 6, 5));
  CHECK(interior.lower == 9);
  CHECK(interior.upper == 5);
  CHECK(interior.lower_regime == LowerRegime::Interior);
  CHECK(interior.upper_regime == UpperRegime::Flat);

  const auto saturated = analyze_bounds(derive_params(1, 1, 3, 2));
  CHECK(saturated.lower_regime == LowerRegime::Saturated);
  CHECK(saturated.lower == 4);

  // r(k + l) = nl exactly: reported as the excess branch.
  const auto boundary = analyze_bounds(derive_params(1, 1, 1, 2));
  CHECK(boundary.upper_regime == UpperRegime::Excess);
  CHECK(boundary.upper == 0);

  const auto excess = analyze_bounds(derive_params(1, 2, 5, 3));  // r=2, r(k+l)=6 >= nl=6
  CHECK(excess.upper_regime == UpperRegime::Excess);
  CHECK(excess.upper == 3 * 1 + 6 - 6);

  CHECK(std::string(to_string(LowerRegime::Saturated)) == "saturated");
  CHECK(std::string(to_string(UpperRegime::Excess)) == "excess");
}

TEST_CASE("closed-form fast paths") {
  CHECK(lower_bound_corollaries(derive_params(1, 1, 4, 2)) == 4);
  CHECK_FALSE(lower_bound_corollaries(derive_params(1, 2, 6, 5)));
  CHECK(lower_bound_corollaries(derive_params(1, 1, 3, 2)) == 4);
}

TEST_CASE("dhs_x examples") {
  // (1,1,7,5) has r(q + 2) = 6 >= n, so the closed form r(k + l) applies
  // instead; x = 2 with equality there as well.
  CHECK_FALSE(dhs_applicable(derive_params(1, 1, 7, 5)));
  CHECK(lower_bound(derive_params(1, 1, 7, 5)) == 5 + 2 * 2);

  // q=1, r=2, n=9: x=3 gives 9 + 12 - 18 >= 0; grid optimum (3, 3).
  const auto a = dhs_x(derive_params(1, 1, 11, 9));
  CHECK(a.x == 3);
  CHECK(a.parity == DhsParity::Equal);
  CHECK(a.lower == 15);
  CHECK(lower_bound(derive_params(1, 1, 11, 9)) == 15);

  const auto b = dhs_x(derive_params(1, 1, 5, 4));
  CHECK(b.x == 1);
  CHECK(b.parity == DhsParity::OffByOne);
  CHECK(b.lower == 7);

  const auto c = dhs_x(derive_params(1, 1, 9, 7));
  CHECK(c.x == 2);
  CHECK(c.parity == DhsParity::OffByOne);
  CHECK(c.lower == 12);
  CHECK(lower_bound(derive_params(1, 1, 9, 7)) == 12);

  auto code = [](const ProblemParams& p) {
    try {
      dhs_x(p);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code(derive_params(1, 2, 6, 5)) == Errc::PreconditionViolated);
  CHECK(code(derive_params(1, 1, 4, 2)) == Errc::PreconditionViolated);
  CHECK(code(derive_params(1, 1, 3, 2)) == Errc::PreconditionViolated);
  CHECK(code(derive_params(1, 1, 7, 5)) == Errc::PreconditionViolated);
}

TEST_CASE("solve_xy matches an exhaustive grid scan") {
  for (Int k = 1; k <= 4; ++k) {
    for (Int l = k; l <= 5; ++l) {
      if (std::gcd(k, l) != 1) continue;
      for (Int n = 1; n <= 9; ++n) {
        for (Int m = 1; m <= 24; ++m) {
          const auto p = derive_params(k, l, m, n);
          const auto s = solve_xy(p);
          CAPTURE(k); CAPTURE(l); CAPTURE(m); CAPTURE(n);
          CHECK(xy_feasible(p, s.x, s.y));
          CHECK(s.sum == s.x + s.y);
          if (p.r > 0) {
            const auto grid = tropical::testing::xy_grid_scan(p);
            CHECK(s.sum == grid.sum);
            CHECK(s.x == grid.x);
            CHECK(s.y == grid.y);
          }
          // Shrinking either coordinate breaks feasibility.
          if (s.x > p.r * k) CHECK_FALSE(xy_feasible(p, s.x - 1, s.y));
          if (s.y > p.r * l) CHECK_FALSE(xy_feasible(p, s.x, s.y - 1));

          const Int L = lower_bound(p);
          CHECK(L >= p.rows * p.q);
          CHECK(L <= p.rows * (p.q + 1));
          CHECK(upper_bound(p) >= p.rows * p.q);
          if (auto fast = lower_bound_corollaries(p)) CHECK(*fast == L);
          if (dhs_applicable(p)) {
            const auto d = dhs_x(p);
            CHECK(d.lower == L);
            CHECK(s.sum == (d.parity == DhsParity::Equal ? 2 * d.x : 2 * d.x + 1));
          }
        }
      }
    }
  }
}
