#include <doctest.h>

#include <array>
#include <set>
#include <vector>

#include "tropdet/assignment.hpp"
#include "tropdet/bounds.hpp"
#include "tropdet/error.hpp"
#include "tropdet/oracle.hpp"

using namespace tropical;

TEST_CASE("enumerate_points small polytopes") {
  const auto perms = collect_points(derive_params(1, 1, 1, 2));
  REQUIRE(perms.size() == 2);
  CHECK(perms[0] == IntMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(perms[1] == IntMatrix::from_rows({{1, 0}, {0, 1}}));

  CHECK(count_points(derive_params(1, 1, 2, 2)) == 3);
  CHECK(count_points(derive_params(1, 1, 3, 2)) == 4);
  CHECK(count_points(derive_params(1, 2, 1, 1)) == 1);
}

TEST_CASE("point counts for 2x2 and 3x3 magic squares") {
  for (Int m = 1; m <= 10; ++m) {
    CHECK(count_points(derive_params(1, 1, m, 2)) == static_cast<std::uint64_t>(m + 1));
  }
  // 3 x 3 nonnegative integer matrices with all line sums m:
  // (m + 1)(m + 2)(m^2 + 3m + 4) / 8.
  for (Int m = 1; m <= 6; ++m) {
    const auto expected = static_cast<std::uint64_t>((m + 1) * (m + 2) * (m * m + 3 * m + 4) / 8);
    CHECK(count_points(derive_params(1, 1, m, 3)) == expected);
  }
}

TEST_CASE("enumeration is deterministic, duplicate-free and in the polytope") {
  const auto p = derive_params(1, 2, 2, 2);
  const auto first = collect_points(p);
  const auto second = collect_points(p);
  CHECK(first == second);

  std::set<std::vector<Entry>> seen;
  for (const auto& a : first) {
    CHECK(validate_membership(a, p).is_member);
    seen.emplace(a.entries().begin(), a.entries().end());
  }
  CHECK(seen.size() == first.size());
}

TEST_CASE("cap is enforced before any point is visited") {
  const auto p = derive_params(1, 1, 3, 3);  // 55 points
  CHECK(count_points(p, 55) == 55);
  std::size_t visited = 0;
  try {
    enumerate_points(p, 54, [&](const IntMatrix&) { ++visited; });
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
  CHECK(visited == 0);
  CHECK_THROWS_AS(verify_bounds(derive_params(1, 2, 6, 5)), Error);
}

TEST_CASE("verify_bounds examples") {
  SUBCASE("(1,1,3,2)") {
    const auto v = verify_bounds(derive_params(1, 1, 3, 2));
    CHECK(v.points_enumerated == 4);
    CHECK(v.oracle_min_tdet == 4);
    CHECK(v.oracle_max_tropdet == 2);
    CHECK(v.lower_match);
    CHECK(v.upper_match);
    CHECK(tdet(*v.argmin_example).value == 4);
    CHECK(tropdet(*v.argmax_example).value == 2);
  }
  SUBCASE("(1,1,2,2)") {
    const auto v = verify_bounds(derive_params(1, 1, 2, 2));
    CHECK(v.oracle_min_tdet == 2);
    CHECK(v.oracle_max_tropdet == 2);
    CHECK(v.lower_match);
    CHECK(v.upper_match);
    CHECK(*v.argmin_example == IntMatrix(2, 2, 1));
    CHECK(*v.argmax_example == IntMatrix(2, 2, 1));
  }
  SUBCASE("(1,2,1,1) singleton") {
    const auto v = verify_bounds(derive_params(1, 2, 1, 1));
    CHECK(v.points_enumerated == 1);
    CHECK(v.oracle_min_tdet == 1);
    CHECK(v.oracle_max_tropdet == 1);
    CHECK(v.formula_lower == 1);
    CHECK(v.formula_upper == 1);
  }
  SUBCASE("one-sided bounds hold pointwise") {
    for (auto [k, l, m, n] : {std::array<Int, 4>{1, 1, 4, 3}, {1, 2, 3, 2}, {1, 3, 2, 2}, {2, 3, 3, 1}}) {
      const auto v = verify_bounds(derive_params(k, l, m, n));
      CHECK(v.one_sided_violations == 0);
      CHECK(v.lower_match);
      CHECK(v.upper_match);
    }
  }
}
