#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tropdet/matrix.hpp"
#include "tropdet/params.hpp"

namespace tropical {

inline constexpr std::uint64_t kDefaultPointCap = 1'000'000;

using PointVisitor = std::function<void(const IntMatrix&)>;

// Number of integer points of D^{k,l}(m,n). Stops early and throws
// Errc::CapExceeded as soon as more than `cap` points are found.
std::uint64_t count_points(const ProblemParams& p,
                           std::uint64_t cap = kDefaultPointCap);

// Streams every integer point exactly once, in row-major backtracking order
// with each cell taking its values in increasing order. The count is checked
// against `cap` before the first point is visited, so a CapExceeded error
// never leaves a partial scan behind. Returns the number of points.
std::uint64_t enumerate_points(const ProblemParams& p, std::uint64_t cap,
                               const PointVisitor& visit);

std::vector<IntMatrix> collect_points(const ProblemParams& p,
                                      std::uint64_t cap = kDefaultPointCap);

struct VerificationReport {
  ProblemParams params;
  std::uint64_t points_enumerated = 0;
  Int oracle_min_tdet = 0;
  Int oracle_max_tropdet = 0;
  Int formula_lower = 0;
  Int formula_upper = 0;
  bool lower_match = false;
  bool upper_match = false;
  // First point in enumeration order attaining each extremum.
  std::optional<IntMatrix> argmin_example;
  std::optional<IntMatrix> argmax_example;
  // Points violating tdet >= L or tropdet <= U; zero unless a bound is wrong.
  std::uint64_t one_sided_violations = 0;
};

// Scans the whole polytope with the assignment solver and compares the true
// extrema against the closed-form bounds.
VerificationReport verify_bounds(const ProblemParams& p,
                                 std::uint64_t cap = kDefaultPointCap);

}  // namespace tropical
