#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropdet/params.hpp"

namespace tropical {

using Entry = std::int64_t;

// Dense row-major matrix of nonnegative integers. Both dimensions are at
// least one and the total of all entries fits in an Entry, so every row sum,
// column sum and transversal value computed from it is exact.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols, Entry fill = 0);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  // Throws Errc::InvalidArgument on ragged or empty input.
  static IntMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Entry operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  Entry at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Entry value);

  std::span<const Entry> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const Entry> entries() const noexcept { return entries_; }

  Entry total() const noexcept;
  Entry max_entry() const noexcept;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> entries_;
};

std::vector<Entry> row_sums(const IntMatrix& a);
std::vector<Entry> col_sums(const IntMatrix& a);

enum class MembershipStatus {
  Member,
  ShapeMismatch,
  RowSumMismatch,
  ColSumMismatch,
};

const char* to_string(MembershipStatus status) noexcept;

struct MembershipReport {
  bool is_member = false;
  MembershipStatus status = MembershipStatus::ShapeMismatch;
  std::optional<std::size_t> first_bad_row;
  std::optional<std::size_t> first_bad_col;
  Entry expected_row_sum = 0;
  Entry expected_col_sum = 0;
};

// Membership in D^{k,l}(m,n). Rows are checked before columns; a shape
// mismatch leaves both indices empty and is told apart from membership by
// the status tag.
MembershipReport validate_membership(const IntMatrix& a,
                                     const ProblemParams& p);

// Text format: one row per line, base-10 nonnegative integers separated by
// spaces or tabs, blank lines ignored. Ragged rows raise ParseError.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix_file(const std::string& path);

// Single space between columns, newline after every row, no padding.
void write_matrix(std::ostream& out, const IntMatrix& a);
std::string format_matrix(const IntMatrix& a);

}  // namespace tropical
