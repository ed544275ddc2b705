#include "tropdet/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tropdet/error.hpp"

namespace tropical {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Entry fill)
    : IntMatrix(rows, cols, std::vector<Entry>(rows * cols, fill)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(Errc::InvalidArgument, "matrix dimensions must be positive");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(Errc::InvalidArgument, "entry count does not match shape");
  }
  Entry sum = 0;
  for (Entry e : entries_) {
    if (e < 0) {
      throw Error(Errc::InvalidArgument, "matrix entries must be nonnegative");
    }
    if (__builtin_add_overflow(sum, e, &sum)) {
      throw Error(Errc::Overflow, "sum of matrix entries overflows");
    }
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(Errc::InvalidArgument, "matrix must be nonempty");
  }
  const std::size_t cols = rows.front().size();
  std::vector<Entry> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw Error(Errc::InvalidArgument, "ragged rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IntMatrix(rows.size(), cols, std::move(entries));
}

Entry IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(Errc::InvalidArgument, "matrix index out of range");
  }
  return (*this)(i, j);
}

void IntMatrix::set(std::size_t i, std::size_t j, Entry value) {
  if (i >= rows_ || j >= cols_) {
    throw Error(Errc::InvalidArgument, "matrix index out of range");
  }
  if (value < 0) {
    throw Error(Errc::InvalidArgument, "matrix entries must be nonnegative");
  }
  entries_[i * cols_ + j] = value;
}

Entry IntMatrix::total() const noexcept {
  Entry sum = 0;
  for (Entry e : entries_) sum += e;
  return sum;
}

Entry IntMatrix::max_entry() const noexcept {
  return *std::max_element(entries_.begin(), entries_.end());
}

IntMatrix IntMatrix::transposed() const {
  std::vector<Entry> out(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out[j * rows_ + i] = (*this)(i, j);
    }
  }
  return IntMatrix(cols_, rows_, std::move(out));
}

std::vector<Entry> row_sums(const IntMatrix& a) {
  std::vector<Entry> sums(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (Entry e : a.row(i)) sums[i] += e;
  }
  return sums;
}

std::vector<Entry> col_sums(const IntMatrix& a) {
  std::vector<Entry> sums(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) sums[j] += row[j];
  }
  return sums;
}

const char* to_string(MembershipStatus status) noexcept {
  switch (status) {
    case MembershipStatus::Member: return "member";
    case MembershipStatus::ShapeMismatch: return "shape mismatch";
    case MembershipStatus::RowSumMismatch: return "row sum mismatch";
    case MembershipStatus::ColSumMismatch: return "column sum mismatch";
  }
  return "unknown";
}

MembershipReport validate_membership(const IntMatrix& a,
                                     const ProblemParams& p) {
  MembershipReport report;
  report.expected_row_sum = p.row_sum;
  report.expected_col_sum = p.col_sum;

  if (static_cast<Int>(a.rows()) != p.rows ||
      static_cast<Int>(a.cols()) != p.cols) {
    report.status = MembershipStatus::ShapeMismatch;
    return report;
  }
  const auto rs = row_sums(a);
  if (auto it = std::find_if(rs.begin(), rs.end(),
                             [&](Entry s) { return s != p.row_sum; });
      it != rs.end()) {
    report.status = MembershipStatus::RowSumMismatch;
    report.first_bad_row = static_cast<std::size_t>(it - rs.begin());
    return report;
  }
  const auto cs = col_sums(a);
  if (auto it = std::find_if(cs.begin(), cs.end(),
                             [&](Entry s) { return s != p.col_sum; });
      it != cs.end()) {
    report.status = MembershipStatus::ColSumMismatch;
    report.first_bad_col = static_cast<std::size_t>(it - cs.begin());
    return report;
  }
  report.is_member = true;
  report.status = MembershipStatus::Member;
  return report;
}

IntMatrix parse_matrix(std::istream& in) {
  std::vector<Entry> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] == ' ' || line[pos] == '\t') {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      const std::string_view token(line.data() + pos, end - pos);

      Entry value = 0;
      const bool digits_only =
          std::all_of(token.begin(), token.end(),
                      [](char c) { return c >= '0' && c <= '9'; });
      if (!digits_only) {
        throw ParseError(line_no, "not a nonnegative integer: '" +
                                      std::string(token) + "'");
      }
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc()) {
        throw ParseError(line_no,
                         "integer out of range: '" + std::string(token) + "'");
      }
      entries.push_back(value);
      ++count;
      pos = end;
    }

    if (count == 0) continue;
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError(line_no, "expected " + std::to_string(cols) +
                                    " entries, found " + std::to_string(count));
    }
    ++rows;
  }

  if (rows == 0) throw ParseError(line_no, "no matrix rows found");
  try {
    return IntMatrix(rows, cols, std::move(entries));
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

std::string format_matrix(const IntMatrix& a) {
  std::ostringstream out;
  write_matrix(out, a);
  return out.str();
}

}  // namespace tropical
