#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace intorder {

/// Dense matrix over Q with arbitrary-precision entries. Column j of a
/// matroid-defining matrix represents ground-set element j.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  static RationalMatrix from_strings(const std::vector<std::vector<std::string>>& rows);
  static RationalMatrix from_ints(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const mpq_class& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  mpq_class& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// Rank over Q by fraction-free (Bareiss) elimination on the
  /// denominator-cleared integer matrix.
  int rank() const;

  /// Rank of the submatrix formed by the given columns (0-based).
  int rank_of_columns(const std::vector<int>& columns) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_, cols_;
  std::vector<mpq_class> a_;
};

/// Parses "p/q" or integer strings into an exact rational (lowest terms).
mpq_class parse_rational(const std::string& s);

}  // namespace intorder
