#include "intorder/rational_matrix.hpp"

#include <stdexcept>

#include "intorder/errors.hpp"

namespace intorder {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 0) fail(Errc::schema_error, "matrix dimensions out of range");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), mpq_class(0));
}

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s);
    if (q.get_den() == 0) fail(Errc::schema_error, "zero denominator in rational '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(Errc::schema_error, "cannot parse rational '" + s + "'");
  }
}

RationalMatrix RationalMatrix::from_strings(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) fail(Errc::schema_error, "matrix needs at least one row");
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_)
      fail(Errc::schema_error, "ragged matrix rows");
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = parse_rational(rows[r][c]);
  }
  return m;
}

RationalMatrix RationalMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) fail(Errc::schema_error, "matrix needs at least one row");
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_)
      fail(Errc::schema_error, "ragged matrix rows");
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = mpq_class(rows[r][c]);
  }
  return m;
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int r = 0; r < rows_; ++r) {
    out[r].reserve(cols_);
    for (int c = 0; c < cols_; ++c) out[r].push_back(at(r, c).get_str());
  }
  return out;
}

namespace {

// Bareiss fraction-free elimination on an integer matrix; all intermediate
// divisions are exact. Returns the rank.
int bareiss_rank(std::vector<std::vector<mpz_class>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class num = m[rank][c] * m[r][j] - m[r][c] * m[rank][j];
        mpz_divexact(m[r][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

int RationalMatrix::rank_of_columns(const std::vector<int>& columns) const {
  // Scale each column to integers; column scaling preserves the matroid.
  std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const int c = columns[k];
    mpz_class lcm = 1;
    for (int r = 0; r < rows_; ++r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), at(r, c).get_den().get_mpz_t());
    for (int r = 0; r < rows_; ++r) {
      mpq_class scaled = at(r, c) * lcm;
      m[r][k] = scaled.get_num();  // denominator is 1 after scaling
    }
  }
  return bareiss_rank(m);
}

int RationalMatrix::rank() const {
  std::vector<int> all(cols_);
  for (int c = 0; c < cols_; ++c) all[c] = c;
  return rank_of_columns(all);
}

}  // namespace intorder
