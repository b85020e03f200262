#pragma once

// Exact integer linear algebra: dense integer matrices, rank by
// fraction-free elimination, Smith normal form with unimodular
// transforms, and a few F_2 helpers on bitmask vectors.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace excmono {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::int64_t> row(std::size_t i) const;
  std::vector<std::int64_t> column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_symmetric() const;

  std::vector<std::vector<std::int64_t>> to_nested() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::vector<std::int64_t> mat_vec(const IntMatrix& m, const std::vector<std::int64_t>& v);

using BigMatrix = std::vector<std::vector<mpz_class>>;

// Rank over Q. Tries checked 64-bit fraction-free elimination first and
// falls back to GMP on overflow.
std::size_t rank(const IntMatrix& m);
std::size_t rank(BigMatrix m);

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix d;
  std::vector<std::int64_t> diagonal;  // first min(rows, cols) diagonal entries, all >= 0
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Presentation of Z^rows / (column span of m).
struct LatticeQuotient {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> invariant_factors;  // only factors > 1

  std::string label() const;  // "Z/2", "Z", "Z/2 x Z", "0"
  friend bool operator==(const LatticeQuotient&, const LatticeQuotient&) = default;
};

LatticeQuotient lattice_quotient(const IntMatrix& columns_in_basis);

// F_2 vectors as bitmasks (bit i = coordinate i); dimension <= 32.
using F2Vec = std::uint32_t;

inline int f2_dot(F2Vec a, F2Vec b) { return __builtin_popcount(a & b) & 1; }

// Row-reduced basis of the span of the given vectors.
std::vector<F2Vec> f2_span_basis(const std::vector<F2Vec>& vecs);
bool f2_in_span(const std::vector<F2Vec>& reduced_basis, F2Vec v);
// Kernel of the symmetric F_2 matrix whose rows are given (x with M x = 0).
std::vector<F2Vec> f2_kernel(const std::vector<F2Vec>& rows, int dim);

}  // namespace excmono
