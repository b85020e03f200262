#include "excmono/int_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "excmono/errors.hpp"

namespace excmono {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw ConfigurationError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::int64_t> IntMatrix::column(std::size_t j) const {
  std::vector<std::int64_t> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_nested() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = row(i);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ConsistencyError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<std::int64_t> mat_vec(const IntMatrix& m, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v.at(j);
  return out;
}

// ---------------------------------------------------------------------------
// Rank

namespace {

struct Overflow {};

inline std::int64_t checked(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(x);
}

// Row elimination keeping every row primitive (content divided out), which
// keeps entries small for the sparse, small-coefficient matrices we see.
std::size_t rank_int64(std::vector<std::vector<std::int64_t>> rows, std::size_t ncols) {
  std::size_t r = 0;
  const std::size_t nrows = rows.size();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = nrows;
    std::int64_t best = 0;
    for (std::size_t i = r; i < nrows; ++i) {
      const std::int64_t a = rows[i][c];
      if (a != 0 && (piv == nrows || std::llabs(a) < best)) {
        piv = i;
        best = std::llabs(a);
        if (best == 1) break;
      }
    }
    if (piv == nrows) continue;
    std::swap(rows[r], rows[piv]);
    const std::int64_t p = rows[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const std::int64_t a = rows[i][c];
      if (a == 0) continue;
      const std::int64_t g = std::gcd(p, a);
      const std::int64_t mp = p / g;
      const std::int64_t ma = a / g;
      std::int64_t content = 0;
      auto& row = rows[i];
      const auto& prow = rows[r];
      for (std::size_t j = c; j < ncols; ++j) {
        if (row[j] == 0 && prow[j] == 0) continue;
        row[j] = checked(static_cast<__int128>(mp) * row[j] - static_cast<__int128>(ma) * prow[j]);
        content = std::gcd(content, row[j]);
      }
      if (content > 1)
        for (std::size_t j = c; j < ncols; ++j) row[j] /= content;
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(BigMatrix m) {
  const std::size_t nrows = m.size();
  if (nrows == 0) return 0;
  const std::size_t ncols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (sgn(m[i][c]) != 0 && (piv == nrows || abs(m[i][c]) < abs(m[piv][c]))) piv = i;
    if (piv == nrows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), m[r][c].get_mpz_t(), m[i][c].get_mpz_t());
      const mpz_class mp = m[r][c] / g;
      const mpz_class ma = m[i][c] / g;
      mpz_class content = 0;
      for (std::size_t j = c; j < ncols; ++j) {
        m[i][j] = mp * m[i][j] - ma * m[r][j];
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m[i][j].get_mpz_t());
      }
      if (content > 1)
        for (std::size_t j = c; j < ncols; ++j) mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), content.get_mpz_t());
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) {
  try {
    return rank_int64(m.to_nested(), m.cols());
  } catch (const Overflow&) {
    BigMatrix big(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) big[i][j] = static_cast<long>(m(i, j));
    return rank(std::move(big));
  }
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void row_combine(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t factor) {
  // row dst -= factor * row src
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(dst, j) = checked(static_cast<__int128>(m(dst, j)) - static_cast<__int128>(factor) * m(src, j));
}

void col_combine(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t factor) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) = checked(static_cast<__int128>(m(i, dst)) - static_cast<__int128>(factor) * m(i, src));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  SmithForm out;
  IntMatrix d = input;
  const std::size_t nr = d.rows();
  const std::size_t nc = d.cols();
  IntMatrix u = IntMatrix::identity(nr);
  IntMatrix v = IntMatrix::identity(nc);

  try {
    for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
      for (;;) {
        // pivot: smallest nonzero |entry| in the trailing block
        std::size_t pi = nr, pj = nc;
        std::int64_t best = 0;
        for (std::size_t i = t; i < nr; ++i)
          for (std::size_t j = t; j < nc; ++j)
            if (d(i, j) != 0 && (pi == nr || std::llabs(d(i, j)) < best)) {
              pi = i;
              pj = j;
              best = std::llabs(d(i, j));
            }
        if (pi == nr) break;
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);

        bool clean = true;
        const std::int64_t p = d(t, t);
        for (std::size_t i = t + 1; i < nr; ++i) {
          if (d(i, t) == 0) continue;
          const std::int64_t f = d(i, t) / p;
          row_combine(d, i, t, f);
          row_combine(u, i, t, f);
          if (d(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (d(t, j) == 0) continue;
          const std::int64_t f = d(t, j) / p;
          col_combine(d, j, t, f);
          col_combine(v, j, t, f);
          if (d(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // divisibility condition on the rest of the block
        std::size_t bad_row = nr;
        for (std::size_t i = t + 1; i < nr && bad_row == nr; ++i)
          for (std::size_t j = t + 1; j < nc; ++j)
            if (d(i, j) % p != 0) {
              bad_row = i;
              break;
            }
        if (bad_row == nr) break;
        row_combine(d, t, bad_row, -1);
        row_combine(u, t, bad_row, -1);
      }
      if (d(t, t) < 0) {
        negate_row(d, t);
        negate_row(u, t);
      }
    }
  } catch (const Overflow&) {
    throw ConsistencyError("Smith normal form overflowed 64-bit arithmetic");
  }

  out.diagonal.resize(std::min(nr, nc));
  for (std::size_t t = 0; t < out.diagonal.size(); ++t) {
    out.diagonal[t] = d(t, t);
    if (d(t, t) != 0) ++out.rank;
  }
  out.u = std::move(u);
  out.v = std::move(v);
  out.d = std::move(d);
  return out;
}

LatticeQuotient lattice_quotient(const IntMatrix& columns) {
  LatticeQuotient q;
  if (columns.cols() == 0) {
    q.free_rank = columns.rows();
    return q;
  }
  const SmithForm s = smith_normal_form(columns);
  for (std::int64_t f : s.diagonal)
    if (f > 1) q.invariant_factors.push_back(f);
  q.free_rank = columns.rows() - s.rank;
  return q;
}

std::string LatticeQuotient::label() const {
  std::ostringstream os;
  bool first = true;
  for (std::int64_t f : invariant_factors) {
    os << (first ? "" : " x ") << "Z/" << f;
    first = false;
  }
  for (std::size_t i = 0; i < free_rank; ++i) {
    os << (first ? "" : " x ") << "Z";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// F_2

std::vector<F2Vec> f2_span_basis(const std::vector<F2Vec>& vecs) {
  std::vector<F2Vec> basis;  // kept with distinct leading bits
  for (F2Vec v : vecs) {
    for (F2Vec b : basis)
      if (v & (F2Vec{1} << (31 - __builtin_clz(b)))) v ^= b;
    if (v == 0) continue;
    const F2Vec lead = F2Vec{1} << (31 - __builtin_clz(v));
    for (F2Vec& b : basis)
      if (b & lead) b ^= v;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
  }
  return basis;
}

bool f2_in_span(const std::vector<F2Vec>& basis, F2Vec v) {
  for (F2Vec b : basis)
    if (v & (F2Vec{1} << (31 - __builtin_clz(b)))) v ^= b;
  return v == 0;
}

std::vector<F2Vec> f2_kernel(const std::vector<F2Vec>& rows, int dim) {
  // Gaussian elimination to reduced row echelon form, then read off kernel.
  std::vector<F2Vec> m = rows;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < dim && r < m.size(); ++c) {
    const F2Vec bit = F2Vec{1} << c;
    std::size_t piv = m.size();
    for (std::size_t i = r; i < m.size(); ++i)
      if (m[i] & bit) {
        piv = i;
        break;
      }
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && (m[i] & bit)) m[i] ^= m[r];
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<F2Vec> kernel;
  for (int free = 0; free < dim; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    F2Vec v = F2Vec{1} << free;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (m[i] & (F2Vec{1} << free)) v |= F2Vec{1} << pivot_col[i];
    kernel.push_back(v);
  }
  return kernel;
}

}  // namespace excmono
