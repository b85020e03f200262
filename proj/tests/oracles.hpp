#pragma once

// Independent reference computations used by the unit tests. None of these
// call into the library beyond reading its inputs (Gram matrices, fields).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

// Fincke-Pohst: every nonzero integer vector x with x^T G x <= bound.
inline std::vector<std::vector<int>> short_vectors(const Mat& g, std::int64_t bound) {
  const std::size_t n = g.size();
  // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = static_cast<double>(g[i][j]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  std::vector<std::vector<int>> out;
  std::vector<int> x(n, 0);
  const double eps = 1e-9;
  std::function<void(std::size_t, double)> rec = [&](std::size_t level, double remaining) {
    const std::size_t i = level - 1;
    double c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= q[i][j] * x[j];
    const double r = std::sqrt(std::max(0.0, remaining / q[i][i]));
    const int lo = static_cast<int>(std::ceil(c - r - eps));
    const int hi = static_cast<int>(std::floor(c + r + eps));
    for (int v = lo; v <= hi; ++v) {
      x[i] = v;
      const double used = q[i][i] * (v - c) * (v - c);
      if (used > remaining + eps) continue;
      if (i == 0) {
        if (std::any_of(x.begin(), x.end(), [](int t) { return t != 0; })) out.push_back(x);
      } else {
        rec(level - 1, remaining - used);
      }
    }
    x[i] = 0;
  };
  rec(n, static_cast<double>(bound));
  return out;
}

inline std::int64_t quad(const Mat& g, const std::vector<int>& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += g[i][j] * x[i] * x[j];
  return s;
}

// Roots among short lattice vectors: norm is a simple-root norm and the
// coroot 2x/(x,x) lies in the coroot lattice.
inline std::size_t root_count(const Mat& g) {
  std::int64_t maxnorm = 0;
  for (std::size_t i = 0; i < g.size(); ++i) maxnorm = std::max(maxnorm, g[i][i]);
  std::size_t count = 0;
  for (const auto& x : short_vectors(g, maxnorm)) {
    const std::int64_t nx = quad(g, x);
    bool norm_ok = false;
    for (std::size_t i = 0; i < g.size(); ++i) norm_ok = norm_ok || g[i][i] == nx;
    if (!norm_ok) continue;
    bool integral = true;
    for (std::size_t i = 0; i < g.size(); ++i) integral = integral && (x[i] * g[i][i]) % nx == 0;
    if (integral) ++count;
  }
  return count;
}

struct Frac {
  std::int64_t num = 0, den = 1;
  Frac(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) { norm(); }
  void norm() {
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
  bool zero() const { return num == 0; }
};

// Solves m x = b over Q (m square, invertible).
inline std::vector<Frac> solve(const Mat& m, const std::vector<std::int64_t>& b) {
  const std::size_t n = m.size();
  std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Frac(m[i][j]);
    a[i][n] = Frac(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].zero()) ++p;
    if (p == n) throw std::runtime_error("singular");
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].zero()) continue;
      const Frac f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  std::vector<Frac> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

// Bareiss determinant.
inline std::int64_t det(Mat m) {
  const std::size_t n = m.size();
  std::int64_t prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// #{y in F_2^r : m y = 0 mod 2}, by enumeration.
inline std::size_t kernel_mod2_size(const Mat& m) {
  const std::size_t n = m.size();
  std::size_t count = 0;
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (y >> j & 1u) s += m[i][j];
      ok = s % 2 == 0;
    }
    count += ok;
  }
  return count;
}

// Rank modulo a large prime; equals the rational rank for the small-entry
// matrices used here.
inline std::size_t rank_mod_p(Mat m, std::int64_t p = 1000000007) {
  auto md = [p](std::int64_t v) { return ((v % p) + p) % p; };
  auto pw = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b = md(b);
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
      b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
      e >>= 1;
    }
    return r;
  };
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& r : m)
    for (auto& v : r) v = md(v);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    const std::int64_t inv = pw(m[rk][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk || m[r][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>(static_cast<__int128>(m[r][c]) * inv % p);
      for (std::size_t k = c; k < cols; ++k)
        m[r][k] = md(m[r][k] - static_cast<std::int64_t>(static_cast<__int128>(f) * m[rk][k] % p));
    }
    ++rk;
  }
  return rk;
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Legendre symbol by Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace oracle
