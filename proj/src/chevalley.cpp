#include "excmono/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include <gmpxx.h>

#include "excmono/errors.hpp"

namespace excmono {

namespace {

RootVec add(const RootVec& a, const RootVec& b, int sb = 1) {
  RootVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + sb * b[i];
  return c;
}

}  // namespace

ChevalleyAlgebra ChevalleyAlgebra::build(const RootSystem& rs) {
  if (!rs.type().is_oddly_laced_target())
    throw UnsupportedTypeError("Chevalley algebra is built for A1, D_2n, E7, E8, G2; got " + rs.label());
  ChevalleyAlgebra alg(rs);
  const auto& roots = rs.roots();
  const std::size_t nr = roots.size();
  const int np = static_cast<int>(rs.num_positive());
  alg.nroots_ = nr;
  alg.sum_.assign(nr * nr, -1);
  alg.n_.assign(nr * nr, 0);
  for (const auto& r : roots) alg.max_norm_ = std::max<std::int64_t>(alg.max_norm_, r.norm);
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = 0; b < nr; ++b)
      if (auto s = rs.index_of(add(roots[a].coords, roots[b].coords))) alg.sum_[a * nr + b] = *s;

  auto norm = [&](int idx) { return static_cast<long>(roots[static_cast<std::size_t>(idx)].norm); };
  auto p_of = [&](int r, int s) {
    // largest p with s - p r a root
    int p = 0;
    RootVec v = roots[static_cast<std::size_t>(s)].coords;
    for (;;) {
      v = add(v, roots[static_cast<std::size_t>(r)].coords, -1);
      if (!rs.index_of(v)) return p;
      ++p;
    }
  };
  auto positive = [&](int idx) { return idx < np; };
  auto neg = [&](int idx) { return rs.negative_of(idx); };

  // Positive-pair constants, filled in height order.
  std::vector<int>& n = alg.n_;
  auto at = [&](int a, int b) -> int& { return n[static_cast<std::size_t>(a) * nr + static_cast<std::size_t>(b)]; };
  std::function<int(int, int)> N = [&](int r, int s) -> int {
    if (alg.sum_[static_cast<std::size_t>(r) * nr + static_cast<std::size_t>(s)] < 0) return 0;
    if (positive(r) && positive(s)) return at(r, s);
    if (!positive(r) && !positive(s)) return -N(neg(r), neg(s));
    // mixed: t = -(r + s), r + s + t = 0 and N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)
    const int t = neg(alg.sum_[static_cast<std::size_t>(r) * nr + static_cast<std::size_t>(s)]);
    if (positive(t) == positive(r)) return static_cast<int>(norm(t) * N(t, r) / norm(s));
    return static_cast<int>(norm(t) * N(s, t) / norm(r));
  };

  for (int xi = 0; xi < np; ++xi) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < np; ++a) {
      const int b = rs.index_of(add(roots[static_cast<std::size_t>(xi)].coords, roots[static_cast<std::size_t>(a)].coords, -1)).value_or(-1);
      if (b >= 0 && positive(b) && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    const auto [alpha, beta] = pairs.front();  // extraspecial: smallest alpha
    at(alpha, beta) = p_of(alpha, beta) + 1;
    at(beta, alpha) = -at(alpha, beta);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [gamma, delta] = pairs[k];
      // From the four-root relation with r=gamma, s=delta, t=-alpha, u=-beta.
      mpq_class bracket = 0;
      const int dma = alg.sum_[static_cast<std::size_t>(delta) * nr + static_cast<std::size_t>(neg(alpha))];
      if (dma >= 0) bracket += mpq_class(N(delta, neg(alpha)) * N(gamma, neg(beta)), norm(dma));
      const int gma = alg.sum_[static_cast<std::size_t>(gamma) * nr + static_cast<std::size_t>(neg(alpha))];
      if (gma >= 0) bracket += mpq_class(N(neg(alpha), gamma) * N(delta, neg(beta)), norm(gma));
      mpq_class value = mpq_class(norm(xi)) * bracket / at(alpha, beta);
      value.canonicalize();
      if (value.get_den() != 1) throw ConsistencyError("non-integral structure constant");
      const int v = static_cast<int>(value.get_num().get_si());
      if (std::abs(v) != p_of(gamma, delta) + 1) throw ConsistencyError("structure constant is not +-(p+1)");
      at(gamma, delta) = v;
      at(delta, gamma) = -v;
    }
  }
  for (int r = 0; r < static_cast<int>(nr); ++r)
    for (int s = 0; s < static_cast<int>(nr); ++s)
      if (!(positive(r) && positive(s))) at(r, s) = N(r, s);
  return alg;
}

int ChevalleyAlgebra::height(int basis) const {
  return is_cartan(basis) ? 0 : rs_.roots()[static_cast<std::size_t>(basis - rank())].height;
}

SparseVec ChevalleyAlgebra::bracket(int x, int y) const {
  const int r = rank();
  if (is_cartan(x) && is_cartan(y)) return {};
  if (is_cartan(x)) {
    // [h_i, e_alpha] = <alpha, alpha_i^vee> e_alpha
    const auto& a = rs_.roots()[static_cast<std::size_t>(y - r)].coords;
    std::int64_t c = 0;
    for (int k = 0; k < r; ++k) c += static_cast<std::int64_t>(a[static_cast<std::size_t>(k)]) * rs_.cartan_matrix()(static_cast<std::size_t>(k), static_cast<std::size_t>(x));
    if (c == 0) return {};
    return {{y, c}};
  }
  if (is_cartan(y)) {
    SparseVec v = bracket(y, x);
    for (auto& [i, c] : v) c = -c;
    return v;
  }
  const int a = x - r, b = y - r;
  if (rs_.negative_of(a) == b) {
    SparseVec v;
    const auto& co = rs_.roots()[static_cast<std::size_t>(a)].coroot;
    for (int i = 0; i < r; ++i)
      if (co[static_cast<std::size_t>(i)] != 0) v.emplace_back(i, co[static_cast<std::size_t>(i)]);
    return v;
  }
  const int s = root_sum(a, b);
  if (s < 0) return {};
  return {{s + r, structure_constant(a, b)}};
}

Element ChevalleyAlgebra::bracket(const Element& x, const Element& y) const {
  Element out(static_cast<std::size_t>(dim()), 0);
  for (int a = 0; a < dim(); ++a) {
    if (x[static_cast<std::size_t>(a)] == 0) continue;
    for (int b = 0; b < dim(); ++b) {
      if (y[static_cast<std::size_t>(b)] == 0) continue;
      for (const auto& [i, c] : bracket(a, b)) out[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)] * c;
    }
  }
  return out;
}

IntMatrix ChevalleyAlgebra::ad(const Element& x) const {
  const auto d = static_cast<std::size_t>(dim());
  IntMatrix m(d, d);
  for (int a = 0; a < dim(); ++a) {
    if (x[static_cast<std::size_t>(a)] == 0) continue;
    for (int b = 0; b < dim(); ++b)
      for (const auto& [i, c] : bracket(a, b)) m(static_cast<std::size_t>(i), static_cast<std::size_t>(b)) += x[static_cast<std::size_t>(a)] * c;
  }
  return m;
}

Element ChevalleyAlgebra::basis_vector(int b) const {
  Element e(static_cast<std::size_t>(dim()), 0);
  e[static_cast<std::size_t>(b)] = 1;
  return e;
}

Element ChevalleyAlgebra::root_vector_sum(const std::vector<int>& roots) const {
  Element e(static_cast<std::size_t>(dim()), 0);
  for (int r : roots) e[static_cast<std::size_t>(e_index(r))] += 1;
  return e;
}

std::int64_t ChevalleyAlgebra::form(int x, int y) const {
  if (is_cartan(x) && is_cartan(y)) return rs_.form_gram()(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  if (is_cartan(x) || is_cartan(y)) return 0;
  const int a = x - rank(), b = y - rank();
  if (rs_.negative_of(a) != b) return 0;
  return max_norm_ / rs_.roots()[static_cast<std::size_t>(a)].norm;
}

std::size_t ChevalleyAlgebra::jacobi_at(int x, int y, int z) const {
  std::vector<std::int64_t> acc(static_cast<std::size_t>(dim()), 0);
  auto term = [&](int a, int b, int c) {
    for (const auto& [i, ci] : bracket(b, c))
      for (const auto& [j, cj] : bracket(a, i)) acc[static_cast<std::size_t>(j)] += ci * cj;
  };
  term(x, y, z);
  term(y, z, x);
  term(z, x, y);
  return std::any_of(acc.begin(), acc.end(), [](std::int64_t v) { return v != 0; }) ? 1 : 0;
}

std::size_t ChevalleyAlgebra::jacobi_violations() const {
  std::size_t bad = 0;
  for (int x = 0; x < dim(); ++x)
    for (int y = 0; y < dim(); ++y)
      for (int z = 0; z < dim(); ++z) bad += jacobi_at(x, y, z);
  return bad;
}

std::size_t ChevalleyAlgebra::jacobi_violations_sampled(std::size_t samples, std::uint64_t seed) const {
  std::mt19937_64 gen(seed);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const int x = static_cast<int>(gen() % static_cast<std::uint64_t>(dim()));
    const int y = static_cast<int>(gen() % static_cast<std::uint64_t>(dim()));
    const int z = static_cast<int>(gen() % static_cast<std::uint64_t>(dim()));
    bad += jacobi_at(x, y, z);
  }
  return bad;
}

std::size_t ChevalleyAlgebra::structure_constant_violations() const {
  std::size_t bad = 0;
  const auto& roots = rs_.roots();
  for (std::size_t a = 0; a < nroots_; ++a)
    for (std::size_t b = 0; b < nroots_; ++b) {
      if (root_sum(static_cast<int>(a), static_cast<int>(b)) < 0) {
        if (structure_constant(static_cast<int>(a), static_cast<int>(b)) != 0) ++bad;
        continue;
      }
      int p = 0;
      RootVec v = roots[b].coords;
      for (;;) {
        v = add(v, roots[a].coords, -1);
        if (!rs_.index_of(v)) break;
        ++p;
      }
      if (std::abs(structure_constant(static_cast<int>(a), static_cast<int>(b))) != p + 1) ++bad;
    }
  return bad;
}

std::size_t ChevalleyAlgebra::invariance_at(int x, int y, int z) const {
  // ([x, y], z) + (y, [x, z]) = 0
  std::int64_t s = 0;
  for (const auto& [i, c] : bracket(x, y)) s += c * form(i, z);
  for (const auto& [i, c] : bracket(x, z)) s += c * form(y, i);
  return s != 0 ? 1 : 0;
}

std::size_t ChevalleyAlgebra::invariance_violations() const {
  std::size_t bad = 0;
  for (int x = 0; x < dim(); ++x)
    for (int y = 0; y < dim(); ++y)
      for (int z = 0; z < dim(); ++z) bad += invariance_at(x, y, z);
  return bad;
}

std::size_t ChevalleyAlgebra::invariance_violations_sampled(std::size_t samples, std::uint64_t seed) const {
  std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const int x = static_cast<int>(gen() % static_cast<std::uint64_t>(dim()));
    const int y = static_cast<int>(gen() % static_cast<std::uint64_t>(dim()));
    const int z = static_cast<int>(gen() % static_cast<std::uint64_t>(dim()));
    bad += invariance_at(x, y, z);
  }
  return bad;
}

int ChevalleyAlgebra::centralizer_dim(const Element& x) const {
  return dim() - static_cast<int>(excmono::rank(ad(x)));
}

Element ChevalleyAlgebra::regular_nilpotent() const {
  std::vector<int> simple;
  for (int i = 0; i < rank(); ++i) simple.push_back(i);  // simple roots come first
  return root_vector_sum(simple);
}

bool ChevalleyAlgebra::hard_lefschetz(std::string* failure) const {
  const Element e = regular_nilpotent();
  const IntMatrix adn = ad(e);
  const auto d = static_cast<std::size_t>(dim());
  std::vector<SparseVec> cols(d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t i = 0; i < d; ++i)
      if (adn(i, b) != 0) cols[b].emplace_back(static_cast<int>(i), adn(i, b));

  int top = 0;
  for (int b = 0; b < dim(); ++b) top = std::max(top, height(b));
  const int h = rs_.highest_root().coxeter_number;
  int top_dim = 0;
  for (int b = 0; b < dim(); ++b) top_dim += height(b) == h - 1;
  if (top != h - 1 || top_dim != 1) {
    if (failure) *failure = "top degree is not h-1 with dimension 1";
    return false;
  }
  for (int n = 1; n <= top; ++n) {
    std::vector<int> low, high;
    for (int b = 0; b < dim(); ++b) {
      if (height(b) == -n) low.push_back(b);
      if (height(b) == n) high.push_back(b);
    }
    if (low.size() != high.size()) {
      if (failure) *failure = "graded pieces of degree +-" + std::to_string(n) + " differ in dimension";
      return false;
    }
    BigMatrix m(high.size(), std::vector<mpz_class>(low.size()));
    for (std::size_t c = 0; c < low.size(); ++c) {
      std::vector<mpz_class> v(d);
      v[static_cast<std::size_t>(low[c])] = 1;
      for (int step = 0; step < 2 * n; ++step) {
        std::vector<mpz_class> w(d);
        for (std::size_t b = 0; b < d; ++b) {
          if (v[b] == 0) continue;
          for (const auto& [i, coef] : cols[b]) w[static_cast<std::size_t>(i)] += v[b] * static_cast<long>(coef);
        }
        v.swap(w);
      }
      for (std::size_t r = 0; r < high.size(); ++r) m[r][c] = v[static_cast<std::size_t>(high[r])];
    }
    if (excmono::rank(m) != high.size()) {
      if (failure) *failure = "(ad N)^" + std::to_string(2 * n) + " is not bijective";
      return false;
    }
  }
  return true;
}

KappaFixed kappa_fixed_dim(const ChevalleyAlgebra& alg, const KappaCharacter& kappa) {
  const auto& roots = alg.root_system().roots();
  KappaFixed out;
  out.target = static_cast<int>(roots.size() / 2);
  // kappa acts by kappa(alpha) on e_alpha and trivially on the Cartan.
  const auto d = static_cast<std::size_t>(alg.dim());
  IntMatrix m(d, d);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const int v = kappa(roots[k].coords);
    if (v == 1) ++out.plus_roots;
    const auto b = static_cast<std::size_t>(alg.e_index(static_cast<int>(k)));
    m(b, b) = v - 1;
  }
  out.dim = alg.dim() - static_cast<int>(rank(m));
  if (out.dim != alg.rank() + out.plus_roots) throw ConsistencyError("kappa fixed space miscounted");
  return out;
}

int regular_nilpotent_centralizer(const ChevalleyAlgebra& alg) {
  return alg.centralizer_dim(alg.regular_nilpotent());
}

namespace {

// Simple-root coordinates of an epsilon-vector in D_m (alpha_i = e_i - e_{i+1},
// alpha_m = e_{m-1} + e_m), by exact elimination.
RootVec d_simple_coords(const std::vector<int>& eps) {
  const std::size_t m = eps.size();
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    a[i][i] += 1;
    a[i + 1][i] -= 1;
  }
  a[m - 2][m - 1] += 1;
  a[m - 1][m - 1] += 1;
  for (std::size_t i = 0; i < m; ++i) a[i][m] = eps[i];
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) throw ConsistencyError("singular epsilon basis");
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  RootVec out(m);
  for (std::size_t i = 0; i < m; ++i) {
    mpq_class v = a[i][m] / a[i][i];
    v.canonicalize();
    if (v.get_den() != 1) throw ConsistencyError("epsilon vector outside the root lattice");
    out[i] = static_cast<int>(v.get_num().get_si());
  }
  return out;
}

std::vector<std::vector<int>> d_even_v_roots_eps(int m) {
  // e_{1-2} + e_{1+2} + sum_k e_{(2k+1)+(2k+2)}
  std::vector<std::vector<int>> out;
  auto v = [&](int i, int si, int j, int sj) {
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(i)] = si;
    e[static_cast<std::size_t>(j)] = sj;
    return e;
  };
  out.push_back(v(0, 1, 1, -1));
  out.push_back(v(0, 1, 1, 1));
  for (int k = 2; k + 1 < m; k += 2) out.push_back(v(k, 1, k + 1, 1));
  return out;
}

}  // namespace

NaturalRepCheck d_even_natural_check(int rank) {
  const int m = rank;
  const auto n2 = static_cast<std::size_t>(2 * m);
  // basis e_1..e_m, e_{-1}..e_{-m}; form (e_i, e_{-i}) = 1
  auto root_matrix = [&](int i, int si, int j, int sj) {
    // X_{si e_i + sj e_j}
    IntMatrix x(n2, n2);
    auto pos = [&](int k, int s) { return static_cast<std::size_t>(s > 0 ? k : m + k); };
    // X maps e_{-sj j} -> e_{si i} and e_{-si i} -> -e_{sj j}
    x(pos(i, si), pos(j, -sj)) += 1;
    x(pos(j, sj), pos(i, -si)) -= 1;
    return x;
  };
  IntMatrix x(n2, n2);
  for (const auto& eps : d_even_v_roots_eps(m)) {
    int i = -1, j = -1, si = 0, sj = 0;
    for (int k = 0; k < m; ++k)
      if (eps[static_cast<std::size_t>(k)] != 0) {
        if (i < 0) {
          i = k;
          si = eps[static_cast<std::size_t>(k)];
        } else {
          j = k;
          sj = eps[static_cast<std::size_t>(k)];
        }
      }
    const IntMatrix r = root_matrix(i, si, j, sj);
    for (std::size_t a = 0; a < n2; ++a)
      for (std::size_t b = 0; b < n2; ++b) x(a, b) += r(a, b);
  }
  // Jordan type from ranks of powers.
  std::vector<std::size_t> ranks{n2};
  IntMatrix p = x;
  while (ranks.back() != 0) {
    ranks.push_back(excmono::rank(p));
    p = p * x;
  }
  NaturalRepCheck out;
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (std::size_t c = 0; c < at_least[k] - next; ++c) out.jordan_type.push_back(static_cast<int>(k + 1));
  }
  std::sort(out.jordan_type.rbegin(), out.jordan_type.rend());

  // Centralizer in so(2m): basis H_i and X_{+-e_i +- e_j}.
  std::vector<IntMatrix> basis;
  for (int i = 0; i < m; ++i) {
    IntMatrix hm(n2, n2);
    hm(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    hm(static_cast<std::size_t>(m + i), static_cast<std::size_t>(m + i)) = -1;
    basis.push_back(hm);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) basis.push_back(root_matrix(i, si, j, sj));
  if (basis.size() != static_cast<std::size_t>(m * (2 * m - 1))) throw ConsistencyError("so(2m) basis size");
  IntMatrix lin(n2 * n2, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const IntMatrix com = x * basis[c];
    const IntMatrix moc = basis[c] * x;
    for (std::size_t a = 0; a < n2; ++a)
      for (std::size_t b = 0; b < n2; ++b) lin(a * n2 + b, c) = com(a, b) - moc(a, b);
  }
  out.centralizer_dim = static_cast<int>(basis.size() - excmono::rank(lin));
  return out;
}

VClassResult v_class_centralizer(const ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.root_system();
  const auto& roots = rs.roots();
  VClassResult out;
  out.target = static_cast<int>(roots.size() / 2);
  const Family f = rs.type().family;
  std::set<int> seen;

  if (f == Family::G) {
    std::int64_t shortest = roots.front().norm;
    for (const auto& r : roots) shortest = std::min<std::int64_t>(shortest, r.norm);
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
      if (roots[k].norm == shortest) {
        out.witness_roots = {static_cast<int>(k)};
        break;
      }
    out.description = "short root vector";
    out.dim = alg.centralizer_dim(alg.root_vector_sum(out.witness_roots));
    out.candidates_tried = 1;
    seen.insert(out.dim);
  } else if (f == Family::D && rs.rank() % 2 == 0 && rs.rank() >= 4) {
    for (const auto& eps : d_even_v_roots_eps(rs.rank())) {
      const auto idx = rs.index_of(d_simple_coords(eps));
      if (!idx) throw ConsistencyError("epsilon vector is not a root");
      out.witness_roots.push_back(*idx);
    }
    out.description = "Jordan type (3, 2^" + std::to_string(rs.rank() - 2) + ", 1) nilpotent";
    out.dim = alg.centralizer_dim(alg.root_vector_sum(out.witness_roots));
    out.candidates_tried = 1;
    seen.insert(out.dim);
    out.natural = d_even_natural_check(rs.rank());
    if (out.natural->centralizer_dim != out.dim)
      throw ConsistencyError("natural and adjoint centralizers of the D_2n class differ");
  } else if (f == Family::E && (rs.rank() == 7 || rs.rank() == 8)) {
    out.description = "sum of four orthogonal root vectors";
    const int np = static_cast<int>(rs.num_positive());
    std::vector<std::vector<char>> orth(static_cast<std::size_t>(np), std::vector<char>(static_cast<std::size_t>(np)));
    for (int a = 0; a < np; ++a)
      for (int b = 0; b < np; ++b)
        orth[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            rs.root_inner(roots[static_cast<std::size_t>(a)].coords, roots[static_cast<std::size_t>(b)].coords) == 0;
    bool found = false;
    for (int a = 0; a < np && !found; ++a)
      for (int b = a + 1; b < np && !found; ++b) {
        if (!orth[a][b]) continue;
        for (int c = b + 1; c < np && !found; ++c) {
          if (!orth[a][c] || !orth[b][c]) continue;
          for (int d = c + 1; d < np && !found; ++d) {
            if (!orth[a][d] || !orth[b][d] || !orth[c][d]) continue;
            const std::vector<int> quad{a, b, c, d};
            const int dimc = alg.centralizer_dim(alg.root_vector_sum(quad));
            ++out.candidates_tried;
            seen.insert(dimc);
            if (dimc == out.target) {
              out.witness_roots = quad;
              out.dim = dimc;
              found = true;
            }
          }
        }
      }
    if (!found) {
      out.dims_seen.assign(seen.begin(), seen.end());
      throw PredictionFailure("no orthogonal quadruple in " + rs.label() + " has centralizer dimension " +
                              std::to_string(out.target));
    }
  } else {
    throw UnsupportedTypeError("class v is defined here for D_2n, E7, E8, G2; got " + rs.label());
  }
  out.dims_seen.assign(seen.begin(), seen.end());
  if (out.dim != out.target)
    throw PredictionFailure("centralizer of the " + out.description + " in " + rs.label() + " has dimension " +
                            std::to_string(out.dim) + ", expected " + std::to_string(out.target));
  return out;
}

nlohmann::json VClassResult::to_json() const {
  nlohmann::json j;
  j["description"] = description;
  j["witness_roots"] = witness_roots;
  j["dim"] = dim;
  j["target"] = target;
  j["dims_seen"] = dims_seen;
  j["candidates_tried"] = candidates_tried;
  if (natural) j["natural_rep"] = {{"jordan_type", natural->jordan_type}, {"centralizer_dim", natural->centralizer_dim}};
  return j;
}

MonodromyBudget rigidity_budget(const RootSystem& g) {
  const RootSystem dual = g.dual();
  const ChevalleyAlgebra alg = ChevalleyAlgebra::build(dual);
  MonodromyBudget b;
  b.type = g.label();
  b.rank = g.rank();
  b.dim = alg.dim();
  b.phi_count = static_cast<int>(g.num_roots());
  b.d0 = kappa_fixed_dim(alg, kappa_character(g)).dim;
  b.d1 = regular_nilpotent_centralizer(alg);
  b.v = v_class_centralizer(alg);
  b.dinf = b.v.dim;
  b.h1 = b.dim - b.d0 - b.d1 - b.dinf;
  return b;
}

nlohmann::json MonodromyBudget::to_json() const {
  nlohmann::json j;
  j["type"] = type;
  j["dim"] = dim;
  j["rank"] = rank;
  j["phi_count"] = phi_count;
  j["d0"] = d0;
  j["d1"] = d1;
  j["dinf"] = dinf;
  j["h1"] = h1;
  j["balanced"] = balanced();
  j["v_class"] = v.to_json();
  return j;
}

QuasiMinuscule quasiminuscule_dims(const RootSystem& g) {
  const CartanType t = g.type();
  if (!((t.family == Family::E && (t.rank == 7 || t.rank == 8)) || t.family == Family::G))
    throw UnsupportedTypeError("quasi-minuscule bookkeeping is for E7, E8, G2; got " + g.label());
  QuasiMinuscule out;
  out.type = g.label();
  const HighestRoot th = g.highest_root();
  mpq_class prod = 1;
  int two_rho = 0;
  for (const auto& beta : g.roots()) {
    const auto pr = g.pairing(beta.coords, th.coroot);
    if (pr >= 0) ++out.heisenberg_root_count;
    if (!beta.positive()) continue;
    prod *= mpq_class(pr + beta.height, beta.height);
    two_rho += static_cast<int>(pr);
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw ConsistencyError("Weyl dimension formula is not integral");
  out.dim_vqm = prod.get_num().get_si();
  out.dim_y = two_rho;
  out.two_h_vee_minus_2 = g.dim_y();

  const RootSystem dual = g.dual();
  std::int64_t shortest = dual.roots().front().norm;
  for (const auto& r : dual.roots()) shortest = std::min<std::int64_t>(shortest, r.norm);
  long long short_roots = 0, short_simple = 0;
  for (std::size_t k = 0; k < dual.num_roots(); ++k)
    if (dual.roots()[k].norm == shortest) {
      ++short_roots;
      if (k < static_cast<std::size_t>(dual.rank())) ++short_simple;
    }
  out.dim_vqm_crosscheck = short_roots + short_simple;
  return out;
}

nlohmann::json QuasiMinuscule::to_json() const {
  return {{"type", type},
          {"dim_vqm", dim_vqm},
          {"dim_vqm_crosscheck", dim_vqm_crosscheck},
          {"dim_y", dim_y},
          {"two_h_vee_minus_2", two_h_vee_minus_2},
          {"heisenberg_root_count", heisenberg_root_count}};
}

}  // namespace excmono

namespace excmono {

QuadrupleCensus orthogonal_quadruple_census(const ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.root_system();
  if (!(rs.type().family == Family::E && (rs.rank() == 7 || rs.rank() == 8)))
    throw UnsupportedTypeError("the quadruple census is for E7 and E8; got " + rs.label());
  const auto& roots = rs.roots();
  const int np = static_cast<int>(rs.num_positive());
  auto orth = [&](int a, int b) {
    return rs.root_inner(roots[static_cast<std::size_t>(a)].coords, roots[static_cast<std::size_t>(b)].coords) == 0;
  };
  std::map<int, std::size_t> counts;
  QuadrupleCensus out;
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b) {
      if (!orth(a, b)) continue;
      for (int c = b + 1; c < np; ++c) {
        if (!orth(a, c) || !orth(b, c)) continue;
        for (int d = c + 1; d < np; ++d) {
          if (!orth(a, d) || !orth(b, d) || !orth(c, d)) continue;
          ++counts[alg.centralizer_dim(alg.root_vector_sum({a, b, c, d}))];
          ++out.quadruples;
        }
      }
    }
  out.by_dim.assign(counts.begin(), counts.end());
  return out;
}

nlohmann::json QuadrupleCensus::to_json() const {
  nlohmann::json by = nlohmann::json::array();
  for (const auto& [d, c] : by_dim) by.push_back({{"centralizer_dim", d}, {"count", c}});
  return {{"quadruples", quadruples}, {"by_centralizer_dim", by}};
}

}  // namespace excmono
