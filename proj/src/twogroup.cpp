#include "excmono/twogroup.hpp"

#include <algorithm>
#include <map>

#include "excmono/errors.hpp"

namespace excmono {

GaussInt MonomialMatrix::trace() const {
  GaussInt t;
  for (std::size_t j = 0; j < perm.size(); ++j)
    if (perm[j] == static_cast<int>(j)) t += coeff[j];
  return t;
}

bool MonomialMatrix::is_scalar(GaussInt c) const {
  for (std::size_t j = 0; j < perm.size(); ++j)
    if (perm[j] != static_cast<int>(j) || !(coeff[j] == c)) return false;
  return true;
}

MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y) {
  // (xy) e_j = x (y_j e_{py(j)}) = y_j x_{py(j)} e_{px(py(j))}
  MonomialMatrix out;
  out.perm.resize(y.perm.size());
  out.coeff.resize(y.perm.size());
  for (std::size_t j = 0; j < y.perm.size(); ++j) {
    const auto k = static_cast<std::size_t>(y.perm[j]);
    out.perm[j] = x.perm[k];
    out.coeff[j] = y.coeff[j] * x.coeff[k];
  }
  return out;
}

TildeGroup TildeGroup::build(const RootSystem& rs) {
  if (!rs.type().is_oddly_laced_target())
    throw UnsupportedTypeError("A~ is only built for A1, D_2n, E7, E8, G2; got " + rs.label());
  if (rs.rank() > 16) throw UnsupportedTypeError("rank too large for the explicit A~");
  TildeGroup tg;
  tg.rank_ = rs.rank();
  tg.label_ = rs.label();
  const IntMatrix& g = rs.form_gram();
  tg.gram_.assign(static_cast<std::size_t>(tg.rank_), std::vector<std::int64_t>(static_cast<std::size_t>(tg.rank_)));
  tg.gram_rows_mod2_.assign(static_cast<std::size_t>(tg.rank_), 0);
  for (int i = 0; i < tg.rank_; ++i)
    for (int j = 0; j < tg.rank_; ++j) {
      tg.gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g(i, j);
      if (g(i, j) % 2 != 0) tg.gram_rows_mod2_[static_cast<std::size_t>(i)] |= F2Vec{1} << j;
    }
  for (int i = 0; i < tg.rank_; ++i)
    if (g(i, i) % 2 != 0) throw ConsistencyError("the form is not even on Lambda^vee");
  tg.radical_ = f2_kernel(tg.gram_rows_mod2_, tg.rank_);
  return tg;
}

int TildeGroup::pairing(F2Vec a, F2Vec b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    if ((a >> i) & 1u) s ^= f2_dot(gram_rows_mod2_[static_cast<std::size_t>(i)], b);
  return s;
}

int TildeGroup::q(F2Vec a) const {
  // (a, a)/2 computed on the integer lift with 0/1 coordinates; its parity
  // does not depend on the lift because the form is even.
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (((a >> i) & 1u) && ((a >> j) & 1u)) s += gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return ((s / 2) % 2 == 0) ? 1 : -1;
}

int TildeGroup::beta(F2Vec a, F2Vec b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (!((a >> i) & 1u)) continue;
    if ((b >> i) & 1u) s ^= static_cast<int>((gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] / 2) & 1);
    for (int j = i + 1; j < rank_; ++j)
      if ((b >> j) & 1u) s ^= static_cast<int>(gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1);
  }
  return s;
}

TildeElement TildeGroup::mul(const TildeElement& x, const TildeElement& y) const {
  return {x.sign * y.sign * (beta(x.a, y.a) ? -1 : 1), x.a ^ y.a};
}

TildeElement TildeGroup::inverse(const TildeElement& x) const {
  return {x.sign * (beta(x.a, x.a) ? -1 : 1), x.a};
}

TildeElement TildeGroup::commutator(const TildeElement& x, const TildeElement& y) const {
  return mul(mul(x, y), mul(inverse(x), inverse(y)));
}

std::size_t TildeGroup::square_law_violations() const {
  std::size_t bad = 0;
  for (F2Vec a = 0; a < a_size(); ++a)
    for (int s : {1, -1}) {
      const TildeElement x{s, a};
      if (!(mul(x, x) == TildeElement{q(a), 0})) ++bad;
    }
  return bad;
}

std::size_t TildeGroup::commutator_law_violations() const {
  std::size_t bad = 0;
  for (F2Vec a = 0; a < a_size(); ++a)
    for (F2Vec b = 0; b < a_size(); ++b) {
      const TildeElement c = commutator({1, a}, {1, b});
      if (!(c == TildeElement{pairing(a, b) ? -1 : 1, 0})) ++bad;
    }
  return bad;
}

std::size_t TildeGroup::polarization_violations() const {
  std::size_t bad = 0;
  for (F2Vec a = 0; a < a_size(); ++a)
    for (F2Vec b = 0; b < a_size(); ++b)
      if ((pairing(a, b) ? -1 : 1) != q(a ^ b) * q(a) * q(b)) ++bad;
  return bad;
}

std::vector<int> TildeGroup::center_invariants() const {
  // Elements of A~_0 and, for each k, how many satisfy x^{2^k} = 1.
  std::vector<TildeElement> elems;
  for (std::size_t m = 0; m < radical_size(); ++m) {
    F2Vec a = 0;
    for (std::size_t j = 0; j < radical_.size(); ++j)
      if ((m >> j) & 1u) a ^= radical_[j];
    elems.push_back({1, a});
    elems.push_back({-1, a});
  }
  std::vector<std::size_t> killed{1};
  for (int k = 1;; ++k) {
    std::size_t n = 0;
    for (const auto& x : elems) {
      TildeElement y = x;
      for (int t = 0; t < k; ++t) y = mul(y, y);
      if (y == TildeElement{1, 0}) ++n;
    }
    killed.push_back(n);
    if (n == elems.size()) break;
    if (k > 8) throw ConsistencyError("A~_0 exponent too large");
  }
  // number of cyclic factors of order >= 2^k is log2(killed[k] / killed[k-1])
  std::vector<int> at_least;
  for (std::size_t k = 1; k < killed.size(); ++k) {
    const std::size_t ratio = killed[k] / killed[k - 1];
    at_least.push_back(__builtin_ctzll(ratio));
  }
  std::vector<int> inv;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (int c = 0; c < at_least[k] - next; ++c) inv.push_back(1 << (k + 1));
  }
  std::sort(inv.rbegin(), inv.rend());
  return inv;
}

std::string TildeGroup::center_label(const std::vector<int>& invariants) {
  std::map<int, int, std::greater<>> mult;
  for (int d : invariants) ++mult[d];
  std::string out;
  for (const auto& [d, m] : mult) {
    if (!out.empty()) out += " x ";
    out += "mu" + std::to_string(d);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "1" : out;
}

std::vector<F2Vec> TildeGroup::lagrangian(bool descending) const {
  std::vector<F2Vec> basis = radical_;
  auto consider = [&](F2Vec v) {
    if (f2_in_span(f2_span_basis(basis), v)) return;
    for (F2Vec b : basis)
      if (pairing(v, b)) return;
    basis.push_back(v);
  };
  if (descending) {
    for (F2Vec v = a_size() - 1; v >= 1; --v) consider(v);
  } else {
    for (F2Vec v = 1; v < a_size(); ++v) consider(v);
  }
  const std::size_t s = radical_.size();
  if ((rank_ - static_cast<int>(s)) % 2 != 0 || basis.size() != (static_cast<std::size_t>(rank_) + s) / 2)
    throw ConsistencyError("no Lagrangian of the expected dimension");
  return basis;
}

std::vector<OddIrrep> TildeGroup::odd_irreps(bool descending_lagrangian) const {
  const std::vector<F2Vec> lag = lagrangian(descending_lagrangian);
  const std::size_t s = radical_.size();
  const std::size_t m = lag.size();

  // Complement of L from standard basis vectors, then coordinates in L + C.
  std::vector<F2Vec> full = lag;
  for (int i = 0; i < rank_; ++i) {
    const F2Vec e = F2Vec{1} << i;
    if (!f2_in_span(f2_span_basis(full), e)) full.push_back(e);
  }
  if (full.size() != static_cast<std::size_t>(rank_)) throw ConsistencyError("basis extension failed");
  std::vector<std::uint32_t> coords(a_size());
  for (std::uint32_t mask = 0; mask < a_size(); ++mask) {
    F2Vec v = 0;
    for (std::size_t j = 0; j < full.size(); ++j)
      if ((mask >> j) & 1u) v ^= full[j];
    coords[v] = mask;
  }
  const std::size_t dim = std::size_t{1} << (full.size() - m);
  auto complement_vec = [&](std::size_t t) {
    F2Vec v = 0;
    for (std::size_t j = m; j < full.size(); ++j)
      if ((t >> (j - m)) & 1u) v ^= full[j];
    return v;
  };

  std::vector<OddIrrep> out;
  for (std::size_t choice = 0; choice < (std::size_t{1} << s); ++choice) {
    // psi on the lifts (1, b_j) of the Lagrangian basis
    std::vector<GaussInt> psi_basis(m);
    for (std::size_t j = 0; j < m; ++j) {
      const GaussInt root = q(lag[j]) == 1 ? GaussInt{1, 0} : GaussInt{0, 1};
      const bool flip = j < s && ((choice >> j) & 1u);
      psi_basis[j] = flip ? -root : root;
    }
    auto psi = [&](const TildeElement& x) {
      // x = (eps, l) with l in L; compare with the ordered product of lifts
      const std::uint32_t c = coords[x.a];
      if (c >> m) throw ConsistencyError("psi evaluated outside L~");
      TildeElement prod{1, 0};
      GaussInt val{1, 0};
      for (std::size_t j = 0; j < m; ++j)
        if ((c >> j) & 1u) {
          prod = mul(prod, {1, lag[j]});
          val *= psi_basis[j];
        }
      return val * GaussInt{x.sign * prod.sign, 0};
    };

    OddIrrep v;
    v.dimension = static_cast<int>(dim);
    v.central_character.assign(psi_basis.begin(), psi_basis.begin() + static_cast<std::ptrdiff_t>(s));
    v.matrices.resize(order());
    for (std::uint32_t idx = 0; idx < order(); ++idx) {
      const TildeElement g = TildeElement::from_index(idx);
      MonomialMatrix mm;
      mm.perm.resize(dim);
      mm.coeff.resize(dim);
      for (std::size_t t = 0; t < dim; ++t) {
        const TildeElement gt = mul(g, {1, complement_vec(t)});
        const std::size_t t2 = coords[gt.a] >> m;
        const TildeElement l = mul(inverse({1, complement_vec(t2)}), gt);
        mm.perm[t] = static_cast<int>(t2);
        mm.coeff[t] = psi(l);
      }
      v.matrices[idx] = std::move(mm);
    }
    out.push_back(std::move(v));
  }
  return out;
}

nlohmann::json TildeGroup::summary_json(bool with_irreps) const {
  nlohmann::json j;
  j["type"] = label_;
  j["order"] = order();
  j["radical_size"] = radical_size();
  const auto inv = center_invariants();
  j["center_structure"] = center_label(inv);
  j["center_invariants"] = inv;
  std::vector<int> dims;
  const auto irreps = odd_irreps();
  for (const auto& v : irreps) dims.push_back(v.dimension);
  j["odd_irrep_count"] = irreps.size();
  j["odd_irrep_dimensions"] = dims;
  if (with_irreps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : irreps) {
      nlohmann::json r;
      r["dimension"] = v.dimension;
      std::vector<std::string> chi;
      for (const auto& c : v.central_character) chi.push_back(c.str());
      r["central_character"] = chi;
      nlohmann::json gens = nlohmann::json::array();
      for (int i = 0; i < rank_; ++i) {
        const auto& mm = v.matrices[TildeElement{1, F2Vec{1} << i}.index()];
        std::vector<std::string> coeff;
        for (const auto& c : mm.coeff) coeff.push_back(c.str());
        gens.push_back({{"perm", mm.perm}, {"coeff", coeff}});
      }
      r["generator_matrices"] = gens;
      arr.push_back(r);
    }
    j["irreps"] = arr;
  }
  return j;
}

std::size_t center_two_torsion_size(const RootSystem& rs) {
  const SmithForm s = smith_normal_form(rs.cartan_matrix());
  std::size_t n = 1;
  for (std::int64_t d : s.diagonal)
    if (d % 2 == 0) n *= 2;
  return n;
}

std::size_t homomorphism_violations(const TildeGroup& tg, const OddIrrep& v) {
  std::size_t bad = 0;
  for (std::uint32_t x = 0; x < tg.order(); ++x)
    for (std::uint32_t y = 0; y < tg.order(); ++y) {
      const auto xy = tg.mul(TildeElement::from_index(x), TildeElement::from_index(y)).index();
      if (!(v.matrices[x] * v.matrices[y] == v.matrices[xy])) ++bad;
    }
  return bad;
}

std::size_t oddness_violations(const TildeGroup&, const OddIrrep& v) {
  return v.matrices[TildeElement{-1, 0}.index()].is_scalar(GaussInt{-1, 0}) ? 0 : 1;
}

std::size_t orthogonality_violations(const TildeGroup& tg, const std::vector<OddIrrep>& irreps) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < irreps.size(); ++i)
    for (std::size_t j = 0; j < irreps.size(); ++j) {
      GaussInt sum;
      for (std::uint32_t g = 0; g < tg.order(); ++g)
        sum += irreps[i].matrices[g].trace() * irreps[j].matrices[g].trace().conj();
      const GaussInt expected{i == j ? static_cast<std::int64_t>(tg.order()) : 0, 0};
      if (!(sum == expected)) ++bad;
    }
  return bad;
}

std::size_t support_violations(const TildeGroup& tg, const OddIrrep& v) {
  const auto basis = f2_span_basis(tg.radical_basis());
  std::size_t bad = 0;
  for (std::uint32_t g = 0; g < tg.order(); ++g) {
    const TildeElement x = TildeElement::from_index(g);
    if (!f2_in_span(basis, x.a) && !v.matrices[g].trace().is_zero()) ++bad;
  }
  return bad;
}

}  // namespace excmono
