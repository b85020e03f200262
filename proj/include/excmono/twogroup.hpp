#pragma once

// The central extension 1 -> mu_2 -> A~ -> A -> 1 of A = Lambda^vee / 2 Lambda^vee,
// realized on pairs (sign, a) with an upper-triangular 2-cocycle, and its odd
// irreducible representations built by induction from a Lagrangian.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "excmono/gaussian_int.hpp"
#include "excmono/int_linalg.hpp"
#include "excmono/rootsys.hpp"

namespace excmono {

struct TildeElement {
  int sign = 1;  // +1 or -1
  F2Vec a = 0;
  // Dense index in [0, 2^{r+1}): (a << 1) | (sign == -1).
  std::uint32_t index() const { return (a << 1) | (sign < 0 ? 1u : 0u); }
  static TildeElement from_index(std::uint32_t idx) { return {(idx & 1u) ? -1 : 1, idx >> 1}; }
  friend bool operator==(const TildeElement&, const TildeElement&) = default;
};

// Monomial matrix: column j has its single nonzero entry coeff[j] in row perm[j].
struct MonomialMatrix {
  std::vector<int> perm;
  std::vector<GaussInt> coeff;

  std::size_t dim() const { return perm.size(); }
  GaussInt trace() const;
  bool is_scalar(GaussInt c) const;
  friend MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

struct OddIrrep {
  std::vector<GaussInt> central_character;  // on the A_0 basis lifts (1, b_j)
  int dimension = 0;
  std::vector<MonomialMatrix> matrices;     // indexed by TildeElement::index()

  GaussInt character(const TildeElement& g) const { return matrices[g.index()].trace(); }
};

class TildeGroup {
 public:
  // A1, D_2n, E7, E8, G2; anything else throws UnsupportedTypeError.
  static TildeGroup build(const RootSystem& rs);

  int rank() const { return rank_; }
  const std::string& type_label() const { return label_; }
  std::uint32_t order() const { return 2u << rank_; }
  std::uint32_t a_size() const { return 1u << rank_; }

  // (a, b) mod 2 under the normalized form on Lambda^vee.
  int pairing(F2Vec a, F2Vec b) const;
  // q(a) = (-1)^{(a,a)/2}
  int q(F2Vec a) const;
  int beta(F2Vec a, F2Vec b) const;

  TildeElement mul(const TildeElement& x, const TildeElement& y) const;
  TildeElement inverse(const TildeElement& x) const;
  TildeElement commutator(const TildeElement& x, const TildeElement& y) const;

  const std::vector<F2Vec>& radical_basis() const { return radical_; }
  std::size_t radical_size() const { return std::size_t{1} << radical_.size(); }

  // Invariant factors of A~_0 (largest first), e.g. {4, 2}.
  std::vector<int> center_invariants() const;
  static std::string center_label(const std::vector<int>& invariants);  // "mu4 x mu2", "mu2^3"

  // Violation counts of the exhaustive checks (0 means the law holds).
  std::size_t square_law_violations() const;
  std::size_t commutator_law_violations() const;
  std::size_t polarization_violations() const;

  // Maximal isotropic subspace containing A_0, grown greedily over all
  // vectors in increasing (or decreasing) integer order.
  std::vector<F2Vec> lagrangian(bool descending = false) const;

  std::vector<OddIrrep> odd_irreps(bool descending_lagrangian = false) const;

  nlohmann::json summary_json(bool with_irreps) const;

 private:
  int rank_ = 0;
  std::string label_;
  std::vector<std::vector<std::int64_t>> gram_;  // form_gram entries
  std::vector<F2Vec> gram_rows_mod2_;
  std::vector<F2Vec> radical_;
};

// |ZG[2]| for simply connected G, from the Smith form of the Cartan matrix.
std::size_t center_two_torsion_size(const RootSystem& rs);

// Exhaustive irrep checks; each returns the number of failures.
std::size_t homomorphism_violations(const TildeGroup& tg, const OddIrrep& v);
std::size_t oddness_violations(const TildeGroup& tg, const OddIrrep& v);
// sum_g chi_V(g) conj(chi_W(g)) for every pair, compared with |G| delta.
std::size_t orthogonality_violations(const TildeGroup& tg, const std::vector<OddIrrep>& irreps);
// Characters vanish off the preimage of A_0.
std::size_t support_violations(const TildeGroup& tg, const OddIrrep& v);

}  // namespace excmono
