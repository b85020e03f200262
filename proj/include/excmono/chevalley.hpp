#pragma once

// Exact Chevalley basis {h_i} u {e_alpha} of a split simple Lie algebra and
// the centralizer-dimension predictions for the dual group: kappa fixed
// space, regular nilpotent, the class v, the rigidity budget, and the
// quasi-minuscule dimension bookkeeping.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "excmono/affine_k.hpp"
#include "excmono/int_linalg.hpp"
#include "excmono/rootsys.hpp"

namespace excmono {

using Element = std::vector<std::int64_t>;  // dense coordinates in the Chevalley basis
using SparseVec = std::vector<std::pair<int, std::int64_t>>;

class ChevalleyAlgebra {
 public:
  // Lie algebra whose root system is `rs` (pass G.dual() to get the dual Lie algebra).
  static ChevalleyAlgebra build(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dim() const { return rank() + static_cast<int>(rs_.num_roots()); }
  int e_index(int root) const { return rank() + root; }
  bool is_cartan(int basis) const { return basis < rank(); }
  int height(int basis) const;  // 0 on the Cartan, ht(alpha) on e_alpha

  // N_{alpha, beta} with [e_alpha, e_beta] = N e_{alpha+beta}; 0 if the sum is not a root.
  int structure_constant(int a, int b) const { return n_[static_cast<std::size_t>(a) * nroots_ + static_cast<std::size_t>(b)]; }
  int root_sum(int a, int b) const { return sum_[static_cast<std::size_t>(a) * nroots_ + static_cast<std::size_t>(b)]; }

  SparseVec bracket(int x, int y) const;
  Element bracket(const Element& x, const Element& y) const;
  IntMatrix ad(const Element& x) const;
  Element basis_vector(int b) const;
  Element root_vector_sum(const std::vector<int>& roots) const;

  // Invariant form: (h_i, h_j) = form_gram, (e_alpha, e_-alpha) = max_norm / (alpha, alpha).
  std::int64_t form(int x, int y) const;

  // Checks; each returns the number of failing cases.
  std::size_t jacobi_violations() const;  // all basis triples
  std::size_t jacobi_violations_sampled(std::size_t samples, std::uint64_t seed) const;
  std::size_t structure_constant_violations() const;  // |N_{a,b}| = p + 1
  std::size_t invariance_violations() const;
  std::size_t invariance_violations_sampled(std::size_t samples, std::uint64_t seed) const;

  int centralizer_dim(const Element& x) const;
  Element regular_nilpotent() const;
  // (ad N)^{2n}: g(-n) -> g(n) bijective for every n >= 1, and dim g(h-1) = 1.
  bool hard_lefschetz(std::string* failure = nullptr) const;

 private:
  explicit ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {}
  std::size_t jacobi_at(int x, int y, int z) const;
  std::size_t invariance_at(int x, int y, int z) const;

  RootSystem rs_;
  std::size_t nroots_ = 0;
  std::vector<int> n_;
  std::vector<int> sum_;
  std::int64_t max_norm_ = 0;
};

struct KappaFixed {
  int dim = 0;            // dim g^kappa from the rank of (kappa - 1)
  int plus_roots = 0;     // roots of the dual with kappa = +1
  int target = 0;         // #Phi / 2
};

// `alg` must be built on G.dual() so that its roots are G's coroots.
KappaFixed kappa_fixed_dim(const ChevalleyAlgebra& alg, const KappaCharacter& kappa);

int regular_nilpotent_centralizer(const ChevalleyAlgebra& alg);

struct NaturalRepCheck {
  std::vector<int> jordan_type;  // decreasing block sizes
  int centralizer_dim = 0;       // inside so(4n)
};

struct VClassResult {
  std::string description;
  std::vector<int> witness_roots;  // indices into the dual root system
  int dim = 0;
  int target = 0;
  std::vector<int> dims_seen;      // every centralizer dimension met during a search
  std::size_t candidates_tried = 0;
  std::optional<NaturalRepCheck> natural;
  nlohmann::json to_json() const;
};

// Types D_2n, E7, E8, G2 of the dual. Throws PredictionFailure if no
// candidate reaches #Phi/2.
VClassResult v_class_centralizer(const ChevalleyAlgebra& alg);

// Every quadruple of pairwise orthogonal positive roots (E7, E8), grouped by
// the centralizer dimension of the sum of its root vectors.
struct QuadrupleCensus {
  std::size_t quadruples = 0;
  std::vector<std::pair<int, std::size_t>> by_dim;  // (centralizer dim, count), increasing dim
  nlohmann::json to_json() const;
};
QuadrupleCensus orthogonal_quadruple_census(const ChevalleyAlgebra& alg);

struct MonodromyBudget {
  std::string type;
  int d0 = 0, d1 = 0, dinf = 0;
  int phi_count = 0, rank = 0, dim = 0;
  int h1 = 0;  // dim - d0 - d1 - dinf
  VClassResult v;
  bool balanced() const { return d0 + d1 + dinf + h1 == dim && d0 + dinf == phi_count && d1 == rank && h1 == 0; }
  nlohmann::json to_json() const;
};

// For G of type D_2n, E7, E8, G2 (G's root system, not the dual's).
MonodromyBudget rigidity_budget(const RootSystem& g);

struct QuasiMinuscule {
  std::string type;
  long long dim_vqm = 0;            // Weyl dimension formula at theta^vee
  long long dim_vqm_crosscheck = 0; // #short roots + #short simple roots of the dual
  int dim_y = 0;                    // <2 rho, theta^vee>
  int two_h_vee_minus_2 = 0;
  int heisenberg_root_count = 0;    // #{beta : <beta, theta^vee> >= 0}
  nlohmann::json to_json() const;
};

// E7, E8, G2.
QuasiMinuscule quasiminuscule_dims(const RootSystem& g);

// Nilpotent of Jordan type (3, 2^{2n-2}, 1) in the natural representation
// of so(4n), n = rank/2, and its Jordan type / centralizer computed there.
NaturalRepCheck d_even_natural_check(int rank);

}  // namespace excmono
