#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "excmono/int_linalg.hpp"

namespace excmono {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Accepts "E8", "D4", "A1", "g2", ...; throws ConfigurationError.
  static CartanType parse(std::string_view label);
  std::string label() const;
  // -1 in W exactly for A1, B, C, D_even, E7, E8, F4, G2 (tabulated; the
  // root system computes it independently).
  bool is_oddly_laced_target() const;  // A1, D_2n, E7, E8, G2

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Integer vector in simple-root (or simple-coroot) coordinates.
using RootVec = std::vector<int>;

struct Root {
  RootVec coords;    // in the basis of simple roots
  RootVec coroot;    // alpha^vee in the basis of simple coroots
  int height = 0;    // sum of coords, equals <rho^vee, alpha>
  int norm = 0;      // (alpha, alpha) under root_gram
  bool positive() const { return height > 0; }
};

// A coweight stored doubled so that rho^vee is integral.
struct Coweight {
  std::vector<std::int64_t> doubled;  // 2 * coordinates in the simple-coroot basis
};

struct HighestRoot {
  int index = -1;                  // into RootSystem::roots()
  RootVec root;                    // theta
  RootVec coroot;                  // theta^vee, its entries are the marks c(alpha)
  RootVec root_marks;              // theta in simple roots
  int coxeter_number = 0;          // 1 + sum of root marks
};

// Finite root system with integer Cartan data. Roots are stored in
// simple-root coordinates and coroots in simple-coroot coordinates.
// Convention: cartan(i, j) = <alpha_i, alpha_j^vee>.
class RootSystem {
 public:
  static RootSystem build(const CartanType& type);
  static RootSystem build(std::string_view label) { return build(CartanType::parse(label)); }

  // Root system of the Langlands dual: roots and coroots swapped, node
  // order preserved (node i of the dual has simple root alpha_i^vee).
  RootSystem dual() const;

  const CartanType& type() const { return type_; }
  std::string label() const { return type_.label(); }
  int rank() const { return rank_; }

  const IntMatrix& cartan_matrix() const { return cartan_; }
  // (alpha_i, alpha_j) with short roots of norm 2 on every component.
  const IntMatrix& root_gram() const { return root_gram_; }
  // (alpha_i^vee, alpha_j^vee) with short coroots of norm 2.
  const IntMatrix& form_gram() const { return form_gram_; }

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  std::optional<int> index_of(const RootVec& coords) const;
  int negative_of(int index) const { return negation_[static_cast<std::size_t>(index)]; }
  int simple_root_index(int i) const { return static_cast<int>(i); }  // simple roots come first

  bool is_irreducible() const;

  // <alpha, beta^vee> for root-lattice alpha and coroot-lattice beta^vee.
  std::int64_t pairing(const RootVec& root_coords, const RootVec& coroot_coords) const;
  std::int64_t root_norm(const RootVec& v) const;     // (v, v) under root_gram
  std::int64_t root_inner(const RootVec& a, const RootVec& b) const;
  std::int64_t coroot_inner(const RootVec& a, const RootVec& b) const;  // under form_gram
  // alpha^vee of an arbitrary root in simple-coroot coordinates.
  RootVec coroot_of(const RootVec& root_coords) const;

  RootVec reflect_root(int i, const RootVec& root_coords) const;
  RootVec reflect_coroot(int i, const RootVec& coroot_coords) const;

  HighestRoot highest_root() const;
  bool minus_one_in_weyl() const;
  // Reduced word of the longest element, found by descending from rho.
  std::vector<int> longest_element_word() const;
  RootVec apply_word_to_root(const std::vector<int>& word, const RootVec& root_coords) const;

  Coweight two_rho_vee() const;
  // <2 lambda, alpha> for a doubled coweight.
  std::int64_t doubled_pairing(const Coweight& lambda, const RootVec& root_coords) const;

  int dual_coxeter_number() const;
  int dim_y() const { return 2 * dual_coxeter_number() - 2; }

  nlohmann::json to_json() const;

 private:
  RootSystem() = default;
  void finish_construction();

  CartanType type_;
  int rank_ = 0;
  IntMatrix cartan_;
  IntMatrix root_gram_;
  IntMatrix form_gram_;
  std::vector<Root> roots_;
  std::vector<int> negation_;
  std::map<RootVec, int> lookup_;
};

// Root-length Gram matrix for a Cartan type in Bourbaki numbering.
IntMatrix bourbaki_root_gram(const CartanType& type);

}  // namespace excmono
