#pragma once

// The symmetric subgroup K = G^{rho^vee(-1)}: its roots, its Dynkin type
// read off the affine diagram, the fundamental-group datum
// Lambda^vee / Z Phi^vee_K and the order-two character kappa it defines.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "excmono/int_linalg.hpp"
#include "excmono/rootsys.hpp"

namespace excmono {

struct SubRootSystem {
  CartanType parent;
  std::vector<int> member_roots;             // indices into the parent's roots()
  std::vector<RootVec> simple_roots;         // a simple system, parent root coordinates
  std::vector<std::string> component_types;  // sorted by (rank, letter)
  int torus_rank = 0;

  std::size_t size() const { return member_roots.size(); }
  int semisimple_rank() const { return static_cast<int>(simple_roots.size()); }
  // "A7", "A1xC3", "A2xGm", "Gm"
  std::string label() const;
};

// Dynkin classification of the simple system `simple` (given in the
// parent's root coordinates); labels sorted by (rank, letter).
std::vector<std::string> classify_simple_system(const RootSystem& parent, const std::vector<RootVec>& simple);

// Joins component labels and a torus factor the way SubRootSystem::label does.
std::string join_k_label(std::vector<std::string> components, int torus_rank);

// Phi_K = { alpha : <rho^vee, alpha> even }. Requires -1 in W.
SubRootSystem phi_k(const RootSystem& rs);

// 1/2 rho^vee moved into the closed fundamental alcove by the affine Weyl
// group. Node 0 is the affine node alpha_0 = delta - theta.
struct AlcovePoint {
  std::vector<int> doubled_coords;  // 2 <x, alpha_i>, i = 1..r
  int doubled_theta = 0;            // 2 <x, theta>
  std::vector<int> removed_nodes;   // 0 = affine node, i = alpha_i (1-based)
  std::vector<RootVec> simple_system;  // (Delta \ removed) u {-theta if kept}
  int reflections = 0;              // length of the walk
};

AlcovePoint half_rho_alcove_point(const RootSystem& rs);

// Lambda^vee / Z Phi^vee_K computed from the simple coroots of the affine
// simple system. Requires -1 in W.
LatticeQuotient k_fundamental_quotient(const RootSystem& rs);

// Mark c(alpha') of the single removed finite node in theta^vee.
// Throws NotApplicableError for A1 and C_n.
int removed_node_coefficient(const RootSystem& rs);

// Order-two character of Lambda^vee; kappa(lambda) = (-1)^{<f, lambda> mod 2}.
class KappaCharacter {
 public:
  KappaCharacter() = default;
  explicit KappaCharacter(std::vector<int> functional) : functional_(std::move(functional)) {}

  int operator()(const RootVec& coroot_coords) const;
  const std::vector<int>& functional() const { return functional_; }
  bool nontrivial() const;

 private:
  std::vector<int> functional_;  // entries in {0, 1}
};

// For non-A1/C_n types the kernel is Z Phi^vee_K; for A1 it is 2 Lambda^vee.
// C_n is rejected.
KappaCharacter kappa_character(const RootSystem& rs);

struct KTypeRow {
  std::string g;
  std::string k;
  std::string pi1;
  std::optional<int> c_alpha_prime;
  nlohmann::json to_json() const;
};

KTypeRow k_type_row(const RootSystem& rs);

}  // namespace excmono
