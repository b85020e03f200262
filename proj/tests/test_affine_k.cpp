#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "excmono/affine_k.hpp"
#include "excmono/errors.hpp"
#include "excmono/rootsys.hpp"
#include "oracles.hpp"

using namespace excmono;

namespace {

const std::vector<std::string> kWithMinusOne{"A1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C2", "C3", "C4", "C5",
                                            "C6", "D4", "D6", "D8", "E7", "E8", "F4", "G2"};

// Closure of a simple system under its own reflections, in root coordinates.
std::set<RootVec> generated_roots(const RootSystem& rs, const std::vector<RootVec>& simple) {
  std::set<RootVec> seen(simple.begin(), simple.end());
  std::vector<RootVec> frontier(simple.begin(), simple.end());
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& b : frontier)
      for (const auto& a : simple) {
        const auto k = 2 * rs.root_inner(b, a) / rs.root_norm(a);
        RootVec c = b;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= static_cast<int>(k) * a[i];
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::size_t roots_of(const std::string& label) {
  if (label == "1") return 0;
  std::size_t total = 0;
  std::size_t pos = 0;
  while (pos < label.size()) {
    const auto end = label.find('x', pos);
    const std::string part = label.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (part.rfind("Gm", 0) != 0) total += RootSystem::build(part).num_roots();
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return total;
}

}  // namespace

TEST_CASE("Phi_K is the set of even-height roots") {
  for (const auto& label : kWithMinusOne) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    std::size_t even_positive = 0;
    for (const auto& r : rs.roots()) even_positive += (r.positive() && r.height % 2 == 0) ? 1 : 0;
    const SubRootSystem k = phi_k(rs);
    CHECK(k.size() == 2 * even_positive);
    CHECK(k.semisimple_rank() + k.torus_rank == rs.rank());
  }
  CHECK(phi_k(RootSystem::build("E8")).size() == 112);
}

TEST_CASE("Phi_K is closed") {
  for (const auto& label : kWithMinusOne) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    const SubRootSystem k = phi_k(rs);
    const std::set<int> members(k.member_roots.begin(), k.member_roots.end());
    for (int a : k.member_roots) {
      CHECK(members.count(rs.negative_of(a)) == 1);
      for (int b : k.member_roots) {
        RootVec s = rs.roots()[static_cast<std::size_t>(a)].coords;
        const auto& rb = rs.roots()[static_cast<std::size_t>(b)].coords;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += rb[i];
        if (auto idx = rs.index_of(s)) REQUIRE(members.count(*idx) == 1);
      }
    }
  }
}

TEST_CASE("the alcove simple system generates a root system of the claimed type") {
  for (const auto& label : kWithMinusOne) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    const AlcovePoint pt = half_rho_alcove_point(rs);
    const KTypeRow row = k_type_row(rs);
    CHECK(join_k_label(classify_simple_system(rs, pt.simple_system), rs.rank() - static_cast<int>(pt.simple_system.size())) == row.k);
    const std::size_t n = pt.simple_system.empty() ? 0 : generated_roots(rs, pt.simple_system).size();
    CHECK(n == roots_of(row.k));
    CHECK(n == phi_k(rs).size());
  }
}

TEST_CASE("K types of the exceptional groups") {
  CHECK(k_type_row(RootSystem::build("E8")).k == "D8");
  CHECK(k_type_row(RootSystem::build("E7")).k == "A7");
  CHECK(k_type_row(RootSystem::build("F4")).k == "A1xC3");
  CHECK(k_type_row(RootSystem::build("G2")).k == "A1xA1");
  CHECK(k_type_row(RootSystem::build("A1")).k == "Gm");
}

TEST_CASE("the alcove point: walk ends with coordinates in {0, 1, 2}") {
  for (const auto& label : kWithMinusOne) {
    const AlcovePoint pt = half_rho_alcove_point(RootSystem::build(label));
    for (int y : pt.doubled_coords) CHECK(y >= 0);
    CHECK(pt.doubled_theta <= 2);
  }
}

TEST_CASE("B2 = C2 has free quotient") {
  const LatticeQuotient q = k_fundamental_quotient(RootSystem::build("B2"));
  CHECK(q.free_rank == 1);
  CHECK(q.invariant_factors.empty());
}

TEST_CASE("c(alpha') is not defined for A1 or C_n") {
  CHECK_THROWS_AS(removed_node_coefficient(RootSystem::build("A1")), NotApplicableError);
  CHECK_THROWS_AS(removed_node_coefficient(RootSystem::build("C3")), NotApplicableError);
  CHECK(removed_node_coefficient(RootSystem::build("E8")) == 2);
}

TEST_CASE("kappa is a nontrivial homomorphism, -1 exactly off the alcove K") {
  const std::map<std::string, int> off_k{{"E8", 128}, {"E7", 70}, {"D6", 36}, {"D4", 16}, {"G2", 8}, {"A1", 2}};
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (const auto& [label, count] : off_k) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    const KappaCharacter kappa = kappa_character(rs);
    CHECK(kappa.nontrivial());
    for (int trial = 0; trial < 200; ++trial) {
      RootVec a(static_cast<std::size_t>(rs.rank())), b(a.size()), c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = coeff(rng);
        b[i] = coeff(rng);
        c[i] = a[i] + b[i];
      }
      REQUIRE(kappa(c) == kappa(a) * kappa(b));
    }
    // the kernel is the coroot lattice of the K read off the alcove, a
    // W-conjugate of the parity Phi_K
    int minus = 0;
    const AlcovePoint pt = half_rho_alcove_point(rs);
    const std::set<RootVec> alcove_k =
        pt.simple_system.empty() ? std::set<RootVec>{} : generated_roots(rs, pt.simple_system);
    for (const auto& root : rs.roots()) {
      const bool in_k = alcove_k.count(root.coords) == 1;
      const int v = kappa(root.coroot);
      minus += v < 0;
      if (label != "A1") CHECK((v == 1) == in_k);
    }
    CHECK(minus == count);
  }
}

TEST_CASE("kappa is rejected for C_n") {
  CHECK_THROWS(kappa_character(RootSystem::build("C3")));
}

TEST_CASE("K-type row JSON") {
  const auto j = k_type_row(RootSystem::build("E8")).to_json();
  CHECK(j.at("g") == "E8");
  CHECK(j.at("k") == "D8");
  CHECK(j.at("pi1") == "Z/2");
  CHECK(j.at("c_alpha_prime") == 2);
}
