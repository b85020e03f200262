#include <doctest.h>

#include <map>

#include "excmono/errors.hpp"
#include "excmono/rootsys.hpp"
#include "excmono/twogroup.hpp"
#include "oracles.hpp"

using namespace excmono;

namespace {

const std::vector<std::string> kTypes{"A1", "G2", "D4", "D6", "D8", "E7", "E8"};

int element_order(const TildeGroup& tg, TildeElement x) {
  const TildeElement e{1, 0};
  TildeElement y = x;
  int n = 1;
  while (!(y.sign == e.sign && y.a == e.a)) {
    y = tg.mul(y, x);
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("group axioms, exhaustively for small rank") {
  for (const std::string label : {"A1", "G2", "D4"}) {
    CAPTURE(label);
    const TildeGroup tg = TildeGroup::build(RootSystem::build(label));
    const std::uint32_t n = tg.order();
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto x = TildeElement::from_index(i);
      const auto xi = tg.mul(x, tg.inverse(x));
      REQUIRE(xi.index() == 0);
      for (std::uint32_t j = 0; j < n; ++j) {
        const auto y = TildeElement::from_index(j);
        const auto xy = tg.mul(x, y);
        for (std::uint32_t k = 0; k < n; ++k) {
          const auto z = TildeElement::from_index(k);
          REQUIRE(tg.mul(xy, z).index() == tg.mul(x, tg.mul(y, z)).index());
        }
      }
    }
  }
}

TEST_CASE("laws hold exhaustively") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const TildeGroup tg = TildeGroup::build(RootSystem::build(label));
    CHECK(tg.square_law_violations() == 0);
    CHECK(tg.commutator_law_violations() == 0);
    CHECK(tg.polarization_violations() == 0);
  }
}

TEST_CASE("A_0 = ZG[2] against a brute-force kernel count") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    const TildeGroup tg = TildeGroup::build(rs);
    const std::size_t zg = oracle::kernel_mod2_size(rs.cartan_matrix().to_nested());
    CHECK(center_two_torsion_size(rs) == zg);
    CHECK(tg.radical_size() == oracle::kernel_mod2_size(rs.form_gram().to_nested()));
    CHECK(tg.radical_size() == zg);
  }
}

TEST_CASE("center of A~ computed naively") {
  const std::map<std::string, std::string> expected{{"A1", "mu4"}, {"G2", "mu2"}, {"D4", "mu2^3"}, {"D6", "mu4 x mu2"},
                                                    {"D8", "mu2^3"}, {"E7", "mu4"}, {"E8", "mu2"}};
  for (const auto& [label, want] : expected) {
    CAPTURE(label);
    const TildeGroup tg = TildeGroup::build(RootSystem::build(label));
    std::vector<TildeElement> center;
    for (std::uint32_t i = 0; i < tg.order(); ++i) {
      const auto x = TildeElement::from_index(i);
      bool central = true;
      for (std::uint32_t j = 0; j < tg.order() && central; ++j) {
        const auto y = TildeElement::from_index(j);
        central = tg.mul(x, y).index() == tg.mul(y, x).index();
      }
      if (central) center.push_back(x);
    }
    int exponent = 1;
    for (const auto& z : center) exponent = std::max(exponent, element_order(tg, z));
    CHECK(center.size() == 2 * tg.radical_size());
    std::string naive;
    if (center.size() == 2) naive = "mu2";
    else if (center.size() == 4 && exponent == 4) naive = "mu4";
    else if (center.size() == 8 && exponent == 2) naive = "mu2^3";
    else if (center.size() == 8 && exponent == 4) naive = "mu4 x mu2";
    CHECK(naive == want);
    CHECK(TildeGroup::center_label(tg.center_invariants()) == want);
  }
}

TEST_CASE("odd irreducibles") {
  const std::map<std::string, std::pair<std::size_t, int>> expected{{"A1", {2, 1}}, {"G2", {1, 2}}, {"D4", {4, 2}},
                                                                    {"D6", {4, 4}}, {"D8", {4, 8}}, {"E7", {2, 8}},
                                                                    {"E8", {1, 16}}};
  for (const auto& [label, want] : expected) {
    CAPTURE(label);
    const TildeGroup tg = TildeGroup::build(RootSystem::build(label));
    const auto irreps = tg.odd_irreps();
    CHECK(irreps.size() == want.first);
    std::size_t sum = 0;
    for (const auto& v : irreps) {
      CHECK(v.dimension == want.second);
      sum += static_cast<std::size_t>(v.dimension * v.dimension);
      CHECK(homomorphism_violations(tg, v) == 0);
      CHECK(oddness_violations(tg, v) == 0);
      CHECK(support_violations(tg, v) == 0);
      CHECK(v.matrices[TildeElement{-1, 0}.index()].is_scalar(GaussInt{-1, 0}));
    }
    CHECK(sum == tg.a_size());
    CHECK(orthogonality_violations(tg, irreps) == 0);
  }
}

TEST_CASE("characters do not depend on the Lagrangian") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const TildeGroup tg = TildeGroup::build(RootSystem::build(label));
    const auto a = tg.lagrangian(false), b = tg.lagrangian(true);
    CHECK(a.size() == b.size());
    const auto ra = tg.odd_irreps(false), rb = tg.odd_irreps(true);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i)
      for (std::uint32_t g = 0; g < tg.order(); ++g)
        REQUIRE(ra[i].matrices[g].trace() == rb[i].matrices[g].trace());
  }
}

TEST_CASE("types outside A1, D_2n, E7, E8, G2 are rejected") {
  for (const char* label : {"A2", "B3", "C3", "D5", "E6", "F4"}) {
    CAPTURE(label);
    CHECK_THROWS_AS(TildeGroup::build(RootSystem::build(label)), UnsupportedTypeError);
  }
}

TEST_CASE("summary JSON") {
  const auto j = TildeGroup::build(RootSystem::build("D6")).summary_json(false);
  CHECK(j.at("center_structure") == "mu4 x mu2");
  CHECK(j.at("odd_irrep_count") == 4);
  CHECK(j.at("order") == 128);
}
