#include <doctest.h>

#include <set>

#include "excmono/errors.hpp"
#include "excmono/rootsys.hpp"
#include "oracles.hpp"

using namespace excmono;

namespace {

const std::vector<std::string> kTypes{"A1", "A2", "A3", "A5", "A8", "B2", "B3", "B5", "B8", "C2", "C3", "C4", "C6",
                                      "C8", "D4", "D5", "D6", "D8", "E6", "E7", "E8", "F4", "G2"};

std::int64_t tabulated_det(const CartanType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 9 - t.rank;
    default: return 1;
  }
}

}  // namespace

TEST_CASE("root counts agree with lattice enumeration and rank * h") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    CHECK(rs.num_roots() == oracle::root_count(rs.root_gram().to_nested()));
    CHECK(rs.num_roots() == static_cast<std::size_t>(rs.rank() * rs.highest_root().coxeter_number));
  }
}

TEST_CASE("exceptional root counts") {
  CHECK(RootSystem::build("E8").num_roots() == 240);
  CHECK(RootSystem::build("E7").num_roots() == 126);
  CHECK(RootSystem::build("G2").num_roots() == 12);
  CHECK(RootSystem::build("F4").num_roots() == 48);
}

TEST_CASE("Cartan pairing agrees with both Gram matrices") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    for (const auto& a : rs.roots())
      for (const auto& b : rs.roots()) {
        const auto p = rs.pairing(a.coords, b.coroot);
        REQUIRE(p * rs.root_norm(b.coords) == 2 * rs.root_inner(a.coords, b.coords));
        REQUIRE(p * rs.coroot_inner(a.coroot, a.coroot) == 2 * rs.coroot_inner(a.coroot, b.coroot));
      }
  }
}

TEST_CASE("short roots and short coroots have norm 2") {
  for (const auto& label : kTypes) {
    const RootSystem rs = RootSystem::build(label);
    std::int64_t min_r = 1 << 20, min_c = 1 << 20;
    for (const auto& a : rs.roots()) {
      min_r = std::min(min_r, rs.root_norm(a.coords));
      min_c = std::min(min_c, rs.coroot_inner(a.coroot, a.coroot));
    }
    CHECK(min_r == 2);
    CHECK(min_c == 2);
  }
}

TEST_CASE("simple reflections permute the roots") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    for (int i = 0; i < rs.rank(); ++i) {
      std::set<RootVec> image;
      for (const auto& a : rs.roots()) {
        const RootVec b = rs.reflect_root(i, a.coords);
        REQUIRE(rs.index_of(b).has_value());
        image.insert(b);
      }
      CHECK(image.size() == rs.num_roots());
    }
  }
}

TEST_CASE("-1 in W iff the longest element negates every root") {
  const std::set<std::string> expected{"A1", "B2", "B3", "B5", "B8", "C2", "C3", "C4", "C6", "C8",
                                       "D4", "D6", "D8", "E7", "E8", "F4", "G2"};
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    const auto w0 = rs.longest_element_word();
    CHECK(w0.size() == rs.num_positive());
    bool negates = true;
    for (const auto& a : rs.roots()) {
      RootVec neg = a.coords;
      for (auto& v : neg) v = -v;
      negates = negates && rs.apply_word_to_root(w0, a.coords) == neg;
    }
    CHECK(rs.minus_one_in_weyl() == negates);
    CHECK(rs.minus_one_in_weyl() == (expected.count(label) == 1));
  }
}

TEST_CASE("2 rho^vee solves <rho^vee, alpha_i> = 1") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    const auto a = rs.cartan_matrix().to_nested();
    const auto x = oracle::solve(a, std::vector<std::int64_t>(a.size(), 1));
    const Coweight two_rho = rs.two_rho_vee();
    for (std::size_t i = 0; i < x.size(); ++i) {
      REQUIRE(x[i].den <= 2);
      CHECK(two_rho.doubled[i] == 2 * x[i].num / x[i].den);
    }
    for (const auto& r : rs.roots()) CHECK(rs.doubled_pairing(two_rho, r.coords) == 2 * r.height);
  }
}

TEST_CASE("Cartan determinant") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const RootSystem rs = RootSystem::build(label);
    CHECK(oracle::det(rs.cartan_matrix().to_nested()) == tabulated_det(rs.type()));
  }
}

TEST_CASE("duality swaps B and C and transposes the Cartan matrix") {
  for (const auto& label : kTypes) {
    const RootSystem rs = RootSystem::build(label);
    const RootSystem d = rs.dual();
    CHECK(d.cartan_matrix() == rs.cartan_matrix().transpose());
    CHECK(d.num_roots() == rs.num_roots());
  }
  CHECK(RootSystem::build("B4").dual().type() == CartanType::parse("C4"));
  CHECK(RootSystem::build("G2").dual().type().family == Family::G);
}

TEST_CASE("dual Coxeter numbers") {
  CHECK(RootSystem::build("E8").dual_coxeter_number() == 30);
  CHECK(RootSystem::build("E7").dual_coxeter_number() == 18);
  CHECK(RootSystem::build("G2").dual_coxeter_number() == 4);
  CHECK(RootSystem::build("D4").dual_coxeter_number() == 6);
  CHECK(RootSystem::build("E8").highest_root().coxeter_number == 30);
}

TEST_CASE("bad labels") {
  for (const char* bad : {"Z9", "A0", "E9", "E5", "D1", "F5", "G3", "", "B"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CartanType::parse(bad), ConfigurationError);
  }
  CHECK(CartanType::parse("e8").label() == "E8");
}
