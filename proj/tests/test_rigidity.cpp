#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "excmono/errors.hpp"
#include "excmono/rigidity.hpp"

using namespace excmono;

namespace {

// Direct count over all (g0, g1) in C0 x C1 with (g0 g1)^-1 in Cinf.
std::size_t naive_triples(const FiniteGroup& g, int c0, int c1, int cinf) {
  std::size_t n = 0;
  for (int a : g.class_members(c0))
    for (int b : g.class_members(c1)) n += g.class_of(g.inverse(g.mul(a, b))) == cinf;
  return n;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> seen(perm.size(), 0), type;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1, ++len;
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace

TEST_CASE("S4 classes match cycle types") {
  const FiniteGroup s4 = FiniteGroup::symmetric(4);
  CHECK(s4.order() == 24);
  std::vector<int> p(4);
  std::iota(p.begin(), p.end(), 0);
  std::map<std::vector<int>, std::size_t> counts;
  do ++counts[cycle_type(p)];
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> want, got;
  for (const auto& [t, n] : counts) want.push_back(n);
  for (const auto& c : s4.classes()) got.push_back(c.size);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(s4.class_equation_violations() == 0);
  CHECK(s4.center_size() == 1);
}

TEST_CASE("group orders and class counts") {
  CHECK(FiniteGroup::sl2(5).order() == 120);
  CHECK(FiniteGroup::sl2(5).center_size() == 2);
  CHECK(FiniteGroup::psl2(7).order() == 168);
  CHECK(FiniteGroup::psl2(7).classes().size() == 6);
  for (std::uint32_t ell : {3u, 5u, 7u}) {
    const FiniteGroup g = FiniteGroup::pgl2(ell);
    CHECK(g.order() == ell * (ell * ell - 1));
    CHECK(g.classes().size() == ell + 2);
    CHECK(g.class_equation_violations() == 0);
  }
  CHECK(FiniteGroup::cyclic(5).is_abelian());
  CHECK_FALSE(FiniteGroup::symmetric(3).is_abelian());
}

TEST_CASE("PSL2(7) Hurwitz triple") {
  const FiniteGroup g = FiniteGroup::psl2(7);
  const int c2 = g.class_by_label("2a"), c3 = g.class_by_label("3a");
  for (const char* c7 : {"7a", "7b"}) {
    const int ci = g.class_by_label(c7);
    const TripleReport r = triple_count(g, c2, c3, ci);
    CHECK(r.solution_count == naive_triples(g, c2, c3, ci));
    CHECK(r.normalized() == "1");
    CHECK(r.all_generate);
    CHECK(r.strictly_rigid);
  }
}

TEST_CASE("triple counts match direct enumeration and do not depend on the base point") {
  const FiniteGroup g = FiniteGroup::psl2(7);
  const auto& cls = g.classes();
  for (std::size_t a = 1; a < cls.size(); ++a)
    for (std::size_t b = 1; b < cls.size(); ++b)
      for (std::size_t c = 1; c < cls.size(); c += 2) {
        const int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c);
        const TripleReport r = triple_count(g, ia, ib, ic);
        REQUIRE(r.solution_count == naive_triples(g, ia, ib, ic));
        const auto members = g.class_members(ia);
        REQUIRE(triple_count(g, ia, ib, ic, members.back()).solution_count == r.solution_count);
      }
}

TEST_CASE("PGL2 harness triples against direct enumeration") {
  for (std::uint32_t ell : {3u, 5u, 7u}) {
    CAPTURE(ell);
    const FiniteGroup g = FiniteGroup::pgl2(ell);
    const TripleReport r = harness_triple(ell);
    const int c0 = g.class_by_label(r.c0), c1 = g.class_by_label(r.c1), ci = g.class_by_label(r.cinf);
    CHECK(r.solution_count == naive_triples(g, c0, c1, ci));
    CHECK(r.group_order == g.order());
  }
  for (std::uint32_t ell : harness_triple_instances()) CHECK_NOTHROW(harness_triple(ell));
}

TEST_CASE("abelian groups: a triple in C5 is rigid and generates") {
  const FiniteGroup g = FiniteGroup::cyclic(5);
  const int x = g.generators().front();
  const int c = g.class_of(x);
  const int cinf = g.class_of(g.inverse(g.mul(x, x)));
  const TripleReport r = triple_count(g, c, c, cinf);
  CHECK(r.solution_count == 1);
  CHECK(r.normalized() == "1");
  CHECK(r.generates);
  CHECK(r.strictly_rigid);
  const TripleReport none = triple_count(g, c, c, c);
  CHECK(none.solution_count == 0);
  CHECK_FALSE(none.strictly_rigid);
}

TEST_CASE("JSON-described groups") {
  const nlohmann::json s3{{"kind", "permutation"}, {"degree", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}}};
  const FiniteGroup g = FiniteGroup::from_json(s3);
  CHECK(g.order() == 6);
  CHECK(g.classes().size() == 3);
  const nlohmann::json sl23{{"kind", "matrix"}, {"n", 2}, {"p", 3}, {"projective", false},
                            {"generators", {{{1, 1}, {0, 1}}, {{0, 2}, {1, 0}}}}};
  CHECK(FiniteGroup::from_json(sl23).order() == 24);
  CHECK_THROWS_AS(FiniteGroup::from_json(nlohmann::json{{"kind", "lie"}}), ConfigurationError);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(FiniteGroup::permutations(6, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, 100), GroupOverflowError);
  CHECK_THROWS_AS(FiniteGroup::psl2(7).class_by_label("9z"), ClassMismatchError);
}
