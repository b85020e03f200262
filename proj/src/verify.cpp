#include "excmono/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <tuple>

#include "excmono/a1lab.hpp"
#include "excmono/affine_k.hpp"
#include "excmono/chevalley.hpp"
#include "excmono/errors.hpp"
#include "excmono/rigidity.hpp"
#include "excmono/rootsys.hpp"
#include "excmono/twogroup.hpp"

namespace excmono {

bool CriterionResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.skipped; });
}

std::vector<std::string> CriterionResult::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed && !c.skipped)
      out.push_back(module + ": " + claim + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return out;
}

nlohmann::json CriterionResult::to_json(bool with_timing) const {
  nlohmann::json j;
  j["id"] = id;
  j["module"] = module;
  j["claim"] = claim;
  j["passed"] = passed();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj{{"name", c.name}, {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

namespace {

struct Recorder {
  CriterionResult& r;
  void operator()(std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, false, std::move(detail)});
  }
  void skip(std::string name, std::string why) { r.checks.push_back({std::move(name), false, true, std::move(why)}); }
  // Runs fn; an exception becomes a failed check carrying its message.
  void guarded(const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      (*this)(name, false, std::string("exception: ") + e.what());
    }
  }
};

std::string eq_detail(const std::string& got, const std::string& want) { return "got " + got + ", expected " + want; }
template <class T>
std::string eq_detail(const T& got, const T& want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

// -- 1: K types ----------------------------------------------------------

using Comp = std::pair<char, int>;

std::vector<Comp> normalize_component(Comp c, int& torus) {
  auto [f, n] = c;
  if (n <= 0) return {};
  if ((f == 'B' || f == 'C') && n == 1) return {{'A', 1}};
  if (f == 'C' && n == 2) return {{'B', 2}};
  if (f == 'D' && n == 1) {
    ++torus;
    return {};
  }
  if (f == 'D' && n == 2) return {{'A', 1}, {'A', 1}};
  if (f == 'D' && n == 3) return {{'A', 3}};
  return {c};
}

std::pair<std::string, std::size_t> expected_k(const CartanType& t) {
  std::vector<Comp> raw;
  int torus = 0;
  const int n = t.rank;
  switch (t.family) {
    case Family::A: torus = 1; break;
    case Family::B:
      if (n % 2 == 0) raw = {{'B', n / 2}, {'D', n / 2}};
      else raw = {{'B', n / 2}, {'D', n / 2 + 1}};
      break;
    case Family::C: raw = {{'A', n - 1}}, torus = 1; break;
    case Family::D: raw = {{'D', n / 2}, {'D', n / 2}}; break;
    case Family::E: raw = {n == 7 ? Comp{'A', 7} : Comp{'D', 8}}; break;
    case Family::F: raw = {{'A', 1}, {'C', 3}}; break;
    case Family::G: raw = {{'A', 1}, {'A', 1}}; break;
  }
  std::vector<Comp> comps;
  for (const auto& c : raw)
    for (const auto& d : normalize_component(c, torus)) comps.push_back(d);
  std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
  std::vector<std::string> labels;
  std::size_t roots = 0;
  for (const auto& [f, m] : comps) {
    labels.push_back(std::string(1, f) + std::to_string(m));
    const auto mm = static_cast<std::size_t>(m);
    switch (f) {
      case 'A': roots += mm * (mm + 1); break;
      case 'B':
      case 'C': roots += 2 * mm * mm; break;
      case 'D': roots += 2 * mm * (mm - 1); break;
      default: break;
    }
  }
  return {join_k_label(labels, torus), roots};
}

std::vector<std::string> k_table_types() {
  return {"A1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C2", "C3", "C4", "C5", "C6",
          "D4", "D6", "D8", "E7", "E8", "F4", "G2"};
}

void criterion_k_types(Recorder& rec) {
  for (const auto& label : k_table_types()) {
    rec.guarded("K type of " + label, [&] {
      const RootSystem rs = RootSystem::build(label);
      const auto [want, want_roots] = expected_k(rs.type());
      const KTypeRow row = k_type_row(rs);
      rec("K type of " + label, row.k == want, eq_detail(row.k, want));
      const SubRootSystem k = phi_k(rs);
      rec("#Phi_K of " + label, k.size() == want_roots, eq_detail(k.size(), want_roots));
    });
  }
}

// -- 2: Lambda^vee / Z Phi^vee_K and c(alpha') --------------------------

void criterion_knotsc(Recorder& rec) {
  const std::vector<std::string> z2{"B3", "B4", "B5", "B6", "B7", "B8", "D4", "D6", "D8", "E7", "E8", "F4", "G2"};
  const std::vector<std::string> free1{"A1", "C2", "C3", "C4"};
  for (const auto& label : z2)
    rec.guarded("quotient of " + label, [&] {
      const RootSystem rs = RootSystem::build(label);
      const LatticeQuotient q = k_fundamental_quotient(rs);
      rec("quotient of " + label + " is Z/2", q.free_rank == 0 && q.invariant_factors == std::vector<std::int64_t>{2},
          eq_detail(q.label(), std::string("Z/2")));
      const int c = removed_node_coefficient(rs);
      rec("c(alpha') of " + label + " is 2", c == 2, eq_detail(c, 2));
    });
  for (const auto& label : free1)
    rec.guarded("quotient of " + label, [&] {
      const RootSystem rs = RootSystem::build(label);
      const LatticeQuotient q = k_fundamental_quotient(rs);
      rec("quotient of " + label + " is Z", q.free_rank == 1 && q.invariant_factors.empty(), eq_detail(q.label(), std::string("Z")));
      bool threw = false;
      try {
        (void)removed_node_coefficient(rs);
      } catch (const NotApplicableError&) {
        threw = true;
      }
      rec("c(alpha') not applicable for " + label, threw);
    });
}

// -- 3 / 4: A~ ---------------------------------------------------------------

const std::vector<std::string>& atilde_types() {
  static const std::vector<std::string> t{"A1", "D4", "D6", "D8", "E7", "E8", "G2"};
  return t;
}

void criterion_atilde(Recorder& rec) {
  for (const auto& label : atilde_types())
    rec.guarded("A~ laws for " + label, [&] {
      const RootSystem rs = RootSystem::build(label);
      const TildeGroup tg = TildeGroup::build(rs);
      const auto sq = tg.square_law_violations();
      const auto cm = tg.commutator_law_violations();
      const auto pol = tg.polarization_violations();
      rec("square law for " + label, sq == 0, std::to_string(sq) + " violations over " + std::to_string(tg.order()) + " elements");
      rec("commutator law for " + label, cm == 0,
          std::to_string(cm) + " violations over " + std::to_string(std::size_t{tg.a_size()} * tg.a_size()) + " pairs");
      rec("polarization for " + label, pol == 0, std::to_string(pol) + " violations");
      const std::size_t zg = center_two_torsion_size(rs);
      rec("|A_0| = |ZG[2]| for " + label, tg.radical_size() == zg, eq_detail(tg.radical_size(), zg));
    });
}

void criterion_center_irreps(Recorder& rec) {
  const std::map<std::string, std::pair<std::string, std::size_t>> table{
      {"A1", {"mu4", 2}}, {"E7", {"mu4", 2}}, {"E8", {"mu2", 1}},          {"G2", {"mu2", 1}},
      {"D4", {"mu2^3", 4}}, {"D8", {"mu2^3", 4}}, {"D6", {"mu4 x mu2", 4}},
  };
  for (const auto& label : atilde_types())
    rec.guarded("A~_0 of " + label, [&] {
      const auto& [want_center, want_count] = table.at(label);
      const TildeGroup tg = TildeGroup::build(RootSystem::build(label));
      const std::string center = TildeGroup::center_label(tg.center_invariants());
      rec("A~_0 of " + label, center == want_center, eq_detail(center, want_center));
      const auto irreps = tg.odd_irreps();
      rec("odd irrep count of " + label, irreps.size() == want_count, eq_detail(irreps.size(), want_count));
      std::size_t sum_sq = 0, hom = 0, odd = 0, supp = 0;
      for (const auto& v : irreps) {
        sum_sq += static_cast<std::size_t>(v.dimension) * static_cast<std::size_t>(v.dimension);
        hom += homomorphism_violations(tg, v);
        odd += oddness_violations(tg, v);
        supp += support_violations(tg, v);
      }
      rec("sum dim^2 = 2^r for " + label, sum_sq == tg.a_size(), eq_detail(sum_sq, std::size_t{tg.a_size()}));
      rec("irreps are homomorphisms for " + label, hom == 0, std::to_string(hom) + " failing products");
      rec("(-1, 0) acts by -1 for " + label, odd == 0);
      rec("characters vanish off A~_0 for " + label, supp == 0);
      const auto orth = orthogonality_violations(tg, irreps);
      rec("character orthogonality for " + label, orth == 0, std::to_string(orth) + " failing pairs");
      const auto other = tg.odd_irreps(true);
      bool same = other.size() == irreps.size();
      for (std::size_t i = 0; same && i < irreps.size(); ++i)
        for (std::uint32_t g = 0; same && g < tg.order(); ++g)
          same = irreps[i].matrices[g].trace() == other[i].matrices[g].trace();
      rec("second Lagrangian gives the same characters for " + label, same);
    });
}

// -- 5: Chevalley predictions ------------------------------------------------

void criterion_chevalley(Recorder& rec, const VerifyOptions& opts) {
  const std::map<std::string, int> dims{{"A1", 3}, {"G2", 14}, {"D4", 28}, {"E7", 133}, {"E8", 248}};
  for (const std::string label : {"A1", "G2", "D4", "E7", "E8"}) {
    if (opts.fast && label == "E8") {
      rec.skip("Chevalley predictions for E8", "skipped by --fast");
      continue;
    }
    rec.guarded("Chevalley predictions for " + label, [&] {
      const RootSystem g = RootSystem::build(label);
      const ChevalleyAlgebra alg = ChevalleyAlgebra::build(g.dual());
      const int want_dim = g.rank() + static_cast<int>(g.num_roots());
      rec("dim of the dual Lie algebra for " + label, alg.dim() == want_dim && alg.dim() == dims.at(label),
          eq_detail(alg.dim(), dims.at(label)));
      rec("|N| = p+1 for " + label, alg.structure_constant_violations() == 0);
      if (alg.dim() <= 70) {
        rec("Jacobi identity, all triples, " + label, alg.jacobi_violations() == 0);
        rec("invariant form, all triples, " + label, alg.invariance_violations() == 0);
      } else {
        rec("Jacobi identity, 10^4 sampled triples, " + label, alg.jacobi_violations_sampled(10000, opts.seed) == 0);
        rec("invariant form, 10^4 sampled triples, " + label, alg.invariance_violations_sampled(10000, opts.seed) == 0);
      }
      std::string why;
      rec("hard Lefschetz for the principal grading, " + label, alg.hard_lefschetz(&why), why);
      const int half = static_cast<int>(g.num_roots() / 2);
      const KappaFixed kf = kappa_fixed_dim(alg, kappa_character(g));
      rec("dim g^kappa = #Phi/2 for " + label, kf.dim == half, eq_detail(kf.dim, half));
      const int reg = regular_nilpotent_centralizer(alg);
      rec("regular nilpotent centralizer = rank for " + label, reg == g.rank(), eq_detail(reg, g.rank()));
      if (label == "A1") return;
      const MonodromyBudget b = rigidity_budget(g);
      rec("class v centralizer = #Phi/2 for " + label, b.dinf == half, eq_detail(b.dinf, half));
      rec("class v is neither regular nor zero for " + label, b.dinf > g.rank() && b.dinf < alg.dim());
      rec("budget d0 + dinf = #Phi, d1 = rank for " + label, b.balanced(),
          "d0=" + std::to_string(b.d0) + " d1=" + std::to_string(b.d1) + " dinf=" + std::to_string(b.dinf) +
              " h1=" + std::to_string(b.h1));
      if (b.v.natural) {
        const std::vector<int> want{3, 2, 2, 1};
        rec("natural-representation Jordan type for " + label, b.v.natural->jordan_type == want);
      }
    });
  }
}

// -- 6: quasi-minuscule ---------------------------------------------------

void criterion_quasiminuscule(Recorder& rec) {
  const std::map<std::string, std::pair<long long, int>> table{{"E7", {133, 34}}, {"E8", {248, 58}}, {"G2", {7, 6}}};
  for (const auto& [label, want] : table)
    rec.guarded("quasi-minuscule data for " + label, [&] {
      const QuasiMinuscule qm = quasiminuscule_dims(RootSystem::build(label));
      rec("dim V^qm for " + label, qm.dim_vqm == want.first && qm.dim_vqm_crosscheck == want.first,
          "Weyl formula " + std::to_string(qm.dim_vqm) + ", weight count " + std::to_string(qm.dim_vqm_crosscheck) +
              ", expected " + std::to_string(want.first));
      rec("dim Y for " + label, qm.dim_y == want.second && qm.two_h_vee_minus_2 == want.second,
          "<2rho, theta^vee> = " + std::to_string(qm.dim_y) + ", 2h^vee - 2 = " + std::to_string(qm.two_h_vee_minus_2));
    });
}

// -- 7: A1 lab -------------------------------------------------------------

void criterion_a1(Recorder& rec) {
  const std::vector<std::uint64_t> qs{5, 13, 17, 29};
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // name -> (failures, total)
  std::vector<std::string> order;
  std::size_t conj_bad = 0, ramified_bad = 0, rows = 0;
  std::map<std::string, std::vector<std::string>> first_failures;
  rec.guarded("A1 lab scan", [&] {
    for (std::uint64_t q : qs) {
      const A1Lab lab(q);
      for (FiniteField::Elem lambda = 2; lambda < lab.field().q(); ++lambda) {
        const TraceRecord r = lab.record(lambda);
        ++rows;
        for (const auto& [name, ok] : r.checks()) {
          if (!tally.count(name)) order.push_back(name);
          auto& t = tally[name];
          ++t.second;
          if (!ok) {
            ++t.first;
            if (first_failures[name].size() < 3)
              first_failures[name].push_back("q=" + std::to_string(q) + " lambda=" + std::to_string(lambda) +
                                             " s=" + std::to_string(r.s.re));
          }
        }
        const TraceRecord c = lab.record(lambda, 3);
        if (!(c.t1 == r.t3 && c.t3 == r.t1 && c.s == r.s)) ++conj_bad;
        std::int64_t ram = 0;
        for (const auto& pt : lab.ramified_points(lambda)) ram += pt.points;
        if (ram != 4) ++ramified_bad;
      }
    }
    const std::size_t want_rows = 3 + 11 + 15 + 27;
    rec("one row per good lambda", rows == want_rows, eq_detail(rows, want_rows));
    for (const auto& name : order) {
      const auto [bad, total] = tally[name];
      std::string detail = std::to_string(bad) + " violations in " + std::to_string(total) + " fibres";
      for (const auto& f : first_failures[name]) detail += "; " + f;
      rec(name, bad == 0, detail);
    }
    rec("conjugate character swaps t1, t3 and keeps s", conj_bad == 0, std::to_string(conj_bad) + " violations");
    rec("four ramified points, one rational point each", ramified_bad == 0);
  });
}

// -- 8: rigidity -----------------------------------------------------------

void criterion_rigidity(Recorder& rec) {
  rec.guarded("PSL2(F_7) (2,3,7)", [&] {
    const FiniteGroup g = FiniteGroup::psl2(7);
    rec("|PSL2(F_7)| = 168", g.order() == 168, eq_detail(g.order(), std::size_t{168}));
    for (const std::string c7 : {"7a", "7b"}) {
      const TripleReport r = triple_count(g, g.class_by_label("2a"), g.class_by_label("3a"), g.class_by_label(c7));
      rec("(2a, 3a, " + c7 + ") strictly rigid in PSL2(F_7)", r.strictly_rigid,
          "normalized count " + r.normalized() + (r.all_generate ? ", all solutions generate" : ", not all solutions generate"));
    }
  });
  auto invariance = [&](const FiniteGroup& g, int c0, int c1, int cinf, const std::string& what) {
    const TripleReport a = triple_count(g, c0, c1, cinf);
    const auto members = g.class_members(c0);
    const TripleReport b = triple_count(g, c0, c1, cinf, members.back());
    const TripleReport c = triple_count(g, c0, c1, cinf, members[members.size() / 2]);
    rec("solution count independent of the base point, " + what,
        a.solution_count == b.solution_count && a.solution_count == c.solution_count,
        std::to_string(a.solution_count) + " / " + std::to_string(b.solution_count) + " / " + std::to_string(c.solution_count));
  };
  rec.guarded("base-point invariance", [&] {
    const FiniteGroup g = FiniteGroup::psl2(7);
    invariance(g, g.class_by_label("2a"), g.class_by_label("3a"), g.class_by_label("7a"), "PSL2(F_7) (2a,3a,7a)");
    invariance(g, g.class_by_label("3a"), g.class_by_label("3a"), g.class_by_label("4a"), "PSL2(F_7) (3a,3a,4a)");
    for (std::uint32_t ell : {5u, 13u}) {
      const FiniteGroup p = FiniteGroup::pgl2(ell);
      const int inv = p.class_of(p.index_of({1, 0, 0, static_cast<std::uint16_t>(ell - 1)}));
      const int uni = p.class_of(p.index_of({1, 1, 0, 1}));
      invariance(p, inv, uni, uni, p.name + " (involution, unipotent, unipotent)");
    }
  });
  rec.guarded("class equations", [&] {
    std::vector<FiniteGroup> groups;
    groups.push_back(FiniteGroup::symmetric(4));
    groups.push_back(FiniteGroup::sl2(5));
    groups.push_back(FiniteGroup::psl2(7));
    for (std::uint32_t ell : harness_triple_instances()) groups.push_back(FiniteGroup::pgl2(ell));
    for (const auto& g : groups) {
      const auto bad = g.class_equation_violations();
      rec("class equation for " + g.name, bad == 0, std::to_string(g.classes().size()) + " classes, order " + std::to_string(g.order()));
    }
    rec("|S4| = 24 with 5 classes", groups[0].order() == 24 && groups[0].classes().size() == 5);
    rec("|SL2(F_5)| = 120", groups[1].order() == 120);
  });
  rec.guarded("PGL2 harness triples", [&] {
    for (std::uint32_t ell : harness_triple_instances()) {
      const TripleReport r = harness_triple(ell);
      const std::size_t want = static_cast<std::size_t>(ell) * (ell * ell - 1);
      rec("PGL2(F_" + std::to_string(ell) + ") harness triple runs", r.group_order == want,
          "normalized count " + r.normalized() + (r.strictly_rigid ? ", strictly rigid" : ", not strictly rigid"));
    }
  });
}

struct CriterionInfo {
  const char* module;
  const char* claim;
};

CriterionInfo info(int id) {
  switch (id) {
    case 1: return {"affine-k", "types of the symmetric subgroup K"};
    case 2: return {"affine-k", "Lambda^vee / Z Phi^vee_K and the removed-node mark"};
    case 3: return {"twogroup", "square and commutator laws of A~, A_0 = ZG[2]"};
    case 4: return {"twogroup", "structure of A~_0 and its odd irreducibles"};
    case 5: return {"chevalley", "centralizer dimensions and rigidity budget"};
    case 6: return {"chevalley", "quasi-minuscule dimensions"};
    case 7: return {"a1lab", "character sums on the A1 curve family"};
    case 8: return {"rigidity", "brute-force rigid triples"};
    case 9: return {"cli", "verify-all is deterministic"};
    default: throw ConfigurationError("no acceptance criterion " + std::to_string(id));
  }
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  const CriterionInfo ci = info(id);
  CriterionResult r;
  r.id = id;
  r.module = ci.module;
  r.claim = ci.claim;
  Recorder rec{r};
  const auto t0 = std::chrono::steady_clock::now();
  switch (id) {
    case 1: criterion_k_types(rec); break;
    case 2: criterion_knotsc(rec); break;
    case 3: criterion_atilde(rec); break;
    case 4: criterion_center_irreps(rec); break;
    case 5: criterion_chevalley(rec, opts); break;
    case 6: criterion_quasiminuscule(rec); break;
    case 7: criterion_a1(rec); break;
    case 8: criterion_rigidity(rec); break;
    case 9: {
      auto dump = [&] {
        nlohmann::json arr = nlohmann::json::array();
        for (int k = 1; k <= kInProcessCriteria; ++k) arr.push_back(run_criterion(k, opts).to_json(false));
        return arr.dump();
      };
      const std::string a = dump(), b = dump();
      rec("two in-process runs serialize identically", a == b, std::to_string(a.size()) + " bytes");
      break;
    }
    default: break;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_all(const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kInProcessCriteria; ++id) out.push_back(run_criterion(id, opts));
  // 9: serialize once more and compare with what was just produced
  CriterionResult det;
  det.id = 9;
  det.module = info(9).module;
  det.claim = info(9).claim;
  const auto t0 = std::chrono::steady_clock::now();
  nlohmann::json first = nlohmann::json::array(), second = nlohmann::json::array();
  for (const auto& c : out) first.push_back(c.to_json(false));
  for (int id = 1; id <= kInProcessCriteria; ++id) second.push_back(run_criterion(id, opts).to_json(false));
  const std::string a = first.dump(), b = second.dump();
  det.checks.push_back({"two in-process runs serialize identically", a == b, false, std::to_string(a.size()) + " bytes"});
  det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.push_back(det);
  return out;
}

}  // namespace excmono
