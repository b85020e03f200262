#include "excmono/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "excmono/a1lab.hpp"
#include "excmono/affine_k.hpp"
#include "excmono/chevalley.hpp"
#include "excmono/errors.hpp"
#include "excmono/rigidity.hpp"
#include "excmono/rootsys.hpp"
#include "excmono/twogroup.hpp"
#include "excmono/verify.hpp"

namespace excmono {
namespace {

using nlohmann::json;

struct Manifest {
  std::string command;
  json parameters = json::object();
  json result;
  std::vector<CheckResult> checks;

  void check(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, false, std::move(detail)});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed && !c.skipped) return false;
    return true;
  }
  json to_json(std::optional<double> elapsed) const {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["version"] = kVersion;
    j["result"] = result;
    json arr = json::array();
    for (const auto& c : checks) {
      json cj{{"name", c.name}, {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      arr.push_back(cj);
    }
    j["checks"] = arr;
    j["passed"] = passed();
    if (elapsed) j["elapsed_seconds"] = *elapsed;
    return j;
  }
};

std::string count_detail(std::size_t bad, const std::string& what) { return std::to_string(bad) + " " + what; }

// Root counts by family, independent of the enumeration.
std::size_t tabulated_root_count(const CartanType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

void cmd_roots(Manifest& m, const std::string& type) {
  const RootSystem rs = RootSystem::build(type);
  m.result = rs.to_json();
  const std::size_t want = tabulated_root_count(rs.type());
  m.check("root count matches the family formula", rs.num_roots() == want,
          std::to_string(rs.num_roots()) + " vs " + std::to_string(want));
  const auto& hr = rs.highest_root();
  int max_height = 0;
  for (const auto& r : rs.roots()) max_height = std::max(max_height, r.height);
  m.check("highest root has height h - 1", hr.coxeter_number - 1 == max_height);
  m.check("#Phi = rank * h", rs.num_roots() == static_cast<std::size_t>(rs.rank() * hr.coxeter_number));
}

void cmd_k_type(Manifest& m, const std::string& type) {
  const RootSystem rs = RootSystem::build(type);
  const KTypeRow row = k_type_row(rs);
  m.result = row.to_json();
  const SubRootSystem k = phi_k(rs);
  m.check("alcove walk and parity roots give the same K", k.label() == row.k, k.label() + " vs " + row.k);
  const auto q = k_fundamental_quotient(rs);
  std::size_t coroots = 0;
  for (int idx : k.member_roots) coroots += rs.roots()[static_cast<std::size_t>(idx)].positive() ? 1 : 0;
  m.check("#Phi_K^+ = (#Phi_K) / 2", 2 * coroots == k.size());
  if (row.c_alpha_prime) m.check("c(alpha') = 2", *row.c_alpha_prime == 2);
  m.check("quotient is cyclic", q.invariant_factors.size() + static_cast<std::size_t>(q.free_rank) <= 1, q.label());
}

void cmd_atilde(Manifest& m, const std::string& type, bool irreps) {
  const RootSystem rs = RootSystem::build(type);
  const TildeGroup tg = TildeGroup::build(rs);
  m.result = tg.summary_json(irreps);
  m.check("square law q(a) = (-1)^{(a,a)/2}", tg.square_law_violations() == 0);
  m.check("commutator law (-1)^{(a,b)}", tg.commutator_law_violations() == 0);
  m.check("polarization q(a+b) q(a) q(b) = (-1)^{(a,b)}", tg.polarization_violations() == 0);
  const std::size_t zg = center_two_torsion_size(rs);
  m.check("|A_0| = |ZG[2]|", tg.radical_size() == zg,
          std::to_string(tg.radical_size()) + " vs " + std::to_string(zg));
  const auto reps = tg.odd_irreps();
  std::size_t sum_sq = 0, hom = 0, odd = 0, supp = 0;
  for (const auto& v : reps) {
    sum_sq += static_cast<std::size_t>(v.dimension) * static_cast<std::size_t>(v.dimension);
    if (irreps) {
      hom += homomorphism_violations(tg, v);
      odd += oddness_violations(tg, v);
      supp += support_violations(tg, v);
    }
  }
  m.check("sum of dim^2 = 2^r", sum_sq == tg.a_size());
  if (irreps) {
    m.check("irreps are homomorphisms", hom == 0, count_detail(hom, "failing products"));
    m.check("(-1, 0) acts by -1", odd == 0);
    m.check("characters vanish off A~_0", supp == 0);
    const auto orth = orthogonality_violations(tg, reps);
    m.check("character orthogonality", orth == 0, count_detail(orth, "failing pairs"));
  }
}

void cmd_monodromy(Manifest& m, const std::string& type, bool census, std::uint64_t seed) {
  const RootSystem g = RootSystem::build(type);
  if (!g.type().is_oddly_laced_target())
    throw UnsupportedTypeError("monodromy data needs A1, D_2n, E7, E8 or G2, got " + g.type().label());
  const ChevalleyAlgebra alg = ChevalleyAlgebra::build(g.dual());
  const int half = static_cast<int>(g.num_roots() / 2);
  json r;
  r["type"] = g.type().label();
  r["dual_type"] = g.dual().type().label();
  r["dim"] = alg.dim();
  m.check("dim = rank + #Phi", alg.dim() == g.rank() + static_cast<int>(g.num_roots()));
  m.check("|N_{a,b}| = p + 1", alg.structure_constant_violations() == 0);
  if (alg.dim() <= 70) {
    m.check("Jacobi identity, all triples", alg.jacobi_violations() == 0);
  } else {
    m.check("Jacobi identity, 10^4 sampled triples", alg.jacobi_violations_sampled(10000, seed) == 0);
  }
  std::string why;
  m.check("hard Lefschetz for the principal grading", alg.hard_lefschetz(&why), why);

  const KappaFixed kf = kappa_fixed_dim(alg, kappa_character(g));
  r["kappa_fixed_dim"] = kf.dim;
  r["kappa_plus_roots"] = kf.plus_roots;
  m.check("dim g^kappa = #Phi/2", kf.dim == half, std::to_string(kf.dim) + " vs " + std::to_string(half));
  const int reg = regular_nilpotent_centralizer(alg);
  r["regular_nilpotent_centralizer"] = reg;
  m.check("regular nilpotent centralizer = rank", reg == g.rank());

  if (g.type().family == Family::A) {
    r["budget"] = nullptr;
    r["note"] = "no v class in rank one";
  } else {
    const MonodromyBudget b = rigidity_budget(g);
    r["budget"] = b.to_json();
    m.check("v-class centralizer = #Phi/2", b.dinf == half, std::to_string(b.dinf) + " vs " + std::to_string(half));
    m.check("d0 + dinf = #Phi and d1 = rank", b.balanced(), "h1 = " + std::to_string(b.h1));
  }
  const auto f = g.type().family;
  if (f == Family::E || f == Family::G) {
    const QuasiMinuscule qm = quasiminuscule_dims(g);
    r["quasi_minuscule"] = qm.to_json();
    m.check("dim V^qm: Weyl formula = weight count", qm.dim_vqm == qm.dim_vqm_crosscheck);
    m.check("dim Y = 2 h^vee - 2", qm.dim_y == qm.two_h_vee_minus_2);
  }
  if (census) {
    if (f != Family::E) throw UnsupportedTypeError("--census needs E7 or E8");
    r["quadruple_census"] = orthogonal_quadruple_census(alg).to_json();
  }
  m.result = r;
}

void add_record_checks(Manifest& m, const TraceRecord& rec, const std::string& prefix) {
  for (const auto& [name, ok] : rec.checks()) m.check(prefix + name, ok);
}

std::vector<std::uint64_t> parse_primes(const std::string& list) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ConfigurationError("not a prime power: " + tok);
    }
  }
  if (out.empty()) throw ConfigurationError("--primes needs at least one q");
  return out;
}

std::vector<std::string> split_classes(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  if (out.size() != 3) throw ConfigurationError("--classes takes three labels C0,C1,Cinf");
  return out;
}

json classes_json(const FiniteGroup& g) {
  json arr = json::array();
  for (const auto& c : g.classes())
    arr.push_back({{"label", c.label}, {"order", c.element_order}, {"size", c.size}, {"invariant", c.invariant}});
  return arr;
}

void cmd_rigid(Manifest& m, const std::string& group, std::uint32_t ell, const std::string& classes, std::size_t cap) {
  std::optional<FiniteGroup> g;
  if (group == "pgl2") {
    g = FiniteGroup::pgl2(ell);
  } else if (group == "psl2") {
    g = FiniteGroup::psl2(ell);
  } else if (group.rfind("file:", 0) == 0) {
    const std::string path = group.substr(5);
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot read " + path);
    json desc;
    try {
      in >> desc;
    } catch (const json::exception& e) {
      throw ConfigurationError(path + ": " + e.what());
    }
    g = FiniteGroup::from_json(desc, cap);
  } else {
    throw ConfigurationError("--group must be pgl2, psl2 or file:<path>");
  }
  TripleReport rep;
  if (classes.empty()) {
    if (group != "pgl2") throw ConfigurationError("--classes is required unless --group pgl2");
    rep = harness_triple(ell);
  } else {
    const auto c = split_classes(classes);
    rep = triple_count(*g, g->class_by_label(c[0]), g->class_by_label(c[1]), g->class_by_label(c[2]));
  }
  json r = rep.to_json();
  r["classes"] = classes_json(*g);
  m.result = r;
  m.check("class equation", g->class_equation_violations() == 0);
  m.check("solution count = |C0| x solutions with base", rep.solution_count == rep.c0_size * rep.solutions_with_base);
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigurationError("cannot write " + path);
  f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional monodromy toolkit", "excmono"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json", out_path;
  std::uint64_t seed = 1;
  bool timing = false;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output to this file");
  app.add_option("--seed", seed, "seed for sampled Jacobi / invariance checks");
  app.add_flag("--timing", timing, "add elapsed time to the manifest");

  std::string type;
  auto* roots = app.add_subcommand("roots", "root system data");
  roots->add_option("type", type, "Cartan type, e.g. E8")->required();
  auto* ktype = app.add_subcommand("k-type", "type of K, Lambda^vee / Z Phi^vee_K, c(alpha')");
  ktype->add_option("type", type)->required();
  bool with_irreps = false;
  auto* atilde = app.add_subcommand("atilde", "the two-group A~ and its odd irreducibles");
  atilde->add_option("type", type)->required();
  atilde->add_flag("--irreps", with_irreps, "include irreducible characters");
  bool census = false;
  auto* mono = app.add_subcommand("monodromy", "Chevalley algebra checks and the rigidity budget");
  mono->add_option("type", type)->required();
  mono->add_flag("--census", census, "tabulate orthogonal root quadruples (E7, E8)");

  auto* a1 = app.add_subcommand("a1", "character sums for the A1 family");
  a1->require_subcommand(1);
  a1->fallthrough();
  std::uint64_t q = 0, lambda = 0;
  bool conjugate = false;
  auto* trace = a1->add_subcommand("trace", "one fibre");
  trace->fallthrough();
  trace->add_option("--q", q)->required();
  trace->add_option("--lambda", lambda)->required();
  trace->add_flag("--conjugate", conjugate, "use chi^3 as the primary character");
  std::string primes;
  auto* scan = a1->add_subcommand("scan", "every good lambda for each q");
  scan->fallthrough();
  scan->add_option("--primes", primes, "comma-separated q = 1 mod 4")->required();

  std::string group;
  std::uint32_t ell = 0;
  std::string classes;
  std::size_t cap = FiniteGroup::kDefaultCap;
  auto* rigid = app.add_subcommand("rigid", "brute-force triple count");
  rigid->add_option("--group", group, "pgl2, psl2 or file:<path>")->required();
  rigid->add_option("--ell", ell, "field size for pgl2 / psl2");
  rigid->add_option("--classes", classes, "C0,C1,Cinf class labels");
  rigid->add_option("--cap", cap, "element cap for file groups");

  bool fast = false;
  int criterion = 0;
  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  verify->add_flag("--fast", fast, "skip the E8 Chevalley build");
  verify->add_option("--criterion", criterion, "run one criterion")->check(CLI::Range(1, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "excmono: " << e.what() << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Manifest m;
  try {
    if (format == "csv" && !scan->parsed() && !trace->parsed())
      throw ConfigurationError("--format csv is only available for a1 trace / a1 scan");
    if ((rigid->parsed() && group != "pgl2" && group != "psl2" && group.rfind("file:", 0) != 0))
      throw ConfigurationError("--group must be pgl2, psl2 or file:<path>");
    if (rigid->parsed() && (group == "pgl2" || group == "psl2") && ell == 0)
      throw ConfigurationError("--ell is required for pgl2 / psl2");

    std::optional<std::string> csv;
    if (roots->parsed()) {
      m.command = "roots";
      m.parameters = {{"type", type}};
      cmd_roots(m, type);
    } else if (ktype->parsed()) {
      m.command = "k-type";
      m.parameters = {{"type", type}};
      cmd_k_type(m, type);
    } else if (atilde->parsed()) {
      m.command = "atilde";
      m.parameters = {{"type", type}, {"irreps", with_irreps}};
      cmd_atilde(m, type, with_irreps);
    } else if (mono->parsed()) {
      m.command = "monodromy";
      m.parameters = {{"type", type}, {"census", census}, {"seed", seed}};
      cmd_monodromy(m, type, census, seed);
    } else if (trace->parsed()) {
      m.command = "a1 trace";
      m.parameters = {{"q", q}, {"lambda", lambda}, {"conjugate", conjugate}};
      const A1Lab lab(q);
      if (lambda >= lab.field().q()) throw ConfigurationError("--lambda must encode an element of F_q");
      const TraceRecord rec = lab.record(static_cast<FiniteField::Elem>(lambda), conjugate ? 3 : 1);
      m.result = rec.to_json();
      add_record_checks(m, rec, "");
      if (format == "csv") csv = a1_csv({rec});
    } else if (scan->parsed()) {
      m.command = "a1 scan";
      const auto qs = parse_primes(primes);
      m.parameters = {{"primes", qs}};
      const auto rows = a1_scan(qs);
      std::map<std::string, std::size_t> failures;
      std::vector<std::string> names;
      for (const auto& rec : rows)
        for (const auto& [name, ok] : rec.checks()) {
          if (!failures.count(name)) names.push_back(name);
          failures[name] += ok ? 0 : 1;
        }
      json per = json::object();
      for (const auto& n : names) {
        per[n] = failures[n];
        m.check(n, failures[n] == 0, count_detail(failures[n], "of " + std::to_string(rows.size()) + " fibres fail"));
      }
      m.result = {{"rows", rows.size()}, {"violations", per}};
      if (!out_path.empty()) m.result["csv"] = out_path;
      csv = a1_csv(rows);
    } else if (rigid->parsed()) {
      m.command = "rigid";
      m.parameters = {{"group", group}, {"ell", ell}, {"classes", classes}};
      cmd_rigid(m, group, ell, classes, cap);
    } else if (verify->parsed()) {
      m.command = "verify-all";
      m.parameters = {{"fast", fast}, {"seed", seed}};
      VerifyOptions opts{fast, seed};
      std::vector<CriterionResult> results;
      if (criterion) {
        m.parameters["criterion"] = criterion;
        results.push_back(run_criterion(criterion, opts));
      } else {
        results = run_all(opts);
      }
      json arr = json::array();
      for (const auto& c : results) {
        arr.push_back(c.to_json(timing));
        m.check("criterion " + std::to_string(c.id) + " [" + c.module + "] " + c.claim, c.passed());
        for (const auto& f : c.failures()) err << "FAIL " << f << "\n";
      }
      m.result = arr;
    }

    std::optional<double> elapsed;
    if (timing) elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string manifest = m.to_json(elapsed).dump(2) + "\n";
    if (scan->parsed()) {
      // the CSV table goes to --out (or stdout with --format csv)
      if (format == "csv" && out_path.empty()) {
        out << *csv;
      } else {
        if (!out_path.empty()) write_text(*csv, out_path, out);
        out << manifest;
      }
    } else if (csv) {
      write_text(*csv, out_path, out);
    } else {
      write_text(manifest, out_path, out);
    }
    return m.passed() ? 0 : 1;
  } catch (const PredictionFailure& e) {
    err << "excmono: prediction failed: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    err << "excmono: internal consistency check failed: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateFiberError& e) {
    err << "excmono: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "excmono: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace excmono
