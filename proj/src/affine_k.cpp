#include "excmono/affine_k.hpp"

#include <algorithm>
#include <numeric>

#include "excmono/errors.hpp"

namespace excmono {

namespace {

int letter_rank(const std::string& label) { return std::stoi(label.substr(1)); }

std::string classify_component(const std::vector<std::vector<std::int64_t>>& cartan,
                               const std::vector<std::int64_t>& norms, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return "A1";
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  int edges = 0;
  int max_mult = 0;
  int double_a = -1, double_b = -1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::int64_t mult = cartan[nodes[a]][nodes[b]] * cartan[nodes[b]][nodes[a]];
      if (mult == 0) continue;
      if (mult > 3) throw ConsistencyError("edge multiplicity > 3 in simple system");
      ++edges;
      ++degree[static_cast<std::size_t>(a)];
      ++degree[static_cast<std::size_t>(b)];
      max_mult = std::max<int>(max_mult, static_cast<int>(mult));
      if (mult == 2) {
        double_a = a;
        double_b = b;
      }
    }
  if (edges != n - 1) throw ConsistencyError("simple system diagram is not a tree");
  const std::string rank = std::to_string(n);
  if (max_mult == 3) {
    if (n != 2) throw ConsistencyError("triple edge outside G2");
    return "G2";
  }
  if (max_mult == 2) {
    if (n == 2) return "B2";
    if (n == 4 && degree[static_cast<std::size_t>(double_a)] == 2 && degree[static_cast<std::size_t>(double_b)] == 2)
      return "F4";
    std::int64_t longest = 0;
    for (int a = 0; a < n; ++a) longest = std::max(longest, norms[static_cast<std::size_t>(nodes[a])]);
    int short_count = 0;
    for (int a = 0; a < n; ++a)
      if (norms[static_cast<std::size_t>(nodes[a])] < longest) ++short_count;
    if (short_count == 1) return "B" + rank;
    if (short_count == n - 1) return "C" + rank;
    throw ConsistencyError("unrecognized doubly-laced diagram");
  }
  const int max_deg = *std::max_element(degree.begin(), degree.end());
  if (max_deg <= 2) return "A" + rank;
  if (max_deg > 3) throw ConsistencyError("node of degree > 3 in simply-laced diagram");
  // one branch node; measure its three arms
  int branch = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    if (start == branch || cartan[nodes[branch]][nodes[start]] == 0) continue;
    int len = 0, prev = branch, cur = start;
    for (;;) {
      ++len;
      int next = -1;
      for (int c = 0; c < n; ++c)
        if (c != prev && c != cur && cartan[nodes[cur]][nodes[c]] != 0) next = c;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw ConsistencyError("branch node without three arms");
  if (arms[0] == 1 && arms[1] == 1) return "D" + rank;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + rank;
  throw ConsistencyError("unrecognized simply-laced diagram");
}

}  // namespace

std::vector<std::string> classify_simple_system(const RootSystem& parent, const std::vector<RootVec>& simple) {
  const std::size_t n = simple.size();
  std::vector<std::vector<std::int64_t>> cartan(n, std::vector<std::int64_t>(n));
  std::vector<std::int64_t> norms(n);
  std::vector<RootVec> coroots(n);
  for (std::size_t b = 0; b < n; ++b) {
    coroots[b] = parent.coroot_of(simple[b]);
    norms[b] = parent.root_norm(simple[b]);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cartan[a][b] = parent.pairing(simple[a], coroots[b]);
  for (std::size_t a = 0; a < n; ++a) {
    if (cartan[a][a] != 2) throw ConsistencyError("simple system has a non-root");
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && cartan[a][b] > 0) throw ConsistencyError("simple system is not obtuse");
  }

  std::vector<int> comp(n, -1);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{static_cast<int>(s)};
    comp[s] = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && cartan[static_cast<std::size_t>(nodes[k])][j] != 0) {
          comp[j] = 1;
          nodes.push_back(static_cast<int>(j));
        }
    labels.push_back(classify_component(cartan, norms, nodes));
  }
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    const int ra = letter_rank(a), rb = letter_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  return labels;
}

std::string join_k_label(std::vector<std::string> components, int torus_rank) {
  std::string out;
  for (const auto& c : components) out += (out.empty() ? "" : "x") + c;
  if (torus_rank > 0) {
    out += (out.empty() ? "" : "x") + std::string("Gm");
    if (torus_rank > 1) out += "^" + std::to_string(torus_rank);
  }
  return out.empty() ? "1" : out;
}

std::string SubRootSystem::label() const { return join_k_label(component_types, torus_rank); }

namespace {

void require_minus_one(const RootSystem& rs) {
  if (!rs.minus_one_in_weyl())
    throw UnsupportedTypeError("-1 is not in the Weyl group of " + rs.label());
}

}  // namespace

SubRootSystem phi_k(const RootSystem& rs) {
  require_minus_one(rs);
  SubRootSystem k;
  k.parent = rs.type();
  const Coweight two_rho = rs.two_rho_vee();
  const auto& roots = rs.roots();
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const std::int64_t doubled = rs.doubled_pairing(two_rho, roots[idx].coords);  // <2 rho^vee, alpha>
    if (doubled % 2 != 0) throw ConsistencyError("<rho^vee, alpha> is not an integer");
    if (doubled / 2 != roots[idx].height) throw ConsistencyError("<rho^vee, alpha> differs from the height");
    if ((doubled / 2) % 2 == 0) k.member_roots.push_back(static_cast<int>(idx));
  }
  // simple system: positive members that are not a sum of two positive members
  std::vector<int> positive;
  for (int idx : k.member_roots)
    if (roots[static_cast<std::size_t>(idx)].positive()) positive.push_back(idx);
  for (int idx : positive) {
    bool decomposable = false;
    const RootVec& target = roots[static_cast<std::size_t>(idx)].coords;
    for (int a : positive) {
      if (decomposable) break;
      RootVec rest = target;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= roots[static_cast<std::size_t>(a)].coords[j];
      if (auto b = rs.index_of(rest); b && std::find(positive.begin(), positive.end(), *b) != positive.end())
        decomposable = true;
    }
    if (!decomposable) k.simple_roots.push_back(target);
  }
  k.component_types = classify_simple_system(rs, k.simple_roots);
  k.torus_rank = rs.rank() - k.semisimple_rank();
  return k;
}

AlcovePoint half_rho_alcove_point(const RootSystem& rs) {
  const HighestRoot th = rs.highest_root();
  const int r = rs.rank();
  const IntMatrix& a = rs.cartan_matrix();
  std::vector<std::int64_t> theta_vee_pair(static_cast<std::size_t>(r));  // <theta^vee, alpha_j>
  for (int j = 0; j < r; ++j) {
    RootVec e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(j)] = 1;
    theta_vee_pair[static_cast<std::size_t>(j)] = rs.pairing(e, th.coroot);
  }

  AlcovePoint pt;
  std::vector<std::int64_t> y(static_cast<std::size_t>(r), 1);  // 2 <rho^vee / 2, alpha_i>
  auto theta_value = [&] {
    std::int64_t s = 0;
    for (int i = 0; i < r; ++i) s += th.root[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    return s;
  };
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw ConsistencyError("alcove walk did not terminate");
    int neg = -1;
    for (int i = 0; i < r; ++i)
      if (y[static_cast<std::size_t>(i)] < 0) {
        neg = i;
        break;
      }
    if (neg >= 0) {
      const std::int64_t yi = y[static_cast<std::size_t>(neg)];
      for (int j = 0; j < r; ++j) y[static_cast<std::size_t>(j)] -= yi * a(j, neg);
      ++pt.reflections;
      continue;
    }
    const std::int64_t yt = theta_value();
    if (yt > 2) {
      for (int j = 0; j < r; ++j) y[static_cast<std::size_t>(j)] -= (yt - 2) * theta_vee_pair[static_cast<std::size_t>(j)];
      ++pt.reflections;
      continue;
    }
    break;
  }

  pt.doubled_theta = static_cast<int>(theta_value());
  for (int i = 0; i < r; ++i) pt.doubled_coords.push_back(static_cast<int>(y[static_cast<std::size_t>(i)]));
  if (pt.doubled_theta != 2) pt.removed_nodes.push_back(0);
  for (int i = 0; i < r; ++i) {
    if (y[static_cast<std::size_t>(i)] != 0) {
      pt.removed_nodes.push_back(i + 1);
    } else {
      RootVec e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(i)] = 1;
      pt.simple_system.push_back(e);
    }
  }
  if (pt.doubled_theta == 2) {
    RootVec neg_theta = th.root;
    for (int& c : neg_theta) c = -c;
    pt.simple_system.push_back(neg_theta);
  }
  return pt;
}

LatticeQuotient k_fundamental_quotient(const RootSystem& rs) {
  require_minus_one(rs);
  const AlcovePoint pt = half_rho_alcove_point(rs);
  std::vector<std::vector<std::int64_t>> cols;
  for (const RootVec& s : pt.simple_system) {
    const RootVec c = rs.coroot_of(s);
    cols.emplace_back(c.begin(), c.end());
  }
  const LatticeQuotient from_simple = lattice_quotient(IntMatrix::from_columns(cols, static_cast<std::size_t>(rs.rank())));

  // Same lattice generated by every coroot of Phi_K in the original frame.
  const SubRootSystem k = phi_k(rs);
  std::vector<std::vector<std::int64_t>> all_cols;
  for (int idx : k.member_roots) {
    const RootVec& c = rs.roots()[static_cast<std::size_t>(idx)].coroot;
    all_cols.emplace_back(c.begin(), c.end());
  }
  const LatticeQuotient from_all = lattice_quotient(IntMatrix::from_columns(all_cols, static_cast<std::size_t>(rs.rank())));
  if (!(from_all == from_simple)) throw ConsistencyError("Lambda^vee / Z Phi^vee_K differs between the two frames");
  return from_simple;
}

int removed_node_coefficient(const RootSystem& rs) {
  const Family f = rs.type().family;
  if ((f == Family::A && rs.rank() == 1) || f == Family::C)
    throw NotApplicableError("two nodes of the affine diagram are removed for " + rs.label());
  require_minus_one(rs);
  const AlcovePoint pt = half_rho_alcove_point(rs);
  if (pt.removed_nodes.size() != 1 || pt.removed_nodes[0] == 0)
    throw NotApplicableError("no single removed finite node for " + rs.label());
  return rs.highest_root().coroot[static_cast<std::size_t>(pt.removed_nodes[0] - 1)];
}

int KappaCharacter::operator()(const RootVec& v) const {
  int parity = 0;
  for (std::size_t j = 0; j < functional_.size(); ++j) parity ^= (functional_[j] & v[j]) & 1;
  return parity ? -1 : 1;
}

bool KappaCharacter::nontrivial() const {
  return std::any_of(functional_.begin(), functional_.end(), [](int x) { return x != 0; });
}

KappaCharacter kappa_character(const RootSystem& rs) {
  if (rs.type().family == Family::C)
    throw UnsupportedTypeError("the double cover is not determined for type C");
  require_minus_one(rs);
  const int r = rs.rank();
  const AlcovePoint pt = half_rho_alcove_point(rs);
  std::vector<std::vector<std::int64_t>> cols;
  for (const RootVec& s : pt.simple_system) {
    const RootVec c = rs.coroot_of(s);
    cols.emplace_back(c.begin(), c.end());
  }
  const LatticeQuotient quotient = lattice_quotient(IntMatrix::from_columns(cols, static_cast<std::size_t>(r)));
  const bool is_a1 = rs.type().family == Family::A && r == 1;
  const bool index_two = quotient.free_rank == 0 && quotient.invariant_factors == std::vector<std::int64_t>{2};
  if (!is_a1 && !index_two)
    throw UnsupportedTypeError("Lambda^vee / Z Phi^vee_K is " + quotient.label() + " for " + rs.label());

  // Row of U picking out the Z/2 (or, for A1, the free) coordinate.
  std::size_t row = 0;
  if (cols.empty()) {
    row = 0;
  } else {
    const SmithForm s = smith_normal_form(IntMatrix::from_columns(cols, static_cast<std::size_t>(r)));
    bool found = false;
    for (std::size_t t = 0; t < static_cast<std::size_t>(r); ++t) {
      const std::int64_t d = t < s.diagonal.size() ? s.diagonal[t] : 0;
      if ((index_two && d == 2) || (is_a1 && d == 0)) {
        row = t;
        found = true;
        break;
      }
    }
    if (!found) throw ConsistencyError("no index-two coordinate in the Smith form");
    std::vector<int> f(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) f[static_cast<std::size_t>(j)] = static_cast<int>(((s.u(row, j) % 2) + 2) % 2);
    KappaCharacter kappa(std::move(f));
    for (const auto& c : cols)
      if (kappa(RootVec(c.begin(), c.end())) != 1) throw ConsistencyError("kappa is nontrivial on Z Phi^vee_K");
    if (!kappa.nontrivial()) throw ConsistencyError("kappa is trivial");
    return kappa;
  }
  // A1: kernel 2 Lambda^vee.
  std::vector<int> f(static_cast<std::size_t>(r), 0);
  f[row] = 1;
  return KappaCharacter(std::move(f));
}

nlohmann::json KTypeRow::to_json() const {
  nlohmann::json j;
  j["g"] = g;
  j["k"] = k;
  j["pi1"] = pi1;
  if (c_alpha_prime) j["c_alpha_prime"] = *c_alpha_prime;
  return j;
}

KTypeRow k_type_row(const RootSystem& rs) {
  const SubRootSystem k = phi_k(rs);
  const AlcovePoint pt = half_rho_alcove_point(rs);
  const auto affine_labels = classify_simple_system(rs, pt.simple_system);
  const int affine_torus = rs.rank() - static_cast<int>(pt.simple_system.size());
  if (join_k_label(affine_labels, affine_torus) != k.label())
    throw ConsistencyError("K type from the affine diagram differs from the parity criterion");
  KTypeRow row;
  row.g = rs.label();
  row.k = k.label();
  row.pi1 = k_fundamental_quotient(rs).label();
  if (pt.removed_nodes.size() == 1 && pt.removed_nodes[0] != 0)
    row.c_alpha_prime = rs.highest_root().coroot[static_cast<std::size_t>(pt.removed_nodes[0] - 1)];
  return row;
}

}  // namespace excmono
