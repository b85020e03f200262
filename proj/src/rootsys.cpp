#include "excmono/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "excmono/errors.hpp"

namespace excmono {

// ---------------------------------------------------------------------------
// CartanType

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2) throw ConfigurationError("unsupported Cartan type '" + std::string(label) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int rank = 0;
  for (char c : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ConfigurationError("unsupported Cartan type '" + std::string(label) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 64) throw ConfigurationError("rank too large in '" + std::string(label) + "'");
  }
  CartanType t;
  t.rank = rank;
  switch (letter) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw ConfigurationError("unsupported Cartan type '" + std::string(label) + "'");
  }
  const bool ok = (t.family == Family::A && rank >= 1) || (t.family == Family::B && rank >= 2) ||
                  (t.family == Family::C && rank >= 2) || (t.family == Family::D && rank >= 2) ||
                  (t.family == Family::E && rank >= 6 && rank <= 8) ||
                  (t.family == Family::F && rank == 4) || (t.family == Family::G && rank == 2);
  if (!ok) throw ConfigurationError("unsupported Cartan type/rank '" + std::string(label) + "'");
  return t;
}

std::string CartanType::label() const {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

bool CartanType::is_oddly_laced_target() const {
  return (family == Family::A && rank == 1) || (family == Family::D && rank % 2 == 0) ||
         (family == Family::E && (rank == 7 || rank == 8)) || family == Family::G;
}

// ---------------------------------------------------------------------------
// Cartan data

namespace {

IntMatrix gram_of(const std::vector<std::vector<int>>& vecs, int eps_norm) {
  const std::size_t n = vecs.size();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < vecs[i].size(); ++k) s += vecs[i][k] * vecs[j][k];
      g(i, j) = s * eps_norm;
    }
  return g;
}

std::vector<int> eps_diff(int n, int i, int j, int sj = -1) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] += 1;
  if (j >= 0) v[static_cast<std::size_t>(j)] += sj;
  return v;
}

IntMatrix e_type_gram(int rank) {
  // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
  IntMatrix g(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) g(i, i) = 2;
  auto edge = [&](int a, int b) {
    if (a <= rank && b <= rank) g(a - 1, b - 1) = g(b - 1, a - 1) = -1;
  };
  edge(1, 3);
  edge(3, 4);
  edge(4, 5);
  edge(5, 6);
  edge(6, 7);
  edge(7, 8);
  edge(2, 4);
  return g;
}

std::vector<std::vector<int>> components(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> members{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (cartan(members[k], j) != 0 && comp[static_cast<std::size_t>(j)] < 0) {
          comp[static_cast<std::size_t>(j)] = static_cast<int>(out.size());
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// Gram of the coroots, normalized per component so short coroots have norm 2.
IntMatrix coroot_gram_from(const IntMatrix& root_gram, const IntMatrix& cartan) {
  const std::size_t n = root_gram.rows();
  IntMatrix f(n, n);
  for (const auto& comp : components(cartan)) {
    std::int64_t max_norm = 0;
    for (int i : comp) max_norm = std::max(max_norm, root_gram(i, i));
    for (int i : comp)
      for (int j : comp) {
        const std::int64_t num = 2 * max_norm * root_gram(i, j);
        const std::int64_t den = root_gram(i, i) * root_gram(j, j);
        if (num % den != 0) throw ConsistencyError("coroot form is not integral");
        f(i, j) = num / den;
      }
  }
  return f;
}

}  // namespace

IntMatrix bourbaki_root_gram(const CartanType& type) {
  const int n = type.rank;
  switch (type.family) {
    case Family::A: {
      IntMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        g(i, i) = 2;
        if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
      }
      return g;
    }
    case Family::B: {
      std::vector<std::vector<int>> s;
      for (int i = 0; i + 1 < n; ++i) s.push_back(eps_diff(n, i, i + 1));
      s.push_back(eps_diff(n, n - 1, -1));
      return gram_of(s, 2);
    }
    case Family::C: {
      std::vector<std::vector<int>> s;
      for (int i = 0; i + 1 < n; ++i) s.push_back(eps_diff(n, i, i + 1));
      auto last = eps_diff(n, n - 1, -1);
      last[static_cast<std::size_t>(n - 1)] = 2;
      s.push_back(last);
      return gram_of(s, 1);
    }
    case Family::D: {
      std::vector<std::vector<int>> s;
      for (int i = 0; i + 1 < n; ++i) s.push_back(eps_diff(n, i, i + 1));
      s.push_back(eps_diff(n, n - 2, n - 1, +1));
      return gram_of(s, 1);
    }
    case Family::E:
      return e_type_gram(n);
    case Family::F:
      return IntMatrix{{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    case Family::G:
      return IntMatrix{{2, -3}, {-3, 6}};
  }
  throw ConfigurationError("unknown family");
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem RootSystem::build(const CartanType& type) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = type.rank;
  rs.root_gram_ = bourbaki_root_gram(type);
  const std::size_t n = rs.root_gram_.rows();
  rs.cartan_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t num = 2 * rs.root_gram_(i, j);
      if (num % rs.root_gram_(j, j) != 0) throw ConsistencyError("non-integral Cartan entry");
      rs.cartan_(i, j) = num / rs.root_gram_(j, j);
    }
  rs.form_gram_ = coroot_gram_from(rs.root_gram_, rs.cartan_);
  rs.finish_construction();
  return rs;
}

RootSystem RootSystem::dual() const {
  RootSystem d;
  d.type_ = type_;
  if (type_.family == Family::B) d.type_.family = Family::C;
  else if (type_.family == Family::C) d.type_.family = Family::B;
  d.rank_ = rank_;
  d.cartan_ = cartan_.transpose();
  d.root_gram_ = form_gram_;
  d.form_gram_ = root_gram_;
  d.finish_construction();
  return d;
}

void RootSystem::finish_construction() {
  const auto n = static_cast<std::size_t>(rank_);
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_(i, i) != 2) throw ConsistencyError("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && cartan_(i, j) > 0) throw ConsistencyError("positive off-diagonal Cartan entry");
  }
  if (!form_gram_.is_symmetric() || !root_gram_.is_symmetric())
    throw ConsistencyError("invariant form is not symmetric");

  // Reflection closure of the simple roots.
  std::set<RootVec> seen;
  std::deque<RootVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      RootVec r = reflect_root(i, b);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }

  std::vector<RootVec> positive;
  for (const auto& r : seen) {
    const bool pos = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    const bool neg = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
    if (!pos && !neg) throw ConsistencyError("root with mixed-sign coordinates");
    if (pos) positive.push_back(r);
  }
  std::sort(positive.begin(), positive.end(), [](const RootVec& a, const RootVec& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;  // simple roots come out in node order
  });
  if (positive.size() * 2 != seen.size()) throw ConsistencyError("root set not symmetric");

  roots_.clear();
  lookup_.clear();
  const std::size_t np = positive.size();
  roots_.resize(2 * np);
  negation_.resize(2 * np);
  for (std::size_t k = 0; k < np; ++k) {
    for (int sign : {1, -1}) {
      Root r;
      r.coords = positive[k];
      if (sign < 0)
        for (int& c : r.coords) c = -c;
      r.height = std::accumulate(r.coords.begin(), r.coords.end(), 0);
      r.norm = static_cast<int>(root_norm(r.coords));
      r.coroot = coroot_of(r.coords);
      const std::size_t idx = sign > 0 ? k : np + k;
      lookup_[r.coords] = static_cast<int>(idx);
      roots_[idx] = std::move(r);
      negation_[idx] = static_cast<int>(sign > 0 ? np + k : k);
    }
  }
}

std::optional<int> RootSystem::index_of(const RootVec& coords) const {
  auto it = lookup_.find(coords);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_irreducible() const { return components(cartan_).size() == 1; }

std::int64_t RootSystem::pairing(const RootVec& a, const RootVec& lam) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += static_cast<std::int64_t>(a[static_cast<std::size_t>(i)]) * lam[static_cast<std::size_t>(j)] * cartan_(i, j);
  }
  return s;
}

std::int64_t RootSystem::root_inner(const RootVec& a, const RootVec& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += static_cast<std::int64_t>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)] * root_gram_(i, j);
  return s;
}

std::int64_t RootSystem::root_norm(const RootVec& v) const { return root_inner(v, v); }

std::int64_t RootSystem::coroot_inner(const RootVec& a, const RootVec& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += static_cast<std::int64_t>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)] * form_gram_(i, j);
  return s;
}

RootVec RootSystem::coroot_of(const RootVec& a) const {
  const std::int64_t nrm = root_norm(a);
  RootVec c(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::int64_t num = static_cast<std::int64_t>(a[j]) * root_gram_(j, j);
    if (num % nrm != 0) throw ConsistencyError("coroot is not integral in the simple-coroot basis");
    c[j] = static_cast<int>(num / nrm);
  }
  return c;
}

RootVec RootSystem::reflect_root(int i, const RootVec& b) const {
  std::int64_t p = 0;  // <b, alpha_i^vee>
  for (int j = 0; j < rank_; ++j) p += b[static_cast<std::size_t>(j)] * cartan_(j, i);
  RootVec r = b;
  r[static_cast<std::size_t>(i)] -= static_cast<int>(p);
  return r;
}

RootVec RootSystem::reflect_coroot(int i, const RootVec& lam) const {
  std::int64_t p = 0;  // <alpha_i, lam>
  for (int j = 0; j < rank_; ++j) p += cartan_(i, j) * lam[static_cast<std::size_t>(j)];
  RootVec r = lam;
  r[static_cast<std::size_t>(i)] -= static_cast<int>(p);
  return r;
}

HighestRoot RootSystem::highest_root() const {
  if (!is_irreducible()) throw UnsupportedTypeError("highest root requires an irreducible root system: " + label());
  int best = 0;
  for (std::size_t k = 0; k < num_positive(); ++k)
    if (roots_[k].height > roots_[static_cast<std::size_t>(best)].height) best = static_cast<int>(k);
  const Root& th = roots_[static_cast<std::size_t>(best)];
  for (int i = 0; i < rank_; ++i) {
    RootVec up = th.coords;
    ++up[static_cast<std::size_t>(i)];
    if (index_of(up)) throw ConsistencyError("highest root is not maximal");
  }
  HighestRoot h;
  h.index = best;
  h.root = th.coords;
  h.root_marks = th.coords;
  h.coroot = th.coroot;
  for (int c : h.coroot)
    if (c < 1) throw ConsistencyError("highest coroot has a non-positive mark");
  h.coxeter_number = 1 + th.height;
  return h;
}

std::vector<int> RootSystem::longest_element_word() const {
  // rho in fundamental-weight coordinates is (1, ..., 1); s_i subtracts
  // m_i * (row i of the Cartan matrix).
  std::vector<std::int64_t> m(static_cast<std::size_t>(rank_), 1);
  std::vector<int> word;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rank_; ++k)
      if (m[static_cast<std::size_t>(k)] > 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    const std::int64_t mi = m[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank_; ++j) m[static_cast<std::size_t>(j)] -= mi * cartan_(i, j);
    word.push_back(i);
  }
  return word;
}

RootVec RootSystem::apply_word_to_root(const std::vector<int>& word, const RootVec& root) const {
  RootVec r = root;
  for (int i : word) r = reflect_root(i, r);
  return r;
}

bool RootSystem::minus_one_in_weyl() const {
  // -id preserves every root set; the question is whether it lies in W,
  // i.e. whether w0 = -id.
  for (const Root& r : roots_) {
    RootVec neg = r.coords;
    for (int& c : neg) c = -c;
    if (!index_of(neg)) throw ConsistencyError("root set not closed under negation");
  }
  const auto word = longest_element_word();
  if (word.size() != num_positive()) throw ConsistencyError("longest element has wrong length");
  for (int i = 0; i < rank_; ++i) {
    RootVec e(static_cast<std::size_t>(rank_), 0);
    e[static_cast<std::size_t>(i)] = 1;
    RootVec image = apply_word_to_root(word, e);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (image[k] != -e[k]) return false;
  }
  return true;
}

Coweight RootSystem::two_rho_vee() const {
  Coweight c;
  c.doubled.assign(static_cast<std::size_t>(rank_), 0);
  for (std::size_t k = 0; k < num_positive(); ++k)
    for (int j = 0; j < rank_; ++j) c.doubled[static_cast<std::size_t>(j)] += roots_[k].coroot[static_cast<std::size_t>(j)];
  return c;
}

std::int64_t RootSystem::doubled_pairing(const Coweight& lam, const RootVec& a) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += static_cast<std::int64_t>(a[static_cast<std::size_t>(i)]) * lam.doubled[static_cast<std::size_t>(j)] * cartan_(i, j);
  return s;
}

int RootSystem::dual_coxeter_number() const {
  const HighestRoot th = highest_root();
  RootVec two_rho(static_cast<std::size_t>(rank_), 0);
  for (std::size_t k = 0; k < num_positive(); ++k)
    for (int j = 0; j < rank_; ++j) two_rho[static_cast<std::size_t>(j)] += roots_[k].coords[static_cast<std::size_t>(j)];
  const std::int64_t twice = pairing(two_rho, th.coroot);
  if (twice % 2 != 0) throw ConsistencyError("<2 rho, theta^vee> is odd");
  const int h_dual = static_cast<int>(1 + twice / 2);
  const int from_marks = 1 + std::accumulate(th.coroot.begin(), th.coroot.end(), 0);
  if (h_dual != from_marks) throw ConsistencyError("dual Coxeter number routes disagree");
  return h_dual;
}

nlohmann::json RootSystem::to_json() const {
  nlohmann::json j;
  j["type"] = label();
  j["rank"] = rank_;
  nlohmann::json roots = nlohmann::json::array();
  nlohmann::json coroots = nlohmann::json::array();
  for (const Root& r : roots_) {
    roots.push_back(r.coords);
    coroots.push_back(r.coroot);
  }
  j["roots"] = roots;
  j["coroots"] = coroots;
  j["cartan"] = cartan_.to_nested();
  j["form_gram"] = form_gram_.to_nested();
  return j;
}

}  // namespace excmono
