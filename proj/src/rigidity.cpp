#include "excmono/rigidity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "excmono/errors.hpp"
#include "excmono/parallel.hpp"

namespace excmono {

namespace {

std::uint32_t primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint64_t v = 1;
    std::uint32_t k = 1;
    for (; k < p; ++k) {
      v = v * g % p;
      if (v == 1) break;
    }
    if (k == p - 1) return g;
  }
  return 1;  // p = 2
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
    if (e & 1u) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

GroupKey FiniteGroup::multiply_keys(const GroupKey& a, const GroupKey& b) const {
  GroupKey c(a.size());
  if (kind_ == Kind::Permutation) {
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
    return c;
  }
  const auto n = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += static_cast<std::uint64_t>(a[i * n + k]) * b[k * n + j];
      c[i * n + j] = static_cast<std::uint16_t>(s % p_);
    }
  return normalize(std::move(c));
}

GroupKey FiniteGroup::normalize(GroupKey k) const {
  if (kind_ != Kind::ProjectiveMatrix) return k;
  auto it = std::find_if(k.begin(), k.end(), [](std::uint16_t v) { return v != 0; });
  if (it == k.end()) throw ConfigurationError("zero matrix in a projective group");
  const std::uint32_t s = inv_mod(*it, p_);
  for (auto& v : k) v = static_cast<std::uint16_t>(static_cast<std::uint64_t>(v) * s % p_);
  return k;
}

void FiniteGroup::enumerate(const std::vector<GroupKey>& gens, std::size_t cap) {
  GroupKey id;
  if (kind_ == Kind::Permutation) {
    for (int x = 0; x < n_; ++x) id.push_back(static_cast<std::uint16_t>(x));
  } else {
    id.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (int i = 0; i < n_; ++i) id[static_cast<std::size_t>(i * n_ + i)] = 1;
  }
  elements_ = {id};
  index_ = {{id, 0}};
  std::vector<GroupKey> g;
  for (const auto& k : gens) g.push_back(normalize(k));
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& s : g) {
      GroupKey next = multiply_keys(elements_[head], s);
      if (index_.count(next)) continue;
      if (elements_.size() >= cap)
        throw GroupOverflowError("group enumeration exceeded the cap of " + std::to_string(cap) + " elements");
      index_.emplace(next, static_cast<int>(elements_.size()));
      elements_.push_back(std::move(next));
    }
  }
  generators_.clear();
  for (const auto& s : g) generators_.push_back(index_.at(s));
  compute_classes();
}

FiniteGroup FiniteGroup::permutations(int degree, const std::vector<GroupKey>& generators, std::size_t cap) {
  if (degree < 1 || degree > 65535) throw ConfigurationError("bad permutation degree");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw ConfigurationError("generator has the wrong degree");
    std::vector<char> hit(static_cast<std::size_t>(degree), 0);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw ConfigurationError("generator is not a permutation");
      hit[v] = 1;
    }
  }
  FiniteGroup grp;
  grp.kind_ = Kind::Permutation;
  grp.n_ = degree;
  grp.enumerate(generators, cap);
  return grp;
}

FiniteGroup FiniteGroup::matrices(int n, std::uint32_t p, const std::vector<GroupKey>& generators, bool projective,
                                  std::size_t cap) {
  if (n < 1 || n > 8) throw ConfigurationError("matrix size out of range");
  if (!is_prime(p) || p > 65535) throw ConfigurationError("matrix groups need a prime p < 65536");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n * n) throw ConfigurationError("generator has the wrong size");
    for (auto v : g)
      if (v >= p) throw ConfigurationError("matrix entry not reduced mod p");
  }
  FiniteGroup grp;
  grp.kind_ = projective ? Kind::ProjectiveMatrix : Kind::Matrix;
  grp.n_ = n;
  grp.p_ = p;
  grp.enumerate(generators, cap);
  return grp;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& desc, std::size_t cap) {
  try {
    const std::string kind = desc.at("kind").get<std::string>();
    std::vector<GroupKey> gens;
    if (kind == "permutation") {
      const int degree = desc.at("degree").get<int>();
      for (const auto& g : desc.at("generators")) gens.push_back(g.get<GroupKey>());
      FiniteGroup grp = permutations(degree, gens, cap);
      grp.name = desc.value("name", "permutation group");
      return grp;
    }
    if (kind == "matrix") {
      const int n = desc.at("n").get<int>();
      const auto p = desc.at("p").get<std::uint32_t>();
      for (const auto& g : desc.at("generators")) {
        GroupKey k;
        for (const auto& row : g)
          for (const auto& v : row) k.push_back(static_cast<std::uint16_t>(((v.get<std::int64_t>() % p) + p) % p));
        gens.push_back(k);
      }
      FiniteGroup grp = matrices(n, p, gens, desc.value("projective", false), cap);
      grp.name = desc.value("name", "matrix group");
      return grp;
    }
    throw ConfigurationError("unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("malformed group description: ") + e.what());
  }
}

FiniteGroup FiniteGroup::pgl2(std::uint32_t ell) {
  const auto g = static_cast<std::uint16_t>(primitive_root(ell));
  FiniteGroup grp = matrices(2, ell, {{1, 1, 0, 1}, {g, 0, 0, 1}, {0, 1, 1, 0}}, true);
  grp.name = "PGL2(F_" + std::to_string(ell) + ")";
  return grp;
}

FiniteGroup FiniteGroup::psl2(std::uint32_t ell) {
  const auto m1 = static_cast<std::uint16_t>(ell - 1);
  FiniteGroup grp = matrices(2, ell, {{1, 1, 0, 1}, {0, m1, 1, 0}}, true);
  grp.name = "PSL2(F_" + std::to_string(ell) + ")";
  return grp;
}

FiniteGroup FiniteGroup::sl2(std::uint32_t p) {
  const auto m1 = static_cast<std::uint16_t>(p - 1);
  FiniteGroup grp = matrices(2, p, {{1, 1, 0, 1}, {0, m1, 1, 0}}, false);
  grp.name = "SL2(F_" + std::to_string(p) + ")";
  return grp;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  GroupKey cycle, swap;
  for (int x = 0; x < n; ++x) {
    cycle.push_back(static_cast<std::uint16_t>((x + 1) % n));
    swap.push_back(static_cast<std::uint16_t>(x));
  }
  if (n >= 2) std::swap(swap[0], swap[1]);
  FiniteGroup grp = permutations(n, {cycle, swap});
  grp.name = "S" + std::to_string(n);
  return grp;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  GroupKey cycle;
  for (int x = 0; x < n; ++x) cycle.push_back(static_cast<std::uint16_t>((x + 1) % n));
  FiniteGroup grp = permutations(n, {cycle});
  grp.name = "C" + std::to_string(n);
  return grp;
}

int FiniteGroup::index_of(const GroupKey& k) const {
  auto it = index_.find(normalize(k));
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int a, int b) const {
  const int c = index_of(multiply_keys(element(a), element(b)));
  if (c < 0) throw ConsistencyError("group is not closed under multiplication");
  return c;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::inverse(int a) const {
  int prev = identity();
  for (int x = a; x != identity(); x = mul(x, a)) prev = x;
  return prev;
}

void FiniteGroup::compute_classes() {
  const std::size_t n = order();
  class_of_.assign(n, -1);
  std::vector<std::vector<int>> orbits;
  std::vector<int> gen_inv;
  for (int s : generators_) gen_inv.push_back(inverse(s));
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{static_cast<int>(start)};
    class_of_[start] = id;
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        const int y = mul(mul(generators_[k], orbit[h]), gen_inv[k]);
        if (class_of_[static_cast<std::size_t>(y)] < 0) {
          class_of_[static_cast<std::size_t>(y)] = id;
          orbit.push_back(y);
        }
      }
    orbits.push_back(std::move(orbit));
  }
  // order classes by (element order, size, smallest member) and label them
  std::vector<ConjugacyClass> cls;
  for (const auto& orb : orbits) {
    ConjugacyClass c;
    c.representative = *std::min_element(orb.begin(), orb.end());
    c.size = orb.size();
    c.element_order = element_order(c.representative);
    cls.push_back(c);
  }
  std::vector<int> perm(cls.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& x = cls[static_cast<std::size_t>(a)];
    const auto& y = cls[static_cast<std::size_t>(b)];
    return std::tie(x.element_order, x.size, x.representative) < std::tie(y.element_order, y.size, y.representative);
  });
  std::vector<int> new_id(cls.size());
  classes_.clear();
  std::map<int, int> letters;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    ConjugacyClass c = cls[static_cast<std::size_t>(perm[k])];
    const int letter = letters[c.element_order]++;
    c.label = std::to_string(c.element_order);
    if (letter < 26) {
      c.label += static_cast<char>('a' + letter);
    } else {
      c.label += "_" + std::to_string(letter);
    }
    new_id[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
    classes_.push_back(c);
  }
  for (auto& c : class_of_) c = new_id[static_cast<std::size_t>(c)];
  for (auto& c : classes_) c.invariant = invariant_of(c.representative);
}

std::string FiniteGroup::invariant_of(int element) const {
  const GroupKey& k = this->element(element);
  if (kind_ == Kind::Permutation) {
    std::vector<int> cycles;
    std::vector<char> seen(k.size(), 0);
    for (std::size_t x = 0; x < k.size(); ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (std::size_t y = x; !seen[y]; y = k[y]) {
        seen[y] = 1;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    std::string s = "cycle type ";
    for (std::size_t i = 0; i < cycles.size(); ++i) s += (i ? "," : "") + std::to_string(cycles[i]);
    return s;
  }
  const auto n = static_cast<std::size_t>(n_);
  std::uint64_t tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += k[i * n + i];
  tr %= p_;
  std::string s = "order " + std::to_string(element_order(element));
  if (kind_ == Kind::ProjectiveMatrix && n == 2) {
    const std::uint64_t det = (static_cast<std::uint64_t>(k[0]) * k[3] + static_cast<std::uint64_t>(p_ - k[1]) * k[2]) % p_;
    s += ", tr^2/det " + std::to_string(tr * tr % p_ * inv_mod(static_cast<std::uint32_t>(det), p_) % p_);
  } else if (kind_ == Kind::Matrix) {
    s += ", trace " + std::to_string(tr);
  }
  return s;
}

int FiniteGroup::class_by_label(const std::string& label) const {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].label == label) return static_cast<int>(c);
  std::string known;
  for (const auto& c : classes_) known += (known.empty() ? "" : ", ") + c.label;
  throw ClassMismatchError("no class '" + label + "' in " + name + " (classes: " + known + ")");
}

std::vector<int> FiniteGroup::class_members(int c) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < order(); ++i)
    if (class_of_[i] == c) out.push_back(static_cast<int>(i));
  return out;
}

std::size_t FiniteGroup::center_size() const {
  std::size_t n = 0;
  for (const auto& c : classes_) n += c.size == 1;
  return n;
}

std::size_t FiniteGroup::centralizer_size(int element) const {
  std::size_t n = 0;
  for (std::size_t y = 0; y < order(); ++y)
    if (mul(element, static_cast<int>(y)) == mul(static_cast<int>(y), element)) ++n;
  return n;
}

bool FiniteGroup::is_abelian() const { return center_size() == order(); }

bool FiniteGroup::generates(const std::vector<int>& elems) const {
  std::vector<char> seen(order(), 0);
  std::vector<int> queue{identity()};
  seen[static_cast<std::size_t>(identity())] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int s : elems) {
      const int y = mul(queue[h], s);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      queue.push_back(y);
      if (queue.size() == order()) return true;
    }
  }
  return queue.size() == order();
}

std::size_t FiniteGroup::class_equation_violations() const {
  std::size_t bad = 0;
  std::size_t total = 0;
  for (const auto& c : classes_) {
    total += c.size;
    if (order() % c.size != 0) ++bad;
    if (c.size * centralizer_size(c.representative) != order()) ++bad;
  }
  if (total != order()) ++bad;
  // closure on the generators
  for (int s : generators_)
    for (std::size_t x = 0; x < order(); ++x)
      if (index_of(multiply_keys(element(static_cast<int>(x)), element(s))) < 0) ++bad;
  return bad;
}

std::string FiniteGroup::describe(int element) const {
  const GroupKey& k = this->element(element);
  std::string s = "[";
  if (kind_ == Kind::Permutation) {
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + "]";
  }
  for (int i = 0; i < n_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < n_; ++j) s += (j ? "," : "") + std::to_string(k[static_cast<std::size_t>(i * n_ + j)]);
    s += "]";
  }
  return s + "]";
}

std::string TripleReport::normalized() const {
  return normalized_den == 1 ? std::to_string(normalized_num)
                             : std::to_string(normalized_num) + "/" + std::to_string(normalized_den);
}

nlohmann::json TripleReport::to_json() const {
  nlohmann::json j;
  j["group"] = group;
  j["group_order"] = group_order;
  j["center_size"] = center_size;
  j["classes"] = {{"C0", {{"label", c0}, {"size", c0_size}}},
                  {"C1", {{"label", c1}, {"size", c1_size}}},
                  {"Cinf", {{"label", cinf}, {"size", cinf_size}}}};
  j["solutions_with_base"] = solutions_with_base;
  j["solution_count"] = solution_count;
  j["normalized_count"] = normalized();
  j["generates"] = generates;
  j["all_generate"] = all_generate;
  j["strictly_rigid"] = strictly_rigid;
  if (!note.empty()) j["note"] = note;
  return j;
}

TripleReport triple_count(const FiniteGroup& g, int c0, int c1, int cinf, int base) {
  const int nc = static_cast<int>(g.classes().size());
  for (int c : {c0, c1, cinf})
    if (c < 0 || c >= nc) throw ClassMismatchError("class index " + std::to_string(c) + " is not a class of " + g.name);
  if (base < 0) base = g.classes()[static_cast<std::size_t>(c0)].representative;
  if (base >= static_cast<int>(g.order()) || g.class_of(base) != c0)
    throw ClassMismatchError("base element is not in C0");

  TripleReport r;
  r.group = g.name;
  r.group_order = g.order();
  r.center_size = g.center_size();
  r.c0 = g.classes()[static_cast<std::size_t>(c0)].label;
  r.c1 = g.classes()[static_cast<std::size_t>(c1)].label;
  r.cinf = g.classes()[static_cast<std::size_t>(cinf)].label;
  r.c0_size = g.classes()[static_cast<std::size_t>(c0)].size;
  r.c1_size = g.classes()[static_cast<std::size_t>(c1)].size;
  r.cinf_size = g.classes()[static_cast<std::size_t>(cinf)].size;
  r.base_representative = base;

  const std::vector<int> members = g.class_members(c1);
  const int workers = worker_count();
  std::vector<std::size_t> found(static_cast<std::size_t>(workers), 0), generating(static_cast<std::size_t>(workers), 0);
  parallel_chunks(members.size(), workers, [&](std::size_t b, std::size_t e, int w) {
    for (std::size_t k = b; k < e; ++k) {
      const int g1 = members[k];
      const int ginf = g.inverse(g.mul(base, g1));
      if (g.class_of(ginf) != cinf) continue;
      ++found[static_cast<std::size_t>(w)];
      if (g.generates({base, g1})) ++generating[static_cast<std::size_t>(w)];
    }
  });
  std::size_t gen_total = 0;
  for (int w = 0; w < workers; ++w) {
    r.solutions_with_base += found[static_cast<std::size_t>(w)];
    gen_total += generating[static_cast<std::size_t>(w)];
  }
  r.solution_count = r.c0_size * r.solutions_with_base;
  const auto num = static_cast<std::int64_t>(r.solution_count * r.center_size);
  const auto den = static_cast<std::int64_t>(r.group_order);
  const std::int64_t d = std::gcd(num, den);
  r.normalized_num = d ? num / d : 0;
  r.normalized_den = d ? den / d : 1;
  r.generates = gen_total > 0;
  r.all_generate = r.solutions_with_base > 0 && gen_total == r.solutions_with_base;
  r.strictly_rigid = r.normalized_num == 1 && r.normalized_den == 1 && r.all_generate;
  return r;
}

const std::vector<std::uint32_t>& harness_triple_instances() {
  static const std::vector<std::uint32_t> ells{3, 5, 7, 11, 13};
  return ells;
}

TripleReport harness_triple(std::uint32_t ell) {
  const auto& ok = harness_triple_instances();
  if (std::find(ok.begin(), ok.end(), ell) == ok.end()) {
    std::string list;
    for (auto l : ok) list += (list.empty() ? "" : ", ") + std::string("PGL2(F_") + std::to_string(l) + ")";
    throw UnsupportedTypeError("unsupported instance; supported: " + list);
  }
  const FiniteGroup g = FiniteGroup::pgl2(ell);
  const int inv = g.index_of({1, 0, 0, static_cast<std::uint16_t>(ell - 1)});
  const int uni = g.index_of({1, 1, 0, 1});
  TripleReport r = triple_count(g, g.class_of(inv), g.class_of(uni), g.class_of(uni));
  r.note = "PGL2 harness fixture: C0 = split involution diag(1,-1), C1 = Cinf = regular unipotent";
  return r;
}

}  // namespace excmono
