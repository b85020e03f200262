#pragma once

// Brute-force finite groups (permutations, matrices over F_p, projective
// matrices) with conjugacy classes, and rigid-triple counting.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

namespace excmono {

using GroupKey = std::vector<std::uint16_t>;

struct GroupKeyHash {
  std::size_t operator()(const GroupKey& k) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : k) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

struct ConjugacyClass {
  std::string label;      // element order + letter, e.g. "7b"
  int element_order = 0;
  std::size_t size = 0;
  int representative = 0; // smallest element index in the class
  std::string invariant;  // cycle type, or order/trace data for matrices
};

class FiniteGroup {
 public:
  enum class Kind { Permutation, Matrix, ProjectiveMatrix };

  static constexpr std::size_t kDefaultCap = 10'000'000;

  // Permutations of {0..degree-1} as image lists.
  static FiniteGroup permutations(int degree, const std::vector<GroupKey>& generators, std::size_t cap = kDefaultCap);
  // n x n matrices over F_p, row-major entries in [0, p). Projective groups
  // identify scalar multiples.
  static FiniteGroup matrices(int n, std::uint32_t p, const std::vector<GroupKey>& generators, bool projective,
                              std::size_t cap = kDefaultCap);
  // {"kind": "permutation", "degree": d, "generators": [[...], ...]} or
  // {"kind": "matrix", "n": n, "p": p, "projective": bool, "generators": [[[row], ...], ...]}
  static FiniteGroup from_json(const nlohmann::json& desc, std::size_t cap = kDefaultCap);

  static FiniteGroup pgl2(std::uint32_t ell);
  static FiniteGroup psl2(std::uint32_t ell);
  static FiniteGroup sl2(std::uint32_t p);
  static FiniteGroup symmetric(int n);
  static FiniteGroup cyclic(int n);

  std::string name;

  Kind kind() const { return kind_; }
  std::size_t order() const { return elements_.size(); }
  const GroupKey& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int index_of(const GroupKey& k) const;  // -1 if absent
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inverse(int a) const;
  const std::vector<int>& generators() const { return generators_; }
  int element_order(int a) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int element) const { return class_of_[static_cast<std::size_t>(element)]; }
  int class_by_label(const std::string& label) const;  // ClassMismatchError if unknown
  std::vector<int> class_members(int c) const;
  std::size_t center_size() const;
  std::size_t centralizer_size(int element) const;
  bool is_abelian() const;

  // Does the subgroup generated by `elems` equal the whole group? Stops as
  // soon as the closure reaches the full order.
  bool generates(const std::vector<int>& elems) const;

  // Class-equation checks: closure, sum of class sizes, |C| |C_G(x)| = |G|.
  std::size_t class_equation_violations() const;

  std::string describe(int element) const;

 private:
  GroupKey multiply_keys(const GroupKey& a, const GroupKey& b) const;
  GroupKey normalize(GroupKey k) const;
  void enumerate(const std::vector<GroupKey>& gens, std::size_t cap);
  void compute_classes();
  std::string invariant_of(int element) const;

  Kind kind_ = Kind::Permutation;
  int n_ = 0;
  std::uint32_t p_ = 0;
  std::vector<GroupKey> elements_;
  std::unordered_map<GroupKey, int, GroupKeyHash> index_;
  std::vector<int> generators_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

struct TripleReport {
  std::string group;
  std::size_t group_order = 0;
  std::size_t center_size = 0;
  std::string c0, c1, cinf;
  std::size_t c0_size = 0, c1_size = 0, cinf_size = 0;
  int base_representative = 0;
  std::size_t solutions_with_base = 0;  // g_0 fixed
  std::size_t solution_count = 0;       // |C0| * solutions_with_base
  std::int64_t normalized_num = 0, normalized_den = 1;  // solution_count |Z| / |G|, reduced
  bool generates = false;               // some solution generates G
  bool all_generate = false;            // every solution generates G
  bool strictly_rigid = false;
  std::string note;

  std::string normalized() const;
  nlohmann::json to_json() const;
};

// Classes by index into G.classes(); base = element of C0 to fix (-1: class representative).
TripleReport triple_count(const FiniteGroup& g, int c0, int c1, int cinf, int base = -1);

// PGL2(F_ell), ell in {3, 5, 7, 11, 13}: C0 = class of diag(1, -1), C1 = Cinf =
// class of the unipotent [[1,1],[0,1]].
TripleReport harness_triple(std::uint32_t ell);
const std::vector<std::uint32_t>& harness_triple_instances();

}  // namespace excmono
