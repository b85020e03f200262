#pragma once

// Character sums for the curve family y^4 = (lambda x - 1) / (lambda x (x - 1))
// over F_q, q = 1 mod 4: the trace sums t_j for chi^j, the smooth-model
// point count, the Legendre cross-check, and the Sym^2 trace.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "excmono/finite_field.hpp"
#include "excmono/gaussian_int.hpp"

namespace excmono {

struct RamifiedPoint {
  std::string where;  // "0", "1", "1/lambda", "inf"
  int order = 0;      // ord of f there
  int points = 0;     // gcd(4, |order|) when that is 1
};

struct TraceRecord {
  std::uint32_t q = 0;
  std::uint32_t lambda = 0;  // element encoding
  GaussInt t1, t2, t3;
  std::int64_t n_points = 0;         // q + 1 + t1 + t2 + t3
  std::int64_t n_points_direct = 0;  // fibre enumeration + ramified points
  std::int64_t elliptic_count = 0;   // y^2 = f(x), enumerated
  GaussInt t1_ext, t3_ext;           // same sums over F_{q^2} with chi o Norm
  GaussInt s, s_conj;                // (t^2 - t_ext) / 2
  std::int64_t fibre_mismatches = 0; // x where sum_j chi^j(f(x)) != #{y^4 = f(x)}

  std::string sym2_over_q() const;  // reduced fraction
  // (name, passed) for every invariant of the record
  std::vector<std::pair<std::string, bool>> checks() const;
  bool all_checks_pass() const;
  nlohmann::json to_json() const;
};

class A1Lab {
 public:
  explicit A1Lab(std::uint64_t q);  // FieldError unless q is a prime power = 1 mod 4

  const FiniteField& field() const { return field_; }

  // chi^j(f(x)) summed over x in F_q \ {0, 1, 1/lambda}; j = 1, 2, 3.
  GaussInt trace_sum(FiniteField::Elem lambda, int j) const;
  GaussInt trace_sum_ext(FiniteField::Elem lambda, int j) const;  // over F_{q^2}
  std::vector<RamifiedPoint> ramified_points(FiniteField::Elem lambda) const;
  std::int64_t smooth_point_count(FiniteField::Elem lambda) const;
  std::int64_t elliptic_count(FiniteField::Elem lambda) const;

  // With primary_power = 3 the conjugate character plays the role of chi.
  TraceRecord record(FiniteField::Elem lambda, int primary_power = 1) const;
  std::vector<TraceRecord> all_records() const;  // every lambda not in {0, 1}

 private:
  FiniteField::Elem f_value(FiniteField::Elem lambda, FiniteField::Elem x) const;
  void check_lambda(FiniteField::Elem lambda) const;

  FiniteField field_;
  std::vector<int> fourth_roots_;  // #{y : y^4 = v}
  std::vector<int> square_roots_;  // #{y : y^2 = v}
};

std::vector<TraceRecord> a1_scan(const std::vector<std::uint64_t>& qs);
std::string a1_csv(const std::vector<TraceRecord>& rows);

}  // namespace excmono
