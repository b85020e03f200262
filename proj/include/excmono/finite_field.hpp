#pragma once

// GF(p^e) with elements encoded as integers 0..q-1 (base-p digits of the
// coefficient vector), multiplication through exp/log tables on a
// primitive element, plus the quadratic extension F_q[s]/(s^2 - n).

#include <cstdint>
#include <utility>
#include <vector>

#include "excmono/gaussian_int.hpp"

namespace excmono {

class FiniteField {
 public:
  using Elem = std::uint32_t;

  // q must be an odd prime power <= 2^22; throws FieldError otherwise.
  static FiniteField make(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  int degree() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }  // monic, low degree first

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const;  // image of n under Z -> F_p -> F_q
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws FieldError on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  Elem generator() const { return exp_[1]; }
  std::uint32_t log(Elem a) const;  // a != 0; a = generator^log
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  // chi(g^k) = i^k for the fixed generator g; requires q = 1 mod 4.
  GaussInt chi(Elem a, int power = 1) const;

 private:
  std::uint32_t p_ = 0;
  int e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

// F_{q^2} = F_q[s] / (s^2 - n) with n the least non-square (in the element
// encoding). Elements are pairs (a, b) meaning a + b s.
class QuadraticExtension {
 public:
  using Elem = std::pair<FiniteField::Elem, FiniteField::Elem>;

  explicit QuadraticExtension(const FiniteField& base);

  const FiniteField& base() const { return *base_; }
  FiniteField::Elem nonsquare() const { return n_; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(base_->q()) * base_->q(); }
  Elem element(std::uint64_t index) const;  // enumeration index -> element

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem inv(const Elem& x) const;
  FiniteField::Elem norm(const Elem& x) const;  // a^2 - n b^2

 private:
  const FiniteField* base_;
  FiniteField::Elem n_ = 0;
};

}  // namespace excmono
