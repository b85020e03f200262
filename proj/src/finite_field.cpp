#include "excmono/finite_field.hpp"

#include <string>

#include "excmono/errors.hpp"

namespace excmono {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FiniteField FiniteField::make(std::uint64_t q) {
  if (q < 3 || q > (1u << 22)) throw FieldError("field size " + std::to_string(q) + " out of range");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  if (!is_prime(p) || p == 2) throw FieldError("field size " + std::to_string(q) + " is not an odd prime power");
  int e = 0;
  for (std::uint64_t t = q; t > 1; t /= p) {
    if (t % p != 0) throw FieldError("field size " + std::to_string(q) + " is not a prime power");
    ++e;
  }
  FiniteField f;
  f.p_ = static_cast<std::uint32_t>(p);
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.exp_.assign(q - 1, 0);
  f.log_.assign(q, 0);

  // Multiplication by x modulo a monic degree-e polynomial, on the digit encoding.
  auto times_x = [&](std::uint32_t a, const std::vector<std::uint32_t>& mod) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(e) + 1, 0);
    for (int i = 0; i < e; ++i) {
      c[static_cast<std::size_t>(i) + 1] = a % f.p_;
      a /= f.p_;
    }
    const std::uint32_t top = c[static_cast<std::size_t>(e)];
    std::uint32_t out = 0;
    for (int i = e - 1; i >= 0; --i) {
      const std::uint64_t v = (c[static_cast<std::size_t>(i)] + static_cast<std::uint64_t>(f.p_ - top) * mod[static_cast<std::size_t>(i)]) % f.p_;
      out = out * f.p_ + static_cast<std::uint32_t>(v);
    }
    return out;
  };

  if (e == 1) {
    // primitive root mod p; "x" is then multiplication by g
    for (std::uint32_t g = 2; g < p; ++g) {
      std::uint64_t v = 1;
      std::uint32_t k = 0;
      bool ok = true;
      for (; k < q - 1; ++k) {
        if (k > 0 && v == 1) {
          ok = false;
          break;
        }
        f.exp_[k] = static_cast<Elem>(v);
        v = v * g % p;
      }
      if (ok && v == 1) {
        f.modulus_ = {static_cast<std::uint32_t>((p - g) % p), 1};
        break;
      }
    }
  } else {
    // first monic polynomial (in digit order) for which x has order q - 1
    const std::uint64_t count = q;  // p^e choices of the lower coefficients
    bool found = false;
    for (std::uint64_t code = 1; code < count && !found; ++code) {
      std::vector<std::uint32_t> mod(static_cast<std::size_t>(e) + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < e; ++i) {
        mod[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      mod[static_cast<std::size_t>(e)] = 1;
      if (mod[0] == 0) continue;
      Elem v = 1;
      bool ok = true;
      for (std::uint32_t k = 0; k < q - 1; ++k) {
        if (k > 0 && v == 1) {
          ok = false;
          break;
        }
        f.exp_[k] = v;
        v = times_x(v, mod);
      }
      if (ok && v == 1) {
        f.modulus_ = mod;
        found = true;
      }
    }
    if (!found) throw FieldError("no primitive polynomial found");
  }
  std::vector<char> hit(q, 0);
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    if (hit[f.exp_[k]]) throw ConsistencyError("exp table is not a bijection");
    hit[f.exp_[k]] = 1;
    f.log_[f.exp_[k]] = k;
  }
  return f;
}

FiniteField::Elem FiniteField::from_int(std::int64_t n) const {
  const std::int64_t m = ((n % static_cast<std::int64_t>(p_)) + p_) % p_;
  return static_cast<Elem>(m);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % p_);
  Elem out = 0, scale = 1;
  while (a || b) {
    out += scale * (((a % p_) + (b % p_)) % p_);
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0, scale = 1;
  while (a) {
    out += scale * ((p_ - a % p_) % p_);
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw FieldError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0) throw FieldError("log of zero");
  return log_[a];
}

GaussInt FiniteField::chi(Elem a, int power) const {
  if (q_ % 4 != 1) throw FieldError("no character of order 4 on F_" + std::to_string(q_) + "^x");
  if (a == 0) throw FieldError("chi evaluated at 0");
  return GaussInt::i_pow(static_cast<int>((static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(((power % 4) + 4) % 4)) % 4));
}

QuadraticExtension::QuadraticExtension(const FiniteField& base) : base_(&base) {
  for (FiniteField::Elem n = 1; n < base.q(); ++n) {
    if (base.log(n) % 2 == 1) {
      n_ = n;
      return;
    }
  }
}

QuadraticExtension::Elem QuadraticExtension::element(std::uint64_t index) const {
  return {static_cast<FiniteField::Elem>(index % base_->q()), static_cast<FiniteField::Elem>(index / base_->q())};
}

QuadraticExtension::Elem QuadraticExtension::add(const Elem& x, const Elem& y) const {
  return {base_->add(x.first, y.first), base_->add(x.second, y.second)};
}

QuadraticExtension::Elem QuadraticExtension::sub(const Elem& x, const Elem& y) const {
  return {base_->sub(x.first, y.first), base_->sub(x.second, y.second)};
}

QuadraticExtension::Elem QuadraticExtension::mul(const Elem& x, const Elem& y) const {
  const auto& f = *base_;
  return {f.add(f.mul(x.first, y.first), f.mul(n_, f.mul(x.second, y.second))),
          f.add(f.mul(x.first, y.second), f.mul(x.second, y.first))};
}

FiniteField::Elem QuadraticExtension::norm(const Elem& x) const {
  const auto& f = *base_;
  return f.sub(f.mul(x.first, x.first), f.mul(n_, f.mul(x.second, x.second)));
}

QuadraticExtension::Elem QuadraticExtension::inv(const Elem& x) const {
  const auto& f = *base_;
  const auto ninv = f.inv(norm(x));
  return {f.mul(x.first, ninv), f.mul(f.neg(x.second), ninv)};
}

}  // namespace excmono
