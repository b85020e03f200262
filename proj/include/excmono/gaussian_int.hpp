#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace excmono {

// Exact element of Z[i]. Character values, trace sums and irrep matrix
// entries all live here; nothing in the toolkit uses floating complex.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  static constexpr GaussInt i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  constexpr GaussInt conj() const { return {re, -im}; }
  constexpr std::int64_t norm() const { return re * re + im * im; }
  constexpr bool is_real() const { return im == 0; }
  constexpr bool is_zero() const { return re == 0 && im == 0; }

  constexpr GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr GaussInt& operator*=(const GaussInt& o) {
    const std::int64_t r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend constexpr GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend constexpr GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend constexpr GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend constexpr GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
  friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;

  std::string str() const {
    if (im == 0) return std::to_string(re);
    if (re == 0) return (im == 1 ? "" : im == -1 ? "-" : std::to_string(im)) + "i";
    return std::to_string(re) + (im > 0 ? "+" : "-") +
           (im == 1 || im == -1 ? "" : std::to_string(im > 0 ? im : -im)) + "i";
  }
};

inline std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.str(); }

}  // namespace excmono
