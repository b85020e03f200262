#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "excmono/a1lab.hpp"
#include "excmono/errors.hpp"
#include "excmono/finite_field.hpp"
#include "oracles.hpp"

using namespace excmono;

namespace {

const std::vector<std::uint64_t> kPrimes{5, 13, 17, 29};

// f(x) = (lambda x - 1) / (lambda x (x - 1)) over F_p, x outside {0, 1, 1/lambda}.
std::int64_t f_mod_p(std::int64_t lambda, std::int64_t x, std::int64_t p) {
  const std::int64_t num = ((lambda * x - 1) % p + p) % p;
  const std::int64_t den = lambda * x % p * ((x - 1 + p) % p) % p;
  return num * oracle::powmod(den, p - 2, p) % p;
}

bool bad_x(std::int64_t lambda, std::int64_t x, std::int64_t p) { return x == 0 || x == 1 || lambda * x % p == 1; }

}  // namespace

TEST_CASE("finite fields: axioms and primitive element") {
  for (std::uint64_t q : {5u, 9u, 25u, 27u, 49u, 81u, 121u}) {
    CAPTURE(q);
    const FiniteField f = FiniteField::make(q);
    CHECK(f.q() == q);
    std::set<FiniteField::Elem> powers;
    for (std::uint64_t k = 0; k + 1 < q; ++k) powers.insert(f.exp(k));
    CHECK(powers.size() == q - 1);
    CHECK(f.pow(f.generator(), q - 1) == f.one());
    std::mt19937 rng(3);
    std::uniform_int_distribution<FiniteField::Elem> pick(0, static_cast<FiniteField::Elem>(q - 1));
    for (int t = 0; t < 300; ++t) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.add(a, f.neg(a)) == f.zero());
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == f.one());
      if (a != 0) REQUIRE(f.exp(f.log(a)) == a);
    }
  }
  CHECK_THROWS_AS(FiniteField::make(15), FieldError);
  CHECK_THROWS_AS(FiniteField::make(2), FieldError);
}

TEST_CASE("quadratic extension: norm is multiplicative") {
  for (std::uint64_t q : {5u, 9u, 13u}) {
    const FiniteField f = FiniteField::make(q);
    const QuadraticExtension e(f);
    CHECK(e.size() == q * q);
    CHECK(f.pow(e.nonsquare(), (q - 1) / 2) != f.one());
    for (std::uint64_t i = 1; i < e.size(); i += 3)
      for (std::uint64_t j = 1; j < e.size(); j += 7) {
        const auto x = e.element(i), y = e.element(j);
        REQUIRE(e.norm(e.mul(x, y)) == f.mul(e.norm(x), e.norm(y)));
      }
  }
}

TEST_CASE("A1 lab needs q = 1 mod 4") {
  CHECK_THROWS_AS(A1Lab(7), FieldError);
  CHECK_THROWS_AS(A1Lab(11), FieldError);
  CHECK_NOTHROW(A1Lab(9));
}

TEST_CASE("point counts against direct enumeration over F_p") {
  for (std::uint64_t q : kPrimes) {
    const auto p = static_cast<std::int64_t>(q);
    const A1Lab lab(q);
    std::vector<int> fourth(static_cast<std::size_t>(p), 0);
    for (std::int64_t y = 0; y < p; ++y) ++fourth[static_cast<std::size_t>(oracle::powmod(y, 4, p))];
    for (std::int64_t lambda = 2; lambda < p; ++lambda) {
      CAPTURE(q);
      CAPTURE(lambda);
      const TraceRecord r = lab.record(static_cast<FiniteField::Elem>(lambda));
      std::int64_t affine = 0, t2 = 0;
      for (std::int64_t x = 0; x < p; ++x) {
        if (bad_x(lambda, x, p)) continue;
        const auto v = f_mod_p(lambda, x, p);
        affine += fourth[static_cast<std::size_t>(v)];
        t2 += oracle::legendre(v, p);
      }
      std::int64_t ramified = 0;
      for (const auto& pt : lab.ramified_points(static_cast<FiniteField::Elem>(lambda))) ramified += pt.points;
      CHECK(r.n_points == affine + ramified);
      CHECK(r.n_points_direct == affine + ramified);
      CHECK(r.t2 == GaussInt{t2, 0});
      CHECK(r.fibre_mismatches == 0);
      CHECK(ramified == 4);
    }
  }
}

TEST_CASE("per-record identities") {
  for (std::uint64_t q : {5u, 9u, 13u, 17u, 25u, 29u}) {
    const A1Lab lab(q);
    for (const auto& r : lab.all_records()) {
      CAPTURE(q);
      CAPTURE(r.lambda);
      CHECK(r.t3 == r.t1.conj());
      CHECK(r.t2.is_real());
      CHECK(r.n_points == static_cast<std::int64_t>(q) + 1 + (r.t1 + r.t2 + r.t3).re);
      CHECK(r.t1.norm() <= 4 * static_cast<std::int64_t>(q));
      CHECK(r.t2.norm() <= 4 * static_cast<std::int64_t>(q));
      CHECK(static_cast<std::int64_t>(q) + 1 + r.t2.re == r.elliptic_count);
      CHECK(r.s == r.s_conj);
      CHECK(r.s.is_real());
    }
  }
}

TEST_CASE("the conjugate character swaps t1 and t3 and fixes s") {
  for (std::uint64_t q : kPrimes) {
    const A1Lab lab(q);
    for (FiniteField::Elem lambda = 2; lambda < q; ++lambda) {
      const TraceRecord a = lab.record(lambda, 1), b = lab.record(lambda, 3);
      CHECK(b.t1 == a.t3);
      CHECK(b.t3 == a.t1);
      CHECK(b.s == a.s);
    }
  }
}

TEST_CASE("Sym2 trace is divisible by q with s/q in [-1, 3]") {
  for (std::uint64_t q : kPrimes) {
    const A1Lab lab(q);
    for (const auto& r : lab.all_records()) {
      CAPTURE(q);
      CAPTURE(r.lambda);
      CAPTURE(r.s);
      CHECK(r.s.re % static_cast<std::int64_t>(q) == 0);
      CHECK(r.s.re >= -static_cast<std::int64_t>(q));
      CHECK(r.s.re <= 3 * static_cast<std::int64_t>(q));
    }
  }
}

TEST_CASE("degenerate lambda is rejected") {
  const A1Lab lab(13);
  CHECK_THROWS(lab.record(0));
  CHECK_THROWS(lab.record(1));
}

TEST_CASE("CSV layout") {
  const auto rows = a1_scan({5});
  CHECK(rows.size() == 3);
  const std::string csv = a1_csv(rows);
  CHECK(csv.rfind("q,lambda,t1_re,t1_im,t2,t3_re,t3_im,n_points,sym2,sym2_over_q\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
