#include "excmono/a1lab.hpp"

#include <numeric>
#include <sstream>

#include "excmono/errors.hpp"

namespace excmono {

namespace {

using Elem = FiniteField::Elem;
using Poly = std::vector<Elem>;  // low degree first

Elem eval(const FiniteField& f, const Poly& p, Elem x) {
  Elem v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = f.add(f.mul(v, x), p[k]);
  return v;
}

// Multiplicity of the root a of p (p nonzero).
int valuation(const FiniteField& f, Poly p, Elem a) {
  int v = 0;
  while (p.size() > 1 && eval(f, p, a) == 0) {
    // synthetic division by (x - a)
    Poly q(p.size() - 1);
    Elem carry = 0;
    for (std::size_t k = p.size() - 1; k-- > 0;) {
      carry = f.add(p[k + 1], f.mul(carry, a));
      q[k] = carry;
    }
    p = q;
    ++v;
  }
  return v;
}

int degree(const Poly& p) {
  for (std::size_t k = p.size(); k-- > 0;)
    if (p[k] != 0) return static_cast<int>(k);
  return -1;
}

std::int64_t real_part_checked(const GaussInt& z, const char* what) {
  if (!z.is_real()) throw ConsistencyError(std::string(what) + " is not an integer");
  return z.re;
}

}  // namespace

A1Lab::A1Lab(std::uint64_t q) : field_(FiniteField::make(q)) {
  if (field_.q() % 4 != 1) throw FieldError("q = " + std::to_string(q) + " is not 1 mod 4; chi of order 4 does not exist");
  fourth_roots_.assign(field_.q(), 0);
  square_roots_.assign(field_.q(), 0);
  for (Elem y = 0; y < field_.q(); ++y) {
    const Elem y2 = field_.mul(y, y);
    ++square_roots_[y2];
    ++fourth_roots_[field_.mul(y2, y2)];
  }
}

void A1Lab::check_lambda(Elem lambda) const {
  if (lambda >= field_.q()) throw ConfigurationError("lambda is not a field element");
  if (lambda == 0 || lambda == 1) throw DegenerateFiberError("lambda must avoid 0 and 1");
}

Elem A1Lab::f_value(Elem lambda, Elem x) const {
  const FiniteField& f = field_;
  const Elem lx = f.mul(lambda, x);
  return f.div(f.sub(lx, 1), f.mul(lx, f.sub(x, 1)));
}

GaussInt A1Lab::trace_sum(Elem lambda, int j) const {
  check_lambda(lambda);
  const Elem bad = field_.inv(lambda);
  GaussInt t;
  for (Elem x = 0; x < field_.q(); ++x) {
    if (x == 0 || x == 1 || x == bad) continue;
    t += field_.chi(f_value(lambda, x), j);
  }
  return t;
}

GaussInt A1Lab::trace_sum_ext(Elem lambda, int j) const {
  check_lambda(lambda);
  const FiniteField& f = field_;
  const QuadraticExtension ext(f);
  const QuadraticExtension::Elem lam{lambda, 0}, one{1, 0};
  const QuadraticExtension::Elem bad{f.inv(lambda), 0};
  GaussInt t;
  for (std::uint64_t idx = 0; idx < ext.size(); ++idx) {
    const auto x = ext.element(idx);
    if (x == QuadraticExtension::Elem{0, 0} || x == one || x == bad) continue;
    const auto lx = ext.mul(lam, x);
    const auto val = ext.mul(ext.sub(lx, one), ext.inv(ext.mul(lx, ext.sub(x, one))));
    t += f.chi(ext.norm(val), j);
  }
  return t;
}

std::vector<RamifiedPoint> A1Lab::ramified_points(Elem lambda) const {
  check_lambda(lambda);
  const FiniteField& f = field_;
  const Poly num{f.neg(1), lambda};                    // lambda x - 1
  const Poly den{0, f.neg(lambda), lambda};            // lambda x^2 - lambda x
  std::vector<RamifiedPoint> out;
  const std::vector<std::pair<std::string, Elem>> finite{{"0", 0}, {"1", 1}, {"1/lambda", f.inv(lambda)}};
  for (const auto& [name, a] : finite) out.push_back({name, valuation(f, num, a) - valuation(f, den, a), 0});
  out.push_back({"inf", degree(den) - degree(num), 0});
  for (auto& pt : out) {
    const int g = std::gcd(4, std::abs(pt.order));
    if (pt.order == 0 || g != 1) throw ConsistencyError("unexpected ramification at " + pt.where);
    pt.points = g;
  }
  return out;
}

std::int64_t A1Lab::smooth_point_count(Elem lambda) const {
  std::int64_t n = 0;
  for (const auto& pt : ramified_points(lambda)) n += pt.points;
  const Elem bad = field_.inv(lambda);
  for (Elem x = 0; x < field_.q(); ++x) {
    if (x == 0 || x == 1 || x == bad) continue;
    GaussInt fibre;
    const Elem v = f_value(lambda, x);
    for (int j = 0; j < 4; ++j) fibre += field_.chi(v, j);
    n += real_part_checked(fibre, "fibre size");
  }
  return n;
}

std::int64_t A1Lab::elliptic_count(Elem lambda) const {
  // y^2 = f(x): same four branch points, each of odd order, one point each
  std::int64_t n = 0;
  for (const auto& pt : ramified_points(lambda)) n += std::gcd(2, std::abs(pt.order)) == 1 ? 1 : 2;
  const Elem bad = field_.inv(lambda);
  for (Elem x = 0; x < field_.q(); ++x) {
    if (x == 0 || x == 1 || x == bad) continue;
    n += square_roots_[f_value(lambda, x)];
  }
  return n;
}

TraceRecord A1Lab::record(Elem lambda, int primary_power) const {
  check_lambda(lambda);
  if (primary_power != 1 && primary_power != 3) throw ConfigurationError("primary character must be chi or its conjugate");
  const int conj_power = 4 - primary_power;
  TraceRecord r;
  r.q = field_.q();
  r.lambda = lambda;
  r.t1 = trace_sum(lambda, primary_power);
  r.t2 = trace_sum(lambda, 2);
  r.t3 = trace_sum(lambda, conj_power);
  r.n_points = real_part_checked(GaussInt(r.q + 1) + r.t1 + r.t2 + r.t3, "Lefschetz sum");
  r.n_points_direct = 0;
  for (const auto& pt : ramified_points(lambda)) r.n_points_direct += pt.points;
  const Elem bad = field_.inv(lambda);
  for (Elem x = 0; x < field_.q(); ++x) {
    if (x == 0 || x == 1 || x == bad) continue;
    const Elem v = f_value(lambda, x);
    r.n_points_direct += fourth_roots_[v];
    GaussInt fibre;
    for (int j = 0; j < 4; ++j) fibre += field_.chi(v, j);
    if (!(fibre == GaussInt(fourth_roots_[v]))) ++r.fibre_mismatches;
  }
  r.elliptic_count = elliptic_count(lambda);
  r.t1_ext = trace_sum_ext(lambda, primary_power);
  r.t3_ext = trace_sum_ext(lambda, conj_power);
  auto sym2 = [](const GaussInt& t, const GaussInt& t_ext) {
    const GaussInt twice = t * t - t_ext;
    if (twice.re % 2 != 0 || twice.im % 2 != 0) throw ConsistencyError("t^2 - t_ext is not divisible by 2");
    return GaussInt{twice.re / 2, twice.im / 2};
  };
  r.s = sym2(r.t1, r.t1_ext);
  r.s_conj = sym2(r.t3, r.t3_ext);
  return r;
}

std::vector<TraceRecord> A1Lab::all_records() const {
  std::vector<TraceRecord> out;
  for (Elem lambda = 2; lambda < field_.q(); ++lambda) out.push_back(record(lambda));
  return out;
}

std::string TraceRecord::sym2_over_q() const {
  if (!s.is_real()) return "nonreal";
  const std::int64_t g = std::gcd(s.re, static_cast<std::int64_t>(q));
  const std::int64_t num = s.re / g, den = static_cast<std::int64_t>(q) / g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<std::pair<std::string, bool>> TraceRecord::checks() const {
  const std::int64_t qq = q;
  const bool s_real = s.is_real();
  return {
      {"t3 = conj(t1)", t3 == t1.conj()},
      {"t2 real", t2.is_real()},
      {"Lefschetz count matches enumeration", n_points == n_points_direct},
      {"fibre sizes match character sums", fibre_mismatches == 0},
      {"Weil |t1|^2 <= 4q", t1.norm() <= 4 * qq},
      {"Weil |t2|^2 <= 4q", t2.norm() <= 4 * qq},
      {"Weil |t3|^2 <= 4q", t3.norm() <= 4 * qq},
      {"genus 3 bound (#C-q-1)^2 <= 36q", (n_points - qq - 1) * (n_points - qq - 1) <= 36 * qq},
      {"Legendre q+1+t2 = elliptic count", t2.is_real() && qq + 1 + t2.re == elliptic_count},
      {"Sym2 s = s_conj", s == s_conj},
      {"Sym2 s integral", s_real},
      {"Sym2 q | s", s_real && s.re % qq == 0},
      {"Sym2 -q <= s <= 3q", s_real && -qq <= s.re && s.re <= 3 * qq},
  };
}

bool TraceRecord::all_checks_pass() const {
  for (const auto& [name, ok] : checks())
    if (!ok) return false;
  return true;
}

nlohmann::json TraceRecord::to_json() const {
  nlohmann::json j;
  j["q"] = q;
  j["lambda"] = lambda;
  j["t1"] = {{"re", t1.re}, {"im", t1.im}};
  j["t2"] = t2.re;
  j["t3"] = {{"re", t3.re}, {"im", t3.im}};
  j["n_points"] = n_points;
  j["n_points_direct"] = n_points_direct;
  j["elliptic_count"] = elliptic_count;
  j["t1_ext"] = {{"re", t1_ext.re}, {"im", t1_ext.im}};
  j["sym2"] = s.re;
  j["sym2_conj"] = s_conj.re;
  j["sym2_over_q"] = sym2_over_q();
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [name, ok] : checks()) c[name] = ok;
  j["checks"] = c;
  return j;
}

std::vector<TraceRecord> a1_scan(const std::vector<std::uint64_t>& qs) {
  std::vector<TraceRecord> out;
  for (std::uint64_t q : qs) {
    const A1Lab lab(q);
    for (auto& r : lab.all_records()) out.push_back(std::move(r));
  }
  return out;
}

std::string a1_csv(const std::vector<TraceRecord>& rows) {
  std::ostringstream os;
  os << "q,lambda,t1_re,t1_im,t2,t3_re,t3_im,n_points,sym2,sym2_over_q\n";
  for (const auto& r : rows)
    os << r.q << ',' << r.lambda << ',' << r.t1.re << ',' << r.t1.im << ',' << r.t2.re << ',' << r.t3.re << ','
       << r.t3.im << ',' << r.n_points << ',' << r.s.re << ',' << r.sym2_over_q() << '\n';
  return os.str();
}

}  // namespace excmono
