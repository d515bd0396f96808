#include "nk/cyc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace nk {

std::vector<long long> cyclotomic_polynomial(long long N) {
  static std::unordered_map<long long, std::vector<long long>> memo;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
  }
  if (N > 10000) throw budget("cyclotomic polynomial conductor too large");
  // numerator x^N - 1
  std::vector<long long> num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (long long d : divisors_of(N)) {
    if (d == N) continue;
    std::vector<long long> phi_d = cyclotomic_polynomial(d);
    // exact polynomial division num /= phi_d (monic divisor)
    std::vector<long long> q(num.size() - phi_d.size() + 1, 0);
    for (long long i = (long long)q.size() - 1; i >= 0; --i) {
      long long lead = num[i + phi_d.size() - 1];
      q[i] = lead;
      if (lead != 0)
        for (size_t j = 0; j < phi_d.size(); ++j) num[i + j] -= lead * phi_d[j];
    }
    num = q;
  }
  {
    std::lock_guard<std::mutex> lock(mtx);
    memo[N] = num;
    return memo[N];
  }
}

void Cyc::reduce_mod_phi(std::map<long long, mpq_class>& poly) const {
  const std::vector<long long> phi = cyclotomic_polynomial(cond_);
  const long long d = (long long)phi.size() - 1;
  while (!poly.empty()) {
    auto it = std::prev(poly.end());
    long long e = it->first;
    if (e < d) break;
    mpq_class lead = it->second;
    poly.erase(it);
    for (long long j = 0; j < d; ++j) {
      if (phi[j] == 0) continue;
      mpq_class& slot = poly[e - d + j];
      slot -= lead * phi[j];
      if (slot == 0) poly.erase(e - d + j);
    }
  }
}

Cyc Cyc::from_poly(long long N, std::map<long long, mpq_class>&& poly) {
  Cyc r;
  r.cond_ = N;
  r.reduce_mod_phi(poly);
  for (auto& [e, v] : poly)
    if (v != 0) r.c_.emplace_back(e, v);
  if (r.c_.empty() || (r.c_.size() == 1 && r.c_[0].first == 0)) r.cond_ = 1;
  return r;
}

Cyc Cyc::root_of_unity(long long k, long long N) {
  if (N < 1) throw invalid("root_of_unity: N must be positive");
  k = mod_pos(k, N);
  std::map<long long, mpq_class> poly;
  poly[k] = 1;
  Cyc r;
  r.cond_ = N;
  r.reduce_mod_phi(poly);
  for (auto& [e, v] : poly)
    if (v != 0) r.c_.emplace_back(e, v);
  if (r.c_.empty() || (r.c_.size() == 1 && r.c_[0].first == 0)) r.cond_ = 1;
  return r;
}

bool Cyc::is_one() const {
  return c_.size() == 1 && c_[0].first == 0 && c_[0].second == 1;
}

mpq_class Cyc::rational() const {
  if (c_.empty()) return mpq_class(0);
  if (!is_rational()) throw invalid("Cyc::rational on a non-rational value");
  return c_[0].second;
}

Cyc Cyc::embed(long long M) const {
  if (M == cond_) return *this;
  if (M % cond_ != 0) throw invalid("Cyc::embed: target is not a multiple of the conductor");
  long long f = M / cond_;
  std::map<long long, mpq_class> poly;
  for (auto& [e, v] : c_) poly[e * f] = v;
  return from_poly(M, std::move(poly));
}

Cyc Cyc::operator+(const Cyc& o) const {
  long long M = lcm_ll(cond_, o.cond_);
  Cyc a = embed(M), b = o.embed(M);
  std::map<long long, mpq_class> poly;
  for (auto& [e, v] : a.c_) poly[e] += v;
  for (auto& [e, v] : b.c_) {
    mpq_class& slot = poly[e];
    slot += v;
    if (slot == 0) poly.erase(e);
  }
  return from_poly(M, std::move(poly));
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (is_zero() || o.is_zero()) return Cyc();
  long long M = lcm_ll(cond_, o.cond_);
  Cyc a = embed(M), b = o.embed(M);
  std::map<long long, mpq_class> poly;
  for (auto& [ea, va] : a.c_)
    for (auto& [eb, vb] : b.c_) {
      mpq_class& slot = poly[ea + eb];
      slot += va * vb;
      if (slot == 0) poly.erase(ea + eb);
    }
  return from_poly(M, std::move(poly));
}

namespace {
// dense rational polynomial helpers for the inverse computation
using QPoly = std::vector<mpq_class>;

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qp_trim(a);
  return a;
}

// division with remainder; returns quotient, a becomes the remainder
QPoly qp_divmod(QPoly& a, const QPoly& b) {
  QPoly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] += c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qp_trim(a);  // the leading term cancels, so a strictly shrinks
  }
  return q;
}
}  // namespace

Cyc Cyc::inverse() const {
  if (is_zero()) throw invalid("division by zero in Q(zeta_N)");
  if (is_rational()) {
    Cyc r;
    r.cond_ = 1;
    r.c_.emplace_back(0, mpq_class(1) / c_[0].second);
    return r;
  }
  // extended Euclid in Q[x] for (this, Phi_N): s*this + t*Phi = 1
  const std::vector<long long> phi_i = cyclotomic_polynomial(cond_);
  QPoly r0(phi_i.begin(), phi_i.end());
  QPoly r1;
  {
    long long dmax = 0;
    for (auto& [e, v] : c_) dmax = std::max(dmax, e);
    r1.assign(dmax + 1, mpq_class(0));
    for (auto& [e, v] : c_) r1[e] = v;
  }
  QPoly s0 = {}, s1 = {mpq_class(1)};  // coefficients of `this`
  while (true) {
    QPoly rem = r0;
    QPoly q = qp_divmod(rem, r1);
    if (rem.empty()) {
      // r1 is the gcd; it must be a nonzero constant since Phi_N is
      // irreducible and this is nonzero of smaller degree
      if (r1.size() != 1) throw Error(Error::internal, "cyclotomic inverse: non-constant gcd");
      QPoly inv = s1;
      for (auto& v : inv) v /= r1[0];
      std::map<long long, mpq_class> poly;
      for (size_t i = 0; i < inv.size(); ++i)
        if (inv[i] != 0) poly[(long long)i] = inv[i];
      return from_poly(cond_, std::move(poly));
    }
    QPoly s2 = qp_sub(s0, qp_mul(q, s1));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
}

Cyc Cyc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc base = *this, acc = Cyc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Cyc::operator==(const Cyc& o) const {
  long long M = lcm_ll(cond_, o.cond_);
  Cyc a = embed(M), b = o.embed(M);
  return a.c_ == b.c_;
}

int Cyc::cmp(const Cyc& a, const Cyc& b) {
  long long M = lcm_ll(a.cond_, b.cond_);
  Cyc x = a.embed(M), y = b.embed(M);
  if (x.c_.size() != y.c_.size()) return x.c_.size() < y.c_.size() ? -1 : 1;
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].first != y.c_[i].first) return x.c_[i].first < y.c_[i].first ? -1 : 1;
    int c = ::cmp(x.c_[i].second, y.c_[i].second);
    if (c != 0) return c;
  }
  return 0;
}

std::optional<long long> Cyc::order_as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  long long R = lcm_ll(2, cond_);  // group of roots of unity in Q(zeta_N)
  if (pow(R) != Cyc(1)) return std::nullopt;
  long long d = R;
  for (long long p : prime_factors(R))
    while (d % p == 0 && pow(d / p) == Cyc(1)) d /= p;
  return d;
}

std::optional<std::pair<long long, long long>> Cyc::as_root_of_unity() const {
  auto ord = order_as_root_of_unity();
  if (!ord) return std::nullopt;
  long long d = *ord;
  for (long long k = 0; k < d; ++k)
    if (*this == root_of_unity(k, d)) return std::make_pair(k, d);
  return std::nullopt;  // unreachable
}

Cyc Cyc::sqrt_of_root_of_unity() const {
  auto ru = as_root_of_unity();
  if (!ru) throw invalid("sqrt_of_root_of_unity: not a root of unity");
  auto [t, d] = *ru;
  long long a = mod_pos(t, 2 * d), b = mod_pos(t + d, 2 * d);
  long long e = std::min(a, b);
  Cyc r = root_of_unity(e, 2 * d);
  if (r * r != *this) throw Error(Error::internal, "sqrt_of_root_of_unity");
  return r;
}

std::string Cyc::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << v.get_str();
    if (e > 0) os << "*z" << cond_ << "^" << e;
  }
  return os.str();
}

}  // namespace nk
