#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nk/numutil.hpp"

namespace nk {

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// Values are stored as sparse polynomials in zeta_N, reduced modulo the
/// N-th cyclotomic polynomial, so exponents stay below phi(N). A value whose
/// reduced support is {0} is demoted to conductor 1; beyond that no conductor
/// minimization happens. Equality embeds both operands into Q(zeta_lcm)
/// before comparing, so it is equality of field values.
class Cyc {
 public:
  Cyc() : cond_(1) {}
  Cyc(long long n) : cond_(1) {
    if (n != 0) c_.emplace_back(0, mpq_class(n));
  }
  explicit Cyc(const mpq_class& q) : cond_(1) {
    if (q != 0) c_.emplace_back(0, q);
  }

  /// zeta_N^k, canonical.
  static Cyc root_of_unity(long long k, long long N);
  static Cyc one() { return Cyc(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const { return c_.empty() || (c_.size() == 1 && c_[0].first == 0); }
  mpq_class rational() const;  // throws if not rational
  long long conductor() const { return cond_; }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator-() const;
  Cyc inverse() const;  // throws on zero
  Cyc pow(long long e) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// Multiplicative order if this is a root of unity.
  std::optional<long long> order_as_root_of_unity() const;

  /// Writes a root of unity as (k, N) with value zeta_N^k, N the order.
  std::optional<std::pair<long long, long long>> as_root_of_unity() const;

  /// Deterministic square root of a root of unity: of the two square roots
  /// of zeta_d^t, returns the one with the smaller exponent in Q(zeta_2d).
  Cyc sqrt_of_root_of_unity() const;

  /// Value-preserving embedding into Q(zeta_M); M must be a multiple of the
  /// conductor.
  Cyc embed(long long M) const;

  const std::vector<std::pair<long long, mpq_class>>& coeffs() const { return c_; }

  std::string str() const;

  /// Total order usable for deterministic tie-breaking (compares canonical
  /// data after embedding into the common field).
  static int cmp(const Cyc& a, const Cyc& b);

 private:
  long long cond_;
  // sorted by exponent, no zero values, exponents < phi(cond_)
  std::vector<std::pair<long long, mpq_class>> c_;

  void reduce_mod_phi(std::map<long long, mpq_class>& poly) const;
  static Cyc from_poly(long long N, std::map<long long, mpq_class>&& poly);
  friend struct CycBuilder;
};

inline Cyc operator*(long long n, const Cyc& c) { return Cyc(n) * c; }

}  // namespace nk
