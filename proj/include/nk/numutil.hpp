#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nk {

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

inline long long euler_phi(long long n) {
  long long result = n, m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long long> divisors_of(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

inline std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Coefficients of the N-th cyclotomic polynomial, index = exponent.
// Computed by exact division of x^N - 1 by the Phi_d for proper divisors d.
// int64 coefficients are exact for every N this library will ever see
// (first coefficient outside {-2..2} appears at N = 385).
std::vector<long long> cyclotomic_polynomial(long long N);

inline long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

struct Error : std::runtime_error {
  enum Kind { invalid_input = 2, budget_exceeded = 3, verification_failed = 1, internal = 4 };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error invalid(const std::string& m) { return Error(Error::invalid_input, m); }
inline Error budget(const std::string& m) { return Error(Error::budget_exceeded, m); }

}  // namespace nk
