#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace berez {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

// Residue mod p.  The modulus travels with the value so that elements of
// different prime fields can never be mixed silently.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p == b.p && a.v == b.v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline void check_same_prime(const Fp& a, const Fp& b) {
  if (a.p == 0 || a.p != b.p)
    throw std::invalid_argument("prime-field elements over different primes");
}

inline Fp operator+(const Fp& a, const Fp& b) {
  check_same_prime(a, b);
  std::uint64_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return Fp{s, a.p};
}

inline Fp operator-(const Fp& a, const Fp& b) {
  check_same_prime(a, b);
  std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
  return Fp{s, a.p};
}

inline Fp operator-(const Fp& a) {
  Fp r = a;
  if (r.v != 0) r.v = r.p - r.v;
  return r;
}

inline Fp operator*(const Fp& a, const Fp& b) {
  check_same_prime(a, b);
  return Fp{mul_mod(a.v, b.v, a.p), a.p};
}

inline bool is_zero(const Fp& x) { return x.v == 0; }
inline bool is_one(const Fp& x) { return x.v == 1; }

inline Fp inv(const Fp& x) {
  if (x.v == 0) throw std::domain_error("inversion of zero");
  return Fp{pow_mod(x.v, x.p - 2, x.p), x.p};
}

inline std::string str(const Fp& x) { return std::to_string(x.v); }

}  // namespace berez
