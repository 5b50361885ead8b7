#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "berez/rational.hpp"

namespace berez {

// Sparse multivariate polynomial over the rationals in variables z1..z8.
//
// A monomial is packed into one 64-bit key: the total degree in the top
// byte, then one 7-bit exponent per variable, z1 highest.  Comparing keys
// as integers therefore gives graded lexicographic order, and multiplying
// monomials is key addition.
class Mpoly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExp = 127;

  Mpoly() = default;
  static Mpoly constant(const Rational& c);
  static Mpoly constant(long c) { return constant(Rational(c)); }
  static Mpoly variable(int var);  // var in 1..kMaxVars

  static Key key_of_var(int var);
  static int exponent(Key k, int var);
  static int total_degree(Key k);
  static Key key_mul(Key a, Key b);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  std::uint32_t vars_mask() const;  // bit v-1 set iff z_v occurs

  const Rational& leading_coeff() const;  // grlex-leading term
  Key leading_key() const;

  Mpoly operator-() const;
  Mpoly operator+(const Mpoly& o) const;
  Mpoly operator-(const Mpoly& o) const;
  Mpoly operator*(const Mpoly& o) const;
  Mpoly scaled(const Rational& c) const;
  void add_term(Key k, const Rational& c);

  bool operator==(const Mpoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Mpoly& o) const { return !(*this == o); }

  // Exact division; throws std::domain_error when the division leaves a
  // remainder or the divisor is zero.
  Mpoly div_exact(const Mpoly& d) const;
  bool try_div_exact(const Mpoly& d, Mpoly* quotient) const;

  std::string str() const;

  const std::map<Key, Rational, std::greater<Key>>& terms() const {
    return terms_;
  }

 private:
  // Leading term first.
  std::map<Key, Rational, std::greater<Key>> terms_;
};

// Gcd up to a scalar; the result is returned monic (leading coefficient 1).
// gcd(0, b) is monic(b), gcd(0, 0) is 0.
Mpoly mpoly_gcd(const Mpoly& a, const Mpoly& b);

}  // namespace berez
