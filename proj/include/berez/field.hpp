#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>

#include "berez/prime_field.hpp"
#include "berez/ratfunc.hpp"
#include "berez/rational.hpp"

namespace berez {

// Exact vertex coordinates.  The construction only needs the values to be
// pairwise distinct; that is enforced when a field is built from them.
struct ZetaAssignment {
  std::map<int, Rational> values;  // vertex -> coordinate
};

// Format: one "<vertex> <p>/<q>" (or "<vertex> <n>") per line, '#' comments.
ZetaAssignment parse_zeta_assignment(std::istream& in);
ZetaAssignment parse_zeta_file(const std::string& path);

// Deterministic pseudo-random coordinates, pairwise distinct by rejection.
std::map<int, Rational> random_rational_assignment(const std::set<int>& vertices,
                                                   std::uint64_t seed);
std::map<int, std::uint64_t> random_prime_assignment(const std::set<int>& vertices,
                                                     std::uint64_t seed,
                                                     std::uint64_t p);

class RationalField {
 public:
  using Scalar = Rational;

  explicit RationalField(std::map<int, Rational> zeta);

  Scalar zeta(int i) const;
  Scalar zeta_diff(int i, int j) const;
  Scalar one() const { return Rational(1); }
  Scalar from_int(long n) const { return Rational(n); }

  std::string mode_name() const { return "rational"; }
  std::string describe_zeta() const;

 private:
  std::map<int, Rational> zeta_;
};

class PrimeField {
 public:
  using Scalar = Fp;

  PrimeField(std::uint64_t p, std::map<int, std::uint64_t> zeta);

  Scalar zeta(int i) const;
  Scalar zeta_diff(int i, int j) const;
  Scalar one() const { return Fp{1, p_}; }
  Scalar from_int(long n) const;
  std::uint64_t prime() const { return p_; }

  std::string mode_name() const { return "prime-field"; }
  std::string describe_zeta() const;

 private:
  std::uint64_t p_;
  std::map<int, std::uint64_t> zeta_;
};

// Field of rational functions in the coordinates themselves; vertex i is
// represented by the variable z_i, so at most 8 vertices are supported.
class SymbolicField {
 public:
  using Scalar = RatFunc;

  Scalar zeta(int i) const;
  Scalar zeta_diff(int i, int j) const;
  Scalar one() const { return RatFunc(1); }
  Scalar from_int(long n) const { return RatFunc(n); }

  std::string mode_name() const { return "symbolic"; }
  std::string describe_zeta() const { return "indeterminates z_i"; }
};

}  // namespace berez
