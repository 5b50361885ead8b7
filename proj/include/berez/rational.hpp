#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace berez {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

inline Rational inv(const Rational& x) {
  if (is_zero(x)) throw std::domain_error("inversion of zero");
  return Rational(1) / x;
}

inline std::string str(const Rational& x) { return x.get_str(); }

}  // namespace berez
