#pragma once

#include <string>

#include "berez/mpoly.hpp"

namespace berez {

// Rational function in z1..z8 over Q, kept reduced: gcd(num, den) = 1 and
// den monic in grlex order.  Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Mpoly::constant(1)) {}
  explicit RatFunc(Mpoly num) : num_(std::move(num)), den_(Mpoly::constant(1)) {}
  RatFunc(Mpoly num, Mpoly den);
  explicit RatFunc(long n) : RatFunc(Mpoly::constant(n)) {}

  static RatFunc variable(int var) { return RatFunc(Mpoly::variable(var)); }

  const Mpoly& num() const { return num_; }
  const Mpoly& den() const { return den_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void reduce();

  Mpoly num_, den_;
};

inline bool is_zero(const RatFunc& x) { return x.num().is_zero(); }
inline bool is_one(const RatFunc& x) {
  return x.num().is_one() && x.den().is_one();
}
RatFunc inv(const RatFunc& x);
inline std::string str(const RatFunc& x) { return x.str(); }

}  // namespace berez
