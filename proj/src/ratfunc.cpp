#include "berez/ratfunc.hpp"

#include <stdexcept>

namespace berez {

RatFunc::RatFunc(Mpoly num, Mpoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Mpoly::constant(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_.scaled(berez::inv(den_.leading_coeff()));
      den_ = Mpoly::constant(1);
    }
    return;
  }
  Mpoly g = mpoly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(berez::inv(den_.leading_coeff()));
    den_ = Mpoly::constant(1);
  } else {
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
      Rational s = berez::inv(lc);
      num_ = num_.scaled(s);
      den_ = den_.scaled(s);
    }
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  RatFunc r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.reduce();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  RatFunc r;
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.reduce();
  return r;
}

RatFunc inv(const RatFunc& x) {
  if (is_zero(x)) throw std::domain_error("inversion of zero");
  return RatFunc(x.den(), x.num());
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace berez
