#include "berez/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace berez {

namespace {
constexpr int kDegShift = 56;

int shift_of(int var) { return (Mpoly::kMaxVars - var) * 7; }
}  // namespace

Mpoly Mpoly::constant(const Rational& c) {
  Mpoly p;
  if (!berez::is_zero(c)) p.terms_.emplace(Key(0), c);
  return p;
}

Mpoly Mpoly::variable(int var) {
  Mpoly p;
  p.terms_.emplace(key_of_var(var), Rational(1));
  return p;
}

Mpoly::Key Mpoly::key_of_var(int var) {
  if (var < 1 || var > kMaxVars)
    throw std::out_of_range("symbolic mode supports variables z1..z8");
  return (Key(1) << kDegShift) | (Key(1) << shift_of(var));
}

int Mpoly::exponent(Key k, int var) {
  return int((k >> shift_of(var)) & 0x7f);
}

int Mpoly::total_degree(Key k) { return int(k >> kDegShift); }

Mpoly::Key Mpoly::key_mul(Key a, Key b) {
  if (total_degree(a) + total_degree(b) > kMaxExp)
    throw std::overflow_error("monomial degree exceeds packed-key capacity");
  return a + b;
}

bool Mpoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool Mpoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

int Mpoly::total_degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

int Mpoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, exponent(k, var));
  return d;
}

std::uint32_t Mpoly::vars_mask() const {
  std::uint32_t m = 0;
  for (const auto& [k, c] : terms_)
    for (int v = 1; v <= kMaxVars; ++v)
      if (exponent(k, v) > 0) m |= std::uint32_t(1) << (v - 1);
  return m;
}

const Rational& Mpoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading_coeff of zero");
  return terms_.begin()->second;
}

Mpoly::Key Mpoly::leading_key() const {
  if (terms_.empty()) throw std::domain_error("leading_key of zero");
  return terms_.begin()->first;
}

void Mpoly::add_term(Key k, const Rational& c) {
  if (berez::is_zero(c)) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (berez::is_zero(it->second)) terms_.erase(it);
  }
}

Mpoly Mpoly::operator-() const {
  Mpoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Mpoly Mpoly::operator+(const Mpoly& o) const {
  Mpoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Mpoly Mpoly::operator-(const Mpoly& o) const {
  Mpoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, Rational(-c));
  return r;
}

Mpoly Mpoly::operator*(const Mpoly& o) const {
  Mpoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(key_mul(ka, kb), Rational(ca * cb));
  return r;
}

Mpoly Mpoly::scaled(const Rational& c) const {
  Mpoly r;
  if (berez::is_zero(c)) return r;
  for (const auto& [k, x] : terms_) r.terms_.emplace(k, Rational(x * c));
  return r;
}

bool Mpoly::try_div_exact(const Mpoly& d, Mpoly* quotient) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  Mpoly q;
  Mpoly r = *this;
  const Key dk = d.leading_key();
  const Rational& dc = d.leading_coeff();
  while (!r.is_zero()) {
    Key rk = r.leading_key();
    // key divisibility: every exponent of d bounded by the one in r
    bool divisible = true;
    for (int v = 1; v <= kMaxVars; ++v)
      if (exponent(dk, v) > exponent(rk, v)) {
        divisible = false;
        break;
      }
    if (!divisible) return false;
    Key qk = rk - dk;
    Rational qc = r.leading_coeff() / dc;
    q.add_term(qk, qc);
    for (const auto& [k, c] : d.terms_) r.add_term(key_mul(k, qk), Rational(-c * qc));
  }
  *quotient = std::move(q);
  return true;
}

Mpoly Mpoly::div_exact(const Mpoly& d) const {
  Mpoly q;
  if (!try_div_exact(d, &q))
    throw std::domain_error("polynomial division is not exact");
  return q;
}

std::string Mpoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool coeff_shown = false;
    if (k == 0 || a != 1) {
      os << a.get_str();
      coeff_shown = true;
    }
    for (int v = 1; v <= kMaxVars; ++v) {
      int e = exponent(k, v);
      if (e == 0) continue;
      if (coeff_shown) os << "*";
      os << "z" << v;
      if (e > 1) os << "^" << e;
      coeff_shown = true;
    }
  }
  return os.str();
}

namespace {

Mpoly monic(const Mpoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(berez::inv(p.leading_coeff()));
}

int lowest_var(std::uint32_t mask) {
  for (int v = 1; v <= Mpoly::kMaxVars; ++v)
    if (mask & (std::uint32_t(1) << (v - 1))) return v;
  return 0;
}

// Coefficients of p viewed as a univariate polynomial in z_var; index is
// the exponent, entries do not contain z_var.
std::vector<Mpoly> dense_in(const Mpoly& p, int var) {
  std::vector<Mpoly> out(std::size_t(p.degree_in(var)) + 1);
  const int sh = (Mpoly::kMaxVars - var) * 7;
  for (const auto& [k, c] : p.terms()) {
    int e = Mpoly::exponent(k, var);
    Mpoly::Key stripped = k - (Mpoly::Key(e) << sh) - (Mpoly::Key(e) << 56);
    out[std::size_t(e)].add_term(stripped, c);
  }
  return out;
}

Mpoly from_dense(const std::vector<Mpoly>& coeffs, int var) {
  Mpoly r;
  const int sh = (Mpoly::kMaxVars - var) * 7;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    Mpoly::Key vk = (Mpoly::Key(e) << sh) | (Mpoly::Key(e) << 56);
    for (const auto& [k, c] : coeffs[e].terms())
      r.add_term(Mpoly::key_mul(k, vk), c);
  }
  return r;
}

void trim(std::vector<Mpoly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Mpoly content_of(const std::vector<Mpoly>& coeffs) {
  Mpoly g;
  for (const Mpoly& c : coeffs) {
    if (c.is_zero()) continue;
    g = mpoly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

std::vector<Mpoly> divided(const std::vector<Mpoly>& coeffs, const Mpoly& d) {
  std::vector<Mpoly> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) out[i] = coeffs[i].div_exact(d);
  return out;
}

// Pseudo-remainder of A by B, both dense in the main variable.
std::vector<Mpoly> prem(std::vector<Mpoly> r, const std::vector<Mpoly>& b) {
  const Mpoly& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (r.size() >= b.size()) {
    Mpoly lr = r.back();
    std::size_t k = r.size() - 1 - db;
    std::vector<Mpoly> next(r.size() - 1);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      next[i] = r[i] * lb;
      if (i >= k) next[i] = next[i] - b[i - k] * lr;
    }
    r = std::move(next);
    trim(r);
    if (r.empty()) break;
  }
  return r;
}

}  // namespace

Mpoly mpoly_gcd(const Mpoly& a, const Mpoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Mpoly::constant(1);

  std::uint32_t va = a.vars_mask(), vb = b.vars_mask();
  int x = lowest_var(va | vb);
  if (!(va & (std::uint32_t(1) << (x - 1))))
    return mpoly_gcd(a, content_of(dense_in(b, x)));
  if (!(vb & (std::uint32_t(1) << (x - 1))))
    return mpoly_gcd(content_of(dense_in(a, x)), b);

  std::vector<Mpoly> A = dense_in(a, x);
  std::vector<Mpoly> B = dense_in(b, x);
  Mpoly ca = content_of(A), cb = content_of(B);
  A = divided(A, ca);
  B = divided(B, cb);
  Mpoly c = mpoly_gcd(ca, cb);

  if (A.size() < B.size()) std::swap(A, B);
  // primitive PRS
  std::vector<Mpoly> g;
  for (;;) {
    std::vector<Mpoly> R = prem(A, B);
    if (R.empty()) {
      g = B;
      break;
    }
    if (R.size() == 1) {
      g.assign(1, Mpoly::constant(1));
      break;
    }
    Mpoly cr = content_of(R);
    R = divided(R, cr);
    A = std::move(B);
    B = std::move(R);
  }
  Mpoly cg = content_of(g);
  g = divided(g, cg);
  return monic(from_dense(g, x) * c);
}

}  // namespace berez
