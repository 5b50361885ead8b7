#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "berez/prime_field.hpp"
#include "berez/ratfunc.hpp"
#include "berez/rational.hpp"

namespace berez {

using Tet = std::array<int, 4>;  // strictly increasing vertex numbers

// Registry of Grassmann generators: every tetrahedron carries a pair
// (a, b).  Tetrahedra are registered in lexicographic order with a before
// b, so indices are stable for a given tetrahedron set.
class GeneratorTable {
 public:
  static constexpr int kMaxGenerators = 64;

  static GeneratorTable for_tetrahedra(std::vector<Tet> tets);

  int index(const Tet& tet, char ab) const;  // throws if unregistered
  bool contains(const Tet& tet) const;
  const Tet& tet_of(int index) const { return tets_.at(std::size_t(index) / 2); }
  char ab_of(int index) const { return index % 2 == 0 ? 'a' : 'b'; }
  int size() const { return int(tets_.size()) * 2; }
  int tet_count() const { return int(tets_.size()); }
  const std::vector<Tet>& tets() const { return tets_; }

  std::string name(int index) const;  // e.g. "a1234"

 private:
  std::vector<Tet> tets_;        // sorted; generator 2*i is a, 2*i+1 is b
  std::map<Tet, int> tet_slot_;
};

// Sparse Grassmann algebra element.  A monomial is the bitset of its
// generator indices, standing for the product in increasing index order;
// no zero coefficient is ever stored.
template <class S>
class GrassmannElement {
 public:
  using Mask = std::uint64_t;

  explicit GrassmannElement(const GeneratorTable& table) : table_(&table) {}

  static GrassmannElement unit(const GeneratorTable& table, const S& one) {
    GrassmannElement e(table);
    e.add_term(0, one);
    return e;
  }
  static GrassmannElement monomial(const GeneratorTable& table, Mask m,
                                   const S& coeff) {
    GrassmannElement e(table);
    e.add_term(m, coeff);
    return e;
  }

  const GeneratorTable& table() const { return *table_; }
  const std::map<Mask, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Mask m, const S& c) {
    if (berez::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      S s = it->second + c;
      if (berez::is_zero(s))
        terms_.erase(it);
      else
        it->second = s;
    }
  }

  bool operator==(const GrassmannElement& o) const {
    return terms_ == o.terms_;
  }
  bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

 private:
  const GeneratorTable* table_;
  std::map<Mask, S> terms_;
};

namespace detail {
inline void check_same_table(const GeneratorTable* a, const GeneratorTable* b) {
  if (a != b)
    throw std::invalid_argument("elements over different generator tables");
}

// number of pairs (g in x, h in y) with index(g) > index(h)
inline int inversions(std::uint64_t x, std::uint64_t y) {
  int n = 0;
  while (y) {
    std::uint64_t bit = y & (0 - y);
    y &= y - 1;
    n += std::popcount(x & ~((bit << 1) - 1));
  }
  return n;
}
}  // namespace detail

template <class S>
GrassmannElement<S> g_add(const GrassmannElement<S>& x,
                          const GrassmannElement<S>& y) {
  detail::check_same_table(&x.table(), &y.table());
  GrassmannElement<S> r = x;
  for (const auto& [m, c] : y.terms()) r.add_term(m, c);
  return r;
}

template <class S>
GrassmannElement<S> g_neg(const GrassmannElement<S>& x) {
  GrassmannElement<S> r(x.table());
  for (const auto& [m, c] : x.terms()) r.add_term(m, -c);
  return r;
}

template <class S>
GrassmannElement<S> g_sub(const GrassmannElement<S>& x,
                          const GrassmannElement<S>& y) {
  return g_add(x, g_neg(y));
}

template <class S>
GrassmannElement<S> scalar_mul(const GrassmannElement<S>& x, const S& s) {
  GrassmannElement<S> r(x.table());
  for (const auto& [m, c] : x.terms()) r.add_term(m, S(c * s));
  return r;
}

template <class S>
GrassmannElement<S> g_mul(const GrassmannElement<S>& x,
                          const GrassmannElement<S>& y) {
  detail::check_same_table(&x.table(), &y.table());
  GrassmannElement<S> r(x.table());
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      if (mx & my) continue;  // repeated generator squares to zero
      S c = S(cx * cy);
      if (detail::inversions(mx, my) & 1) c = -c;
      r.add_term(mx | my, c);
    }
  }
  return r;
}

// Berezin integration in one generator: monomials not containing g vanish,
// otherwise g is moved to the rightmost position and removed.
template <class S>
GrassmannElement<S> berezin(const GrassmannElement<S>& x, int g) {
  if (g < 0 || g >= x.table().size())
    throw std::out_of_range("unregistered generator index");
  GrassmannElement<S> r(x.table());
  const std::uint64_t bit = std::uint64_t(1) << g;
  for (const auto& [m, c] : x.terms()) {
    if (!(m & bit)) continue;
    int above = std::popcount(m & ~((bit << 1) - 1));
    r.add_term(m & ~bit, (above & 1) ? S(-c) : c);
  }
  return r;
}

// Left derivative: g is moved to the leftmost position and removed.
template <class S>
GrassmannElement<S> l_deriv(const GrassmannElement<S>& x, int g) {
  if (g < 0 || g >= x.table().size())
    throw std::out_of_range("unregistered generator index");
  GrassmannElement<S> r(x.table());
  const std::uint64_t bit = std::uint64_t(1) << g;
  for (const auto& [m, c] : x.terms()) {
    if (!(m & bit)) continue;
    int below = std::popcount(m & (bit - 1));
    r.add_term(m & ~bit, (below & 1) ? S(-c) : c);
  }
  return r;
}

template <class S>
std::set<int> degree_profile(const GrassmannElement<S>& x) {
  std::set<int> degs;
  for (const auto& [m, c] : x.terms()) degs.insert(std::popcount(m));
  return degs;
}

// The zero element counts as homogeneous of every degree.
template <class S>
bool is_homogeneous(const GrassmannElement<S>& x, int n) {
  for (const auto& [m, c] : x.terms())
    if (std::popcount(m) != n) return false;
  return true;
}

template <class S>
std::set<int> support_generators(const GrassmannElement<S>& x) {
  std::uint64_t u = 0;
  for (const auto& [m, c] : x.terms()) u |= m;
  std::set<int> out;
  while (u) {
    out.insert(std::countr_zero(u));
    u &= u - 1;
  }
  return out;
}

// Deterministic printer: monomials sorted by (degree, bitset value).
template <class S>
std::string to_string(const GrassmannElement<S>& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::pair<int, std::uint64_t>, const S*>> order;
  for (const auto& [m, c] : x.terms())
    order.push_back({{std::popcount(m), m}, &c});
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : order) {
    if (!first) os << " + ";
    first = false;
    os << "(" << str(*coeff) << ")";
    std::uint64_t m = key.second;
    while (m) {
      int g = std::countr_zero(m);
      m &= m - 1;
      os << " " << x.table().name(g);
    }
  }
  return os.str();
}

}  // namespace berez
