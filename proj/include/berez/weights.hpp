#pragma once

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "berez/cluster.hpp"
#include "berez/grassmann.hpp"

namespace berez {

struct Simplex4 {
  std::array<int, 5> v;

  explicit Simplex4(std::array<int, 5> verts) : v(verts) {
    for (int i = 0; i + 1 < 5; ++i)
      if (v[std::size_t(i)] >= v[std::size_t(i + 1)])
        throw std::invalid_argument("4-simplex vertices must strictly increase");
  }
};

// First-order differential operator: sum of coefficient * left derivative.
template <class S>
struct FaceOperator {
  const GeneratorTable* table = nullptr;
  std::vector<std::pair<S, int>> terms;  // (coefficient, generator index)
};

namespace detail {
inline bool has_trivial_denominator(const Rational&) { return true; }
inline bool has_trivial_denominator(const Fp&) { return true; }
inline bool has_trivial_denominator(const RatFunc& x) { return x.den().is_one(); }
}  // namespace detail

// The 4-simplex weight: product of the three linear factors, divided by
// the zeta difference of the two largest vertices.  The division is exact
// monomial by monomial; in symbolic mode that is asserted.
template <class F>
GrassmannElement<typename F::Scalar> weight_W(const Simplex4& s,
                                              const GeneratorTable& table,
                                              const F& field) {
  using S = typename F::Scalar;
  using Elem = GrassmannElement<S>;
  const auto& v = s.v;
  auto tet = [&](int a, int b, int c, int d) {
    return Tet{v[std::size_t(a - 1)], v[std::size_t(b - 1)],
               v[std::size_t(c - 1)], v[std::size_t(d - 1)]};
  };
  auto zd = [&](int i, int j) {
    return field.zeta_diff(v[std::size_t(i - 1)], v[std::size_t(j - 1)]);
  };
  const Tet t1234 = tet(1, 2, 3, 4), t1235 = tet(1, 2, 3, 5),
            t1245 = tet(1, 2, 4, 5), t1345 = tet(1, 3, 4, 5),
            t2345 = tet(2, 3, 4, 5);
  auto gen = [&](const Tet& t, char ab, const S& c) {
    return Elem::monomial(table, std::uint64_t(1) << table.index(t, ab), c);
  };

  Elem f1(table);
  f1 = g_add(f1, gen(t1234, 'a', zd(3, 4)));
  f1 = g_add(f1, gen(t1235, 'a', S(-zd(3, 5))));
  f1 = g_add(f1, gen(t1245, 'a', zd(4, 5)));
  f1 = g_add(f1, gen(t1345, 'a', S(-zd(4, 5))));

  Elem f2(table);
  f2 = g_add(f2, gen(t1234, 'b', zd(3, 4)));
  f2 = g_add(f2, gen(t1235, 'b', S(-zd(3, 5))));
  f2 = g_add(f2, gen(t1245, 'b', zd(4, 5)));
  f2 = g_add(f2, gen(t2345, 'a', zd(4, 5)));

  Elem f3(table);
  f3 = g_add(f3, gen(t1234, 'a', S(-zd(1, 4))));
  f3 = g_add(f3, gen(t1234, 'b', S(-zd(2, 4))));
  f3 = g_add(f3, gen(t1235, 'a', zd(1, 5)));
  f3 = g_add(f3, gen(t1235, 'b', zd(2, 5)));
  f3 = g_add(f3, gen(t1345, 'b', S(-zd(4, 5))));
  f3 = g_add(f3, gen(t2345, 'b', zd(4, 5)));

  Elem w = scalar_mul(g_mul(g_mul(f1, f2), f3), inv(zd(4, 5)));
  for (const auto& [m, c] : w.terms())
    if (!detail::has_trivial_denominator(c))
      throw std::logic_error("weight prefactor did not cancel exactly");
  return w;
}

template <class F>
FaceOperator<typename F::Scalar> face_tet_operator(const Face& face,
                                                   const Tet& tet,
                                                   const GeneratorTable& table,
                                                   const F& field) {
  using S = typename F::Scalar;
  int missing = -1;
  std::size_t fi = 0;
  for (int pos = 0; pos < 4; ++pos) {
    if (fi < 3 && tet[std::size_t(pos)] == face[fi]) {
      ++fi;
    } else if (missing < 0) {
      missing = pos;
    } else {
      missing = -2;
      break;
    }
  }
  if (fi != 3 || missing < 0)
    throw std::invalid_argument("2-face is not a face of the tetrahedron");

  const int i = tet[0], j = tet[1], k = tet[2], l = tet[3];
  const int ga = table.index(tet, 'a');
  const int gb = table.index(tet, 'b');
  FaceOperator<S> op;
  op.table = &table;
  S inv_kl = inv(field.zeta_diff(k, l));
  switch (missing) {
    case 3:  // face ijk
      op.terms.push_back({S(field.zeta_diff(j, k) * inv_kl), ga});
      op.terms.push_back({S(-(field.zeta_diff(i, k) * inv_kl)), gb});
      break;
    case 2:  // face ijl
      op.terms.push_back({S(-(field.zeta_diff(j, l) * inv_kl)), ga});
      op.terms.push_back({S(field.zeta_diff(i, l) * inv_kl), gb});
      break;
    case 1:  // face ikl
      op.terms.push_back({field.one(), ga});
      break;
    case 0:  // face jkl
      op.terms.push_back({S(-field.one()), gb});
      break;
    default:
      throw std::invalid_argument("2-face is not a face of the tetrahedron");
  }
  return op;
}

// d_ijk: the sum over all tetrahedra of the cluster containing the face.
template <class F>
FaceOperator<typename F::Scalar> face_operator_d(const Face& face,
                                                 const Cluster& cluster,
                                                 const GeneratorTable& table,
                                                 const F& field) {
  using S = typename F::Scalar;
  FaceOperator<S> op;
  op.table = &table;
  for (const Tet& t : cluster.tets_containing(face)) {
    FaceOperator<S> part = face_tet_operator(face, t, table, field);
    op.terms.insert(op.terms.end(), part.terms.begin(), part.terms.end());
  }
  return op;
}

template <class S>
GrassmannElement<S> apply_operator(const FaceOperator<S>& op,
                                   const GrassmannElement<S>& x) {
  detail::check_same_table(op.table, &x.table());
  GrassmannElement<S> r(x.table());
  for (const auto& [c, g] : op.terms)
    r = g_add(r, scalar_mul(l_deriv(x, g), c));
  return r;
}

// ops[0] is applied last, matching composition in the operator product.
template <class S>
GrassmannElement<S> apply_composed(const std::vector<FaceOperator<S>>& ops,
                                   GrassmannElement<S> x) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    x = apply_operator(*it, x);
  return x;
}

template <class S>
std::vector<int> operator_generators(const std::vector<FaceOperator<S>>& ops) {
  std::set<int> gens;
  for (const auto& op : ops)
    for (const auto& [c, g] : op.terms) gens.insert(g);
  return std::vector<int>(gens.begin(), gens.end());
}

// Thrown when no homogeneous element maps to a nonzero scalar under the
// composed operators, i.e. the operator product is identically zero on
// the relevant degree space.
struct OperatorNotSurjective : std::runtime_error {
  OperatorNotSurjective()
      : std::runtime_error("operator product not surjective onto scalars") {}
};

// Solves (ops[0] ... ops[n-1]) g = 1 for homogeneous g of degree n,
// returning the first degree-n monomial (in bitset order, over the
// generators the operators touch) with nonzero scalar image, scaled so
// the image is exactly 1.
template <class F>
GrassmannElement<typename F::Scalar> invert_to_one(
    const std::vector<FaceOperator<typename F::Scalar>>& ops,
    const GeneratorTable& table, const F& field) {
  using S = typename F::Scalar;
  using Elem = GrassmannElement<S>;
  const std::size_t n = ops.size();
  if (n == 0) return Elem::unit(table, field.one());
  for (const auto& op : ops) detail::check_same_table(op.table, &table);

  std::vector<int> gens = operator_generators(ops);
  if (gens.size() >= n) {
    // colex enumeration of n-subsets of the sorted generator list gives
    // increasing bitset order
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
      std::uint64_t mask = 0;
      for (std::size_t p : pick) mask |= std::uint64_t(1) << gens[p];
      Elem probe = Elem::monomial(table, mask, field.one());
      Elem image = apply_composed(ops, probe);
      auto it = image.terms().find(0);
      if (it != image.terms().end() && !berez::is_zero(it->second))
        return Elem::monomial(table, mask, inv(it->second));
      // next combination in colex order
      std::size_t i = 0;
      while (i < n) {
        std::size_t limit = (i + 1 < n) ? pick[i + 1] : gens.size();
        if (pick[i] + 1 < limit) break;
        ++i;
      }
      if (i == n) break;
      ++pick[i];
      for (std::size_t j = 0; j < i; ++j) pick[j] = j;
    }
  }
  throw OperatorNotSurjective();
}

template <class S>
bool verify_w_candidate(const std::vector<FaceOperator<S>>& ops,
                        const GrassmannElement<S>& g) {
  if (!is_homogeneous(g, int(ops.size()))) return false;
  GrassmannElement<S> image = apply_composed(ops, g);
  if (image.term_count() != 1) return false;
  const auto& [m, c] = *image.terms().begin();
  return m == 0 && berez::is_one(c);
}

// Random homogeneous element over the operators' generators, scaled so the
// composed image is 1.  Used to sample the general-form face weights.
// max_terms = 0 draws a coefficient for every degree-n monomial; a positive
// value samples that many random monomials instead (needed when the full
// monomial basis is large).
template <class F>
GrassmannElement<typename F::Scalar> random_w_candidate(
    const std::vector<FaceOperator<typename F::Scalar>>& ops,
    const GeneratorTable& table, const F& field, std::mt19937_64& rng,
    int max_terms = 0) {
  using S = typename F::Scalar;
  using Elem = GrassmannElement<S>;
  const std::size_t n = ops.size();
  if (n == 0) return Elem::unit(table, field.one());
  std::vector<int> gens = operator_generators(ops);
  if (gens.size() < n)
    throw std::runtime_error("too few generators for a degree-n candidate");
  for (int attempt = 0; attempt < 64; ++attempt) {
    Elem g(table);
    if (max_terms > 0) {
      for (int t = 0; t < max_terms; ++t) {
        std::vector<int> pool = gens;
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t j = rng() % pool.size();
          mask |= std::uint64_t(1) << pool[j];
          pool.erase(pool.begin() + long(j));
        }
        long c = long(rng() % 19) - 9;
        if (c != 0) g.add_term(mask, field.from_int(c));
      }
    } else {
      std::vector<std::size_t> pick(n);
      for (std::size_t i = 0; i < n; ++i) pick[i] = i;
      for (;;) {
        std::uint64_t mask = 0;
        for (std::size_t p : pick) mask |= std::uint64_t(1) << gens[p];
        long c = long(rng() % 19) - 9;
        if (c != 0) g.add_term(mask, field.from_int(c));
        std::size_t i = 0;
        while (i < n) {
          std::size_t limit = (i + 1 < n) ? pick[i + 1] : gens.size();
          if (pick[i] + 1 < limit) break;
          ++i;
        }
        if (i == n) break;
        ++pick[i];
        for (std::size_t j = 0; j < i; ++j) pick[j] = j;
      }
    }
    Elem image = apply_composed(ops, g);
    auto it = image.terms().find(0);
    if (it == image.terms().end() || berez::is_zero(it->second)) continue;
    return scalar_mul(g, inv(it->second));
  }
  throw std::runtime_error("failed to sample a valid face-weight candidate");
}

}  // namespace berez
