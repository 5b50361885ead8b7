#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "berez/cluster.hpp"
#include "berez/field.hpp"
#include "berez/weights.hpp"

namespace berez {

template <class S>
struct MoveReport {
  GrassmannElement<S> left;
  GrassmannElement<S> right;  // edge factor already applied
  S edge_factor;
  GrassmannElement<S> difference;
  std::string mode;
  bool pass = false;

  std::string str() const {
    std::ostringstream os;
    os << "mode: " << mode << "\n"
       << "left terms: " << left.term_count() << "\n"
       << "right terms: " << right.term_count() << "\n"
       << "edge factor: " << berez::str(edge_factor) << "\n"
       << "difference terms: " << difference.term_count() << "\n"
       << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

template <class F>
std::vector<FaceOperator<typename F::Scalar>> inner_face_operators(
    const Cluster& cluster, const GeneratorTable& table, const F& field) {
  std::vector<FaceOperator<typename F::Scalar>> ops;
  for (const Face& f : cluster.inner_faces())
    ops.push_back(face_operator_d(f, cluster, table, field));
  return ops;
}

// Product of the 4-simplex weights in lexicographic simplex order.
template <class F>
GrassmannElement<typename F::Scalar> weight_product(const Cluster& cluster,
                                                    const GeneratorTable& table,
                                                    const F& field) {
  using Elem = GrassmannElement<typename F::Scalar>;
  Elem prod = Elem::unit(table, field.one());
  for (const SimplexVerts& s : cluster.simplexes())
    prod = g_mul(prod, weight_W(Simplex4(s), table, field));
  return prod;
}

template <class S>
std::uint64_t support_mask(const GrassmannElement<S>& x) {
  std::uint64_t u = 0;
  for (const auto& [m, c] : x.terms()) u |= m;
  return u;
}

// Same product, but monomials that can no longer collect every inner
// generator from the factors still to come (or from w) are dropped as
// soon as that is known; they could only integrate to zero.
template <class F>
GrassmannElement<typename F::Scalar> weight_product_pruned(
    const Cluster& cluster, const GeneratorTable& table, const F& field,
    std::uint64_t w_support) {
  using Elem = GrassmannElement<typename F::Scalar>;
  std::uint64_t required = 0;
  for (const Tet& t : cluster.inner_tetrahedra()) {
    required |= std::uint64_t(1) << table.index(t, 'a');
    required |= std::uint64_t(1) << table.index(t, 'b');
  }
  std::vector<Elem> factors;
  for (const SimplexVerts& s : cluster.simplexes())
    factors.push_back(weight_W(Simplex4(s), table, field));
  std::vector<std::uint64_t> avail(factors.size(), w_support);
  for (std::size_t k = factors.size(); k-- > 1;)
    avail[k - 1] = avail[k] | support_mask(factors[k]);

  Elem prod = Elem::unit(table, field.one());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    prod = g_mul(prod, factors[k]);
    Elem kept(table);
    for (const auto& [m, c] : prod.terms())
      if ((required & ~m & ~avail[k]) == 0) kept.add_term(m, c);
    prod = std::move(kept);
  }
  return prod;
}

// Berezin-integrates prod * w over da, db of every inner tetrahedron (lex
// order, a before b) and divides by the product of measure factors
// zeta_kl, k and l the two largest vertices of each inner tetrahedron.
// The integral is linear in w, so each w term is pushed through
// separately; that keeps symbolic coefficients polynomial until the end.
template <class F>
GrassmannElement<typename F::Scalar> integrate_inner(
    const Cluster& cluster, const GeneratorTable& table, const F& field,
    const GrassmannElement<typename F::Scalar>& prod,
    const GrassmannElement<typename F::Scalar>& w) {
  using S = typename F::Scalar;
  using Elem = GrassmannElement<S>;
  const std::vector<Tet> inner = cluster.inner_tetrahedra();

  Elem total(table);
  for (const auto& [wmask, wcoef] : w.terms()) {
    Elem x = g_mul(prod, Elem::monomial(table, wmask, field.one()));
    for (const Tet& t : inner) {
      x = berezin(x, table.index(t, 'a'));
      x = berezin(x, table.index(t, 'b'));
    }
    total = g_add(total, scalar_mul(x, wcoef));
  }

  S measure = field.one();
  for (const Tet& t : inner) measure = S(measure * field.zeta_diff(t[2], t[3]));
  return scalar_mul(total, inv(measure));
}

// The state-sum integral over one cluster: product of all
// 4-simplex weights times the inner-2-face weight w, integrated over the
// inner tetrahedra.  w defaults to the deterministic solver output; an
// explicit w must satisfy the defining operator equations.
template <class F>
GrassmannElement<typename F::Scalar> cluster_integral(
    const Cluster& cluster, const GeneratorTable& table, const F& field,
    const std::optional<GrassmannElement<typename F::Scalar>>& w_choice = {}) {
  using S = typename F::Scalar;
  using Elem = GrassmannElement<S>;
  std::vector<FaceOperator<S>> ops = inner_face_operators(cluster, table, field);
  Elem w = Elem::unit(table, field.one());
  if (w_choice) {
    if (!verify_w_candidate(ops, *w_choice))
      throw std::invalid_argument("explicit w does not invert the face operators");
    w = *w_choice;
  } else {
    w = invert_to_one(ops, table, field);
  }
  Elem prod = weight_product_pruned(cluster, table, field, support_mask(w));
  return integrate_inner(cluster, table, field, prod, w);
}

// Product over inner edges of the edge factor zeta_ij times the integral.
// When the inner-face operator product is identically zero (which happens
// exactly when the triangulation has an inner vertex), no face weight w
// exists and the state sum degenerates; the invariant is then zero.
template <class F>
GrassmannElement<typename F::Scalar> invariant_ti(const Cluster& cluster,
                                                  const GeneratorTable& table,
                                                  const F& field) {
  using S = typename F::Scalar;
  S e = field.one();
  for (const Edge& edge : cluster.inner_edges())
    e = S(e * field.zeta_diff(edge[0], edge[1]));
  try {
    return scalar_mul(cluster_integral(cluster, table, field), e);
  } catch (const OperatorNotSurjective&) {
    return GrassmannElement<S>(table);
  }
}

template <class S>
bool equal_up_to_sign(const GrassmannElement<S>& x,
                      const GrassmannElement<S>& y) {
  return x == y || x == g_neg(y);
}

// --- the two moves on vertices 1..6 ---

struct MoveSetup {
  Cluster left;
  Cluster right;
  GeneratorTable table;  // union of both clusters' tetrahedra

  MoveSetup(std::vector<SimplexVerts> l, std::vector<SimplexVerts> r)
      : left(std::move(l)),
        right(std::move(r)),
        table(table_for_union(left, right)) {}
  MoveSetup(const MoveSetup&) = delete;
  MoveSetup& operator=(const MoveSetup&) = delete;
};

inline MoveSetup move33_setup() {
  return MoveSetup({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}},
                   {{1, 2, 4, 5, 6}, {1, 3, 4, 5, 6}, {2, 3, 4, 5, 6}});
}

inline MoveSetup move24_setup() {
  return MoveSetup({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}},
                   {{1, 2, 3, 5, 6}, {1, 2, 4, 5, 6}, {1, 3, 4, 5, 6},
                    {2, 3, 4, 5, 6}});
}

template <class F>
MoveReport<typename F::Scalar> verify_move_33(
    const MoveSetup& setup, const F& field,
    const std::optional<GrassmannElement<typename F::Scalar>>& w_left = {},
    const std::optional<GrassmannElement<typename F::Scalar>>& w_right = {}) {
  using S = typename F::Scalar;
  GrassmannElement<S> l = cluster_integral(setup.left, setup.table, field, w_left);
  GrassmannElement<S> r = cluster_integral(setup.right, setup.table, field, w_right);
  MoveReport<S> rep{l, r, field.one(), g_sub(l, r), field.mode_name(), false};
  rep.pass = rep.difference.is_zero();
  return rep;
}

template <class F>
MoveReport<typename F::Scalar> verify_move_24(
    const MoveSetup& setup, const F& field,
    const std::optional<GrassmannElement<typename F::Scalar>>& w_right = {},
    bool apply_edge_factor = true) {
  using S = typename F::Scalar;
  GrassmannElement<S> l = cluster_integral(setup.left, setup.table, field);
  GrassmannElement<S> r = cluster_integral(setup.right, setup.table, field, w_right);
  S edge = apply_edge_factor ? S(-field.zeta_diff(5, 6)) : field.one();
  r = scalar_mul(r, edge);
  MoveReport<S> rep{l, r, edge, g_sub(l, r), field.mode_name(), false};
  rep.pass = rep.difference.is_zero();
  return rep;
}

// --- named face-weight candidates from the move formulas ---

// 3->3 left, face 123: names a1234 b1234 a1235 b1235 a1236 b1236; the
// candidate for a123l is (zeta_3l/zeta_23) a_123l, for b123l it is
// (zeta_3l/zeta_31) b_123l.
template <class F>
GrassmannElement<typename F::Scalar> w33_left_candidate(
    const std::string& name, const GeneratorTable& table, const F& field) {
  using S = typename F::Scalar;
  if (name.size() != 5 || (name[0] != 'a' && name[0] != 'b') ||
      name.compare(1, 3, "123") != 0 || name[4] < '4' || name[4] > '6')
    throw std::invalid_argument("unknown w_123 candidate: " + name);
  int l = name[4] - '0';
  Tet t{1, 2, 3, l};
  S coeff = name[0] == 'a'
                ? S(field.zeta_diff(3, l) * inv(field.zeta_diff(2, 3)))
                : S(field.zeta_diff(3, l) * inv(field.zeta_diff(3, 1)));
  return GrassmannElement<S>::monomial(
      table, std::uint64_t(1) << table.index(t, name[0]), coeff);
}

// 3->3 right, face 456: names b1456 b2456 b3456; the candidate is -b_i456.
template <class F>
GrassmannElement<typename F::Scalar> w33_right_candidate(
    const std::string& name, const GeneratorTable& table, const F& field) {
  using S = typename F::Scalar;
  if (name.size() != 5 || name[0] != 'b' || name.compare(2, 3, "456") != 0 ||
      name[1] < '1' || name[1] > '3')
    throw std::invalid_argument("unknown w_456 candidate: " + name);
  int i = name[1] - '0';
  Tet t{i, 4, 5, 6};
  return GrassmannElement<S>::monomial(
      table, std::uint64_t(1) << table.index(t, 'b'), S(-field.one()));
}

// 2->4 right, faces 156 256 356 456: a_1256 b_1256 a_3456 b_3456.
template <class F>
GrassmannElement<typename F::Scalar> w24_monomial_candidate(
    const GeneratorTable& table, const F& field) {
  using S = typename F::Scalar;
  std::uint64_t m = 0;
  m |= std::uint64_t(1) << table.index(Tet{1, 2, 5, 6}, 'a');
  m |= std::uint64_t(1) << table.index(Tet{1, 2, 5, 6}, 'b');
  m |= std::uint64_t(1) << table.index(Tet{3, 4, 5, 6}, 'a');
  m |= std::uint64_t(1) << table.index(Tet{3, 4, 5, 6}, 'b');
  return GrassmannElement<S>::monomial(table, m, field.one());
}

}  // namespace berez
