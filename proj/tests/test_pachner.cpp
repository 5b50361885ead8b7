#include "berez/pachner.hpp"

#include <fstream>
#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace berez;

namespace {

std::uint64_t inner_mask(const Cluster& c, const GeneratorTable& t) {
  std::uint64_t m = 0;
  for (const Tet& tet : c.inner_tetrahedra()) {
    m |= std::uint64_t(1) << t.index(tet, 'a');
    m |= std::uint64_t(1) << t.index(tet, 'b');
  }
  return m;
}

Cluster star_cluster() {
  return Cluster({{1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 6},
                  {1, 3, 4, 5, 6}, {2, 3, 4, 5, 6}});
}

}  // namespace

TEST_CASE("3->3 identity holds exactly in prime-field mode") {
  MoveSetup setup = move33_setup();
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    auto f = testutil::small_prime_field(seed);
    auto rep = verify_move_33(setup, f);
    CHECK(rep.pass);
    CHECK(rep.difference.is_zero());
    CHECK(rep.left.term_count() == rep.right.term_count());
  }
}

TEST_CASE("3->3 identity holds exactly in rational mode") {
  MoveSetup setup = move33_setup();
  auto f = testutil::small_rational_field(17);
  auto rep = verify_move_33(setup, f);
  CHECK(rep.pass);
}

TEST_CASE("3->3 integrals live on boundary generators only") {
  MoveSetup setup = move33_setup();
  auto f = testutil::small_prime_field(14);
  auto l = cluster_integral(setup.left, setup.table, f);
  auto r = cluster_integral(setup.right, setup.table, f);
  CHECK(is_homogeneous(l, 4));
  CHECK_FALSE(l.is_zero());
  CHECK((support_mask(l) & inner_mask(setup.left, setup.table)) == 0);
  CHECK((support_mask(r) & inner_mask(setup.right, setup.table)) == 0);
}

TEST_CASE("3->3 holds for all 18 pairs of listed w candidates") {
  MoveSetup setup = move33_setup();
  auto f = testutil::small_prime_field(15);
  using Elem = GrassmannElement<Fp>;
  std::vector<Elem> lefts, rights;
  for (const char* n : {"a1234", "b1234", "a1235", "b1235", "a1236", "b1236"})
    lefts.push_back(cluster_integral(setup.left, setup.table, f,
                                     w33_left_candidate(n, setup.table, f)));
  for (const char* n : {"b1456", "b2456", "b3456"})
    rights.push_back(cluster_integral(setup.right, setup.table, f,
                                      w33_right_candidate(n, setup.table, f)));
  for (const Elem& l : lefts)
    for (const Elem& r : rights) CHECK(l == r);
}

TEST_CASE("cluster integral is independent of the w choice") {
  MoveSetup setup = move33_setup();
  auto f = testutil::small_prime_field(16);
  std::mt19937_64 rng(161);
  auto opl = inner_face_operators(setup.left, setup.table, f);
  auto reference = cluster_integral(setup.left, setup.table, f);  // auto w
  for (const char* n : {"a1234", "b1234", "a1235", "b1235", "a1236", "b1236"})
    CHECK(cluster_integral(setup.left, setup.table, f,
                           w33_left_candidate(n, setup.table, f)) == reference);
  for (int i = 0; i < 3; ++i)
    CHECK(cluster_integral(setup.left, setup.table, f,
                           random_w_candidate(opl, setup.table, f, rng)) ==
          reference);

  auto opr = inner_face_operators(setup.right, setup.table, f);
  auto ref_r = cluster_integral(setup.right, setup.table, f);
  for (int i = 0; i < 3; ++i)
    CHECK(cluster_integral(setup.right, setup.table, f,
                           random_w_candidate(opr, setup.table, f, rng)) ==
          ref_r);
  CHECK(reference == ref_r);
}

TEST_CASE("invalid explicit w is rejected") {
  MoveSetup setup = move33_setup();
  auto f = testutil::small_prime_field(18);
  using Elem = GrassmannElement<Fp>;
  Elem bad = Elem::monomial(
      setup.table, std::uint64_t(1) << setup.table.index(Tet{1, 2, 3, 4}, 'a'),
      f.one());  // right coefficient would be zeta_34/zeta_23
  CHECK_THROWS_AS(cluster_integral(setup.left, setup.table, f, bad),
                  std::invalid_argument);
}

TEST_CASE("2->4 identity holds with the edge factor, fails without") {
  MoveSetup setup = move24_setup();
  for (std::uint64_t seed : {21u, 22u}) {
    auto f = testutil::small_prime_field(seed);
    auto rep = verify_move_24(setup, f);
    CHECK(rep.pass);
    CHECK(rep.edge_factor == Fp(-f.zeta_diff(5, 6)));
    auto neg = verify_move_24(setup, f, {}, false);
    CHECK_FALSE(neg.pass);
    CHECK_FALSE(neg.difference.is_zero());
  }
  auto q = testutil::small_rational_field(23);
  CHECK(verify_move_24(setup, q).pass);
}

TEST_CASE("2->4 monomial w candidate gives the identical integral") {
  MoveSetup setup = move24_setup();
  auto f = testutil::small_prime_field(24);
  auto rep = verify_move_24(setup, f, w24_monomial_candidate(setup.table, f));
  CHECK(rep.pass);
}

TEST_CASE("perturbing one weight coefficient breaks the 3->3 identity") {
  MoveSetup setup = move33_setup();
  auto f = testutil::small_prime_field(25);
  using Elem = GrassmannElement<Fp>;
  auto ops = inner_face_operators(setup.left, setup.table, f);
  Elem w = invert_to_one(ops, setup.table, f);
  Elem prod = weight_product(setup.left, setup.table, f);
  // a spurious term on the w-complementary inner generators survives the
  // integral as a scalar component the right side cannot have
  std::uint64_t spurious =
      inner_mask(setup.left, setup.table) & ~support_mask(w);
  Elem bad = g_add(prod, Elem::monomial(setup.table, spurious, f.one()));
  Elem l = integrate_inner(setup.left, setup.table, f, bad, w);
  Elem r = cluster_integral(setup.right, setup.table, f);
  CHECK_FALSE(l == r);
  CHECK_FALSE(equal_up_to_sign(l, r));
}

TEST_CASE("pruned and plain weight products integrate identically") {
  MoveSetup setup = move33_setup();
  auto f = testutil::small_prime_field(26);
  auto ops = inner_face_operators(setup.left, setup.table, f);
  auto w = invert_to_one(ops, setup.table, f);
  auto plain = weight_product(setup.left, setup.table, f);
  auto pruned =
      weight_product_pruned(setup.left, setup.table, f, support_mask(w));
  CHECK(integrate_inner(setup.left, setup.table, f, plain, w) ==
        integrate_inner(setup.left, setup.table, f, pruned, w));
}

TEST_CASE("invariants of both moves agree up to sign") {
  for (std::uint64_t seed : {31u, 32u}) {
    auto f = testutil::small_prime_field(seed);
    {
      MoveSetup s = move33_setup();
      auto il = invariant_ti(s.left, s.table, f);
      auto ir = invariant_ti(s.right, s.table, f);
      CHECK_FALSE(il.is_zero());
      CHECK(equal_up_to_sign(il, ir));
    }
    {
      MoveSetup s = move24_setup();
      auto il = invariant_ti(s.left, s.table, f);
      auto ir = invariant_ti(s.right, s.table, f);
      CHECK_FALSE(il.is_zero());
      CHECK(equal_up_to_sign(il, ir));
    }
  }
}

TEST_CASE("single-simplex invariant is the weight itself") {
  Cluster c({{1, 2, 3, 4, 5}});
  GeneratorTable t = table_for(c);
  auto f = testutil::small_prime_field(33);
  CHECK(invariant_ti(c, t, f) == weight_W(Simplex4({1, 2, 3, 4, 5}), t, f));
}

TEST_CASE("star subdivision: operator product degenerates, invariant is zero") {
  Cluster c = star_cluster();
  GeneratorTable t = table_for(c);
  auto f = testutil::small_prime_field(34);
  auto ops = inner_face_operators(c, t, f);
  REQUIRE(ops.size() == 10);
  // the operators are linearly dependent with weights 1/(zeta_i6 zeta_j6),
  // so their product annihilates everything and no w exists
  CHECK_THROWS_AS(auto g = invert_to_one(ops, t, f), OperatorNotSurjective);
  CHECK_THROWS_AS(auto x = cluster_integral(c, t, f), OperatorNotSurjective);
  for (std::uint64_t seed : {35u, 36u, 37u})
    CHECK(invariant_ti(c, t, testutil::small_prime_field(seed)).is_zero());
}

TEST_CASE("star subdivision operator dependency is explicit") {
  Cluster c = star_cluster();
  GeneratorTable t = table_for(c);
  auto f = testutil::small_prime_field(38);
  // sum of d_ij6 / (zeta_i6 zeta_j6) vanishes coefficient by coefficient
  std::map<int, Fp> total;
  for (const Face& face : c.inner_faces()) {
    Fp lambda = inv(Fp(f.zeta_diff(face[0], 6) * f.zeta_diff(face[1], 6)));
    for (const auto& [coef, gen] : face_operator_d(face, c, t, f).terms) {
      auto [it, fresh] = total.emplace(gen, f.from_int(0));
      it->second = Fp(it->second + Fp(lambda * coef));
    }
  }
  for (const auto& [gen, coef] : total) CHECK(is_zero(coef));
}

TEST_CASE("3->3 invariance survives vertex relabeling") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> p{1, 2, 3, 4, 5, 6};
    for (std::size_t i = p.size(); i-- > 1;) std::swap(p[i], p[rng() % (i + 1)]);
    std::map<int, int> perm;
    for (int i = 0; i < 6; ++i) perm[i + 1] = p[std::size_t(i)];
    MoveSetup s = move33_setup();
    Cluster l = relabeled(s.left, perm), r = relabeled(s.right, perm);
    GeneratorTable t = table_for_union(l, r);
    auto f = testutil::small_prime_field(100 + std::uint64_t(trial));
    CHECK(equal_up_to_sign(invariant_ti(l, t, f), invariant_ti(r, t, f)));
  }
}

TEST_CASE("move reports are deterministic text") {
  MoveSetup setup = move33_setup();
  auto f = testutil::small_prime_field(41);
  auto rep = verify_move_33(setup, f);
  std::string s = rep.str();
  CHECK(s.find("mode: prime-field") != std::string::npos);
  CHECK(s.find("verdict: PASS") != std::string::npos);
  CHECK(s == verify_move_33(setup, f).str());
}

TEST_CASE("shipped triangulation files match the built-in setups") {
  auto load = [](const char* name) {
    std::ifstream in(std::string(BEREZ_DATA_DIR) + "/" + name);
    REQUIRE(in);
    return load_triangulation(in);
  };
  MoveSetup m33 = move33_setup(), m24 = move24_setup();
  CHECK(load("move33_left.tri").simplexes() == m33.left.simplexes());
  CHECK(load("move33_right.tri").simplexes() == m33.right.simplexes());
  CHECK(load("move24_left.tri").simplexes() == m24.left.simplexes());
  CHECK(load("move24_right.tri").simplexes() == m24.right.simplexes());
  CHECK(load("star_subdivision.tri").simplexes() == star_cluster().simplexes());
  CHECK(load("single_simplex.tri").inner_faces().empty());
}
