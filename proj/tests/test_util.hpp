#pragma once

#include <random>
#include <vector>

#include "berez/field.hpp"
#include "berez/grassmann.hpp"

namespace berez::testutil {

// Six generators: a/b pairs of three tetrahedra.
inline GeneratorTable table6() {
  return GeneratorTable::for_tetrahedra(
      {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}});
}

inline PrimeField small_prime_field(std::uint64_t seed = 1) {
  std::set<int> vs{1, 2, 3, 4, 5, 6};
  return PrimeField(kDefaultPrime,
                    random_prime_assignment(vs, seed, kDefaultPrime));
}

inline RationalField small_rational_field(std::uint64_t seed = 1) {
  std::set<int> vs{1, 2, 3, 4, 5, 6};
  return RationalField(random_rational_assignment(vs, seed));
}

// Sparse random element over the first `gens` generators.
template <class F>
GrassmannElement<typename F::Scalar> random_element(const GeneratorTable& table,
                                                    const F& field, int gens,
                                                    std::mt19937_64& rng,
                                                    int terms = 5) {
  GrassmannElement<typename F::Scalar> e(table);
  for (int t = 0; t < terms; ++t) {
    std::uint64_t m = rng() & ((std::uint64_t(1) << gens) - 1);
    long c = long(rng() % 21) - 10;
    if (c != 0) e.add_term(m, field.from_int(c));
  }
  return e;
}

}  // namespace berez::testutil
