#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "berez/grassmann.hpp"
#include "berez/weights.hpp"

namespace berez {

// Parses the shipped expansion of W_12345, with the substitution
// 1..5 -> the given vertices applied to both vertex labels and zeta
// subscripts.  Lines: "<sign> z<i><j> z<k><l> <gen> <gen> <gen>".
template <class F>
GrassmannElement<typename F::Scalar> parse_weight_expansion(
    std::istream& in, const Simplex4& s, const GeneratorTable& table,
    const F& field) {
  using S = typename F::Scalar;
  auto subst = [&](char digit) {
    int d = digit - '0';
    if (d < 1 || d > 5) throw std::runtime_error("bad vertex label in fixture");
    return s.v[std::size_t(d - 1)];
  };
  GrassmannElement<S> out(table);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string sign, z1, z2;
    if (!(ls >> sign)) continue;
    if ((sign != "+" && sign != "-") || !(ls >> z1 >> z2) || z1.size() != 3 ||
        z2.size() != 3 || z1[0] != 'z' || z2[0] != 'z')
      throw std::runtime_error("fixture line " + std::to_string(lineno) +
                               ": expected '<sign> z.. z.. <gen> <gen> <gen>'");
    S coeff = S(field.zeta_diff(subst(z1[1]), subst(z1[2])) *
                field.zeta_diff(subst(z2[1]), subst(z2[2])));
    if (sign == "-") coeff = -coeff;
    std::uint64_t mask = 0;
    std::string gen;
    int count = 0;
    while (ls >> gen) {
      if (gen.size() != 5 || (gen[0] != 'a' && gen[0] != 'b'))
        throw std::runtime_error("fixture line " + std::to_string(lineno) +
                                 ": bad generator '" + gen + "'");
      Tet t{subst(gen[1]), subst(gen[2]), subst(gen[3]), subst(gen[4])};
      mask |= std::uint64_t(1) << table.index(t, gen[0]);
      ++count;
    }
    if (count != 3)
      throw std::runtime_error("fixture line " + std::to_string(lineno) +
                               ": expected three generators");
    out.add_term(mask, coeff);
  }
  return out;
}

template <class F>
GrassmannElement<typename F::Scalar> load_weight_expansion(
    const std::string& path, const Simplex4& s, const GeneratorTable& table,
    const F& field) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  return parse_weight_expansion(in, s, table, field);
}

}  // namespace berez
