#include "berez/grassmann.hpp"

#include <algorithm>

namespace berez {

GeneratorTable GeneratorTable::for_tetrahedra(std::vector<Tet> tets) {
  std::sort(tets.begin(), tets.end());
  tets.erase(std::unique(tets.begin(), tets.end()), tets.end());
  for (const Tet& t : tets)
    for (int i = 0; i + 1 < 4; ++i)
      if (t[i] >= t[i + 1])
        throw std::invalid_argument("tetrahedron vertices must strictly increase");
  if (int(tets.size()) * 2 > kMaxGenerators)
    throw std::invalid_argument("generator table exceeds 64 generators");
  GeneratorTable g;
  g.tets_ = std::move(tets);
  for (std::size_t i = 0; i < g.tets_.size(); ++i)
    g.tet_slot_.emplace(g.tets_[i], int(i));
  return g;
}

int GeneratorTable::index(const Tet& tet, char ab) const {
  auto it = tet_slot_.find(tet);
  if (it == tet_slot_.end()) {
    std::string n;
    for (int v : tet) n += std::to_string(v);
    throw std::out_of_range("tetrahedron " + n + " not registered");
  }
  if (ab != 'a' && ab != 'b') throw std::invalid_argument("generator tag must be a or b");
  return it->second * 2 + (ab == 'b' ? 1 : 0);
}

bool GeneratorTable::contains(const Tet& tet) const {
  return tet_slot_.count(tet) != 0;
}

std::string GeneratorTable::name(int index) const {
  const Tet& t = tet_of(index);
  std::string n(1, ab_of(index));
  bool wide = false;
  for (int v : t) wide = wide || v > 9;
  for (int i = 0; i < 4; ++i) {
    if (wide && i > 0) n += "_";
    n += std::to_string(t[i]);
  }
  return n;
}

}  // namespace berez
