#include "berez/cluster.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace berez {

namespace {

std::string simplex_name(const SimplexVerts& s) {
  std::string n;
  for (int v : s) {
    if (!n.empty() && v > 9) n += "_";
    n += std::to_string(v);
  }
  return n;
}

template <class Arr>
std::string cells_name(const std::vector<Arr>& cells) {
  std::string out;
  for (const Arr& c : cells) {
    if (!out.empty()) out += " ";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0 && c[i] > 9) out += "_";
      out += std::to_string(c[i]);
    }
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

Cluster::Cluster(std::vector<SimplexVerts> simplexes)
    : simplexes_(std::move(simplexes)) {
  if (simplexes_.empty()) throw std::invalid_argument("empty cluster");
  for (SimplexVerts& s : simplexes_) {
    std::sort(s.begin(), s.end());
    for (int i = 0; i + 1 < 5; ++i)
      if (s[i] == s[i + 1])
        throw std::invalid_argument("repeated vertex in 4-simplex " +
                                    simplex_name(s));
    if (s[0] <= 0) throw std::invalid_argument("vertex numbers must be positive");
  }
  std::sort(simplexes_.begin(), simplexes_.end());
  if (std::adjacent_find(simplexes_.begin(), simplexes_.end()) !=
      simplexes_.end())
    throw std::invalid_argument("duplicate 4-simplex in cluster");

  for (const SimplexVerts& s : simplexes_) {
    for (int v : s) vertices_.insert(v);
    for (int skip = 0; skip < 5; ++skip) {
      Tet t;
      int k = 0;
      for (int i = 0; i < 5; ++i)
        if (i != skip) t[std::size_t(k++)] = s[std::size_t(i)];
      ++tet_count_[t];
    }
  }
  for (const auto& [t, n] : tet_count_) {
    if (n > 2)
      throw std::invalid_argument(
          "tetrahedron " + cells_name(std::vector<Tet>{t}) + " lies in " +
          std::to_string(n) + " 4-simplexes; not a pseudo-manifold");
    tets_.push_back(t);
  }

  // a 2-face or edge is boundary iff it lies in some boundary tetrahedron
  std::map<Edge, bool> edge_in_boundary_tet;
  for (const Tet& t : tets_) {
    bool boundary_tet = tet_count_.at(t) == 1;
    for (int skip = 0; skip < 4; ++skip) {
      Face f;
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[std::size_t(k++)] = t[std::size_t(i)];
      face_tets_[f].push_back(t);
      bool& inner = face_inner_[f];
      if (face_tets_[f].size() == 1) inner = true;
      if (boundary_tet) inner = false;
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Edge e{t[std::size_t(i)], t[std::size_t(j)]};
        auto [it, fresh] = edge_inner_.emplace(e, true);
        if (boundary_tet) it->second = false;
      }
  }
  for (const auto& [f, ts] : face_tets_) faces_.push_back(f);
  for (const auto& [e, inner] : edge_inner_) edges_.push_back(e);
}

bool Cluster::tet_inner(const Tet& t) const {
  auto it = tet_count_.find(t);
  if (it == tet_count_.end())
    throw std::out_of_range("tetrahedron not in cluster");
  return it->second == 2;
}

std::vector<Tet> Cluster::inner_tetrahedra() const {
  std::vector<Tet> out;
  for (const Tet& t : tets_)
    if (tet_count_.at(t) == 2) out.push_back(t);
  return out;
}

std::vector<Tet> Cluster::boundary_tetrahedra() const {
  std::vector<Tet> out;
  for (const Tet& t : tets_)
    if (tet_count_.at(t) == 1) out.push_back(t);
  return out;
}

bool Cluster::face_inner(const Face& f) const {
  auto it = face_inner_.find(f);
  if (it == face_inner_.end()) throw std::out_of_range("2-face not in cluster");
  return it->second;
}

std::vector<Face> Cluster::inner_faces() const {
  std::vector<Face> out;
  for (const Face& f : faces_)
    if (face_inner_.at(f)) out.push_back(f);
  return out;
}

std::vector<Tet> Cluster::tets_containing(const Face& f) const {
  auto it = face_tets_.find(f);
  if (it == face_tets_.end()) throw std::out_of_range("2-face not in cluster");
  return it->second;
}

bool Cluster::edge_inner(const Edge& e) const {
  auto it = edge_inner_.find(e);
  if (it == edge_inner_.end()) throw std::out_of_range("edge not in cluster");
  return it->second;
}

std::vector<Edge> Cluster::inner_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (edge_inner_.at(e)) out.push_back(e);
  return out;
}

std::string Cluster::classification_report() const {
  std::ostringstream os;
  os << "4-simplexes: " << cells_name(simplexes_) << "\n";
  os << "inner tetrahedra: " << cells_name(inner_tetrahedra()) << "\n";
  os << "boundary tetrahedra: " << cells_name(boundary_tetrahedra()) << "\n";
  os << "inner 2-faces: " << cells_name(inner_faces()) << "\n";
  os << "inner edges: " << cells_name(inner_edges()) << "\n";
  return os.str();
}

Cluster load_triangulation(std::istream& in) {
  std::vector<SimplexVerts> simplexes;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    SimplexVerts s;
    if (!(ls >> s[0])) continue;
    for (int i = 1; i < 5; ++i)
      if (!(ls >> s[std::size_t(i)]))
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": expected five vertex numbers");
    int extra;
    if (ls >> extra)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected exactly five vertex numbers");
    for (int v : s)
      if (v <= 0)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": vertex numbers must be positive");
    std::sort(s.begin(), s.end());
    for (int i = 0; i + 1 < 5; ++i)
      if (s[std::size_t(i)] == s[std::size_t(i + 1)])
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": repeated vertex in 4-simplex");
    simplexes.push_back(s);
  }
  try {
    return Cluster(std::move(simplexes));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid triangulation: ") + e.what());
  }
}

Cluster load_triangulation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open triangulation file: " + path);
  return load_triangulation(in);
}

Cluster relabeled(const Cluster& c, const std::map<int, int>& perm) {
  std::vector<SimplexVerts> out;
  for (SimplexVerts s : c.simplexes()) {
    for (int& v : s) {
      auto it = perm.find(v);
      if (it != perm.end()) v = it->second;
    }
    out.push_back(s);
  }
  return Cluster(std::move(out));
}

GeneratorTable table_for(const Cluster& c) {
  return GeneratorTable::for_tetrahedra(c.tetrahedra());
}

GeneratorTable table_for_union(const Cluster& a, const Cluster& b) {
  std::vector<Tet> tets = a.tetrahedra();
  const std::vector<Tet>& tb = b.tetrahedra();
  tets.insert(tets.end(), tb.begin(), tb.end());
  return GeneratorTable::for_tetrahedra(std::move(tets));
}

}  // namespace berez
