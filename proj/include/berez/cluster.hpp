#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "berez/grassmann.hpp"

namespace berez {

using Face = std::array<int, 3>;
using Edge = std::array<int, 2>;
using SimplexVerts = std::array<int, 5>;

// A cluster of 4-simplexes with its derived incidence tables.  Every
// tetrahedron must lie in exactly one or two 4-simplexes; a tetrahedron in
// two is inner.  A 2-face or edge is boundary iff some boundary
// tetrahedron contains it.
class Cluster {
 public:
  explicit Cluster(std::vector<SimplexVerts> simplexes);

  const std::vector<SimplexVerts>& simplexes() const { return simplexes_; }
  const std::vector<Tet>& tetrahedra() const { return tets_; }
  const std::set<int>& vertices() const { return vertices_; }

  bool tet_inner(const Tet& t) const;
  std::vector<Tet> inner_tetrahedra() const;
  std::vector<Tet> boundary_tetrahedra() const;

  const std::vector<Face>& faces() const { return faces_; }
  bool face_inner(const Face& f) const;
  std::vector<Face> inner_faces() const;
  std::vector<Tet> tets_containing(const Face& f) const;

  const std::vector<Edge>& edges() const { return edges_; }
  bool edge_inner(const Edge& e) const;
  std::vector<Edge> inner_edges() const;

  std::string classification_report() const;

 private:
  std::vector<SimplexVerts> simplexes_;  // each increasing; list sorted
  std::set<int> vertices_;
  std::vector<Tet> tets_;
  std::map<Tet, int> tet_count_;
  std::vector<Face> faces_;
  std::map<Face, std::vector<Tet>> face_tets_;
  std::map<Face, bool> face_inner_;
  std::vector<Edge> edges_;
  std::map<Edge, bool> edge_inner_;
};

// One 4-simplex per line, five positive integers in any order.
Cluster load_triangulation(std::istream& in);
Cluster load_triangulation_file(const std::string& path);

// Applies a vertex relabeling; every image simplex is re-sorted.
Cluster relabeled(const Cluster& c, const std::map<int, int>& perm);

GeneratorTable table_for(const Cluster& c);
GeneratorTable table_for_union(const Cluster& a, const Cluster& b);

}  // namespace berez
