#include "berez/cluster.hpp"

#include <sstream>

#include "doctest.h"

using namespace berez;

namespace {
std::vector<Tet> tets(std::initializer_list<Tet> l) { return l; }
}  // namespace

TEST_CASE("3->3 left cluster classification") {
  Cluster c({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}});
  CHECK(c.inner_tetrahedra() ==
        tets({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}}));
  CHECK(c.boundary_tetrahedra() ==
        tets({{1, 2, 4, 5}, {1, 2, 4, 6}, {1, 2, 5, 6}, {1, 3, 4, 5},
              {1, 3, 4, 6}, {1, 3, 5, 6}, {2, 3, 4, 5}, {2, 3, 4, 6},
              {2, 3, 5, 6}}));
  CHECK(c.inner_faces() == std::vector<Face>{{1, 2, 3}});
  CHECK(c.inner_edges().empty());
}

TEST_CASE("3->3 right cluster classification") {
  Cluster c({{1, 2, 4, 5, 6}, {1, 3, 4, 5, 6}, {2, 3, 4, 5, 6}});
  CHECK(c.inner_tetrahedra() ==
        tets({{1, 4, 5, 6}, {2, 4, 5, 6}, {3, 4, 5, 6}}));
  CHECK(c.inner_faces() == std::vector<Face>{{4, 5, 6}});
  CHECK(c.inner_edges().empty());
}

TEST_CASE("2->4 clusters classification") {
  Cluster left({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}});
  CHECK(left.inner_tetrahedra() == tets({{1, 2, 3, 4}}));
  CHECK(left.inner_faces().empty());
  CHECK(left.inner_edges().empty());

  Cluster right({{1, 2, 3, 5, 6}, {1, 2, 4, 5, 6}, {1, 3, 4, 5, 6},
                 {2, 3, 4, 5, 6}});
  CHECK(right.inner_tetrahedra() ==
        tets({{1, 2, 5, 6}, {1, 3, 5, 6}, {1, 4, 5, 6}, {2, 3, 5, 6},
              {2, 4, 5, 6}, {3, 4, 5, 6}}));
  CHECK(right.inner_faces() ==
        std::vector<Face>{{1, 5, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}});
  CHECK(right.inner_edges() == std::vector<Edge>{{5, 6}});

  // both moves share their boundary tetrahedra
  CHECK(left.boundary_tetrahedra() == right.boundary_tetrahedra());
}

TEST_CASE("star-subdivided 4-simplex has an inner vertex") {
  Cluster c({{1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 6},
             {1, 3, 4, 5, 6}, {2, 3, 4, 5, 6}});
  CHECK(c.inner_tetrahedra().size() == 10);
  CHECK(c.boundary_tetrahedra() ==
        tets({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5},
              {2, 3, 4, 5}}));
  CHECK(c.inner_faces().size() == 10);
  CHECK(c.inner_edges().size() == 5);
  for (const Face& f : c.inner_faces()) CHECK(f[2] == 6);
  for (const Edge& e : c.inner_edges()) CHECK(e[1] == 6);
}

TEST_CASE("invalid complexes rejected") {
  CHECK_THROWS_AS(Cluster({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 4, 7}}),
                  std::invalid_argument);  // tetrahedron 1234 in three simplexes
  CHECK_THROWS_AS(Cluster({{1, 2, 3, 4, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Cluster({{1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}}),
                  std::invalid_argument);  // duplicate after sorting
  CHECK_THROWS_AS(Cluster({}), std::invalid_argument);
}

TEST_CASE("triangulation parsing") {
  std::istringstream in("# left cluster\n1 2 3 4 5\n1 2 3 4 6\n1 2 3 5 6\n");
  Cluster c = load_triangulation(in);
  CHECK(c.simplexes().size() == 3);
  CHECK(c.inner_faces() == std::vector<Face>{{1, 2, 3}});

  std::istringstream unsorted("5 3 1 2 4\n");
  CHECK(load_triangulation(unsorted).simplexes()[0] ==
        SimplexVerts{1, 2, 3, 4, 5});

  std::istringstream bad1("1 2 3 4 4\n");
  CHECK_THROWS_WITH_AS(load_triangulation(bad1),
                       "line 1: repeated vertex in 4-simplex",
                       std::runtime_error);
  std::istringstream bad2("1 2 3 4\n");
  CHECK_THROWS_AS(load_triangulation(bad2), std::runtime_error);
  std::istringstream bad3("1 2 3 4 5 6\n");
  CHECK_THROWS_AS(load_triangulation(bad3), std::runtime_error);
  std::istringstream bad4("1 2 3 4 5\n1 2 3 4 6\n1 2 3 4 7\n");
  CHECK_THROWS_AS(load_triangulation(bad4), std::runtime_error);
}

TEST_CASE("relabeling") {
  Cluster c({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}});
  std::map<int, int> swap56{{5, 6}, {6, 5}};
  Cluster r = relabeled(c, swap56);
  CHECK(r.simplexes() ==
        std::vector<SimplexVerts>{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6},
                                  {1, 2, 3, 5, 6}});
  CHECK(r.inner_faces() == std::vector<Face>{{1, 2, 3}});
}

TEST_CASE("classification report is deterministic text") {
  Cluster c({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}});
  std::string rep = c.classification_report();
  CHECK(rep ==
        "4-simplexes: 12345 12346\n"
        "inner tetrahedra: 1234\n"
        "boundary tetrahedra: 1235 1236 1245 1246 1345 1346 2345 2346\n"
        "inner 2-faces: (none)\n"
        "inner edges: (none)\n");
}
