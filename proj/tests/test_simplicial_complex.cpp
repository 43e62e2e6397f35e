#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "rookery/simplicial_complex.hpp"

using namespace rookery;

namespace {

SimplicialComplex triangle_boundary() {
  return SimplicialComplex::from_maximal({{0, 1}, {0, 2}, {1, 2}}, 3);
}

}  // namespace

TEST_CASE("void complex and empty-face complex are distinct") {
  SimplicialComplex v;
  CHECK(v.is_void());
  CHECK(v.dim() == kDimVoid);
  CHECK(v.facets().empty());
  CHECK_FALSE(v.contains({}));

  auto e = SimplicialComplex::empty_face_complex(4);
  CHECK_FALSE(e.is_void());
  CHECK(e.is_empty_face_only());
  CHECK(e.dim() == -1);
  CHECK(e.contains({}));
  CHECK(e.face_count(-1) == 1);
  CHECK(e.f_vector().counts.empty());
  CHECK(e.euler() == 0);
  CHECK(e.reduced_euler() == -1);
}

TEST_CASE("from_facets drops dominated candidates") {
  auto k = SimplicialComplex::from_facets(
      {{0, 1, 2}, {1, 2}, {0}, {2, 3}, {}, {2, 3}}, 4);
  auto fs = k.facets();
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == Simplex{0, 1, 2});
  CHECK(fs[1] == Simplex{2, 3});
  CHECK(k.contains({1, 2}));
  CHECK(k.contains({}));
  CHECK_FALSE(k.contains({0, 3}));
}

TEST_CASE("from_facets rejects unsorted or duplicate vertices") {
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{1, 0}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 0}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{-1}}, 2),
                  std::invalid_argument);
}

TEST_CASE("f-vector and euler characteristic of a triangle boundary") {
  auto k = triangle_boundary();
  CHECK(k.dim() == 1);
  auto f = k.f_vector();
  REQUIRE(f.counts.size() == 2);
  CHECK(f.counts[0] == 3);
  CHECK(f.counts[1] == 3);
  CHECK(k.euler() == 0);
  CHECK(k.reduced_euler() == -1);
  CHECK(k.face_count(-1) == 1);
  CHECK(k.face_count(5) == 0);
}

TEST_CASE("faces are produced in lexicographic order") {
  auto k = SimplicialComplex::from_maximal({{0, 1, 2}, {1, 2, 3}}, 4);
  auto edges = k.faces(1);
  REQUIRE(edges.size() == 5);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(edges.front() == Simplex{0, 1});
  CHECK(edges.back() == Simplex{2, 3});
}

TEST_CASE("link of a vertex in the triangle boundary is two points") {
  auto k = triangle_boundary();
  auto l = k.link({0});
  CHECK(l.dim() == 0);
  CHECK(l.face_count(0) == 2);
  CHECK(l.contains({1}));
  CHECK(l.contains({2}));
  CHECK_FALSE(l.contains({1, 2}));
}

TEST_CASE("link of the empty face is the complex itself") {
  auto k = triangle_boundary();
  CHECK(k.link({}) == k);
}

TEST_CASE("link of a facet is the empty-face complex") {
  auto k = triangle_boundary();
  auto l = k.link({0, 1});
  CHECK(l.is_empty_face_only());
}

TEST_CASE("link of a non-face throws") {
  auto k = triangle_boundary();
  CHECK_THROWS_AS(k.link({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("skeleton truncates dimension") {
  auto k = SimplicialComplex::from_maximal({{0, 1, 2, 3}}, 4);
  auto s1 = k.skeleton(1);
  CHECK(s1.dim() == 1);
  CHECK(s1.face_count(1) == 6);
  CHECK(s1.face_count(0) == 4);
  auto sm1 = k.skeleton(-1);
  CHECK(sm1.is_empty_face_only());
  // skeleton above current dimension is a no-op
  CHECK(k.skeleton(9) == k);
}

TEST_CASE("join relabels the second factor") {
  auto a = SimplicialComplex::from_maximal({{0}, {1}}, 2);  // two points
  auto b = SimplicialComplex::from_maximal({{0}, {1}}, 2);
  auto j = join(a, b);  // join of two 0-spheres: a 4-cycle
  CHECK(j.dim() == 1);
  CHECK(j.face_count(0) == 4);
  CHECK(j.face_count(1) == 4);
  CHECK(j.euler() == 0);
}

TEST_CASE("join with the empty-face complex is the identity") {
  auto k = triangle_boundary();
  auto e = SimplicialComplex::empty_face_complex(0);
  auto j = join(k, e);
  CHECK(j.f_vector().counts == k.f_vector().counts);
}

TEST_CASE("join with the void complex is void") {
  auto k = triangle_boundary();
  SimplicialComplex v;
  CHECK(join(k, v).is_void());
  CHECK(join(v, k).is_void());
}

TEST_CASE("deleted join of a simplex boundary") {
  // two copies of the full simplex on [2] with s = 2 gives the 4-cycle again:
  // faces pair a subset with a disjoint subset
  auto k = SimplicialComplex::from_maximal({{0, 1}}, 2);
  auto dj = deleted_join(k, 2, 2);
  CHECK(dj.dim() == 1);
  CHECK(dj.face_count(0) == 4);
  CHECK(dj.face_count(1) == 4);
  CHECK(dj.euler() == 0);
}

TEST_CASE("deleted join vertex ids follow copy * ground + vertex") {
  auto k = SimplicialComplex::from_maximal({{0, 1}}, 2);
  auto dj = deleted_join(k, 2, 2);
  // copy 0 holds {0,1}, copy 1 holds {2,3}; the mixed pairs are the edges
  CHECK(dj.contains({0, 3}));
  CHECK(dj.contains({1, 2}));
  CHECK_FALSE(dj.contains({0, 2}));  // both cover original vertex 0
}

TEST_CASE("alexander dual of the boundary of a triangle on a 4 point ground") {
  // faces of the dual are complements of non-faces
  auto k = SimplicialComplex::from_maximal({{0, 1}, {0, 2}, {1, 2}}, 4);
  auto d = alexander_dual(k, 4);
  // A ∉ dual iff complement of A is a face of k; double dual returns k
  auto dd = alexander_dual(d, 4);
  CHECK(dd == k);
}

TEST_CASE("alexander dual swaps full simplex and void complex") {
  auto full = SimplicialComplex::from_maximal({{0, 1, 2}}, 3);
  CHECK(alexander_dual(full, 3).is_void());
  SimplicialComplex v;
  auto d = alexander_dual(v, 3);
  CHECK(d.face_count(2) == 1);
  CHECK(d.dim() == 2);
}

TEST_CASE("sorted set helpers") {
  Simplex a{0, 2, 4}, b{2, 3, 4};
  CHECK(is_subset({2, 4}, a));
  CHECK_FALSE(is_subset({1}, a));
  CHECK(set_union(a, b) == Simplex{0, 2, 3, 4});
  CHECK(set_difference(a, b) == Simplex{0});
  CHECK(set_intersection(a, b) == Simplex{2, 4});
}

TEST_CASE("coords round-trip on a complex") {
  auto k = triangle_boundary();
  k.set_coords({{1, 1}, {2, 1}, {3, 1}});
  REQUIRE(k.coords().size() == 3);
  CHECK(k.coords()[2] == std::pair<int, int>{3, 1});
}
