#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "rookery/boards.hpp"
#include "rookery/homology.hpp"
#include "rookery/simplicial_complex.hpp"

using namespace rookery;

namespace {

std::vector<long long> reduced_betti(const SimplicialComplex& k) {
  return homology(k).betti;
}

bool torsion_free(const HomologySummary& h) {
  for (const auto& t : h.torsion)
    if (!t.empty()) return false;
  return true;
}

SimplicialComplex projective_plane() {
  // six-vertex triangulation, every edge in exactly two triangles
  return SimplicialComplex::from_maximal(
      {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
       {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}},
      6);
}

}  // namespace

TEST_CASE("smith normal form basics") {
  SparseIntMatrix id3;
  id3.rows = id3.cols = 3;
  for (int i = 0; i < 3; ++i) id3.add(i, i, 1);
  auto s = smith_normal_form(id3);
  CHECK(s.rank() == 3);
  CHECK(s.invariant_factors == std::vector<BigInt>{1, 1, 1});
  CHECK(s.torsion().empty());

  SparseIntMatrix d23;
  d23.rows = d23.cols = 2;
  d23.add(0, 0, 2);
  d23.add(1, 1, 3);
  s = smith_normal_form(d23);
  CHECK(s.invariant_factors == std::vector<BigInt>{1, 6});

  SparseIntMatrix zero;
  zero.rows = 4;
  zero.cols = 5;
  s = smith_normal_form(zero);
  CHECK(s.rank() == 0);
  CHECK(s.invariant_factors.empty());

  SparseIntMatrix m;
  m.rows = m.cols = 2;
  m.add(0, 0, 2);
  m.add(0, 1, 4);
  m.add(1, 0, 6);
  m.add(1, 1, 8);
  s = smith_normal_form(m);
  CHECK(s.invariant_factors == std::vector<BigInt>{2, 4});
}

TEST_CASE("duplicate triplets accumulate") {
  SparseIntMatrix m;
  m.rows = m.cols = 1;
  m.add(0, 0, 5);
  m.add(0, 0, -5);
  CHECK(smith_normal_form(m).rank() == 0);
}

TEST_CASE("word overflow falls back to wide integers") {
  const long long big = 1ll << 62;
  SparseIntMatrix m;
  m.rows = m.cols = 2;
  m.add(0, 0, 1);
  m.add(0, 1, big);
  m.add(1, 0, big);
  m.add(1, 1, big);
  auto s = smith_normal_form(m);
  REQUIRE(s.rank() == 2);
  CHECK(s.invariant_factors[0] == 1);
  CHECK(s.invariant_factors[1] == (BigInt(1) << 124) - (BigInt(1) << 62));
}

TEST_CASE("boundary matrix shapes and the augmentation row") {
  auto k = SimplicialComplex::from_maximal({{0, 1}, {1, 2}}, 3);
  auto d0 = boundary_matrix(k, 0);
  CHECK(d0.rows == 1);
  CHECK(d0.cols == 3);
  auto d1 = boundary_matrix(k, 1);
  CHECK(d1.rows == 3);
  CHECK(d1.cols == 2);
  CHECK_THROWS(boundary_matrix(k, 2));
  CHECK_THROWS(boundary_matrix(k, -1));
}

TEST_CASE("homology of spheres in several guises") {
  // boundary of a triangle: a circle
  auto s1 = SimplicialComplex::from_maximal({{0, 1}, {0, 2}, {1, 2}}, 3);
  auto h = homology(s1);
  CHECK(sphere_homology(h, 1));
  CHECK_FALSE(sphere_homology(h, 0));

  // octahedron: a 2-sphere
  auto s2 = multipartite({2, 2, 2}).skeleton(2);
  // skeleton(2) of the octahedron facets is the octahedron itself
  CHECK(sphere_homology(homology(s2), 2));

  // two points: a 0-sphere
  auto s0 = SimplicialComplex::from_maximal({{0}, {1}}, 2);
  CHECK(sphere_homology(homology(s0), 0));

  // the empty face alone: a (-1)-sphere
  auto sm1 = SimplicialComplex::empty_face_complex(3);
  auto hm1 = homology(sm1);
  CHECK(hm1.betti_minus1 == 1);
  CHECK(sphere_homology(hm1, -1));
}

TEST_CASE("homology of the void complex") {
  auto h = homology(SimplicialComplex{});
  CHECK(h.void_complex);
  CHECK(homological_connectivity(h).hconn == -2);
}

TEST_CASE("projective plane has two-torsion") {
  auto h = homology(projective_plane());
  REQUIRE(h.dim == 2);
  CHECK(h.betti == std::vector<long long>{0, 0, 0});
  REQUIRE(h.torsion[1].size() == 1);
  CHECK(h.torsion[1][0] == 2);
  CHECK(h.torsion[0].empty());
  CHECK(h.torsion[2].empty());

  auto conn = homological_connectivity(h);
  CHECK(conn.hconn == 0);
  CHECK(conn.witness_dim == 1);
  // over the rationals the torsion disappears entirely
  auto rat = rational_connectivity(h);
  CHECK(rat.capped);
  CHECK(rat.hconn == 2);
}

TEST_CASE("non-reduced homology counts components") {
  auto two_edges = uniform_chessboard(2, 2, 1, 1);  // two disjoint segments
  auto hr = homology(two_edges, true);
  CHECK(hr.betti[0] == 1);
  auto hn = homology(two_edges, false);
  CHECK(hn.betti[0] == 2);
  CHECK(hn.betti_minus1 == 0);

  auto conn = homological_connectivity(hr);
  CHECK(conn.hconn == -1);
  CHECK(conn.witness_dim == 0);
}

TEST_CASE("full simplex is homologically trivial through its dimension") {
  auto k = SimplicialComplex::from_maximal({{0, 1, 2, 3}}, 4);
  auto conn = homological_connectivity(k);
  CHECK(conn.hconn == 3);
  CHECK(conn.capped);
  CHECK(conn.witness_dim == kNoWitness);
}

TEST_CASE("small board fixtures") {
  // 3x2 with doubled rows: a cylinder
  auto c = uniform_chessboard(3, 2, 2, 1);
  auto hc = homology(c);
  CHECK(hc.face_counts == std::vector<long long>{6, 12, 6});
  CHECK(hc.betti == std::vector<long long>{0, 1, 0});
  CHECK(torsion_free(hc));

  // 4x2 doubled rows has the homology of a 2-sphere
  CHECK(reduced_betti(uniform_chessboard(4, 2, 2, 1)) ==
        std::vector<long long>{0, 0, 1, 0});
  // 5x2 doubled rows is a 3-sphere
  CHECK(sphere_homology(homology(uniform_chessboard(5, 2, 2, 1)), 3));
  // 3x2 with everything doubled is again a 3-sphere
  CHECK(sphere_homology(homology(uniform_chessboard(3, 2, 2, 2)), 3));
  // plain 4x3 board is a torus
  auto t = homology(uniform_chessboard(4, 3, 1, 1));
  CHECK(t.betti == std::vector<long long>{0, 2, 1});
  CHECK(torsion_free(t));
}

TEST_CASE("wider board fixtures") {
  CHECK(reduced_betti(uniform_chessboard(3, 3, 2, 1)) ==
        std::vector<long long>{0, 0, 5});
  CHECK(reduced_betti(uniform_chessboard(4, 3, 2, 1)) ==
        std::vector<long long>{0, 0, 1, 2});
  CHECK(reduced_betti(uniform_chessboard(5, 3, 2, 1)) ==
        std::vector<long long>{0, 0, 0, 16, 0});
  CHECK(reduced_betti(uniform_chessboard(6, 3, 2, 1)) ==
        std::vector<long long>{0, 0, 0, 5, 7, 0});
  CHECK(reduced_betti(uniform_chessboard(7, 2, 2, 1)) ==
        std::vector<long long>{0, 0, 0, 71});
}

TEST_CASE("partially doubled rows") {
  CHECK(reduced_betti(two_one_j(TwoOneJSpec::make(3, 2, 1))) ==
        std::vector<long long>{0, 1, 0});
  CHECK(reduced_betti(two_one_j(TwoOneJSpec::make(4, 2, 1))) ==
        std::vector<long long>{0, 0, 1});
  CHECK(reduced_betti(two_one_j(TwoOneJSpec::make(5, 2, 1))) ==
        std::vector<long long>{0, 0, 9});
  CHECK(reduced_betti(two_one_j(TwoOneJSpec::make(4, 3, 1))) ==
        std::vector<long long>{0, 0, 5, 0});
  CHECK(reduced_betti(two_one_j(TwoOneJSpec::make(5, 3, 1))) ==
        std::vector<long long>{0, 0, 5, 1});
  CHECK(reduced_betti(two_one_j(TwoOneJSpec::make(5, 3, 2))) ==
        std::vector<long long>{0, 0, 0, 6, 0});
}

TEST_CASE("doubled rows on the 7x3 board, full integer homology") {
  auto k = uniform_chessboard(7, 3, 2, 1);
  auto h = homology(k);
  REQUIRE(h.dim == 5);
  CHECK(h.betti == std::vector<long long>{0, 0, 0, 0, 42, 1});
  CHECK(torsion_free(h));
  auto conn = homological_connectivity(h);
  CHECK(conn.hconn == 3);
  CHECK(conn.witness_dim == 4);

  // alternating sum of the reduced ranks must reproduce the reduced
  // euler characteristic
  long long chi = -h.betti_minus1;
  for (int i = 0; i <= h.dim; ++i)
    chi += (i % 2 == 0 ? 1 : -1) * h.betti[i];
  CHECK(chi == k.reduced_euler());
}

TEST_CASE("euler identity across assorted complexes") {
  std::vector<SimplicialComplex> ks = {
      uniform_chessboard(4, 3, 2, 1), projective_plane(),
      two_one_j(TwoOneJSpec::make(5, 3, 1)), multipartite({2, 2, 2}),
      bier_sphere(cap_complex(5, 2), 5)};
  for (const auto& k : ks) {
    auto h = homology(k);
    long long chi = -h.betti_minus1;
    for (int i = 0; i <= h.dim; ++i)
      chi += (i % 2 == 0 ? 1 : -1) * h.betti[i];
    CHECK(chi == k.reduced_euler());
  }
}
