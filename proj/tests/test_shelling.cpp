#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rookery/boards.hpp"
#include "rookery/homology.hpp"
#include "rookery/shelling.hpp"

using namespace rookery;

namespace {

BoardSpec one_per_column(int m, std::vector<int> row_caps) {
  BoardSpec spec;
  spec.m = m;
  spec.n = static_cast<int>(row_caps.size());
  spec.row_caps = std::move(row_caps);
  spec.col_caps.assign(m, 1);
  return spec;
}

std::vector<Simplex> as_simplices(const std::vector<FacetTuple>& order, int m) {
  std::vector<Simplex> out;
  out.reserve(order.size());
  for (const auto& t : order) out.push_back(simplex_from_tuple(t, m));
  return out;
}

}  // namespace

TEST_CASE("priority sequence walks lacunas left to right, descending inside") {
  CHECK(priority_sequence({3}, 5) == std::vector<int>{2, 1, 5, 4});
  CHECK(priority_sequence({1, 4}, 6) == std::vector<int>{3, 2, 6, 5});
  CHECK(priority_sequence({}, 3) == std::vector<int>{3, 2, 1});
  CHECK(priority_sequence({2, 3}, 3) == std::vector<int>{1});
  CHECK(priority_sequence({1, 2, 3}, 3).empty());
}

TEST_CASE("first rows decide by the largest differing column") {
  FacetTuple a{{{3}, {1}}}, b{{{5}, {1}}};
  CHECK(compare_facets(a, b, 5) == -1);
  CHECK(compare_facets(b, a, 5) == 1);
  CHECK(compare_facets(a, a, 5) == 0);

  // common suffix stripped before the comparison
  FacetTuple c{{{2, 5}, {1}}}, d{{{3, 5}, {1}}};
  CHECK(compare_facets(c, d, 6) == -1);
  FacetTuple e{{{1, 2}, {4}}}, f{{{1, 3}, {4}}};
  CHECK(compare_facets(e, f, 5) == -1);
}

TEST_CASE("scan prefers missing rooks, then deeper rows") {
  // column 2 is scanned first; a leaves it empty, b fills it
  FacetTuple a{{{3}, {1}, {4}}}, b{{{3}, {2}, {4}}};
  CHECK(compare_facets(a, b, 5) == -1);
  CHECK(compare_facets(b, a, 5) == 1);

  // both fill column 2, the higher row index goes first
  FacetTuple c{{{3}, {2}, {1}}}, d{{{3}, {1}, {2}}};
  CHECK(compare_facets(c, d, 5) == 1);
  CHECK(compare_facets(d, c, 5) == -1);
}

TEST_CASE("ties fall through to the residual board") {
  // both leave the first scanned column (2) empty, so the decision moves to
  // the 3x1 board left after dropping scanned and first-row columns
  FacetTuple a{{{3}, {1, 4}}}, b{{{3}, {1, 5}}};
  CHECK(compare_facets(a, b, 5) == -1);
  CHECK(compare_facets(b, a, 5) == 1);
}

TEST_CASE("comparator rejects malformed inputs") {
  FacetTuple a{{{1}, {2}}}, b{{{1}}};
  CHECK_THROWS_AS(compare_facets(a, b, 4), std::invalid_argument);
  FacetTuple c{{{1, 2}, {3}}}, d{{{1}, {3}}};
  CHECK_THROWS_AS(compare_facets(c, d, 4), std::invalid_argument);
  FacetTuple e{{{1}}}, f{{{2}}};
  CHECK_THROWS_AS(compare_facets(e, f, 40), std::invalid_argument);
}

TEST_CASE("orders cover the facet census and verify as shellings") {
  struct Row {
    int m;
    std::vector<int> caps;
    long long wedge;
  };
  const std::vector<Row> table = {
      {3, {2}, 1},        {5, {2, 2}, 1},  {6, {2, 2}, 19},
      {7, {2, 2}, 71},    {5, {1, 2}, 9},  {7, {2, 2, 1}, 62},
  };
  for (const auto& row : table) {
    CAPTURE(row.m);
    auto order = shelling_order(row.m, row.caps);
    auto board = multi_chessboard(one_per_column(row.m, row.caps));
    auto simplices = as_simplices(order, row.m);

    auto sorted = simplices;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == board.facets());

    auto cert = verify_shelling(simplices);
    REQUIRE(cert.verified);
    CHECK(!cert.violation.has_value());
    CHECK(cert.restriction.size() == order.size());
    CHECK(wedge_summary(cert) == row.wedge);
  }
}

TEST_CASE("spanning facets count the top homology rank") {
  struct Row {
    int m;
    std::vector<int> caps;
  };
  for (const auto& row : std::vector<Row>{{5, {2, 2}}, {5, {1, 2}}, {7, {2, 2, 1}}}) {
    CAPTURE(row.m);
    auto order = shelling_order(row.m, row.caps);
    auto cert = verify_shelling(as_simplices(order, row.m));
    REQUIRE(cert.verified);
    auto h = homology(multi_chessboard(one_per_column(row.m, row.caps)));
    REQUIRE(!h.betti.empty());
    CHECK(wedge_summary(cert) == h.betti.back());
    // a shellable complex is a wedge of top spheres, so nothing else survives
    for (size_t i = 0; i + 1 < h.betti.size(); ++i) CHECK(h.betti[i] == 0);
    for (const auto& tor : h.torsion) CHECK(tor.empty());
  }
}

TEST_CASE("comparator is a strict total order on small boards") {
  struct Row {
    int m;
    std::vector<int> caps;
  };
  for (const auto& row :
       std::vector<Row>{{5, {2, 2}}, {7, {2, 1}}, {5, {1, 1, 1}}, {5, {1, 2}}}) {
    CAPTURE(row.m);
    auto order = shelling_order(row.m, row.caps);
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = 0; j < order.size(); ++j) {
        const int c = compare_facets(order[i], order[j], row.m);
        CHECK(c == -compare_facets(order[j], order[i], row.m));
        CHECK((c == 0) == (i == j));
        if (i < j) CHECK(c == -1);
      }
  }
}

TEST_CASE("lexicographic facet order fails on one-rook boards") {
  for (int m = 3; m <= 6; ++m) {
    CAPTURE(m);
    auto board = uniform_chessboard(m, 2, 1, 1);
    auto facets = board.facets();  // already in lexicographic order
    auto cert = verify_shelling(facets);
    REQUIRE(!cert.verified);
    REQUIRE(cert.violation.has_value());
    CHECK(cert.violation->index == m - 1);
    CHECK(cert.violation->earlier == 0);
    CHECK(cert.violation->intersection.empty());
    CHECK(facets[m - 1] == Simplex{1, m});
  }
}

TEST_CASE("tuples and simplices convert both ways") {
  FacetTuple t{{{3}, {1, 4}}};
  Simplex f = simplex_from_tuple(t, 5);
  CHECK(f == Simplex{2, 5, 8});
  CHECK(tuple_from_simplex(f, 5, 2) == t);

  FacetTuple u{{{2, 7}, {4}, {1, 3}}};
  CHECK(tuple_from_simplex(simplex_from_tuple(u, 7), 7, 3) == u);

  CHECK_THROWS_AS(tuple_from_simplex({99}, 5, 2), std::invalid_argument);
}

TEST_CASE("narrow boards are exploratory only") {
  CHECK_THROWS_AS(shelling_order(4, {2, 2}), std::invalid_argument);
  auto order = shelling_order(4, {2, 2}, true);
  CHECK(order.size() == 6);
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = 0; j < order.size(); ++j) {
      const int c = compare_facets(order[i], order[j], 4);
      CHECK(c == -compare_facets(order[j], order[i], 4));
      if (i < j) CHECK(c == -1);
    }
  // caps that cannot all be placed are rejected even when exploring
  CHECK_THROWS_AS(shelling_order(3, {2, 2}, true), std::invalid_argument);
  CHECK_THROWS_AS(shelling_order(5, {2, 0}), std::invalid_argument);
}

TEST_CASE("brute force finds shellings exactly when they exist") {
  auto ring = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}}, 3);
  auto order = brute_force_shelling(ring);
  REQUIRE(order.size() == 3);
  auto cert = verify_shelling(order);
  CHECK(cert.verified);
  CHECK(wedge_summary(cert) == 1);

  // two triangles glued along a vertex: the intersection has codimension 2
  auto pinched =
      SimplicialComplex::from_facets({{0, 1, 2}, {2, 3, 4}}, 5);
  CHECK(brute_force_shelling(pinched).empty());

  auto split = SimplicialComplex::from_facets({{0, 1}, {2, 3}}, 4);
  CHECK(brute_force_shelling(split).empty());

  auto impure = SimplicialComplex::from_facets({{0, 1, 2}, {3, 4}}, 5);
  CHECK(brute_force_shelling(impure).empty());

  CHECK(brute_force_shelling(SimplicialComplex()).empty());
  auto point_rule = SimplicialComplex::from_facets({{}}, 0);
  auto trivial = brute_force_shelling(point_rule);
  REQUIRE(trivial.size() == 1);
  CHECK(verify_shelling(trivial).verified);
}

TEST_CASE("verifier validates its input") {
  CHECK(verify_shelling({}).verified);
  CHECK_THROWS_AS(verify_shelling({{0, 1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_shelling({{0, 1}, {0, 1}}), std::invalid_argument);

  auto cert = verify_shelling({{0, 1}, {2, 3}});
  CHECK(!cert.verified);
  REQUIRE(cert.violation.has_value());
  CHECK(cert.violation->earlier == 0);
  CHECK(cert.violation->index == 1);
  CHECK(cert.violation->intersection.empty());
  CHECK_THROWS_AS(wedge_summary(cert), std::logic_error);
}

TEST_CASE("standard boards agree with the anchored cyclic scan") {
  struct Row {
    int m, n;
  };
  for (const auto& row : std::vector<Row>{{3, 2}, {4, 2}, {5, 2}, {5, 3}, {6, 3}}) {
    CAPTURE(row.m);
    CAPTURE(row.n);
    auto order = shelling_order(row.m, std::vector<int>(row.n, 1));
    std::vector<std::vector<int>> placed;
    placed.reserve(order.size());
    for (const auto& t : order) {
      std::vector<int> cols;
      for (const auto& r : t.rows) cols.push_back(r[0]);
      placed.push_back(std::move(cols));
    }
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = 0; j < order.size(); ++j)
        CHECK(compare_standard_board(placed[i], placed[j], row.m) ==
              compare_facets(order[i], order[j], row.m));
    CHECK(verify_shelling(as_simplices(order, row.m)).verified);
  }
}

TEST_CASE("two-row mixed boards stratify cyclically behind the anchor") {
  const int m = 6;
  auto order = shelling_order(m, {1, 2});
  auto cyc = [&](int a, int d) { return (a - 1 - d + 2 * m) % m + 1; };
  int prev_anchor = 0, prev_stratum = 0;
  std::vector<std::vector<int>> counts(m + 1, std::vector<int>(4, 0));
  for (const auto& t : order) {
    const int a = t.rows[0][0];
    const auto& snd = t.rows[1];
    const bool near = std::count(snd.begin(), snd.end(), cyc(a, 1)) > 0;
    const bool far = std::count(snd.begin(), snd.end(), cyc(a, 2)) > 0;
    const int stratum = near ? (far ? 3 : 2) : 1;
    // blocks ordered by anchor, strata ascending inside each block
    CHECK(a >= prev_anchor);
    if (a == prev_anchor) CHECK(stratum >= prev_stratum);
    prev_anchor = a;
    prev_stratum = stratum;
    ++counts[a][stratum];
  }
  for (int a = 1; a <= m; ++a) {
    CHECK(counts[a][1] == 6);
    CHECK(counts[a][2] == 3);
    CHECK(counts[a][3] == 1);
  }
}

TEST_CASE("reversed residual relabeling also shells") {
  auto order = shelling_order(6, {2, 2}, false, CaseCRelabel::OrderReversing);
  auto cert = verify_shelling(as_simplices(order, 6));
  REQUIRE(cert.verified);
  CHECK(wedge_summary(cert) == 19);
}
