#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "rookery/tverberg.hpp"

using namespace rookery;

namespace {

Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

std::vector<std::vector<Point>> coordinate_groups(
    const TverbergInstance& inst, const PartitionCertificate& cert) {
  std::vector<std::vector<Point>> out(cert.groups.size());
  for (size_t g = 0; g < cert.groups.size(); ++g)
    for (const auto& [c, i] : cert.groups[g])
      out[g].push_back(inst.colors[c][i]);
  return out;
}

}  // namespace

TEST_CASE("crossing segments meet in their unique common point") {
  std::vector<std::vector<Point>> groups = {{pt(0, 0), pt(2, 2)},
                                            {pt(0, 2), pt(2, 0)}};
  auto w = hulls_intersect(groups);
  REQUIRE(w.has_value());
  CHECK(w->x == pt(1, 1));
  CHECK(verify_witness(groups, *w));
  CHECK(planar_hulls_intersect(groups[0], groups[1]));
}

TEST_CASE("a point inside a triangle is its own witness") {
  Point inner = {Rational(1, 4), Rational(1, 4)};
  std::vector<std::vector<Point>> groups = {{inner},
                                            {pt(0, 0), pt(1, 0), pt(0, 1)}};
  auto w = hulls_intersect(groups);
  REQUIRE(w.has_value());
  CHECK(w->x == inner);
  CHECK(verify_witness(groups, *w));
}

TEST_CASE("separated triangles are infeasible") {
  std::vector<Point> a = {pt(0, 0), pt(1, 0), pt(0, 1)};
  std::vector<Point> b = {pt(5, 5), pt(6, 5), pt(5, 6)};
  CHECK(!hulls_intersect({a, b}).has_value());
  CHECK(!planar_hulls_intersect(a, b));
}

TEST_CASE("boundary contacts count as intersection") {
  // point on a segment
  CHECK(planar_hulls_intersect({pt(1, 0)}, {pt(0, 0), pt(2, 0)}));
  CHECK(hulls_intersect({{pt(1, 0)}, {pt(0, 0), pt(2, 0)}}).has_value());
  // collinear overlapping and disjoint segments
  CHECK(planar_hulls_intersect({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)}));
  CHECK(!planar_hulls_intersect({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)}));
  // triangles sharing exactly one vertex
  CHECK(planar_hulls_intersect({pt(0, 0), pt(1, 0), pt(0, 1)},
                               {pt(0, 0), pt(-1, 0), pt(0, -1)}));
  // identical single points, distinct single points
  CHECK(planar_hulls_intersect({pt(3, 3)}, {pt(3, 3)}));
  CHECK(!planar_hulls_intersect({pt(3, 3)}, {pt(3, 4)}));
}

TEST_CASE("the pivoting test agrees with the planar reference oracle") {
  std::mt19937_64 rng(914);
  auto draw_group = [&rng] {
    const int size = 1 + static_cast<int>(rng() % 4);
    std::vector<Point> g;
    // a coarse grid makes duplicates and collinear triples common
    for (int i = 0; i < size; ++i)
      g.push_back(pt(static_cast<long long>(rng() % 4),
                     static_cast<long long>(rng() % 4)));
    return g;
  };
  int hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = draw_group();
    const auto b = draw_group();
    const bool lp = hulls_intersect({a, b}).has_value();
    const bool oracle = planar_hulls_intersect(a, b);
    CAPTURE(trial);
    CHECK(lp == oracle);
    hits += lp ? 1 : 0;
  }
  // the grid is tight, so both outcomes must actually occur
  CHECK(hits > 0);
  CHECK(hits < 300);
}

TEST_CASE("witness verification is exact and rejects tampering") {
  std::vector<std::vector<Point>> groups = {{pt(0, 0), pt(2, 2)},
                                            {pt(0, 2), pt(2, 0)}};
  auto w = hulls_intersect(groups);
  REQUIRE(w.has_value());
  REQUIRE(verify_witness(groups, *w));

  auto bad = *w;
  bad.coefficients[0][0] += 1;
  CHECK(!verify_witness(groups, bad));

  bad = *w;
  bad.x[0] += Rational(1, 1000000);
  CHECK(!verify_witness(groups, bad));

  bad = *w;
  bad.coefficients[1].pop_back();
  CHECK(!verify_witness(groups, bad));

  bad = *w;
  bad.coefficients[0][0] = -bad.coefficients[0][0] - 1;
  CHECK(!verify_witness(groups, bad));
}

TEST_CASE("group validation rejects malformed hull queries") {
  CHECK_THROWS_AS(hulls_intersect({}), std::invalid_argument);
  CHECK_THROWS_AS(hulls_intersect({{pt(0, 0)}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(hulls_intersect({{pt(0, 0)}, {{Rational(1)}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(planar_hulls_intersect({}, {pt(0, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      planar_hulls_intersect({{Rational(1), Rational(2), Rational(3)}},
                             {pt(0, 0)}),
      std::invalid_argument);
}

TEST_CASE("search finds a certified partition on a random instance") {
  const auto inst = random_instance(2, 1, 2, 2, 42);
  REQUIRE(inst.colors[0].size() == 5);
  const auto sr = search_partition(inst);
  REQUIRE(sr.status == SearchStatus::Found);
  REQUIRE(sr.certificate.has_value());
  const auto& cert = *sr.certificate;
  REQUIRE(cert.groups.size() == 2);

  std::vector<std::pair<int, int>> used;
  for (const auto& g : cert.groups) {
    CHECK(!g.empty());
    CHECK(g.size() <= 2);  // one color, at most p = 2 points per group
    used.insert(used.end(), g.begin(), g.end());
  }
  auto sorted = used;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

  CHECK(verify_witness(coordinate_groups(inst, cert), cert.witness));

  // canonical labeling: the earliest used point sits in the first group
  auto least = *std::min_element(
      used.begin(), used.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.second, a.first) <
               std::make_pair(b.second, b.first);
      });
  CHECK(std::count(cert.groups[0].begin(), cert.groups[0].end(), least) == 1);
}

TEST_CASE("coincident points yield the immediate degenerate certificate") {
  TverbergInstance inst;
  inst.d = 2;
  inst.k = 1;
  inst.r = 2;
  inst.p = 2;
  Point same = {Rational(1, 2), Rational(1, 3)};
  inst.colors = {{same, same, same, same, same}};
  const auto sr = search_partition(inst);
  REQUIRE(sr.status == SearchStatus::Found);
  CHECK(sr.certificate->witness.x == same);
}

TEST_CASE("an instance with no partition exhausts the search honestly") {
  // three distinct points, one color, singleton groups only: no two
  // single-point hulls can meet, so every assignment fails
  TverbergInstance inst;
  inst.d = 2;
  inst.k = 1;
  inst.r = 2;
  inst.p = 1;
  inst.colors = {{pt(0, 0), pt(1, 0), pt(0, 1)}};
  const auto sr = search_partition(inst);
  CHECK(sr.status == SearchStatus::Exhausted);
  CHECK(!sr.certificate.has_value());
  // the symmetry-broken tree has exactly one leaf per unordered point pair
  CHECK(sr.leaf_tests == 3);

  // with a duplicate point the very same search succeeds
  inst.colors = {{pt(0, 0), pt(0, 0), pt(5, 5)}};
  const auto sr2 = search_partition(inst);
  REQUIRE(sr2.status == SearchStatus::Found);
  CHECK(sr2.certificate->witness.x == pt(0, 0));
}

TEST_CASE("a zero budget truncates before testing anything") {
  const auto inst = random_instance(2, 1, 2, 2, 7);
  SearchOptions opts;
  opts.max_leaf_tests = 0;
  const auto sr = search_partition(inst, opts);
  CHECK(sr.status == SearchStatus::Truncated);
  CHECK(sr.leaf_tests == 0);
  CHECK(!sr.certificate.has_value());

  opts.max_leaf_tests = -1;
  CHECK_THROWS_AS(search_partition(inst, opts), std::invalid_argument);
}

TEST_CASE("single-group and single-point edge cases work") {
  auto w = hulls_intersect({{pt(3, 4)}});
  REQUIRE(w.has_value());
  CHECK(w->x == pt(3, 4));

  TverbergInstance inst;
  inst.d = 2;
  inst.k = 1;
  inst.r = 1;
  inst.p = 1;
  inst.colors = {{pt(5, 7)}};
  const auto sr = search_partition(inst);
  REQUIRE(sr.status == SearchStatus::Found);
  CHECK(sr.certificate->groups[0] ==
        std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(sr.certificate->witness.x == pt(5, 7));
}

TEST_CASE("random instances replay from their seed in general position") {
  const auto a = random_instance(2, 3, 2, 1, 7);
  const auto b = random_instance(2, 3, 2, 1, 7);
  CHECK(a.colors == b.colors);
  CHECK(a.colors.size() == 3);
  for (const auto& cls : a.colors) CHECK(cls.size() == 3);

  const auto c = random_instance(2, 3, 2, 1, 8);
  CHECK(a.colors != c.colors);

  std::vector<Point> flat;
  for (const auto& cls : a.colors)
    for (const auto& q : cls) flat.push_back(q);
  for (const auto& q : flat)
    for (const auto& v : q) {
      CHECK(v >= -1);
      CHECK(v <= 1);
      CHECK(1024 % static_cast<long long>(denominator(v)) == 0);
    }
  // no coincidences, no collinear triples
  for (size_t i = 0; i < flat.size(); ++i)
    for (size_t j = i + 1; j < flat.size(); ++j) {
      CHECK(flat[i] != flat[j]);
      for (size_t t = j + 1; t < flat.size(); ++t) {
        const Rational det =
            (flat[j][0] - flat[i][0]) * (flat[t][1] - flat[i][1]) -
            (flat[j][1] - flat[i][1]) * (flat[t][0] - flat[i][0]);
        CHECK(det != 0);
      }
    }
}

TEST_CASE("hypothesis and prime power bookkeeping") {
  TverbergInstance probe;
  probe.d = 2;
  probe.k = 3;
  probe.r = 2;
  probe.p = 1;
  CHECK(probe.meets_count_hypothesis());  // 6 >= 4
  probe.k = 1;
  CHECK(!probe.meets_count_hypothesis());  // 2 < 4
  probe.p = 2;
  CHECK(probe.meets_count_hypothesis());  // 4 >= 4

  for (int r : {2, 3, 4, 5, 8, 9, 16, 27}) CHECK(prime_power(r));
  for (int r : {1, 6, 10, 12, 15, 0, -4}) CHECK(!prime_power(r));

  const auto rep = verify_theorem(2, 1, 2, 1, 0, 1);
  CHECK(!rep.hypothesis_met);
  CHECK(rep.prime_power_r);
  CHECK(rep.trials == 0);
  CHECK(rep.successes == 0);
}

TEST_CASE("theorem batches succeed across seeded trials") {
  const auto one_color = verify_theorem(2, 1, 2, 2, 25, 11);
  CHECK(one_color.hypothesis_met);
  CHECK(one_color.prime_power_r);
  CHECK(one_color.successes == 25);
  CHECK(one_color.failures.empty());
  CHECK(one_color.total_leaf_tests >= 25);

  const auto three_colors = verify_theorem(2, 3, 2, 1, 25, 5);
  CHECK(three_colors.hypothesis_met);
  CHECK(three_colors.successes == 25);
  CHECK(three_colors.failures.empty());
}

TEST_CASE("instance json round-trips with hints and plain integers") {
  const auto inst = random_instance(2, 3, 2, 1, 7);
  auto j = instance_to_json(inst);
  const auto back = instance_from_json(j);
  CHECK(back.d == inst.d);
  CHECK(back.k == inst.k);
  CHECK(back.r == inst.r);
  CHECK(back.p == inst.p);
  CHECK(back.colors == inst.colors);

  j.erase("r");
  j.erase("p");
  const auto hinted = instance_from_json(j, 2, 1);
  CHECK(hinted.colors == inst.colors);
  CHECK(hinted.r == 2);

  const nlohmann::json plain = {
      {"colors", {{{0, 0}, {2, 2}, {1, 3}}}}, {"r", 2}, {"p", 1}};
  const auto simple = instance_from_json(plain);
  CHECK(simple.d == 2);
  CHECK(simple.k == 1);
  CHECK(simple.colors[0][1] == pt(2, 2));
}

TEST_CASE("malformed instance json is rejected") {
  CHECK_THROWS_AS(instance_from_json(nlohmann::json::object()),
                  std::invalid_argument);
  // denominator zero
  const nlohmann::json bad_rat = {
      {"colors",
       {{{nlohmann::json::array({1, 0}), 0},
         {0, 0},
         {1, 1}}}},
      {"r", 2},
      {"p", 1}};
  CHECK_THROWS_AS(instance_from_json(bad_rat), std::invalid_argument);
  // wrong class size for the declared caps
  const nlohmann::json short_class = {
      {"colors", {{{0, 0}, {1, 1}}}}, {"r", 2}, {"p", 1}};
  CHECK_THROWS_AS(instance_from_json(short_class), std::invalid_argument);
}

TEST_CASE("certificate json carries groups, weights, and the witness") {
  const auto inst = random_instance(2, 1, 2, 2, 42);
  const auto sr = search_partition(inst);
  REQUIRE(sr.status == SearchStatus::Found);
  const auto j = certificate_to_json(*sr.certificate);
  REQUIRE(j.contains("groups"));
  REQUIRE(j.contains("witness"));
  REQUIRE(j.contains("coefficients"));
  CHECK(j["groups"].size() == 2);
  CHECK(j["witness"].size() == 2);
  CHECK(j["coefficients"].size() == 2);

  const auto rep = verify_theorem(2, 1, 2, 2, 3, 9);
  const auto rj = theorem_report_to_json(rep);
  CHECK(rj["trials"] == 3);
  CHECK(rj["successes"] == 3);
  CHECK(rj["failures"].empty());
  CHECK(std::string(search_status_name(SearchStatus::Truncated)) ==
        "truncated");
}
