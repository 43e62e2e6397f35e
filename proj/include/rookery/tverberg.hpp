#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace rookery {

using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;  // one coordinate per dimension

// A colored point configuration: k color classes of (p+1)r - 1 points each
// in R^d. The search divides some of the points into r disjoint nonempty
// groups, at most p points of any color per group, so that the convex hulls
// of all groups share a point. Points may stay unused.
struct TverbergInstance {
  int d = 0, k = 0, r = 0, p = 0;
  std::vector<std::vector<Point>> colors;

  int points_per_color() const { return (p + 1) * r - 1; }
  // the counting hypothesis behind the guarantee: p*r*k >= (r-1)(d+1)+1
  bool meets_count_hypothesis() const;
  void validate() const;
};

// True when r is q^a for a single prime q. The partition guarantee is only
// proved for prime powers; other r are explored on the same footing but
// reported as outside the guarantee.
bool prime_power(int r);

struct HullWitness {
  Point x;  // a point of every group's hull
  // convex weights per group, aligned with the group's point order
  std::vector<std::vector<Rational>> coefficients;
};

// Decides whether the hulls of the groups share a point. Feasibility of the
// exact rational system (per group: weights >= 0 summing to 1, weighted sums
// all equal) via phase-one pivoting with Bland's rule, so no floats and no
// cycling. Groups must be nonempty with equal-dimension points.
std::optional<HullWitness> hulls_intersect(
    const std::vector<std::vector<Point>>& groups);

// Substitutes a witness back into the groups: sizes line up, weights are
// nonnegative and sum to one, and every weighted sum reproduces x exactly.
bool verify_witness(const std::vector<std::vector<Point>>& groups,
                    const HullWitness& w);

// Independent planar reference predicate: two hulls meet iff some pair of
// simplices spanned by at most three points of each set meets. Exact
// orientation tests with full collinear handling; intended for cross-checks
// against hulls_intersect on two groups in the plane.
bool planar_hulls_intersect(const std::vector<Point>& a,
                            const std::vector<Point>& b);

struct PartitionCertificate {
  // groups[g] lists (color, index) positions into the instance's classes
  std::vector<std::vector<std::pair<int, int>>> groups;
  HullWitness witness;
};

enum class SearchStatus { Found, Exhausted, Truncated };

struct SearchOptions {
  long long max_leaf_tests = 2000000;  // hull tests before truncating
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<PartitionCertificate> certificate;
  long long leaf_tests = 0;
};

// Depth-first search over assignments of points to groups 1..r or unused.
// Points interleave round-robin across colors; a new group index unlocks
// only after all lower ones are in use, so the lexicographically least used
// point always sits in group 1 and relabeled duplicates are never visited.
// Exhausted means the full assignment space was enumerated without a
// certificate; Truncated means the budget ran out first and says nothing.
// Every returned certificate has been re-verified by substitution.
SearchResult search_partition(const TverbergInstance& inst,
                              const SearchOptions& opts = {});

// Reproducible rational configuration on the grid (1/1024)Z^d with
// coordinates in [-1, 1]: points are drawn one at a time and redrawn until
// no d+1 of the accepted points are affinely dependent.
TverbergInstance random_instance(int d, int k, int r, int p, uint64_t seed);

struct TrialFailure {
  uint64_t instance_seed = 0;
  SearchStatus status = SearchStatus::Exhausted;
  long long leaf_tests = 0;
};

struct TheoremReport {
  int d = 0, k = 0, r = 0, p = 0;
  int trials = 0;
  uint64_t seed = 0;
  bool hypothesis_met = false;
  bool prime_power_r = false;
  int successes = 0;
  int exhausted = 0;
  int truncated = 0;
  long long total_leaf_tests = 0;
  // the everything-you-need-to-replay record of every non-success
  std::vector<TrialFailure> failures;
};

// Runs search_partition on `trials` instances drawn from one master seed.
// An exhausted trial is momentous (it would contradict the guarantee when
// the hypotheses hold), so its seed is recorded verbatim, never swallowed.
TheoremReport verify_theorem(int d, int k, int r, int p, int trials,
                             uint64_t seed, const SearchOptions& opts = {});

// "found", "exhausted", or "truncated"
const char* search_status_name(SearchStatus s);

// File format: {"colors": [[point, ...] per class, ...]} with each point a
// list of d coordinates, each coordinate [num, den] or a plain integer.
// Optional "d"/"k"/"r"/"p" keys override the hints.
TverbergInstance instance_from_json(const nlohmann::json& j, int r_hint = 0,
                                    int p_hint = 0);
nlohmann::json instance_to_json(const TverbergInstance& inst);
nlohmann::json certificate_to_json(const PartitionCertificate& cert);
nlohmann::json theorem_report_to_json(const TheoremReport& rep);

}  // namespace rookery
