#pragma once

#include <optional>
#include <vector>

#include "rookery/simplicial_complex.hpp"

namespace rookery {

// Facet of a row-capped board with exclusive columns, one sorted column
// set per row, columns 1-based. Row sizes double as the row caps, which
// is exact for the full placements the facet order is defined on.
struct FacetTuple {
  std::vector<std::vector<int>> rows;
  bool operator==(const FacetTuple&) const = default;
};

// How the residual board is relabeled when the column scan recurses.
// Either choice produces a valid order; the order-preserving map is the
// canonical one and the reversing map exists to demonstrate that the
// construction tolerates any fixed board isomorphism.
enum class CaseCRelabel { OrderPreserving, OrderReversing };

// Columns outside a1 grouped into maximal runs of consecutive columns,
// runs left to right, columns inside each run in descending order.
std::vector<int> priority_sequence(const std::vector<int>& a1, int m);

// Three-way comparison in the facet order: -1 when a comes first, 0 only
// for equal tuples. The two tuples must have matching row counts and row
// sizes. Decisions fall out of the first-row comparison or the column
// scan; when the scan hits a column empty in both facets it restricts to
// the residual board and recurses.
int compare_facets(const FacetTuple& a, const FacetTuple& b, int m,
                   CaseCRelabel relabel = CaseCRelabel::OrderPreserving);

// All full placements for the given row caps with exclusive columns,
// sorted by compare_facets. The order is guaranteed to shell the board
// complex when m >= sum(caps) + rows - 1; below that threshold the
// function throws unless exploratory is set, and then the result is an
// order with no shelling promise attached.
std::vector<FacetTuple> shelling_order(
    int m, const std::vector<int>& caps, bool exploratory = false,
    CaseCRelabel relabel = CaseCRelabel::OrderPreserving);

// Conversions between board simplices (vertex ids) and facet tuples.
FacetTuple tuple_from_simplex(const Simplex& f, int m, int n);
Simplex simplex_from_tuple(const FacetTuple& t, int m);

struct ShellingViolation {
  int earlier = -1;  // index i of the offending predecessor
  int index = -1;    // step j that fails the condition
  Simplex intersection;  // F_i ∩ F_j
};

struct ShellingCertificate {
  std::vector<Simplex> facets;
  std::vector<Simplex> restriction;  // minimal new face added at each step
  std::vector<int> spanning;         // steps whose restriction is the facet
  bool verified = false;
  std::optional<ShellingViolation> violation;
};

// Checks the shelling condition for an ordered facet list of a pure
// complex: every facet must meet the union of its predecessors in a
// nonempty union of its codimension-one faces. Restriction faces and the
// spanning steps come back with the verdict; the first failing pair is
// reported on rejection. Throws on a mixed-dimension or duplicated list.
ShellingCertificate verify_shelling(const std::vector<Simplex>& order);

// Number of top-dimensional spheres in the wedge certified by a verified
// shelling, i.e. the count of spanning steps. Throws on an unverified
// certificate.
long long wedge_summary(const ShellingCertificate& cert);

// Smallest-scale fallback: tries facet permutations until one passes
// verify_shelling. Returns the empty vector when no order works. Limited
// to complexes with at most 8 facets.
std::vector<Simplex> brute_force_shelling(const SimplicialComplex& k);

// Standalone procedure for boards where every cap is one, written against
// the specialized description of the order (anchor column first, then a
// cyclic scan descending from the anchor). Serves as an independent
// cross-check of compare_facets; a[i] is the column of the rook in row
// i+1.
int compare_standard_board(const std::vector<int>& a,
                           const std::vector<int>& b, int m);

}  // namespace rookery
