#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rookery {

using Vertex = int;

// A simplex is a strictly increasing sequence of vertex ids. The empty
// simplex (dimension -1) is a valid face of every nonvoid complex.
using Simplex = std::vector<Vertex>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

struct FVector {
  // counts[i] = number of i-dimensional faces; the (-1)-face is not listed.
  std::vector<long long> counts;

  int dim() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const FVector&) const = default;
};

// Dimension sentinel for the void complex (the one with no faces at all,
// as opposed to {∅} which has exactly the empty face and dimension -1).
inline constexpr int kDimVoid = -2;

// Immutable facet-list representation. Faces are implicit: a set is a member
// iff it is contained in some facet. Vertex ids are contiguous 0-based
// internally; board generators attach 1-based (column, row) coordinates.
class SimplicialComplex {
 public:
  // The default-constructed complex is void: it has no faces, not even ∅.
  SimplicialComplex() = default;

  // Complex generated by the candidates: duplicates and dominated sets are
  // removed, facets are sorted canonically. Candidates may be unsorted.
  // ground_size < 0 means infer as (max vertex id + 1).
  static SimplicialComplex from_facets(std::vector<Simplex> candidates,
                                       int ground_size = -1);

  // Fast path for generators that already guarantee maximality and
  // sortedness of every candidate. Only dedup and canonical ordering happen.
  static SimplicialComplex from_maximal(std::vector<Simplex> facets,
                                        int ground_size);

  // The complex whose only face is ∅.
  static SimplicialComplex empty_face_complex(int ground_size = 0);

  bool is_void() const { return facets_.empty(); }
  bool is_empty_face_only() const {
    return facets_.size() == 1 && facets_[0].empty();
  }

  // kDimVoid for the void complex, -1 for {∅}.
  int dim() const;

  int ground_size() const { return ground_; }

  // Canonically ordered; for {∅} this is a single empty simplex.
  const std::vector<Simplex>& facets() const { return facets_; }

  bool contains(const Simplex& sorted_face) const;

  // All i-faces, each once, in lexicographic order. Empty for i > dim.
  std::vector<Simplex> faces(int i) const;

  FVector f_vector() const;
  long long face_count(int i) const;

  // Non-reduced Euler characteristic (0 for the void complex and for {∅}).
  long long euler() const;
  // Reduced variant: euler() - 1 for nonvoid complexes, 0 for the void one.
  long long reduced_euler() const;

  // Faces disjoint from s whose union with s is a face. Throws
  // std::invalid_argument when s is not a face.
  SimplicialComplex link(const Simplex& sorted_face) const;

  // All faces of dimension <= d, presented by maximal faces. d >= -1.
  SimplicialComplex skeleton(int d) const;

  // Optional per-vertex board coordinates, 1-based (column, row).
  const std::vector<std::pair<int, int>>& coords() const { return coords_; }
  void set_coords(std::vector<std::pair<int, int>> c) { coords_ = std::move(c); }

  bool operator==(const SimplicialComplex& o) const {
    return ground_ == o.ground_ && facets_ == o.facets_;
  }

 private:
  int ground_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::pair<int, int>> coords_;
  mutable std::optional<FVector> fvec_cache_;
};

// Join with B's vertex ids offset past A's ground set. dim = dim A + dim B + 1.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// n-fold s-deleted join: faces are joins σ_1 * ... * σ_n of faces of k such
// that every vertex of k lies in fewer than s of the σ_i. Vertex (v, copy i)
// flattens to id i * ground + v.
SimplicialComplex deleted_join(const SimplicialComplex& k, int n, int s);

// Combinatorial Alexander dual over ground set [m] (ids 0..m-1):
// σ is a face of the dual iff the complement of σ is NOT a face of k.
// The dual of the full simplex is the void complex; the dual of the void
// complex is the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& k, int m);

// Sorted-set helpers shared across modules.
bool is_subset(const Simplex& a, const Simplex& b);
Simplex set_union(const Simplex& a, const Simplex& b);
Simplex set_difference(const Simplex& a, const Simplex& b);
Simplex set_intersection(const Simplex& a, const Simplex& b);

// FNV-1a over vertex ids, for hashed face sets and maps.
struct SimplexHasher {
  size_t operator()(const Simplex& s) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (Vertex v : s) {
      h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}
