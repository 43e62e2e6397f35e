#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <climits>
#include <tuple>
#include <vector>

#include "rookery/simplicial_complex.hpp"

namespace rookery {

using BigInt = boost::multiprecision::cpp_int;

// Triplet-built sparse integer matrix. Duplicate (row, col) entries are
// summed during elimination setup.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::tuple<int, int, long long>> entries;

  void add(int r, int c, long long v) { entries.emplace_back(r, c, v); }
};

// Invariant factors d1 | d2 | ... | dr of the Smith normal form, unit
// factors included, so rank() is just the count.
struct SnfResult {
  std::vector<BigInt> invariant_factors;

  long long rank() const {
    return static_cast<long long>(invariant_factors.size());
  }
  std::vector<BigInt> torsion() const;  // the factors greater than 1
};

// Exact Smith normal form over the integers. Elimination runs in two
// phases: unit pivots are cleared sparsely first (column order, topmost
// row), then whatever core is left goes through a dense reduction with
// arbitrary-precision values. Values are kept in 64-bit words while they
// fit and the whole computation restarts on wider integers if any
// intermediate overflows.
SnfResult smith_normal_form(const SparseIntMatrix& a);

// i-th boundary map of the chain complex, faces ordered lexicographically.
// For i = 0 this is the 1 x f0 augmentation row mapping every vertex to
// the empty face. Requires 0 <= i <= dim.
SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int i);

struct HomologySummary {
  bool void_complex = true;
  bool reduced = true;
  int dim = kDimVoid;
  long long betti_minus1 = 0;  // rank of the (-1)-st reduced group
  std::vector<long long> betti;                // betti[i] for 0 <= i <= dim
  std::vector<std::vector<BigInt>> torsion;    // torsion[i] of H_i
  std::vector<long long> face_counts;          // f_i for 0 <= i <= dim
};

// Integer homology of the complex. With reduced = false the 0-th Betti
// number counts components instead of components minus one; everything
// else is unchanged. The complex with only the empty face has
// betti_minus1 = 1, matching its reading as a (-1)-sphere.
HomologySummary homology(const SimplicialComplex& k, bool reduced = true);

// True when the reduced homology matches a single s-sphere: one free
// generator in dimension s, nothing anywhere else, no torsion. s = -1
// accepts exactly the empty-face complex pattern.
bool sphere_homology(const HomologySummary& h, int s);

inline constexpr int kNoWitness = INT_MAX;

struct ConnectivityReport {
  // Largest c such that every reduced group through dimension c vanishes.
  // The void complex and the bare empty face both report -2; a complex
  // whose reduced homology vanishes entirely reports its dimension with
  // capped set, since nothing above can witness more.
  int hconn = -2;
  int witness_dim = kNoWitness;  // first nonvanishing reduced group
  bool capped = false;
};

ConnectivityReport homological_connectivity(const HomologySummary& h);
ConnectivityReport homological_connectivity(const SimplicialComplex& k);

// Same report with torsion ignored, for claims about homology over the
// rationals.
ConnectivityReport rational_connectivity(const HomologySummary& h);

}  // namespace rookery
