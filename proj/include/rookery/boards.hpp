#pragma once

#include <string>
#include <vector>

#include "rookery/simplicial_complex.hpp"

namespace rookery {

// Board convention, used by every generator and by the shelling comparator:
// a square is (c, r) with column c in [m] and row r in [n], rows numbered
// bottom-up. Square (c, r) gets vertex id (r-1)*m + (c-1).
inline Vertex board_vertex(int c, int r, int m) { return (r - 1) * m + (c - 1); }
inline std::pair<int, int> board_square(Vertex v, int m) {
  return {v % m + 1, v / m + 1};
}

struct BoardSpec {
  int m = 0, n = 0;
  std::vector<int> row_caps;  // k_1..k_n, at most k_i rooks in row i
  std::vector<int> col_caps;  // l_1..l_m, at most l_j rooks in column j

  static BoardSpec uniform(int m, int n, int p, int q);
  // Caps above the board size are vacuous; clamp them (warning goes to the
  // caller through clamped()).
  BoardSpec normalized() const;
  bool clamped() const;
  void validate() const;
  std::string name() const;  // e.g. "D(7,3;2;1)", caps listed when mixed
};

// Rows and columns carry local complexes instead of plain caps: a placement
// is admissible iff each row trace is a face of that row's complex and each
// column trace is a face of that column's complex.
struct GeneralBoardSpec {
  int m = 0, n = 0;
  std::vector<SimplicialComplex> row_complexes;  // size n, each on [m] (ids 0..m-1)
  std::vector<SimplicialComplex> col_complexes;  // size m, each on [n] (ids 0..n-1)
  void validate() const;
};

// The two-caps-on-selected-rows family: rows listed in `rows` (1-based)
// allow 2 rooks, all other rows allow 1, every column allows 1.
struct TwoOneJSpec {
  int m = 0, n = 0;
  std::vector<int> rows;  // R, default {1..j} via make()
  static TwoOneJSpec make(int m, int n, int j);
  void validate() const;
  std::string name() const;  // e.g. "D(7,3;2,1(2))"
};

// All generators return complexes with board coordinates attached.
SimplicialComplex multi_chessboard(const BoardSpec& spec);
SimplicialComplex uniform_chessboard(int m, int n, int p, int q);
SimplicialComplex general_chessboard(const GeneralBoardSpec& spec);
SimplicialComplex two_one_j(const TwoOneJSpec& spec);

// K * K° as the m x 2 general board with row complexes (K, dual of K) and
// every column capped at 1. Pure of dimension m-2 for ∅ ∈ K ≠ full simplex.
SimplicialComplex bier_sphere(const SimplicialComplex& k, int m);

// Join of point sets [t_1] * ... * [t_k].
SimplicialComplex multipartite(const std::vector<int>& sizes);

// The complex of all subsets of [n] with at most l elements (ids 0..n-1).
// Cap complexes turn plain caps into GeneralBoardSpec rows and columns.
SimplicialComplex cap_complex(int n, int l);

// Streaming face count with early abort: returns the number of nonempty
// admissible placements, or -1 as soon as the count would exceed `budget`.
long long count_board_faces(const BoardSpec& spec, long long budget);

}
