#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rookery/boards.hpp"

namespace rookery {

// Connectivity predictions for rook placement complexes. Each formula yields
// a value mu; the claim under test is always that the complex is (mu - 2)
// connected. The scanner compares the predictions against homology and flags
// the instances where a prediction overshoots, it never patches a formula.

// min(m - n + 1, k_1 + ... + k_n) for a board with one rook per column.
int mu_primary(int m, const std::vector<int>& caps);

// Piecewise bound for the board whose rows allow two rooks in j of the n
// rows and one elsewhere. Thresholds are half-integral, so the case split
// compares doubled integers instead of rounding anything.
int mu_two_one_rows(int m, int n, int j);

// min(m, ceil((m + sum + 1)/3), sum): the bound that only speaks about
// homology with rational coefficients.
int mu_rational(int m, const std::vector<int>& caps);

struct BoundReport {
  BoardSpec spec;        // normalized before any evaluation
  long long faces = 0;   // nonempty faces, -1 when the budget cut off the count
  bool skipped = false;  // over budget: predictions filled, homology not run

  int mu_primary_value = 0;
  std::optional<int> two_one_j;  // set when caps use only ones and twos
  std::optional<int> mu_two_one_value;
  int mu_rational_value = 0;

  int hconn = -2;
  bool capped = false;  // every reduced group vanished, so hconn == dim
  int rational_hconn = -2;
  bool rational_capped = false;

  // hconn equals the primary prediction exactly and the next group is alive
  bool sharp = false;
  bool violation_primary = false;
  bool violation_two_one = false;
  bool violation_rational = false;
};

struct ScanOptions {
  long long budget = 200000;  // per-instance face ceiling
  int threads = 1;
};

// All boards with m in [m_lo, m_hi], n rows in [n_lo, n_hi], row caps running
// over non-increasing tuples with entries in [cap_lo, cap_hi], columns capped
// at 1. Ordered by m, then n, then caps in descending lexicographic order.
std::vector<BoardSpec> grid_specs(int m_lo, int m_hi, int n_lo, int n_hi,
                                  int cap_lo, int cap_hi);

// Evaluates every spec independently (workers when threads > 1) and returns
// reports in input order regardless of scheduling.
std::vector<BoundReport> bound_scan(const std::vector<BoardSpec>& grid,
                                    const ScanOptions& opts = {});

// Tab-separated table: spec, mu_primary, mu_two_one, mu_rational, hconn,
// sharp, violation. Skipped rows show "skipped" and "budget"; a trailing +
// on hconn means the value is a floor because everything vanished.
std::string bounds_tsv(const std::vector<BoundReport>& reports);

}  // namespace rookery
