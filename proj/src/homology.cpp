#include "rookery/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace rookery {

namespace {

struct Overflow {};

// Sparse elimination working state. Rows are sorted (col, value) vectors;
// per-column row lists are maintained lazily, so entries may be stale and
// every consumer revalidates against the row itself.
template <typename T>
class Eliminator {
 public:
  Eliminator(const SparseIntMatrix& a) : rows_(a.rows), cols_(a.cols) {
    row_.resize(rows_);
    colrows_.resize(cols_);
    row_active_.assign(rows_, 1);
    col_active_.assign(cols_, 1);
    // accumulate duplicates
    std::vector<std::tuple<int, int, long long>> es = a.entries;
    std::sort(es.begin(), es.end());
    for (size_t i = 0; i < es.size();) {
      auto [r, c, v] = es[i];
      if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::invalid_argument("matrix entry out of range");
      long long sum = 0;
      size_t j = i;
      for (; j < es.size() && std::get<0>(es[j]) == r && std::get<1>(es[j]) == c;
           ++j)
        sum += std::get<2>(es[j]);
      if (sum != 0) {
        row_[r].emplace_back(c, T(sum));
        colrows_[c].push_back(r);
      }
      i = j;
    }
  }

  // Clears every unit-pivot column it can find, sweeping columns in
  // ascending order until a full sweep makes no progress.
  void unit_phase() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int c = 0; c < cols_; ++c) {
        if (!col_active_[c]) continue;
        int piv = find_unit_row(c);
        if (piv < 0) continue;
        pivot_out(piv, c);
        ++units_;
        progress = true;
      }
    }
  }

  long long units() const { return units_; }

  // Remaining active entries as a dense matrix for the second phase.
  std::vector<std::vector<BigInt>> residual() const {
    std::vector<int> rmap(rows_, -1), cmap(cols_, -1);
    int nr = 0, nc = 0;
    for (int r = 0; r < rows_; ++r)
      if (row_active_[r] && !row_[r].empty()) rmap[r] = nr++;
    for (int c = 0; c < cols_; ++c)
      if (col_active_[c]) cmap[c] = nc++;
    std::vector<std::vector<BigInt>> out(nr, std::vector<BigInt>(nc, 0));
    for (int r = 0; r < rows_; ++r) {
      if (rmap[r] < 0) continue;
      for (const auto& [c, v] : row_[r]) out[rmap[r]][cmap[c]] = BigInt(v);
    }
    // drop all-zero columns that never saw an entry
    std::vector<char> used(nc, 0);
    for (const auto& rw : out)
      for (int c = 0; c < nc; ++c)
        if (rw[c] != 0) used[c] = 1;
    std::vector<std::vector<BigInt>> packed(out.size());
    for (size_t r = 0; r < out.size(); ++r)
      for (int c = 0; c < nc; ++c)
        if (used[c]) packed[r].push_back(out[r][c]);
    return packed;
  }

 private:
  int value_at(int r, int c) const {
    const auto& rw = row_[r];
    auto it = std::lower_bound(
        rw.begin(), rw.end(), c,
        [](const std::pair<int, T>& e, int col) { return e.first < col; });
    return (it != rw.end() && it->first == c) ? static_cast<int>(it - rw.begin())
                                              : -1;
  }

  // Topmost active row holding a unit entry in column c; -1 if none.
  int find_unit_row(int c) {
    int best = -1;
    auto& cand = colrows_[c];
    size_t keep = 0;
    for (size_t i = 0; i < cand.size(); ++i) {
      int r = cand[i];
      if (!row_active_[r]) continue;
      int pos = value_at(r, c);
      if (pos < 0) continue;  // stale
      cand[keep++] = r;
      const T& v = row_[r][pos].second;
      if ((v == 1 || v == -1) && (best < 0 || r < best)) best = r;
    }
    cand.resize(keep);
    return best;
  }

  // Eliminates column c with the unit pivot in row piv, then retires both.
  void pivot_out(int piv, int c) {
    int ppos = value_at(piv, c);
    const T pval = row_[piv][ppos].second;  // +1 or -1
    std::vector<int> targets;
    for (int r : colrows_[c])
      if (r != piv && row_active_[r] && value_at(r, c) >= 0)
        targets.push_back(r);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int r : targets) {
      int pos = value_at(r, c);
      // q chosen so the c-entry cancels exactly
      T q = -row_[r][pos].second * pval;
      combine(r, piv, q);
    }
    row_active_[piv] = 0;
    col_active_[c] = 0;
    row_[piv].clear();
    row_[piv].shrink_to_fit();
  }

  // row dst += q * row src, keeping the sorted-by-column invariant and
  // registering newly populated columns.
  void combine(int dst, int src, const T& q) {
    scratch_.clear();
    const auto& a = row_[dst];
    const auto& b = row_[src];
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        scratch_.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        T v = mul(q, b[j].second);
        scratch_.emplace_back(b[j].first, std::move(v));
        colrows_[b[j].first].push_back(dst);
        ++j;
      } else {
        T v = fma_val(a[i].second, q, b[j].second);
        if (v != 0) scratch_.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    row_[dst].assign(scratch_.begin(), scratch_.end());
  }

  static T mul(const T& x, const T& y) {
    if constexpr (std::is_same_v<T, long long>) {
      long long out;
      if (__builtin_mul_overflow(x, y, &out)) throw Overflow{};
      return out;
    } else {
      return x * y;
    }
  }

  // a + q*b with overflow detection on the word-sized instantiation
  static T fma_val(const T& a, const T& q, const T& b) {
    if constexpr (std::is_same_v<T, long long>) {
      long long p, out;
      if (__builtin_mul_overflow(q, b, &p)) throw Overflow{};
      if (__builtin_add_overflow(a, p, &out)) throw Overflow{};
      return out;
    } else {
      return a + q * b;
    }
  }

  int rows_, cols_;
  std::vector<std::vector<std::pair<int, T>>> row_;
  std::vector<std::vector<int>> colrows_;
  std::vector<char> row_active_, col_active_;
  std::vector<std::pair<int, T>> scratch_;
  long long units_ = 0;
};

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Classical dense Smith reduction on an arbitrary-precision matrix.
// Returns the nonzero diagonal in divisibility order.
std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> factors;
  const int nr = static_cast<int>(a.size());
  const int nc = nr ? static_cast<int>(a[0].size()) : 0;

  for (int t = 0; t < std::min(nr, nc); ++t) {
    // smallest nonzero entry of the trailing submatrix, leftmost column
    // then topmost row on ties
    int pr = -1, pc = -1;
    BigInt best;
    for (int j = t; j < nc; ++j)
      for (int i = t; i < nr; ++i)
        if (a[i][j] != 0) {
          BigInt v = abs_big(a[i][j]);
          if (pr < 0 || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int i = 0; i < nr; ++i) std::swap(a[i][t], a[i][pc]);

    bool settled = false;
    while (!settled) {
      settled = true;
      // clear the pivot column with floored quotients; a nonzero
      // remainder becomes the new, strictly smaller pivot
      for (int i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        if (q != 0)
          for (int j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          settled = false;
        }
      }
      if (!settled) continue;
      for (int j = t + 1; j < nc; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        if (q != 0)
          for (int i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = 0; i < nr; ++i) std::swap(a[i][t], a[i][j]);
          settled = false;
        }
      }
      if (!settled) continue;
      // pivot must divide everything that remains; fold in one offending
      // row and restart, shrinking the pivot
      for (int i = t + 1; i < nr && settled; ++i)
        for (int j = t + 1; j < nc && settled; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (int jj = t; jj < nc; ++jj) a[t][jj] += a[i][jj];
            settled = false;
          }
    }
    factors.push_back(abs_big(a[t][t]));
  }
  return factors;
}

template <typename T>
SnfResult run_snf(const SparseIntMatrix& a) {
  Eliminator<T> e(a);
  e.unit_phase();
  std::vector<BigInt> tail = dense_snf(e.residual());
  SnfResult out;
  out.invariant_factors.assign(static_cast<size_t>(e.units()), BigInt(1));
  out.invariant_factors.insert(out.invariant_factors.end(), tail.begin(),
                               tail.end());
  return out;
}

}  // namespace

std::vector<BigInt> SnfResult::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

SnfResult smith_normal_form(const SparseIntMatrix& a) {
  if (a.rows < 0 || a.cols < 0)
    throw std::invalid_argument("negative matrix dimensions");
  try {
    return run_snf<long long>(a);
  } catch (const Overflow&) {
    return run_snf<BigInt>(a);
  }
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int i) {
  if (k.is_void() || i < 0 || i > k.dim())
    throw std::invalid_argument("boundary index out of range");
  SparseIntMatrix m;
  auto faces_i = k.faces(i);
  m.cols = static_cast<int>(faces_i.size());
  if (i == 0) {
    // augmentation into the chain group of the empty face
    m.rows = 1;
    for (int c = 0; c < m.cols; ++c) m.add(0, c, 1);
    return m;
  }
  auto faces_lo = k.faces(i - 1);
  m.rows = static_cast<int>(faces_lo.size());
  std::unordered_map<Simplex, int, SimplexHasher> index;
  index.reserve(faces_lo.size() * 2);
  for (int r = 0; r < m.rows; ++r) index[faces_lo[r]] = r;
  for (int c = 0; c < m.cols; ++c) {
    const Simplex& f = faces_i[c];
    Simplex sub(f.size() - 1);
    for (size_t t = 0; t < f.size(); ++t) {
      size_t w = 0;
      for (size_t s = 0; s < f.size(); ++s)
        if (s != t) sub[w++] = f[s];
      m.add(index.at(sub), c, (t % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

HomologySummary homology(const SimplicialComplex& k, bool reduced) {
  HomologySummary h;
  h.reduced = reduced;
  if (k.is_void()) return h;

  h.void_complex = false;
  h.dim = k.dim();
  const int d = h.dim;
  h.face_counts.resize(std::max(d + 1, 0));
  for (int i = 0; i <= d; ++i) h.face_counts[i] = k.face_count(i);

  // ranks[i] = rank of the i-th boundary map, factors kept for torsion
  std::vector<long long> rank(d + 2, 0);
  std::vector<std::vector<BigInt>> tors(d + 2);
  if (d >= 0) {
    for (int i = 0; i <= d; ++i) {
      SnfResult s = smith_normal_form(boundary_matrix(k, i));
      rank[i] = s.rank();
      tors[i] = s.torsion();
    }
  }

  h.betti_minus1 = 1 - (d >= 0 ? rank[0] : 0);
  h.betti.assign(std::max(d + 1, 0), 0);
  h.torsion.assign(std::max(d + 1, 0), {});
  for (int i = 0; i <= d; ++i) {
    h.betti[i] = h.face_counts[i] - rank[i] - rank[i + 1];
    h.torsion[i] = tors[i + 1];
  }
  if (!reduced) {
    // component count is one more than the reduced rank in degree zero
    if (d >= 0) h.betti[0] += 1;
    h.betti_minus1 = 0;
  }
  return h;
}

bool sphere_homology(const HomologySummary& h, int s) {
  if (h.void_complex || !h.reduced) return false;
  if (h.betti_minus1 != (s == -1 ? 1 : 0)) return false;
  for (int i = 0; i < static_cast<int>(h.betti.size()); ++i) {
    if (h.betti[i] != (i == s ? 1 : 0)) return false;
    if (!h.torsion[i].empty()) return false;
  }
  if (s >= static_cast<int>(h.betti.size())) return false;
  return true;
}

ConnectivityReport homological_connectivity(const HomologySummary& h) {
  ConnectivityReport r;
  if (h.void_complex) {
    r.hconn = -2;
    return r;
  }
  if (h.betti_minus1 != 0) {
    r.witness_dim = -1;
    r.hconn = -2;
    return r;
  }
  for (int i = 0; i < static_cast<int>(h.betti.size()); ++i)
    if (h.betti[i] != 0 || !h.torsion[i].empty()) {
      r.witness_dim = i;
      r.hconn = i - 1;
      return r;
    }
  r.hconn = h.dim;
  r.capped = true;
  return r;
}

ConnectivityReport homological_connectivity(const SimplicialComplex& k) {
  return homological_connectivity(homology(k, true));
}

ConnectivityReport rational_connectivity(const HomologySummary& h) {
  HomologySummary stripped = h;
  for (auto& t : stripped.torsion) t.clear();
  return homological_connectivity(stripped);
}

}  // namespace rookery
