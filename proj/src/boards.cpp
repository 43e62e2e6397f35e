#include "rookery/boards.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace rookery {

namespace {

std::string caps_str(const std::vector<int>& caps) {
  // uniform caps print as one number, mixed caps as a comma list
  bool uni = std::all_of(caps.begin(), caps.end(),
                         [&](int c) { return c == caps[0]; });
  std::ostringstream ss;
  if (uni && !caps.empty()) {
    ss << caps[0];
  } else {
    for (size_t i = 0; i < caps.size(); ++i) ss << (i ? "," : "") << caps[i];
  }
  return ss.str();
}

std::vector<std::pair<int, int>> board_coords(int m, int n) {
  std::vector<std::pair<int, int>> coords(static_cast<size_t>(m) * n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= m; ++c)
      coords[board_vertex(c, r, m)] = {c, r};
  return coords;
}

// Enumerates admissible placements column by column. At each column the
// callback-free walk chooses a subset of rows allowed by that column's cap,
// with row counts tracked against row caps. Visit is called on every leaf
// with the per-column row subsets and the row fill counts.
template <typename Visit>
void walk_placements(int m, int n, const std::vector<int>& row_caps,
                     const std::vector<int>& col_caps, Visit&& visit) {
  std::vector<uint32_t> col_rows(m, 0);  // chosen rows per column, as bits
  std::vector<int> row_cnt(n, 0);

  auto rec = [&](auto&& self, int c) -> void {
    if (c == m) {
      visit(col_rows, row_cnt);
      return;
    }
    // subsets of [n] of size <= col cap whose rows still have capacity;
    // iterate in increasing mask order for determinism
    const int cap = col_caps[c];
    const uint32_t all = (1u << n) - 1;
    for (uint32_t sub = 0; sub <= all; ++sub) {
      if (__builtin_popcount(sub) > cap) continue;
      bool ok = true;
      for (int r = 0; r < n; ++r)
        if ((sub >> r & 1) && row_cnt[r] + 1 > row_caps[r]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int r = 0; r < n; ++r)
        if (sub >> r & 1) ++row_cnt[r];
      col_rows[c] = sub;
      self(self, c + 1);
      for (int r = 0; r < n; ++r)
        if (sub >> r & 1) --row_cnt[r];
      col_rows[c] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

BoardSpec BoardSpec::uniform(int m, int n, int p, int q) {
  BoardSpec s;
  s.m = m;
  s.n = n;
  s.row_caps.assign(n, p);
  s.col_caps.assign(m, q);
  return s;
}

bool BoardSpec::clamped() const {
  for (int k : row_caps)
    if (k > m) return true;
  for (int l : col_caps)
    if (l > n) return true;
  return false;
}

BoardSpec BoardSpec::normalized() const {
  BoardSpec s = *this;
  for (int& k : s.row_caps) k = std::min(k, m);
  for (int& l : s.col_caps) l = std::min(l, n);
  return s;
}

void BoardSpec::validate() const {
  if (m < 1 || n < 1) throw std::invalid_argument("board needs m, n >= 1");
  if (static_cast<int>(row_caps.size()) != n)
    throw std::invalid_argument("row_caps must have one entry per row");
  if (static_cast<int>(col_caps.size()) != m)
    throw std::invalid_argument("col_caps must have one entry per column");
  for (int k : row_caps)
    if (k < 0) throw std::invalid_argument("negative row cap");
  for (int l : col_caps)
    if (l < 0) throw std::invalid_argument("negative column cap");
}

std::string BoardSpec::name() const {
  std::ostringstream ss;
  ss << "D(" << m << "," << n << ";" << caps_str(row_caps) << ";"
     << caps_str(col_caps) << ")";
  return ss.str();
}

TwoOneJSpec TwoOneJSpec::make(int m, int n, int j) {
  TwoOneJSpec s;
  s.m = m;
  s.n = n;
  for (int r = 1; r <= j; ++r) s.rows.push_back(r);
  return s;
}

void TwoOneJSpec::validate() const {
  if (m < 1 || n < 1) throw std::invalid_argument("board needs m, n >= 1");
  std::vector<int> r = rows;
  std::sort(r.begin(), r.end());
  if (std::adjacent_find(r.begin(), r.end()) != r.end())
    throw std::invalid_argument("duplicate row in R");
  for (int x : r)
    if (x < 1 || x > n) throw std::invalid_argument("R must be a subset of [n]");
}

std::string TwoOneJSpec::name() const {
  std::ostringstream ss;
  ss << "D(" << m << "," << n << ";2,1(";
  bool contiguous = true;
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i] != static_cast<int>(i) + 1) contiguous = false;
  if (contiguous) {
    ss << rows.size();
  } else {
    ss << "R=";
    for (size_t i = 0; i < rows.size(); ++i) ss << (i ? "," : "") << rows[i];
  }
  ss << "))";
  return ss.str();
}

SimplicialComplex multi_chessboard(const BoardSpec& raw) {
  raw.validate();
  BoardSpec spec = raw.normalized();
  const int m = spec.m, n = spec.n;
  if (n > 25) throw std::invalid_argument("board generation limited to n <= 25");

  std::vector<Simplex> facets;
  walk_placements(
      m, n, spec.row_caps, spec.col_caps,
      [&](const std::vector<uint32_t>& col_rows, const std::vector<int>& row_cnt) {
        // A placement is maximal iff every empty square sits in a full row
        // or a full column.
        for (int c = 0; c < m; ++c) {
          const bool col_full =
              __builtin_popcount(col_rows[c]) >= spec.col_caps[c];
          if (col_full) continue;
          for (int r = 0; r < n; ++r)
            if (!(col_rows[c] >> r & 1) && row_cnt[r] < spec.row_caps[r])
              return;  // extendable, not a facet
        }
        Simplex f;
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < m; ++c)
            if (col_rows[c] >> r & 1) f.push_back(board_vertex(c + 1, r + 1, m));
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
      });

  if (facets.empty()) facets.push_back({});  // all caps zero: the {∅} complex
  auto k = SimplicialComplex::from_maximal(std::move(facets), m * n);
  k.set_coords(board_coords(m, n));
  return k;
}

SimplicialComplex uniform_chessboard(int m, int n, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("uniform board needs p, q >= 1");
  return multi_chessboard(BoardSpec::uniform(m, n, p, q));
}

void GeneralBoardSpec::validate() const {
  if (m < 1 || n < 1) throw std::invalid_argument("board needs m, n >= 1");
  if (static_cast<int>(row_complexes.size()) != n)
    throw std::invalid_argument("need one row complex per row");
  if (static_cast<int>(col_complexes.size()) != m)
    throw std::invalid_argument("need one column complex per column");
  for (const auto& k : row_complexes)
    for (const auto& f : k.facets())
      if (!f.empty() && f.back() >= m)
        throw std::invalid_argument("row complex vertex outside [m]");
  for (const auto& k : col_complexes)
    for (const auto& f : k.facets())
      if (!f.empty() && f.back() >= n)
        throw std::invalid_argument("column complex vertex outside [n]");
}

SimplicialComplex general_chessboard(const GeneralBoardSpec& spec) {
  spec.validate();
  const int m = spec.m, n = spec.n;
  if (m > 25 || n > 25)
    throw std::invalid_argument("general board limited to 25 lines each way");

  // Face-membership tables as bitmask sets, one per line.
  auto face_table = [](const SimplicialComplex& k, int ground) {
    std::unordered_set<uint32_t> t;
    if (!k.is_void()) {
      t.insert(0);
      for (int d = 0; d <= k.dim(); ++d)
        for (const auto& f : k.faces(d)) {
          uint32_t mask = 0;
          for (Vertex v : f) mask |= 1u << v;
          t.insert(mask);
        }
    }
    (void)ground;
    return t;
  };
  std::vector<std::unordered_set<uint32_t>> row_faces, col_faces;
  for (const auto& k : spec.row_complexes) row_faces.push_back(face_table(k, m));
  for (const auto& k : spec.col_complexes) col_faces.push_back(face_table(k, n));

  std::vector<Simplex> facets;
  std::vector<uint32_t> col_rows(m, 0), row_cols(n, 0);

  auto rec = [&](auto&& self, int c) -> void {
    if (c == m) {
      // maximal iff no empty square admits both trace extensions
      for (int cc = 0; cc < m; ++cc)
        for (int r = 0; r < n; ++r) {
          if (col_rows[cc] >> r & 1) continue;
          if (col_faces[cc].count(col_rows[cc] | (1u << r)) &&
              row_faces[r].count(row_cols[r] | (1u << cc)))
            return;
        }
      Simplex f;
      for (int r = 0; r < n; ++r)
        for (int cc = 0; cc < m; ++cc)
          if (col_rows[cc] >> r & 1) f.push_back(board_vertex(cc + 1, r + 1, m));
      std::sort(f.begin(), f.end());
      facets.push_back(std::move(f));
      return;
    }
    const uint32_t all = (1u << n) - 1;
    for (uint32_t sub = 0; sub <= all; ++sub) {
      if (!col_faces[c].count(sub)) continue;
      bool ok = true;
      for (int r = 0; r < n && ok; ++r)
        if (sub >> r & 1) {
          // row traces grow monotonically; closure under subsets makes
          // prefix membership a valid prune
          if (!row_faces[r].count(row_cols[r] | (1u << c))) ok = false;
        }
      if (!ok) continue;
      for (int r = 0; r < n; ++r)
        if (sub >> r & 1) row_cols[r] |= 1u << c;
      col_rows[c] = sub;
      self(self, c + 1);
      for (int r = 0; r < n; ++r)
        if (sub >> r & 1) row_cols[r] &= ~(1u << c);
      col_rows[c] = 0;
    }
  };

  bool possible = true;
  for (const auto& t : col_faces)
    if (!t.count(0)) possible = false;  // a void column complex blocks even ∅
  for (const auto& t : row_faces)
    if (!t.count(0)) possible = false;
  if (possible) rec(rec, 0);

  if (facets.empty() && possible) facets.push_back({});
  auto k = facets.empty() ? SimplicialComplex::from_facets({}, m * n)
                          : SimplicialComplex::from_maximal(std::move(facets), m * n);
  k.set_coords(board_coords(m, n));
  return k;
}

SimplicialComplex two_one_j(const TwoOneJSpec& spec) {
  spec.validate();
  BoardSpec b;
  b.m = spec.m;
  b.n = spec.n;
  b.row_caps.assign(spec.n, 1);
  for (int r : spec.rows) b.row_caps[r - 1] = 2;
  b.col_caps.assign(spec.m, 1);
  return multi_chessboard(b);
}

SimplicialComplex bier_sphere(const SimplicialComplex& k, int m) {
  for (const auto& f : k.facets())
    if (!f.empty() && f.back() >= m)
      throw std::invalid_argument("complex does not live on [m]");
  if (k.is_void())
    throw std::invalid_argument("bier sphere needs ∅ in the complex");
  SimplicialComplex dual = alexander_dual(k, m);
  if (dual.is_void())
    throw std::invalid_argument("bier sphere of the full simplex is void");

  GeneralBoardSpec g;
  g.m = m;
  g.n = 2;
  g.row_complexes = {k, dual};
  g.col_complexes.assign(m, cap_complex(2, 1));
  return general_chessboard(g);
}

SimplicialComplex multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("need at least one part");
  for (int t : sizes)
    if (t < 1) throw std::invalid_argument("part sizes must be >= 1");
  int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<Simplex> facets;
  Simplex cur;
  auto rec = [&](auto&& self, size_t part, int offset) -> void {
    if (part == sizes.size()) {
      facets.push_back(cur);
      return;
    }
    for (int v = 0; v < sizes[part]; ++v) {
      cur.push_back(offset + v);
      self(self, part + 1, offset + sizes[part]);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return SimplicialComplex::from_maximal(std::move(facets), total);
}

SimplicialComplex cap_complex(int n, int l) {
  if (n < 0 || l < 0) throw std::invalid_argument("cap complex needs n, l >= 0");
  l = std::min(l, n);
  if (l == 0) return SimplicialComplex::empty_face_complex(n);
  std::vector<Simplex> facets;
  std::vector<int> pick(l);
  for (int t = 0; t < l; ++t) pick[t] = t;
  while (true) {
    facets.emplace_back(pick.begin(), pick.end());
    int pos = l - 1;
    while (pos >= 0 && pick[pos] == n - l + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int t = pos + 1; t < l; ++t) pick[t] = pick[t - 1] + 1;
  }
  return SimplicialComplex::from_maximal(std::move(facets), n);
}

long long count_board_faces(const BoardSpec& raw, long long budget) {
  raw.validate();
  BoardSpec spec = raw.normalized();
  if (spec.n > 25)
    throw std::invalid_argument("board generation limited to n <= 25");
  long long count = -1;  // discount the all-empty placement
  bool over = false;

  // Same walk as the generator, but leaves are only counted. The recursion
  // throws no state away early except when the budget trips.
  std::vector<int> row_cnt(spec.n, 0);
  auto rec = [&](auto&& self, int c) -> void {
    if (over) return;
    if (c == spec.m) {
      if (++count > budget) over = true;
      return;
    }
    const uint32_t all = (1u << spec.n) - 1;
    const int cap = spec.col_caps[c];
    for (uint32_t sub = 0; sub <= all && !over; ++sub) {
      if (__builtin_popcount(sub) > cap) continue;
      bool ok = true;
      for (int r = 0; r < spec.n; ++r)
        if ((sub >> r & 1) && row_cnt[r] + 1 > spec.row_caps[r]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int r = 0; r < spec.n; ++r)
        if (sub >> r & 1) ++row_cnt[r];
      self(self, c + 1);
      for (int r = 0; r < spec.n; ++r)
        if (sub >> r & 1) --row_cnt[r];
    }
  };
  rec(rec, 0);
  return over ? -1 : count;
}

}
