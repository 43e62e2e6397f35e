#include "rookery/shelling.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "rookery/boards.hpp"

namespace rookery {

namespace {

// Columns of [m] not in the sorted set a1.
std::vector<int> complement_cols(const std::vector<int>& a1, int m) {
  std::vector<int> out;
  out.reserve(m - a1.size());
  size_t i = 0;
  for (int c = 1; c <= m; ++c) {
    while (i < a1.size() && a1[i] < c) ++i;
    if (i == a1.size() || a1[i] != c) out.push_back(c);
  }
  return out;
}

void check_shapes(const FacetTuple& a, const FacetTuple& b, int m) {
  if (m < 1 || m > 31)
    throw std::invalid_argument("board width must be between 1 and 31");
  if (a.rows.size() != b.rows.size() || a.rows.empty())
    throw std::invalid_argument("facet tuples need matching, nonempty rows");
  for (size_t i = 0; i < a.rows.size(); ++i)
    if (a.rows[i].size() != b.rows[i].size())
      throw std::invalid_argument("facet tuples have different row sizes");
}

}  // namespace

std::vector<int> priority_sequence(const std::vector<int>& a1, int m) {
  std::vector<int> seq;
  auto rest = complement_cols(a1, m);
  size_t i = 0;
  while (i < rest.size()) {
    size_t j = i;
    while (j + 1 < rest.size() && rest[j + 1] == rest[j] + 1) ++j;
    for (size_t t = j + 1; t > i; --t) seq.push_back(rest[t - 1]);
    i = j + 1;
  }
  return seq;
}

int compare_facets(const FacetTuple& a, const FacetTuple& b, int m,
                   CaseCRelabel relabel) {
  check_shapes(a, b, m);
  if (a == b) return 0;

  const auto& a1 = a.rows[0];
  const auto& b1 = b.rows[0];
  if (a1 != b1) {
    // strip the common suffix; the larger of the first mismatching values
    // is the largest column where the first rows differ
    size_t i = a1.size(), j = b1.size();
    while (i > 0 && j > 0 && a1[i - 1] == b1[j - 1]) --i, --j;
    if (i == 0) return -1;  // a1 a proper "prefix": every b leftover larger
    if (j == 0) return 1;
    return b1[j - 1] > a1[i - 1] ? -1 : 1;
  }

  const int n = static_cast<int>(a.rows.size());
  // rook row (0-based) per column, -1 for none, rows beyond the first
  std::vector<int8_t> rowa(m + 1, -1), rowb(m + 1, -1);
  for (int i = 1; i < n; ++i) {
    for (int c : a.rows[i]) rowa[c] = static_cast<int8_t>(i);
    for (int c : b.rows[i]) rowb[c] = static_cast<int8_t>(i);
  }

  uint32_t scanned = 0;  // bit c set when column c has been scanned
  for (int p : priority_sequence(a1, m)) {
    scanned |= 1u << p;
    const int ra = rowa[p], rb = rowb[p];
    if (ra < 0 && rb < 0) {
      // residual board: drop scanned columns, the first row's columns,
      // the first row itself, and every later row fully inside the scan
      std::vector<int> filled(n, 0);
      for (int c = 1; c <= m; ++c)
        if ((scanned >> c & 1) && rowa[c] >= 0) ++filled[rowa[c]];
      FacetTuple a2, b2;
      std::vector<int> surv_rows;
      for (int i = 1; i < n; ++i)
        if (filled[i] < static_cast<int>(a.rows[i].size()))
          surv_rows.push_back(i);
      if (surv_rows.empty())
        throw std::logic_error("facet order scan lost every row");

      std::vector<int> surv_cols;
      for (int c = 1; c <= m; ++c)
        if (!(scanned >> c & 1) &&
            !std::binary_search(a1.begin(), a1.end(), c))
          surv_cols.push_back(c);
      const int m2 = static_cast<int>(surv_cols.size());
      std::vector<int> colmap(m + 1, 0);
      for (int idx = 0; idx < m2; ++idx)
        colmap[surv_cols[idx]] =
            relabel == CaseCRelabel::OrderPreserving ? idx + 1 : m2 - idx;

      auto reduce = [&](const FacetTuple& src) {
        FacetTuple out;
        for (int i : surv_rows) {
          std::vector<int> row;
          for (int c : src.rows[i])
            if (!(scanned >> c & 1)) row.push_back(colmap[c]);
          std::sort(row.begin(), row.end());
          out.rows.push_back(std::move(row));
        }
        return out;
      };
      a2 = reduce(a);
      b2 = reduce(b);
      return compare_facets(a2, b2, m2, relabel);
    }
    if (ra < 0) return -1;  // b occupies the column, a does not
    if (rb < 0) return 1;
    if (ra != rb) return ra > rb ? -1 : 1;  // deeper row goes first
  }
  throw std::logic_error("facet order scan exhausted without a decision");
}

std::vector<FacetTuple> shelling_order(int m, const std::vector<int>& caps,
                                       bool exploratory,
                                       CaseCRelabel relabel) {
  if (m < 1 || caps.empty())
    throw std::invalid_argument("need a positive board and at least one row");
  for (int k : caps)
    if (k < 1) throw std::invalid_argument("row caps must be positive");
  if (m > 31) throw std::invalid_argument("board width limited to 31");
  const int n = static_cast<int>(caps.size());
  const int total = std::accumulate(caps.begin(), caps.end(), 0);
  if (!exploratory && m < total + n - 1)
    throw std::invalid_argument(
        "shelling hypothesis m >= sum(caps) + rows - 1 not met");
  if (total > m)
    throw std::invalid_argument("caps exceed the number of columns");

  // enumerate all full placements row by row
  std::vector<FacetTuple> out;
  FacetTuple cur;
  cur.rows.resize(n);
  uint32_t used = 0;
  auto rec = [&](auto&& self, int row) -> void {
    if (row == n) {
      out.push_back(cur);
      return;
    }
    std::vector<int> avail;
    for (int c = 1; c <= m; ++c)
      if (!(used >> c & 1)) avail.push_back(c);
    const int k = caps[row];
    std::vector<int> pick(k);
    for (int t = 0; t < k; ++t) pick[t] = t;
    while (true) {
      auto& dst = cur.rows[row];
      dst.clear();
      for (int t = 0; t < k; ++t) dst.push_back(avail[pick[t]]);
      for (int c : dst) used |= 1u << c;
      self(self, row + 1);
      for (int c : dst) used &= ~(1u << c);
      int pos = k - 1;
      const int na = static_cast<int>(avail.size());
      while (pos >= 0 && pick[pos] == na - k + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int t = pos + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(),
            [&](const FacetTuple& x, const FacetTuple& y) {
              return compare_facets(x, y, m, relabel) < 0;
            });
  return out;
}

FacetTuple tuple_from_simplex(const Simplex& f, int m, int n) {
  FacetTuple t;
  t.rows.assign(n, {});
  for (Vertex v : f) {
    auto [c, r] = board_square(v, m);
    if (r < 1 || r > n) throw std::invalid_argument("vertex outside board");
    t.rows[r - 1].push_back(c);
  }
  for (auto& row : t.rows) std::sort(row.begin(), row.end());
  return t;
}

Simplex simplex_from_tuple(const FacetTuple& t, int m) {
  Simplex f;
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (int c : t.rows[i]) f.push_back(board_vertex(c, static_cast<int>(i) + 1, m));
  std::sort(f.begin(), f.end());
  return f;
}

ShellingCertificate verify_shelling(const std::vector<Simplex>& order) {
  ShellingCertificate cert;
  cert.facets = order;
  if (order.empty()) {
    cert.verified = true;
    return cert;
  }

  const size_t fsize = order[0].size();
  int ground = 0;
  std::unordered_set<Simplex, SimplexHasher> uniq;
  for (const auto& f : order) {
    if (f.size() != fsize)
      throw std::invalid_argument("shelling check needs a pure facet list");
    if (!uniq.insert(f).second)
      throw std::invalid_argument("duplicate facet in the order");
    if (!f.empty()) ground = std::max(ground, f.back() + 1);
  }

  const int words = (ground + 63) / 64;
  const size_t t = order.size();
  std::vector<uint64_t> mask(t * std::max(words, 1), 0);
  for (size_t j = 0; j < t; ++j)
    for (Vertex v : order[j]) mask[j * words + v / 64] |= 1ull << (v % 64);

  std::unordered_set<Simplex, SimplexHasher> seen;
  std::vector<uint64_t> vmask(std::max(words, 1));
  Simplex sub(fsize > 0 ? fsize - 1 : 0);

  for (size_t j = 0; j < t; ++j) {
    const Simplex& f = order[j];
    std::fill(vmask.begin(), vmask.end(), 0);
    Simplex rj;
    for (size_t drop = 0; drop < f.size(); ++drop) {
      size_t w = 0;
      for (size_t s = 0; s < f.size(); ++s)
        if (s != drop) sub[w++] = f[s];
      if (seen.count(sub)) {
        rj.push_back(f[drop]);
        vmask[f[drop] / 64] |= 1ull << (f[drop] % 64);
      }
    }
    // every predecessor must miss at least one restriction vertex
    for (size_t i = 0; i < j; ++i) {
      bool escapes = false;
      for (int w = 0; w < words && !escapes; ++w)
        if (vmask[w] & ~mask[i * words + w]) escapes = true;
      if (!escapes) {
        cert.violation = ShellingViolation{
            static_cast<int>(i), static_cast<int>(j),
            set_intersection(order[i], f)};
        return cert;
      }
    }
    cert.restriction.push_back(rj);
    if (rj.size() == fsize) cert.spanning.push_back(static_cast<int>(j));
    for (size_t drop = 0; drop < f.size(); ++drop) {
      size_t w = 0;
      for (size_t s = 0; s < f.size(); ++s)
        if (s != drop) sub[w++] = f[s];
      seen.insert(sub);
    }
  }
  cert.verified = true;
  return cert;
}

long long wedge_summary(const ShellingCertificate& cert) {
  if (!cert.verified)
    throw std::logic_error("wedge summary needs a verified certificate");
  return static_cast<long long>(cert.spanning.size());
}

std::vector<Simplex> brute_force_shelling(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  auto facets = k.facets();
  if (facets.size() > 8)
    throw std::invalid_argument("brute-force search capped at 8 facets");
  for (const auto& f : facets)
    if (simplex_dim(f) != k.dim()) return {};  // impure, nothing shells

  std::vector<int> idx(facets.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<Simplex> order;
    order.reserve(facets.size());
    for (int i : idx) order.push_back(facets[i]);
    if (verify_shelling(order).verified) return order;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return {};
}

int compare_standard_board(const std::vector<int>& a, const std::vector<int>& b,
                           int m) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("need matching nonempty placements");
  if (a == b) return 0;
  if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;

  const int n = static_cast<int>(a.size());
  const int a0 = a[0];
  // cyclic scan below the anchor: a0-1, a0-2, ..., 1, m, ..., a0+1
  std::vector<char> inx(m + 1, 0);
  for (int t = 1; t < m; ++t) {
    const int p = (a0 - 1 - t + m) % m + 1;
    inx[p] = 1;
    int ra = -1, rb = -1;
    for (int i = 1; i < n; ++i) {
      if (a[i] == p) ra = i;
      if (b[i] == p) rb = i;
    }
    if (ra < 0 && rb < 0) {
      // remove the scanned columns and the anchor, drop row one and every
      // row whose rook sits inside the scan, then relabel and recurse
      std::vector<int> surv_cols;
      for (int c = 1; c <= m; ++c)
        if (!inx[c] && c != a0) surv_cols.push_back(c);
      std::vector<int> colmap(m + 1, 0);
      for (size_t idx2 = 0; idx2 < surv_cols.size(); ++idx2)
        colmap[surv_cols[idx2]] = static_cast<int>(idx2) + 1;
      std::vector<int> a2, b2;
      for (int i = 1; i < n; ++i)
        if (!inx[a[i]]) {
          a2.push_back(colmap[a[i]]);
          b2.push_back(colmap[b[i]]);
        }
      if (a2.empty())
        throw std::logic_error("standard scan lost every row");
      return compare_standard_board(a2, b2, static_cast<int>(surv_cols.size()));
    }
    if (ra < 0) return -1;
    if (rb < 0) return 1;
    if (ra != rb) return ra > rb ? -1 : 1;
  }
  throw std::logic_error("standard scan exhausted without a decision");
}

}  // namespace rookery
