#include "rookery/tverberg.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace rookery {

namespace {

using BigInt = boost::multiprecision::cpp_int;

int sgn(const Rational& q) { return q > 0 ? 1 : q < 0 ? -1 : 0; }

// Finds x >= 0 with A x = b, or reports infeasibility. Phase-one tableau:
// artificial variables start basic, entering and leaving picks follow
// Bland's rule, so the walk cannot cycle and exactness does the rest.
std::optional<std::vector<Rational>> solve_feasibility(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i)
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  const size_t width = cols + rows + 1;  // structurals, artificials, rhs
  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(width, 0));
  for (size_t i = 0; i < rows; ++i) {
    std::move(a[i].begin(), a[i].end(), tab[i].begin());
    tab[i][cols + i] = 1;
    tab[i][width - 1] = b[i];
  }
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // reduced costs for minimizing the artificial sum; the rhs slot holds -z
  std::vector<Rational> red(width, 0);
  for (size_t j = 0; j < width; ++j) {
    if (j >= cols && j + 1 < width) continue;  // artificial columns stay 0
    Rational s = 0;
    for (size_t i = 0; i < rows; ++i) s += tab[i][j];
    red[j] = -s;
  }

  while (true) {
    size_t enter = width;
    for (size_t j = 0; j + 1 < width; ++j)
      if (red[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    size_t leave = rows;
    Rational best;
    for (size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      const Rational ratio = tab[i][width - 1] / tab[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == rows)
      throw std::logic_error("artificial objective cannot be unbounded");
    const Rational pv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rational f = tab[i][enter];
      for (size_t j = 0; j < width; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (red[enter] != 0) {
      const Rational f = red[enter];
      for (size_t j = 0; j < width; ++j) red[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  if (red[width - 1] != 0) return std::nullopt;  // leftover artificial mass

  std::vector<Rational> x(cols, 0);
  for (size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = tab[i][width - 1];
  return x;
}

Rational orient(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_meet(const Point& p1, const Point& p2, const Point& q1,
                   const Point& q2) {
  const int o1 = sgn(orient(p1, p2, q1));
  const int o2 = sgn(orient(p1, p2, q2));
  const int o3 = sgn(orient(q1, q2, p1));
  const int o4 = sgn(orient(q1, q2, p2));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // proper crossing
  if (o1 == 0 && on_segment(q1, p1, p2)) return true;
  if (o2 == 0 && on_segment(q2, p1, p2)) return true;
  if (o3 == 0 && on_segment(p1, q1, q2)) return true;
  if (o4 == 0 && on_segment(p2, q1, q2)) return true;
  return false;
}

bool in_triangle(const Point& p, const Point& a, const Point& b,
                 const Point& c) {
  if (orient(a, b, c) == 0)
    // collinear corners span a segment; one of the three pairs is extreme
    return on_segment(p, a, b) || on_segment(p, a, c) || on_segment(p, b, c);
  const int s1 = sgn(orient(a, b, p));
  const int s2 = sgn(orient(b, c, p));
  const int s3 = sgn(orient(c, a, p));
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

bool simplex_pair_meets(const std::vector<Point>& s,
                        const std::vector<Point>& t) {
  if (s.size() > t.size()) return simplex_pair_meets(t, s);
  if (s.size() == 1) {
    if (t.size() == 1) return s[0] == t[0];
    if (t.size() == 2) return on_segment(s[0], t[0], t[1]);
    return in_triangle(s[0], t[0], t[1], t[2]);
  }
  if (s.size() == 2) {
    if (t.size() == 2) return segments_meet(s[0], s[1], t[0], t[1]);
    if (in_triangle(s[0], t[0], t[1], t[2])) return true;
    if (in_triangle(s[1], t[0], t[1], t[2])) return true;
    for (int e = 0; e < 3; ++e)
      if (segments_meet(s[0], s[1], t[e], t[(e + 1) % 3])) return true;
    return false;
  }
  for (const auto& v : s)
    if (in_triangle(v, t[0], t[1], t[2])) return true;
  for (const auto& v : t)
    if (in_triangle(v, s[0], s[1], s[2])) return true;
  for (int e = 0; e < 3; ++e)
    for (int f = 0; f < 3; ++f)
      if (segments_meet(s[e], s[(e + 1) % 3], t[f], t[(f + 1) % 3]))
        return true;
  return false;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Would accepting q create d+1 affinely dependent points? Checked on every
// subset of up to d accepted points: the difference vectors must keep full
// rank once q joins. Size-one subsets catch duplicates.
bool degenerate_with(const std::vector<Point>& acc, const Point& q, int d) {
  const int n = static_cast<int>(acc.size());
  for (int s = 1; s <= std::min(d, n); ++s) {
    std::vector<int> pick(s);
    for (int t = 0; t < s; ++t) pick[t] = t;
    while (true) {
      const Point& base = acc[pick[0]];
      std::vector<std::vector<Rational>> rows;
      rows.reserve(s);
      for (int t = 1; t < s; ++t) {
        std::vector<Rational> row(d);
        for (int j = 0; j < d; ++j) row[j] = acc[pick[t]][j] - base[j];
        rows.push_back(std::move(row));
      }
      std::vector<Rational> rowq(d);
      for (int j = 0; j < d; ++j) rowq[j] = q[j] - base[j];
      rows.push_back(std::move(rowq));
      if (matrix_rank(std::move(rows)) < s) return true;
      int pos = s - 1;
      while (pos >= 0 && pick[pos] == n - s + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int t = pos + 1; t < s; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return false;
}

nlohmann::json big_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or an integer string");
}

nlohmann::json rat_json(const Rational& q) {
  return nlohmann::json::array(
      {big_json(numerator(q)), big_json(denominator(q))});
}

Rational rat_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    if (j.size() != 2)
      throw std::invalid_argument("a rational is [numerator, denominator]");
    BigInt num = big_from_json(j[0]);
    BigInt den = big_from_json(j[1]);
    if (den == 0) throw std::invalid_argument("rational denominator is zero");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  }
  return Rational(big_from_json(j));
}

}  // namespace

bool TverbergInstance::meets_count_hypothesis() const {
  return static_cast<long long>(p) * r * k >=
         static_cast<long long>(r - 1) * (d + 1) + 1;
}

void TverbergInstance::validate() const {
  if (d < 1 || k < 1 || r < 1 || p < 1)
    throw std::invalid_argument("instance parameters must be positive");
  if (static_cast<int>(colors.size()) != k)
    throw std::invalid_argument("need exactly k color classes");
  const int per = points_per_color();
  for (const auto& cls : colors) {
    if (static_cast<int>(cls.size()) != per)
      throw std::invalid_argument("every color class needs (p+1)r - 1 points");
    for (const auto& pt : cls)
      if (static_cast<int>(pt.size()) != d)
        throw std::invalid_argument("every point needs d coordinates");
  }
}

bool prime_power(int r) {
  if (r < 2) return false;
  for (int q = 2; q * q <= r; ++q)
    if (r % q == 0) {
      while (r % q == 0) r /= q;
      return r == 1;
    }
  return true;  // r itself is prime
}

std::optional<HullWitness> hulls_intersect(
    const std::vector<std::vector<Point>>& groups) {
  if (groups.empty()) throw std::invalid_argument("need at least one group");
  size_t d = 0;
  bool have_d = false;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("groups must be nonempty");
    for (const auto& pt : g) {
      if (!have_d) {
        d = pt.size();
        have_d = true;
      }
      if (pt.size() != d || d == 0)
        throw std::invalid_argument("points must share one positive dimension");
    }
  }
  const size_t r = groups.size();
  std::vector<size_t> offset(r + 1, 0);
  for (size_t g = 0; g < r; ++g) offset[g + 1] = offset[g] + groups[g].size();
  const size_t vars = offset[r];
  const size_t rows = r + (r - 1) * d;
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(vars, 0));
  std::vector<Rational> b(rows, 0);
  for (size_t g = 0; g < r; ++g) {
    for (size_t s = 0; s < groups[g].size(); ++s) a[g][offset[g] + s] = 1;
    b[g] = 1;
  }
  // every later group's weighted sum must match group 0's, coordinatewise
  for (size_t g = 1; g < r; ++g)
    for (size_t c = 0; c < d; ++c) {
      auto& row = a[r + (g - 1) * d + c];
      for (size_t s = 0; s < groups[g].size(); ++s)
        row[offset[g] + s] = groups[g][s][c];
      for (size_t s = 0; s < groups[0].size(); ++s)
        row[offset[0] + s] -= groups[0][s][c];
    }
  auto x = solve_feasibility(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  HullWitness w;
  w.coefficients.resize(r);
  for (size_t g = 0; g < r; ++g)
    w.coefficients[g].assign(x->begin() + offset[g], x->begin() + offset[g + 1]);
  w.x.assign(d, 0);
  for (size_t s = 0; s < groups[0].size(); ++s)
    for (size_t c = 0; c < d; ++c)
      w.x[c] += w.coefficients[0][s] * groups[0][s][c];
  return w;
}

bool verify_witness(const std::vector<std::vector<Point>>& groups,
                    const HullWitness& w) {
  if (groups.empty() || w.coefficients.size() != groups.size()) return false;
  const size_t d = w.x.size();
  if (d == 0) return false;
  for (size_t g = 0; g < groups.size(); ++g) {
    const auto& pts = groups[g];
    const auto& lam = w.coefficients[g];
    if (pts.empty() || lam.size() != pts.size()) return false;
    Rational total = 0;
    Point acc(d, 0);
    for (size_t s = 0; s < pts.size(); ++s) {
      if (lam[s] < 0 || pts[s].size() != d) return false;
      total += lam[s];
      for (size_t c = 0; c < d; ++c) acc[c] += lam[s] * pts[s][c];
    }
    if (total != 1 || acc != w.x) return false;
  }
  return true;
}

bool planar_hulls_intersect(const std::vector<Point>& a,
                            const std::vector<Point>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("hull test needs nonempty point sets");
  for (const auto* side : {&a, &b})
    for (const auto& pt : *side)
      if (pt.size() != 2)
        throw std::invalid_argument("the reference oracle is planar only");
  // by Caratheodory a common hull point lies in simplices on at most three
  // points of each side, so the pairs below are exhaustive
  auto subsets = [](const std::vector<Point>& pts) {
    std::vector<std::vector<Point>> out;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) {
      out.push_back({pts[i]});
      for (int j = i + 1; j < n; ++j) {
        out.push_back({pts[i], pts[j]});
        for (int t = j + 1; t < n; ++t)
          out.push_back({pts[i], pts[j], pts[t]});
      }
    }
    return out;
  };
  const auto sa = subsets(a);
  const auto sb = subsets(b);
  for (const auto& s : sa)
    for (const auto& t : sb)
      if (simplex_pair_meets(s, t)) return true;
  return false;
}

SearchResult search_partition(const TverbergInstance& inst,
                              const SearchOptions& opts) {
  inst.validate();
  if (opts.max_leaf_tests < 0)
    throw std::invalid_argument("leaf budget cannot be negative");
  SearchResult res;
  std::vector<std::pair<int, int>> seq;
  const int per = inst.points_per_color();
  seq.reserve(static_cast<size_t>(per) * inst.k);
  for (int idx = 0; idx < per; ++idx)
    for (int c = 0; c < inst.k; ++c) seq.emplace_back(c, idx);

  std::vector<std::vector<int>> counts(inst.k, std::vector<int>(inst.r + 1, 0));
  std::vector<std::vector<std::pair<int, int>>> groups(inst.r);
  bool stop = false;

  auto leaf_test = [&] {
    if (res.leaf_tests >= opts.max_leaf_tests) {
      res.status = SearchStatus::Truncated;
      stop = true;
      return;
    }
    ++res.leaf_tests;
    std::vector<std::vector<Point>> pts(inst.r);
    for (int g = 0; g < inst.r; ++g)
      for (const auto& [c, i] : groups[g]) pts[g].push_back(inst.colors[c][i]);
    auto w = hulls_intersect(pts);
    if (!w) return;
    if (!verify_witness(pts, *w))
      throw std::logic_error("witness failed exact substitution");
    PartitionCertificate cert;
    cert.groups = groups;
    cert.witness = std::move(*w);
    res.certificate = std::move(cert);
    res.status = SearchStatus::Found;
    stop = true;
  };

  auto dfs = [&](auto&& self, size_t pos, int gmax) -> void {
    if (stop) return;
    // the still-unopened groups each need a point from the remaining ones
    if (static_cast<size_t>(inst.r - gmax) > seq.size() - pos) return;
    if (pos == seq.size()) {
      leaf_test();
      return;
    }
    const auto [c, i] = seq[pos];
    const int reach = std::min(gmax + 1, inst.r);
    for (int g = 1; g <= reach && !stop; ++g) {
      if (counts[c][g] >= inst.p) continue;
      ++counts[c][g];
      groups[g - 1].emplace_back(c, i);
      self(self, pos + 1, std::max(gmax, g));
      groups[g - 1].pop_back();
      --counts[c][g];
    }
    if (!stop) self(self, pos + 1, gmax);  // the point stays unused
  };
  dfs(dfs, 0, 0);

  if (res.status != SearchStatus::Found &&
      res.status != SearchStatus::Truncated)
    res.status = SearchStatus::Exhausted;
  return res;
}

TverbergInstance random_instance(int d, int k, int r, int p, uint64_t seed) {
  if (d < 1 || k < 1 || r < 1 || p < 1)
    throw std::invalid_argument("instance parameters must be positive");
  std::mt19937_64 rng(seed);
  // unbiased rejection draw from [-1024, 1024]; engine output is pinned by
  // the standard, so instances replay identically everywhere
  auto coord = [&rng] {
    const uint64_t span = 2049;
    const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                           std::numeric_limits<uint64_t>::max() % span;
    uint64_t v;
    do v = rng();
    while (v >= limit);
    return Rational(static_cast<long long>(v % span) - 1024, 1024);
  };
  TverbergInstance inst;
  inst.d = d;
  inst.k = k;
  inst.r = r;
  inst.p = p;
  inst.colors.assign(k, {});
  std::vector<Point> accepted;
  const int per = inst.points_per_color();
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < per; ++i) {
      for (int attempt = 0;; ++attempt) {
        if (attempt > 4096)
          throw std::logic_error("general position resampling stalled");
        Point q(d);
        for (auto& v : q) v = coord();
        if (degenerate_with(accepted, q, d)) continue;
        inst.colors[c].push_back(q);
        accepted.push_back(std::move(q));
        break;
      }
    }
  return inst;
}

TheoremReport verify_theorem(int d, int k, int r, int p, int trials,
                             uint64_t seed, const SearchOptions& opts) {
  if (d < 1 || k < 1 || r < 1 || p < 1)
    throw std::invalid_argument("instance parameters must be positive");
  if (trials < 0) throw std::invalid_argument("trial count cannot be negative");
  TheoremReport rep;
  rep.d = d;
  rep.k = k;
  rep.r = r;
  rep.p = p;
  rep.trials = trials;
  rep.seed = seed;
  TverbergInstance probe;
  probe.d = d;
  probe.k = k;
  probe.r = r;
  probe.p = p;
  rep.hypothesis_met = probe.meets_count_hypothesis();
  rep.prime_power_r = prime_power(r);
  std::mt19937_64 master(seed);
  for (int t = 0; t < trials; ++t) {
    const uint64_t iseed = master();
    const auto inst = random_instance(d, k, r, p, iseed);
    const auto sr = search_partition(inst, opts);
    rep.total_leaf_tests += sr.leaf_tests;
    if (sr.status == SearchStatus::Found) {
      ++rep.successes;
      continue;
    }
    if (sr.status == SearchStatus::Exhausted)
      ++rep.exhausted;
    else
      ++rep.truncated;
    rep.failures.push_back({iseed, sr.status, sr.leaf_tests});
  }
  return rep;
}

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Truncated: return "truncated";
  }
  return "unknown";
}

TverbergInstance instance_from_json(const nlohmann::json& j, int r_hint,
                                    int p_hint) {
  if (!j.is_object() || !j.contains("colors"))
    throw std::invalid_argument("instance json needs a colors array");
  const auto& cols = j.at("colors");
  if (!cols.is_array() || cols.empty())
    throw std::invalid_argument("colors must be a nonempty array");
  TverbergInstance inst;
  inst.r = j.value("r", r_hint);
  inst.p = j.value("p", p_hint);
  inst.k = j.value("k", static_cast<int>(cols.size()));
  for (const auto& cls : cols) {
    if (!cls.is_array())
      throw std::invalid_argument("each color class must be an array");
    std::vector<Point> pts;
    for (const auto& pj : cls) {
      if (!pj.is_array())
        throw std::invalid_argument("each point must be a coordinate array");
      Point pt;
      for (const auto& cj : pj) pt.push_back(rat_from_json(cj));
      pts.push_back(std::move(pt));
    }
    inst.colors.push_back(std::move(pts));
  }
  int d_default = 0;
  if (!inst.colors.empty() && !inst.colors[0].empty())
    d_default = static_cast<int>(inst.colors[0][0].size());
  inst.d = j.value("d", d_default);
  inst.validate();
  return inst;
}

nlohmann::json instance_to_json(const TverbergInstance& inst) {
  nlohmann::json colors = nlohmann::json::array();
  for (const auto& cls : inst.colors) {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& pt : cls) {
      nlohmann::json jp = nlohmann::json::array();
      for (const auto& v : pt) jp.push_back(rat_json(v));
      jc.push_back(std::move(jp));
    }
    colors.push_back(std::move(jc));
  }
  return {{"colors", std::move(colors)},
          {"d", inst.d},
          {"k", inst.k},
          {"p", inst.p},
          {"r", inst.r}};
}

nlohmann::json certificate_to_json(const PartitionCertificate& cert) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : cert.groups) {
    nlohmann::json jg = nlohmann::json::array();
    for (const auto& [c, i] : g) jg.push_back({c, i});
    groups.push_back(std::move(jg));
  }
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& lam : cert.witness.coefficients) {
    nlohmann::json jl = nlohmann::json::array();
    for (const auto& v : lam) jl.push_back(rat_json(v));
    coeffs.push_back(std::move(jl));
  }
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& v : cert.witness.x) witness.push_back(rat_json(v));
  return {{"coefficients", std::move(coeffs)},
          {"groups", std::move(groups)},
          {"witness", std::move(witness)}};
}

nlohmann::json theorem_report_to_json(const TheoremReport& rep) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : rep.failures)
    failures.push_back({{"instance_seed", f.instance_seed},
                        {"leaf_tests", f.leaf_tests},
                        {"status", search_status_name(f.status)}});
  return {{"d", rep.d},
          {"exhausted", rep.exhausted},
          {"failures", std::move(failures)},
          {"hypothesis_met", rep.hypothesis_met},
          {"k", rep.k},
          {"p", rep.p},
          {"prime_power_r", rep.prime_power_r},
          {"r", rep.r},
          {"seed", rep.seed},
          {"successes", rep.successes},
          {"total_leaf_tests", rep.total_leaf_tests},
          {"trials", rep.trials},
          {"truncated", rep.truncated}};
}

}  // namespace rookery
