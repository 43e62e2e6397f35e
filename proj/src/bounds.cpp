#include "rookery/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rookery/homology.hpp"

namespace rookery {

namespace {

int checked_sum(int m, const std::vector<int>& caps) {
  if (m < 1) throw std::invalid_argument("board width must be positive");
  if (caps.empty()) throw std::invalid_argument("need at least one row cap");
  for (int k : caps)
    if (k < 1) throw std::invalid_argument("row caps must be positive");
  return std::accumulate(caps.begin(), caps.end(), 0);
}

// ceil(a / b) for a >= 0, b > 0
int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

int mu_primary(int m, const std::vector<int>& caps) {
  const int sum = checked_sum(m, caps);
  const int n = static_cast<int>(caps.size());
  return std::min(m - n + 1, sum);
}

int mu_two_one_rows(int m, int n, int j) {
  if (m < 1 || n < 1) throw std::invalid_argument("board sizes must be positive");
  if (j < 0 || j > n) throw std::invalid_argument("two-rook row count out of range");
  // cases checked in order; the two fractional thresholds (n+j)/2 and
  // n + j/2 - 1 are compared with both sides doubled
  if (2 * m < n + j) return m;
  if (2 * m < 2 * n + j - 2) return ceil_div(m + n + j + 1, 3);
  if (m < n + 2 * j) return ceil_div(5 * m + n + 2 * j + 5, 9);
  if (m < 2 * n + j - 1) return ceil_div(m + n + 2 * j + 1, 3);
  return n + j;
}

int mu_rational(int m, const std::vector<int>& caps) {
  const int sum = checked_sum(m, caps);
  return std::min({m, ceil_div(m + sum + 1, 3), sum});
}

std::vector<BoardSpec> grid_specs(int m_lo, int m_hi, int n_lo, int n_hi,
                                  int cap_lo, int cap_hi) {
  if (m_lo < 1 || m_lo > m_hi || n_lo < 1 || n_lo > n_hi || cap_lo < 1 ||
      cap_lo > cap_hi)
    throw std::invalid_argument("grid ranges must be nonempty and positive");
  std::vector<BoardSpec> out;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int n = n_lo; n <= n_hi; ++n) {
      // non-increasing cap tuples, descending lexicographically
      std::vector<int> caps(n, cap_hi);
      while (true) {
        BoardSpec spec;
        spec.m = m;
        spec.n = n;
        spec.row_caps = caps;
        spec.col_caps.assign(m, 1);
        out.push_back(std::move(spec));
        int i = n - 1;
        while (i >= 0 && caps[i] == cap_lo) --i;
        if (i < 0) break;
        const int v = caps[i] - 1;
        for (int t = i; t < n; ++t) caps[t] = v;
      }
    }
  return out;
}

namespace {

BoundReport evaluate_spec(const BoardSpec& raw, const ScanOptions& opts) {
  BoundReport rep;
  rep.spec = raw.normalized();
  rep.spec.validate();
  const auto& caps = rep.spec.row_caps;
  const int m = rep.spec.m;
  const int n = rep.spec.n;

  rep.mu_primary_value = mu_primary(m, caps);
  rep.mu_rational_value = mu_rational(m, caps);
  const bool ones_and_twos =
      std::all_of(caps.begin(), caps.end(), [](int k) { return k == 1 || k == 2; });
  const bool plain_columns =
      std::all_of(rep.spec.col_caps.begin(), rep.spec.col_caps.end(),
                  [](int l) { return l == 1; });
  if (ones_and_twos && plain_columns) {
    const int j =
        static_cast<int>(std::count(caps.begin(), caps.end(), 2));
    rep.two_one_j = j;
    rep.mu_two_one_value = mu_two_one_rows(m, n, j);
  }

  rep.faces = count_board_faces(rep.spec, opts.budget);
  if (rep.faces < 0) {
    rep.skipped = true;
    return rep;
  }

  const auto h = homology(multi_chessboard(rep.spec));
  const auto conn = homological_connectivity(h);
  const auto rat = rational_connectivity(h);
  rep.hconn = conn.hconn;
  rep.capped = conn.capped;
  rep.rational_hconn = rat.hconn;
  rep.rational_capped = rat.capped;

  // a capped report means every group vanished, which satisfies any bound
  rep.sharp = !rep.capped && rep.hconn == rep.mu_primary_value - 2;
  rep.violation_primary = !rep.capped && rep.hconn < rep.mu_primary_value - 2;
  if (rep.mu_two_one_value)
    rep.violation_two_one = !rep.capped && rep.hconn < *rep.mu_two_one_value - 2;
  rep.violation_rational =
      !rep.rational_capped && rep.rational_hconn < rep.mu_rational_value - 2;
  return rep;
}

}  // namespace

std::vector<BoundReport> bound_scan(const std::vector<BoardSpec>& grid,
                                    const ScanOptions& opts) {
  if (opts.budget < 1) throw std::invalid_argument("face budget must be positive");
  if (opts.threads < 1) throw std::invalid_argument("thread count must be positive");
  std::vector<BoundReport> out(grid.size());
  const int workers =
      std::min<int>(opts.threads, static_cast<int>(grid.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < grid.size(); ++i) out[i] = evaluate_spec(grid[i], opts);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= grid.size()) return;
        out[i] = evaluate_spec(grid[i], opts);
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

std::string bounds_tsv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "spec\tmu_primary\tmu_two_one\tmu_rational\thconn\tsharp\tviolation\n";
  for (const auto& r : reports) {
    os << r.spec.name() << '\t' << r.mu_primary_value << '\t';
    if (r.mu_two_one_value)
      os << *r.mu_two_one_value;
    else
      os << '-';
    os << '\t' << r.mu_rational_value << '\t';
    if (r.skipped) {
      os << "skipped\t-\tbudget\n";
      continue;
    }
    os << r.hconn;
    if (r.capped) os << '+';
    os << '\t' << (r.sharp ? "yes" : "no") << '\t';
    std::string viol;
    const auto mark = [&viol](const char* name) {
      if (!viol.empty()) viol += ',';
      viol += name;
    };
    if (r.violation_primary) mark("primary");
    if (r.violation_two_one) mark("two_one");
    if (r.violation_rational) mark("rational");
    os << (viol.empty() ? "-" : viol) << '\n';
  }
  return os.str();
}

}  // namespace rookery
