#include "rookery/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace rookery {

namespace {

void validate_simplex(const Simplex& s) {
  if (!std::is_sorted(s.begin(), s.end()))
    throw std::invalid_argument("simplex vertices must be strictly increasing");
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("simplex has a repeated vertex");
}

}  // namespace

bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex set_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SimplicialComplex SimplicialComplex::empty_face_complex(int ground_size) {
  SimplicialComplex k;
  k.ground_ = ground_size;
  k.facets_.push_back({});
  return k;
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> facets,
                                                  int ground_size) {
  SimplicialComplex k;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  k.facets_ = std::move(facets);
  k.ground_ = ground_size;
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> candidates,
                                                 int ground_size) {
  int max_id = -1;
  for (auto& c : candidates) {
    validate_simplex(c);
    for (Vertex v : c) {
      if (v < 0) throw std::invalid_argument("negative vertex id");
      max_id = std::max(max_id, v);
    }
  }
  if (ground_size < 0) ground_size = max_id + 1;
  if (max_id >= ground_size)
    throw std::invalid_argument("vertex id outside ground set");

  if (candidates.empty()) {
    SimplicialComplex k;
    k.ground_ = ground_size;
    return k;  // void complex
  }

  // Dominated-set removal. A candidate can only be dominated by a strictly
  // larger kept set, so processing by decreasing size needs one subset test
  // per kept superset candidate. The per-vertex index keeps that cheap; sets
  // of equal size never dominate each other, which covers the common case of
  // pure generators in one dedup pass.
  std::sort(candidates.begin(), candidates.end(),
            [](const Simplex& a, const Simplex& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<Simplex> kept;
  std::vector<std::vector<int>> by_vertex(ground_size);  // kept indices
  for (const auto& c : candidates) {
    bool dominated = false;
    if (!c.empty()) {
      // Scan only kept facets containing c's least-frequent vertex.
      int best = c[0];
      for (Vertex v : c)
        if (by_vertex[v].size() < by_vertex[best].size()) best = v;
      for (int idx : by_vertex[best]) {
        if (kept[idx].size() > c.size() && is_subset(c, kept[idx])) {
          dominated = true;
          break;
        }
      }
    } else {
      dominated = !kept.empty();  // ∅ is dominated by anything
    }
    if (!dominated) {
      int idx = static_cast<int>(kept.size());
      kept.push_back(c);
      for (Vertex v : c) by_vertex[v].push_back(idx);
    }
  }

  std::sort(kept.begin(), kept.end());
  SimplicialComplex k;
  k.ground_ = ground_size;
  k.facets_ = std::move(kept);
  return k;
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return kDimVoid;
  size_t mx = 0;
  for (const auto& f : facets_) mx = std::max(mx, f.size());
  return static_cast<int>(mx) - 1;
}

bool SimplicialComplex::contains(const Simplex& sorted_face) const {
  for (const auto& f : facets_)
    if (f.size() >= sorted_face.size() && is_subset(sorted_face, f)) return true;
  return false;
}

std::vector<Simplex> SimplicialComplex::faces(int i) const {
  std::vector<Simplex> out;
  if (i < 0 || is_void()) return out;
  const size_t want = static_cast<size_t>(i) + 1;
  std::unordered_set<Simplex, SimplexHasher> seen;
  std::vector<int> pick(want);
  for (const auto& f : facets_) {
    if (f.size() < want) continue;
    // standard subset enumeration over the facet's vertices
    for (size_t t = 0; t < want; ++t) pick[t] = static_cast<int>(t);
    while (true) {
      Simplex s(want);
      for (size_t t = 0; t < want; ++t) s[t] = f[pick[t]];
      seen.insert(std::move(s));
      int pos = static_cast<int>(want) - 1;
      while (pos >= 0 &&
             pick[pos] == static_cast<int>(f.size() - want) + pos)
        --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (size_t t = pos + 1; t < want; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  out.assign(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

FVector SimplicialComplex::f_vector() const {
  if (fvec_cache_) return *fvec_cache_;
  FVector fv;
  int d = dim();
  if (d >= 0) {
    // One pass over all facet subsets, bucketed by cardinality.
    std::vector<std::unordered_set<Simplex, SimplexHasher>> seen(d + 1);
    for (const auto& f : facets_) {
      const int fd = static_cast<int>(f.size());
      // enumerate nonempty subsets of f by cardinality
      for (int card = 1; card <= fd; ++card) {
        std::vector<int> pick(card);
        for (int t = 0; t < card; ++t) pick[t] = t;
        while (true) {
          Simplex s(card);
          for (int t = 0; t < card; ++t) s[t] = f[pick[t]];
          seen[card - 1].insert(std::move(s));
          int pos = card - 1;
          while (pos >= 0 && pick[pos] == fd - card + pos) --pos;
          if (pos < 0) break;
          ++pick[pos];
          for (int t = pos + 1; t < card; ++t) pick[t] = pick[t - 1] + 1;
        }
      }
    }
    fv.counts.resize(d + 1);
    for (int i = 0; i <= d; ++i)
      fv.counts[i] = static_cast<long long>(seen[i].size());
  }
  fvec_cache_ = fv;
  return fv;
}

long long SimplicialComplex::face_count(int i) const {
  if (i == -1) return is_void() ? 0 : 1;
  FVector fv = f_vector();
  if (i < 0 || i > fv.dim()) return 0;
  return fv.counts[i];
}

long long SimplicialComplex::euler() const {
  FVector fv = f_vector();
  long long chi = 0;
  for (int i = 0; i <= fv.dim(); ++i)
    chi += (i % 2 == 0) ? fv.counts[i] : -fv.counts[i];
  return chi;
}

long long SimplicialComplex::reduced_euler() const {
  if (is_void()) return 0;
  return euler() - 1;
}

SimplicialComplex SimplicialComplex::link(const Simplex& sorted_face) const {
  if (!contains(sorted_face)) throw std::invalid_argument("face not in complex");
  std::vector<Simplex> gens;
  for (const auto& f : facets_)
    if (is_subset(sorted_face, f)) gens.push_back(set_difference(f, sorted_face));
  return from_facets(std::move(gens), ground_);
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
  if (is_void()) return *this;
  if (d < -1) throw std::invalid_argument("skeleton dimension below -1");
  if (d >= dim()) return *this;
  if (d == -1) return empty_face_complex(ground_);
  std::vector<Simplex> gens = faces(d);
  for (const auto& f : facets_)
    if (static_cast<int>(f.size()) <= d) gens.push_back(f);
  if (gens.empty()) gens.push_back({});
  return from_facets(std::move(gens), ground_);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int ga = a.ground_size(), gb = b.ground_size();
  if (a.is_void() || b.is_void()) {
    // Join with the void complex is void here. Some texts make void act as
    // the join identity instead; nothing downstream relies on that reading,
    // and keeping joins of nonvoid inputs nonvoid is what the dimension and
    // Euler identities in the tests assume.
    return SimplicialComplex::from_facets({}, ga + gb);
  }
  std::vector<Simplex> out;
  out.reserve(a.facets().size() * b.facets().size());
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) {
      Simplex f = fa;
      f.reserve(fa.size() + fb.size());
      for (Vertex v : fb) f.push_back(v + ga);
      out.push_back(std::move(f));
    }
  }
  // Facets of a join are exactly products of facets, already maximal.
  return SimplicialComplex::from_maximal(std::move(out), ga + gb);
}

SimplicialComplex deleted_join(const SimplicialComplex& k, int n, int s) {
  if (n < 1 || s < 2) throw std::invalid_argument("deleted join needs n >= 1, s >= 2");
  const int g = k.ground_size();
  if (k.is_void()) return SimplicialComplex::from_facets({}, g * n);

  // All faces of k including ∅, in a stable order.
  std::vector<Simplex> kfaces;
  kfaces.push_back({});
  for (int d = 0; d <= k.dim(); ++d)
    for (auto& f : k.faces(d)) kfaces.push_back(std::move(f));

  std::vector<Simplex> tuples;
  std::vector<int> mult(g, 0);
  std::vector<const Simplex*> chosen(n);

  // Depth-first over copies; multiplicity of every ground vertex stays < s.
  auto rec = [&](auto&& self, int copy) -> void {
    if (copy == n) {
      Simplex flat;
      for (int i = 0; i < n; ++i)
        for (Vertex v : *chosen[i]) flat.push_back(i * g + v);
      std::sort(flat.begin(), flat.end());
      tuples.push_back(std::move(flat));
      return;
    }
    for (const auto& f : kfaces) {
      bool ok = true;
      for (Vertex v : f)
        if (mult[v] + 1 >= s) { ok = false; break; }
      if (!ok) continue;
      for (Vertex v : f) ++mult[v];
      chosen[copy] = &f;
      self(self, copy + 1);
      for (Vertex v : f) --mult[v];
    }
  };
  rec(rec, 0);
  return SimplicialComplex::from_facets(std::move(tuples), g * n);
}

SimplicialComplex alexander_dual(const SimplicialComplex& k, int m) {
  if (m < 0 || m > 25)
    throw std::invalid_argument("alexander dual ground size out of range");
  for (const auto& f : k.facets())
    if (!f.empty() && f.back() >= m)
      throw std::invalid_argument("complex does not fit in ground set [m]");

  // Membership table over all subsets of [m] as bitmasks.
  std::vector<bool> is_face(size_t{1} << m, false);
  if (!k.is_void()) {
    is_face[0] = true;
    for (int d = 0; d <= k.dim(); ++d) {
      for (const auto& f : k.faces(d)) {
        uint64_t mask = 0;
        for (Vertex v : f) mask |= uint64_t{1} << v;
        is_face[mask] = true;
      }
    }
  }

  const uint64_t full = (uint64_t{1} << m) - 1;
  std::vector<bool> in_dual(size_t{1} << m);
  for (uint64_t sub = 0; sub <= full; ++sub)
    in_dual[sub] = !is_face[full & ~sub];

  // σ is a facet of the dual iff no single-vertex extension stays in it.
  std::vector<Simplex> facets;
  for (uint64_t sub = 0; sub <= full; ++sub) {
    if (!in_dual[sub]) continue;
    bool maximal = true;
    for (int v = 0; v < m && maximal; ++v)
      if (!(sub >> v & 1) && in_dual[sub | (uint64_t{1} << v)]) maximal = false;
    if (!maximal) continue;
    Simplex s;
    for (int v = 0; v < m; ++v)
      if (sub >> v & 1) s.push_back(v);
    facets.push_back(std::move(s));
  }
  if (facets.empty()) return SimplicialComplex::from_facets({}, m);  // void
  return SimplicialComplex::from_maximal(std::move(facets), m);
}

}
