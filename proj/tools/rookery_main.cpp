// Command-line front end: builds board complexes, runs homology and
// connectivity, emits and verifies facet orders, scans connectivity
// bounds, searches for colored partitions, and replays the release
// checklist. Every run embeds a manifest (command, parameters, seed,
// version, input and output digests) and equal manifests produce byte
// identical reports; elapsed time therefore goes to stderr only.
#include <chrono>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rookery/acceptance.hpp"
#include "rookery/boards.hpp"
#include "rookery/bounds.hpp"
#include "rookery/homology.hpp"
#include "rookery/json_io.hpp"
#include "rookery/manifest.hpp"
#include "rookery/shelling.hpp"
#include "rookery/tverberg.hpp"

namespace {

using rookery::BigInt;
using rookery::RunManifest;
using rookery::Simplex;
using rookery::SimplicialComplex;

struct Opts {
  // board selection
  int m = 0, n = 0, p = 1, q = 1;
  std::vector<int> row_caps, col_caps, doubled_rows, sizes;
  int two_one = -1;
  std::string family = "board";
  // io
  std::string in_path, out_path, points_path;
  bool json = false;
  // shelling
  bool exploratory = false, reversing = false;
  std::string order_kind = "lex";
  // limits
  long long budget = 2000000;
  int threads = 1;
  // bounds grid
  int m_min = 1, m_max = 7, n_min = 1, n_max = 3, cap_min = 1, cap_max = 2;
  // partition search
  int d = 2, k = 1, r = 2, cap_per_group = 1, trials = 0;
  unsigned long long seed = 0;
  long long leaf_budget = 2000000;
  bool unreduced = false;
};

std::string fmt_simplex(const Simplex& s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

std::string fmt_longs(const std::vector<long long>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

// n choose k capped at `limit`, for refusing oversized generator requests
// before enumeration starts.
long long binomial_capped(int n, int k, long long limit) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > limit) return limit + 1;
  }
  return out;
}

struct BoardChoice {
  SimplicialComplex complex;
  std::string name;
  nlohmann::json parameters;
};

// Resolves the board flags into a complex. Row caps come from --row-caps
// or uniformly from --p; --two-one / --doubled-rows switch to the family
// with doubled caps on selected rows. The face budget is enforced before
// any enumeration happens.
BoardChoice resolve_board(const Opts& o) {
  using nlohmann::json;
  if (o.m < 1) throw std::invalid_argument("--m is required and positive");

  if (o.two_one >= 0 || !o.doubled_rows.empty()) {
    rookery::TwoOneJSpec spec;
    if (!o.doubled_rows.empty()) {
      spec.m = o.m;
      spec.n = o.n;
      spec.rows = o.doubled_rows;
    } else {
      spec = rookery::TwoOneJSpec::make(o.m, o.n, o.two_one);
    }
    spec.validate();
    rookery::BoardSpec counted;
    counted.m = spec.m;
    counted.n = spec.n;
    counted.row_caps.assign(spec.n, 1);
    for (int row : spec.rows) counted.row_caps[row - 1] = 2;
    counted.col_caps.assign(spec.m, 1);
    if (rookery::count_board_faces(counted, o.budget) < 0)
      throw std::runtime_error("face budget exceeded; raise --budget");
    BoardChoice c;
    c.complex = rookery::two_one_j(spec);
    c.name = spec.name();
    c.parameters = {{"m", spec.m}, {"n", spec.n}, {"doubled_rows", spec.rows}};
    return c;
  }

  rookery::BoardSpec spec;
  spec.m = o.m;
  if (!o.row_caps.empty()) {
    spec.row_caps = o.row_caps;
    spec.n = static_cast<int>(o.row_caps.size());
    if (o.n > 0 && o.n != spec.n)
      throw std::invalid_argument("--n disagrees with --row-caps length");
  } else {
    if (o.n < 1)
      throw std::invalid_argument("give --n (with --p) or --row-caps");
    spec.n = o.n;
    spec.row_caps.assign(o.n, o.p);
  }
  if (!o.col_caps.empty()) {
    if (static_cast<int>(o.col_caps.size()) != spec.m)
      throw std::invalid_argument("--col-caps length must equal --m");
    spec.col_caps = o.col_caps;
  } else {
    spec.col_caps.assign(spec.m, o.q);
  }
  spec.validate();
  if (rookery::count_board_faces(spec, o.budget) < 0)
    throw std::runtime_error("face budget exceeded; raise --budget");
  BoardChoice c;
  c.complex = rookery::multi_chessboard(spec);
  c.name = spec.name();
  c.parameters = {{"m", spec.m},
                  {"n", spec.n},
                  {"row_caps", spec.row_caps},
                  {"col_caps", spec.col_caps}};
  return c;
}

// Board flags or --in; file input records its digest in the manifest.
// Accepts raw complex documents and full gen reports alike, so the output
// of one subcommand feeds the next without surgery.
BoardChoice resolve_input(const Opts& o, RunManifest& man) {
  if (!o.in_path.empty()) {
    if (o.m > 0)
      throw std::invalid_argument("--in and board flags are exclusive");
    const std::string bytes = rookery::read_file(o.in_path);
    rookery::record_input(man, "complex", bytes);
    nlohmann::json doc = nlohmann::json::parse(bytes);
    if (doc.is_object() && doc.contains("result")) doc = doc.at("result");
    if (doc.is_object() && doc.contains("complex")) doc = doc.at("complex");
    BoardChoice c;
    c.complex = rookery::complex_from_json(doc);
    c.name = o.in_path;
    c.parameters = {{"in", o.in_path}};
    return c;
  }
  return resolve_board(o);
}

struct Emission {
  RunManifest manifest;
  nlohmann::json result;
  std::string human;
  int exit_code = 0;
};

int finish(const Opts& o, Emission e,
           std::chrono::steady_clock::time_point start) {
  e.manifest.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  const std::string bytes = rookery::render_report(e.manifest, e.result);
  if (!o.out_path.empty()) rookery::write_file(o.out_path, bytes);
  if (o.json) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
  } else {
    std::printf("%s\n", e.human.c_str());
    if (!o.out_path.empty()) std::printf("wrote %s\n", o.out_path.c_str());
  }
  std::fprintf(stderr, "[rookery %s] %lld ms\n", e.manifest.command.c_str(),
               e.manifest.wall_ms);
  return e.exit_code;
}

nlohmann::json connectivity_json(const rookery::ConnectivityReport& c) {
  nlohmann::json j;
  j["hconn"] = c.hconn;
  if (c.witness_dim == rookery::kNoWitness)
    j["witness_dim"] = nullptr;
  else
    j["witness_dim"] = c.witness_dim;
  j["capped"] = c.capped;
  return j;
}

int run_gen(const Opts& o) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest man;
  man.command = "gen";

  BoardChoice c;
  if (o.family == "board") {
    c = resolve_board(o);
  } else if (o.family == "bier") {
    if (o.m < 1) throw std::invalid_argument("--m is required");
    if (binomial_capped(o.m, o.p, o.budget) > o.budget)
      throw std::runtime_error("face budget exceeded; raise --budget");
    c.complex = rookery::bier_sphere(rookery::cap_complex(o.m, o.p), o.m);
    c.name = "Bier(m=" + std::to_string(o.m) + ",p=" + std::to_string(o.p) + ")";
    c.parameters = {{"m", o.m}, {"p", o.p}};
  } else if (o.family == "cap") {
    if (o.m < 1) throw std::invalid_argument("--m is required");
    if (binomial_capped(o.m, o.p, o.budget) > o.budget)
      throw std::runtime_error("face budget exceeded; raise --budget");
    c.complex = rookery::cap_complex(o.m, o.p);
    c.name = "Cap(n=" + std::to_string(o.m) + ",l=" + std::to_string(o.p) + ")";
    c.parameters = {{"n", o.m}, {"l", o.p}};
  } else if (o.family == "multipartite") {
    if (o.sizes.empty()) throw std::invalid_argument("--sizes is required");
    long long facets = 1;
    for (int t : o.sizes) {
      if (t < 1) throw std::invalid_argument("part sizes must be positive");
      facets *= t;
      if (facets > o.budget)
        throw std::runtime_error("face budget exceeded; raise --budget");
    }
    c.complex = rookery::multipartite(o.sizes);
    std::ostringstream name;
    name << "Join(";
    for (size_t i = 0; i < o.sizes.size(); ++i)
      name << (i ? "," : "") << o.sizes[i];
    name << ")";
    c.name = name.str();
    c.parameters = {{"sizes", o.sizes}};
  } else {
    throw std::invalid_argument("unknown --family " + o.family);
  }
  c.parameters["family"] = o.family;
  c.parameters["budget"] = o.budget;
  man.parameters = c.parameters;

  Emission e;
  e.manifest = std::move(man);
  e.result["name"] = c.name;
  e.result["complex"] = rookery::complex_to_json(c.complex);

  const auto f = c.complex.f_vector().counts;
  std::ostringstream h;
  h << c.name << ": ground " << c.complex.ground_size() << ", dim "
    << c.complex.dim() << ", " << c.complex.facets().size()
    << " facets, f = (" << fmt_longs(f) << ")";
  e.human = h.str();
  return finish(o, std::move(e), start);
}

int run_homology(const Opts& o) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest man;
  man.command = "homology";
  auto c = resolve_input(o, man);
  c.parameters["reduced"] = !o.unreduced;
  man.parameters = c.parameters;

  const auto h = rookery::homology(c.complex, !o.unreduced);
  const auto conn = rookery::homological_connectivity(h);

  nlohmann::json result;
  result["name"] = c.name;
  result["f_vector"] = h.face_counts;
  result["euler"] = c.complex.euler();
  result["reduced"] = h.reduced;
  result["betti_minus1"] = h.betti_minus1;
  result["betti"] = h.betti;
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& dim_torsion : h.torsion) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& t : dim_torsion) row.push_back(big_to_json(t));
    torsion.push_back(std::move(row));
  }
  result["torsion"] = std::move(torsion);
  result["connectivity"] = connectivity_json(conn);

  std::ostringstream text;
  text << c.name << ": f = (" << fmt_longs(h.face_counts)
       << "), chi = " << c.complex.euler() << "\n";
  text << (h.reduced ? "reduced betti" : "betti") << " = ("
       << fmt_longs(h.betti) << ")";
  bool any_torsion = false;
  for (const auto& dim_torsion : h.torsion)
    if (!dim_torsion.empty()) any_torsion = true;
  if (any_torsion) {
    text << "\ntorsion:";
    for (size_t i = 0; i < h.torsion.size(); ++i)
      for (const auto& t : h.torsion[i])
        text << " H" << i << "~Z/" << t.str();
  } else {
    text << "\ntorsion: none";
  }
  text << "\nhconn = " << conn.hconn;
  if (conn.witness_dim != rookery::kNoWitness)
    text << " (witness dim " << conn.witness_dim << ")";
  if (conn.capped) text << " (capped at dim: all reduced homology vanishes)";

  Emission e;
  e.manifest = std::move(man);
  e.result = std::move(result);
  e.human = text.str();
  return finish(o, std::move(e), start);
}

int run_connectivity(const Opts& o) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest man;
  man.command = "connectivity";
  auto c = resolve_input(o, man);
  man.parameters = c.parameters;

  const auto h = rookery::homology(c.complex);
  const auto conn = rookery::homological_connectivity(h);
  const auto rat = rookery::rational_connectivity(h);

  Emission e;
  e.manifest = std::move(man);
  e.result["name"] = c.name;
  e.result["connectivity"] = connectivity_json(conn);
  e.result["rational_connectivity"] = connectivity_json(rat);

  std::ostringstream text;
  text << "hconn(" << c.name << ") = " << conn.hconn;
  if (conn.witness_dim != rookery::kNoWitness)
    text << ", first homology witness in dim " << conn.witness_dim;
  if (conn.capped) text << " (capped: all reduced homology vanishes)";
  text << "; rational hconn = " << rat.hconn;
  e.human = text.str();
  return finish(o, std::move(e), start);
}

int run_shell(const Opts& o) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest man;
  man.command = "shell";
  if (o.m < 1) throw std::invalid_argument("--m is required and positive");
  std::vector<int> caps = o.row_caps;
  if (caps.empty()) {
    if (o.n < 1)
      throw std::invalid_argument("give --n (with --p) or --row-caps");
    caps.assign(o.n, o.p);
  }
  const auto relabel = o.reversing ? rookery::CaseCRelabel::OrderReversing
                                   : rookery::CaseCRelabel::OrderPreserving;
  man.parameters = {{"m", o.m},
                    {"caps", caps},
                    {"exploratory", o.exploratory},
                    {"relabel", o.reversing ? "reversing" : "preserving"}};

  const auto order = rookery::shelling_order(o.m, caps, o.exploratory, relabel);
  std::vector<Simplex> simplices;
  simplices.reserve(order.size());
  for (const auto& t : order)
    simplices.push_back(rookery::simplex_from_tuple(t, o.m));
  const auto cert = rookery::verify_shelling(simplices);

  rookery::BoardSpec named;
  named.m = o.m;
  named.n = static_cast<int>(caps.size());
  named.row_caps = caps;
  named.col_caps.assign(o.m, 1);

  Emission e;
  e.manifest = std::move(man);
  e.result["name"] = named.name();
  e.result["facet_count"] = simplices.size();
  e.result["order"] = simplices;
  e.result["verified"] = cert.verified;
  if (cert.verified) {
    e.result["wedge"] = rookery::wedge_summary(cert);
    e.result["spanning_steps"] = cert.spanning.size();
    e.result["violation"] = nullptr;
  } else {
    e.result["wedge"] = nullptr;
    e.result["spanning_steps"] = nullptr;
    nlohmann::json v;
    v["index"] = cert.violation->index;
    v["earlier"] = cert.violation->earlier;
    v["intersection"] = cert.violation->intersection;
    e.result["violation"] = std::move(v);
    e.exit_code = 1;
  }

  std::ostringstream text;
  text << named.name() << ": " << simplices.size() << " facets ordered";
  if (cert.verified) {
    text << "; shelling verified; wedge of " << rookery::wedge_summary(cert)
         << " top spheres";
  } else {
    text << "; NOT a shelling: step " << cert.violation->index << " facet "
         << fmt_simplex(simplices[cert.violation->index])
         << " meets the earlier facet "
         << fmt_simplex(simplices[cert.violation->earlier]) << " only in "
         << fmt_simplex(cert.violation->intersection);
  }
  e.human = text.str();
  return finish(o, std::move(e), start);
}

int run_verify_shelling(const Opts& o) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest man;
  man.command = "verify-shelling";

  std::vector<Simplex> order;
  std::string source;
  if (!o.in_path.empty()) {
    const std::string bytes = rookery::read_file(o.in_path);
    rookery::record_input(man, "order", bytes);
    nlohmann::json j = nlohmann::json::parse(bytes);
    // shell reports nest the order under "result"
    if (j.is_object() && j.contains("result")) j = j.at("result");
    const nlohmann::json* list = nullptr;
    if (j.is_array())
      list = &j;
    else if (j.is_object() && j.contains("order"))
      list = &j.at("order");
    else if (j.is_object() && j.contains("facets"))
      list = &j.at("facets");
    else
      throw std::invalid_argument(
          "expected a facet array or an object with \"order\" or \"facets\"");
    for (const auto& f : *list) order.push_back(f.get<Simplex>());
    source = o.in_path;
    man.parameters = {{"in", o.in_path}, {"order", "file"}};
  } else {
    if (o.order_kind == "lex") {
      // canonical facet storage is lexicographic, so the complex's own
      // facet list is exactly the lexicographic order
      auto c = resolve_board(o);
      order = c.complex.facets();
      source = c.name + " (lex order)";
      man.parameters = c.parameters;
    } else if (o.order_kind == "shelling") {
      if (o.m < 1) throw std::invalid_argument("--m is required and positive");
      std::vector<int> caps = o.row_caps;
      if (caps.empty()) {
        if (o.n < 1)
          throw std::invalid_argument("give --n (with --p) or --row-caps");
        caps.assign(o.n, o.p);
      }
      for (const auto& t : rookery::shelling_order(o.m, caps))
        order.push_back(rookery::simplex_from_tuple(t, o.m));
      rookery::BoardSpec named;
      named.m = o.m;
      named.n = static_cast<int>(caps.size());
      named.row_caps = caps;
      named.col_caps.assign(o.m, 1);
      source = named.name() + " (facet order)";
      man.parameters = {{"m", o.m}, {"caps", caps}};
    } else {
      throw std::invalid_argument("--order must be lex or shelling");
    }
    man.parameters["order"] = o.order_kind;
  }

  const auto cert = rookery::verify_shelling(order);

  Emission e;
  e.manifest = std::move(man);
  e.result["source"] = source;
  e.result["facet_count"] = order.size();
  e.result["verified"] = cert.verified;
  std::ostringstream text;
  if (cert.verified) {
    e.result["wedge"] = rookery::wedge_summary(cert);
    e.result["spanning_steps"] = cert.spanning.size();
    e.result["violation"] = nullptr;
    text << source << ": shelling verified, " << order.size()
         << " facets, wedge of " << rookery::wedge_summary(cert)
         << " top spheres";
  } else {
    e.result["wedge"] = nullptr;
    e.result["spanning_steps"] = nullptr;
    nlohmann::json v;
    v["index"] = cert.violation->index;
    v["earlier"] = cert.violation->earlier;
    v["intersection"] = cert.violation->intersection;
    e.result["violation"] = std::move(v);
    e.exit_code = 1;
    text << source << ": NOT a shelling: step " << cert.violation->index
         << " facet " << fmt_simplex(order[cert.violation->index])
         << " meets the earlier facet "
         << fmt_simplex(order[cert.violation->earlier]) << " of step "
         << cert.violation->earlier << " only in "
         << fmt_simplex(cert.violation->intersection)
         << ", which is not a nonempty union of codimension-one faces";
  }
  e.human = text.str();
  return finish(o, std::move(e), start);
}

int run_bounds(const Opts& o) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest man;
  man.command = "bounds";
  man.parameters = {{"m_min", o.m_min},     {"m_max", o.m_max},
                    {"n_min", o.n_min},     {"n_max", o.n_max},
                    {"cap_min", o.cap_min}, {"cap_max", o.cap_max},
                    {"budget", o.budget},   {"threads", o.threads}};

  const auto grid = rookery::grid_specs(o.m_min, o.m_max, o.n_min, o.n_max,
                                        o.cap_min, o.cap_max);
  const auto reports = rookery::bound_scan(
      grid, {o.budget, o.threads});

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json row;
    row["spec"] = rep.spec.name();
    row["faces"] = rep.faces;
    row["skipped"] = rep.skipped;
    row["mu_primary"] = rep.mu_primary_value;
    if (rep.mu_two_one_value)
      row["mu_two_one"] = *rep.mu_two_one_value;
    else
      row["mu_two_one"] = nullptr;
    row["mu_rational"] = rep.mu_rational_value;
    if (rep.skipped) {
      row["hconn"] = nullptr;
    } else {
      row["hconn"] = rep.hconn;
      row["capped"] = rep.capped;
      row["sharp"] = rep.sharp;
      nlohmann::json violations = nlohmann::json::array();
      if (rep.violation_primary) violations.push_back("primary");
      if (rep.violation_two_one) violations.push_back("two_one");
      if (rep.violation_rational) violations.push_back("rational");
      row["violations"] = std::move(violations);
    }
    rows.push_back(std::move(row));
  }

  Emission e;
  e.manifest = std::move(man);
  e.result["rows"] = std::move(rows);
  e.human = rookery::bounds_tsv(reports);
  while (!e.human.empty() && e.human.back() == '\n') e.human.pop_back();
  return finish(o, std::move(e), start);
}

int run_tverberg(const Opts& o) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest man;
  man.command = "tverberg";
  man.seed = o.seed;
  man.parameters = {{"d", o.d},   {"k", o.k},           {"r", o.r},
                    {"p", o.cap_per_group}, {"trials", o.trials},
                    {"budget", o.leaf_budget}};
  rookery::SearchOptions search_opts;
  search_opts.max_leaf_tests = o.leaf_budget;

  Emission e;
  std::ostringstream text;

  if (!o.points_path.empty()) {
    man.parameters["points"] = o.points_path;
    const std::string bytes = rookery::read_file(o.points_path);
    rookery::record_input(man, "points", bytes);
    const auto inst = rookery::instance_from_json(nlohmann::json::parse(bytes),
                                                  o.r, o.cap_per_group);
    const auto sr = rookery::search_partition(inst, search_opts);
    e.result["instance"] = rookery::instance_to_json(inst);
    e.result["status"] = rookery::search_status_name(sr.status);
    e.result["leaf_tests"] = sr.leaf_tests;
    e.result["hypothesis_met"] = inst.meets_count_hypothesis();
    e.result["prime_power_r"] = rookery::prime_power(inst.r);
    if (sr.status == rookery::SearchStatus::Found) {
      e.result["certificate"] = rookery::certificate_to_json(*sr.certificate);
      text << "partition found after " << sr.leaf_tests
           << " hull tests; witness x = (";
      const auto& x = sr.certificate->witness.x;
      for (size_t i = 0; i < x.size(); ++i)
        text << (i ? ", " : "") << x[i].str();
      text << ")";
    } else {
      e.result["certificate"] = nullptr;
      e.exit_code = 1;
      if (sr.status == rookery::SearchStatus::Exhausted)
        text << "no partition exists for this instance (search exhausted "
             << sr.leaf_tests << " hull tests)";
      else
        text << "search truncated at " << sr.leaf_tests
             << " hull tests; raise --budget for a definitive answer";
    }
  } else {
    if (o.trials < 1)
      throw std::invalid_argument("give --trials or --points");
    const auto rep = rookery::verify_theorem(o.d, o.k, o.r, o.cap_per_group,
                                             o.trials, o.seed, search_opts);
    e.result = rookery::theorem_report_to_json(rep);
    e.exit_code = rep.successes == rep.trials ? 0 : 1;
    text << rep.successes << "/" << rep.trials << " instances certified ("
         << rep.exhausted << " exhausted, " << rep.truncated << " truncated); "
         << (rep.hypothesis_met ? "point counts meet the hypothesis"
                                : "point counts below the hypothesis")
         << "; r " << (rep.prime_power_r ? "is" : "is NOT")
         << " a prime power";
  }

  e.manifest = std::move(man);
  e.human = text.str();
  return finish(o, std::move(e), start);
}

int run_report(const Opts& o) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest man;
  man.command = "report";
  man.parameters = nlohmann::json::object();

  // verdicts stream to stderr so long fixtures show progress without
  // touching the deterministic stdout payload
  const auto results =
      rookery::run_acceptance([](const rookery::CriterionResult& r) {
        std::fprintf(stderr, "[%s] %s\n", r.passed ? "PASS" : "FAIL",
                     r.id.c_str());
      });

  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::string> failing;
  for (const auto& r : results) {
    nlohmann::json row;
    row["id"] = r.id;
    row["claim"] = r.claim;
    row["passed"] = r.passed;
    row["expected_pass"] = r.expected_pass;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
    if (!r.passed) failing.push_back(r.id);
  }

  Emission e;
  e.manifest = std::move(man);
  e.result["criteria"] = std::move(rows);
  e.result["failing"] = failing;

  std::ostringstream text;
  for (const auto& r : results) {
    text << (r.passed ? "PASS  " : "FAIL  ") << r.id;
    if (!r.passed && !r.expected_pass) text << "  (documented divergence)";
    text << "\n      claim:    " << r.claim;
    text << "\n      computed: " << r.detail << "\n";
  }
  text << results.size() - failing.size() << "/" << results.size()
       << " claims pass";
  if (!failing.empty()) {
    text << "; failing:";
    for (const auto& id : failing) text << " " << id;
    e.exit_code = 1;
  }
  e.human = text.str();
  return finish(o, std::move(e), start);
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  CLI::App app{"board complexes, exact homology, shellings, connectivity "
               "bounds, and colored partition search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("rookery ") +
                                        rookery::kToolVersion);

  auto add_board_flags = [&o](CLI::App* sub, bool with_input) {
    sub->add_option("--m", o.m, "board width (columns)");
    sub->add_option("--n", o.n, "board height (rows)");
    sub->add_option("--p", o.p, "uniform row cap")->capture_default_str();
    sub->add_option("--q", o.q, "uniform column cap")->capture_default_str();
    sub->add_option("--row-caps", o.row_caps, "per-row caps, comma separated")
        ->delimiter(',');
    sub->add_option("--col-caps", o.col_caps,
                    "per-column caps, comma separated")
        ->delimiter(',');
    sub->add_option("--two-one", o.two_one,
                    "double the caps on the first j rows");
    sub->add_option("--doubled-rows", o.doubled_rows,
                    "explicit 1-based rows with doubled caps")
        ->delimiter(',');
    sub->add_option("--budget", o.budget, "largest face count to enumerate")
        ->capture_default_str();
    if (with_input)
      sub->add_option("--in", o.in_path, "read a complex from a JSON file");
  };
  auto add_output_flags = [&o](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit the JSON report on stdout");
    sub->add_option("--out", o.out_path, "also write the JSON report here");
  };

  auto* gen = app.add_subcommand("gen", "generate a complex and print it");
  add_board_flags(gen, false);
  gen->add_option("--family", o.family, "board | bier | cap | multipartite")
      ->capture_default_str()
      ->check(CLI::IsMember({"board", "bier", "cap", "multipartite"}));
  gen->add_option("--sizes", o.sizes, "multipartite part sizes")
      ->delimiter(',');
  add_output_flags(gen);

  auto* hom = app.add_subcommand("homology", "exact integer homology");
  add_board_flags(hom, true);
  hom->add_flag("--unreduced", o.unreduced, "report unreduced Betti numbers");
  add_output_flags(hom);

  auto* conn = app.add_subcommand("connectivity",
                                  "homological connectivity report");
  add_board_flags(conn, true);
  add_output_flags(conn);

  auto* shell = app.add_subcommand("shell", "emit the facet order and "
                                            "verify it shells the board");
  shell->add_option("--m", o.m, "board width (columns)");
  shell->add_option("--n", o.n, "board height (rows)");
  shell->add_option("--p", o.p, "uniform row cap")->capture_default_str();
  shell->add_option("--row-caps", o.row_caps, "per-row caps")->delimiter(',');
  shell->add_flag("--exploratory", o.exploratory,
                  "order boards below the width hypothesis, no promise");
  shell->add_flag("--reversing", o.reversing,
                  "use the order-reversing residual relabeling");
  add_output_flags(shell);

  auto* verify = app.add_subcommand("verify-shelling",
                                    "check the shelling condition for a "
                                    "facet order");
  add_board_flags(verify, true);
  verify->add_option("--order", o.order_kind, "lex | shelling")
      ->capture_default_str()
      ->check(CLI::IsMember({"lex", "shelling"}));
  add_output_flags(verify);

  auto* bounds = app.add_subcommand("bounds", "scan connectivity against "
                                              "the predicted bounds");
  bounds->add_option("--m-min", o.m_min)->capture_default_str();
  bounds->add_option("--m-max", o.m_max)->capture_default_str();
  bounds->add_option("--n-min", o.n_min)->capture_default_str();
  bounds->add_option("--n-max", o.n_max)->capture_default_str();
  bounds->add_option("--cap-min", o.cap_min)->capture_default_str();
  bounds->add_option("--cap-max", o.cap_max)->capture_default_str();
  bounds->add_option("--budget", o.budget, "skip specs with more faces")
      ->capture_default_str();
  bounds->add_option("--threads", o.threads, "worker threads")
      ->capture_default_str();
  add_output_flags(bounds);

  auto* tv = app.add_subcommand("tverberg", "search colored instances for "
                                            "certified partitions");
  tv->add_option("--d", o.d, "dimension")->capture_default_str();
  tv->add_option("--k", o.k, "color classes")->capture_default_str();
  tv->add_option("--r", o.r, "groups")->capture_default_str();
  tv->add_option("--p", o.cap_per_group, "points per color per group")
      ->capture_default_str();
  tv->add_option("--trials", o.trials, "random instances to test");
  tv->add_option("--seed", o.seed, "master seed")->capture_default_str();
  tv->add_option("--points", o.points_path, "single instance JSON file");
  tv->add_option("--budget", o.leaf_budget, "hull tests before truncation")
      ->capture_default_str();
  add_output_flags(tv);

  auto* report = app.add_subcommand("report", "replay the release checklist");
  add_output_flags(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(o);
    if (hom->parsed()) return run_homology(o);
    if (conn->parsed()) return run_connectivity(o);
    if (shell->parsed()) return run_shell(o);
    if (verify->parsed()) return run_verify_shelling(o);
    if (bounds->parsed()) return run_bounds(o);
    if (tv->parsed()) return run_tverberg(o);
    if (report->parsed()) return run_report(o);
  } catch (const std::invalid_argument& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
  return 2;
}
