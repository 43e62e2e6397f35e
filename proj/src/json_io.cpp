#include "rookery/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rookery {

nlohmann::json complex_to_json(const SimplicialComplex& k) {
  nlohmann::json j;
  j["ground"] = k.ground_size();
  j["facets"] = nlohmann::json::array();
  for (const auto& f : k.facets()) j["facets"].push_back(f);
  if (!k.coords().empty()) {
    nlohmann::json c = nlohmann::json::array();
    for (auto [col, row] : k.coords()) c.push_back({col, row});
    j["coords"] = std::move(c);
  }
  return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.contains("facets")) throw std::invalid_argument("missing \"facets\"");
  int ground = -1;
  if (j.contains("ground")) {
    const auto& g = j["ground"];
    if (g.is_number_integer()) {
      ground = g.get<int>();
    } else if (g.is_array()) {
      // explicit id list; must be the contiguous range 0..g-1
      std::vector<int> ids = g.get<std::vector<int>>();
      for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != static_cast<int>(i))
          throw std::invalid_argument("ground list must be contiguous 0-based ids");
      ground = static_cast<int>(ids.size());
    } else {
      throw std::invalid_argument("\"ground\" must be an integer or id list");
    }
  }
  std::vector<Simplex> facets;
  bool saw_empty = false;
  for (const auto& f : j["facets"]) {
    facets.push_back(f.get<Simplex>());
    if (facets.back().empty()) saw_empty = true;
  }
  if (facets.empty())
    return SimplicialComplex::from_facets({}, std::max(ground, 0));
  if (facets.size() == 1 && saw_empty)
    return SimplicialComplex::empty_face_complex(std::max(ground, 0));
  auto k = SimplicialComplex::from_facets(std::move(facets), ground);
  if (j.contains("coords")) {
    std::vector<std::pair<int, int>> coords;
    for (const auto& c : j["coords"]) {
      if (!c.is_array() || c.size() != 2)
        throw std::invalid_argument("coords entries must be [column, row]");
      coords.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    if (static_cast<int>(coords.size()) != k.ground_size())
      throw std::invalid_argument("coords length must equal ground size");
    k.set_coords(std::move(coords));
  }
  return k;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(nlohmann::json::parse(read_file(path)));
}

void save_complex(const SimplicialComplex& k, const std::string& path) {
  write_file(path, canonical_dump(complex_to_json(k)));
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}
