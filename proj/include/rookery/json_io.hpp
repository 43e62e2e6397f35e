#pragma once

#include <string>

#include <json.hpp>

#include "rookery/simplicial_complex.hpp"

namespace rookery {

// On-disk complex format:
//   {"ground": 21, "facets": [[0,3,8], ...], "coords": [[c,r], ...]}
// "ground" may also be an explicit contiguous id list [0..g-1]. Vertex ids
// are 0-based; coords entries are 1-based board squares and optional.
// Serialization is canonical (facets sorted, keys alphabetical) so equal
// complexes always produce identical bytes.
nlohmann::json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const nlohmann::json& j);

SimplicialComplex load_complex(const std::string& path);
void save_complex(const SimplicialComplex& k, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a 64 digest as fixed-width hex; used in run manifests.
std::string fnv1a_hex(const std::string& bytes);

// Canonical dump used everywhere a file is written: 2-space indent plus a
// trailing newline, keys in alphabetical order (nlohmann's default).
std::string canonical_dump(const nlohmann::json& j);

}
