#pragma once

// Text serialization of classification results and the summary tables built
// from them. Everything here works on strings; reading and writing files is
// left to the caller.

#include <string>
#include <string_view>
#include <vector>

#include "gf4lc/orbit.hpp"

namespace gf4lc {

inline constexpr int kCatalogVersion = 1;

enum class CatalogScope { All, TypeII };

struct Catalog {
  int n = 0;
  CatalogScope scope = CatalogScope::All;
  /// Sorted by representative key.
  std::vector<OrbitRecord> records;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// Header line `#gf4lc-catalog  version=1  n=<n>  scope=all|type2`, then one
/// tab-separated record per line:
/// graph=<n>:<bits> d= type=I|II orbit= l= aut= wd=A0,..,An extremal=0|1 linear=0|1
std::string catalog_write(const Catalog& catalog);
std::string format_record(const OrbitRecord& r);

/// Throws VersionMismatch for another format version and ParseError, with the
/// line number, for anything malformed.
Catalog catalog_read(std::string_view text);
OrbitRecord parse_record(std::string_view line);

/// Renders the summary tables for lengths 1..N, where by_length[k] is the
/// complete indecomposable catalog of length k+1. Sections are separated by
/// blank lines; cells are tab-separated and empty cells are left blank.
std::string emit_tables(const std::vector<std::vector<OrbitRecord>>& by_length);

}  // namespace gf4lc
