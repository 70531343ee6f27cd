#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "classlab/isomorphism.hpp"
#include "classlab/perm_group.hpp"

namespace classlab {

/// Parses `C<n>`, `S<n>`, `A<n>`, `D<2n>`, `Q8`, `SL23`, `SL25`, `V4`,
/// `PSL27`, `1` (trivial) or `perm<d>[<cycles>;<cycles>;...]`.
/// Throws ParseError on unknown names, malformed cycles or oversized degrees.
PermGroup parse_group_spec(std::string_view text);

struct UniverseSpec {
  std::size_t sym_degree = 5;
  std::vector<std::string> extras;

  /// C8..C32, D8, D10, D12, Q8, SL23, SL25, and A6 when d < 6.
  static UniverseSpec with_default_extras(std::size_t sym_degree = 5);
  std::string to_string() const;
};

struct CatalogEntry {
  std::string name;
  PermGroup group;
};

/// Isomorphism-class representatives, ordered by (order, fingerprint,
/// generator text).
struct Catalog {
  static constexpr int version = 1;
  UniverseSpec spec;
  std::vector<CatalogEntry> entries;

  std::size_t size() const { return entries.size(); }
  /// Index of the entry isomorphic to g, or size() when there is none.
  std::size_t find_isomorphic(const PermGroup& g) const;

  std::string serialize() const;
  /// Throws ParseError on malformed or inconsistent text.
  static Catalog parse(std::string_view text);
  static Catalog load(const std::string& path);
  void save(const std::string& path) const;
};

/// Subgroups of S_d deduplicated by isomorphism, plus extras. Throws
/// PreconditionError for d > 6 and CapExceeded when the subgroup count of
/// S_d exceeds limits().subgroup_limit.
Catalog build_universe(const UniverseSpec& spec);

/// Name of a known constructor isomorphic to g, or empty.
std::string known_name(const PermGroup& g);

}  // namespace classlab
