#pragma once

#include <cstddef>
#include <cstdint>

namespace classlab {

/// Process-wide caps for exhaustive computations.
struct Limits {
  /// Largest group order whose element list may be materialized.
  std::uint64_t enum_cap = 250'000;
  /// Largest order accepted by the isomorphism search.
  std::uint64_t iso_cap = 20'000;
  /// Largest subgroup count tolerated by subgroup enumeration.
  std::size_t subgroup_limit = 1'000;
  /// Largest order for which a full multiplication table is cached.
  std::uint64_t table_cap = 2'048;
  /// Largest coordinate count N accepted by the wreath construction.
  std::size_t coordinate_cap = 8;
  /// Largest |Γ| scanned by the brute-force normalizer.
  std::uint64_t brute_cap = 250'000;
  /// Largest iteration depth for iterated duals.
  int dual_depth = 5;
};

/// Mutable process-wide limits. Set once at startup, before any parallel work.
Limits& limits();

/// Reads CLASSLAB_ENUM_CAP, CLASSLAB_ISO_CAP, CLASSLAB_SUBGROUP_LIMIT from the
/// environment into limits(). Malformed values throw ParseError.
void load_limits_from_env();

/// Worker count used by the OpenMP kernels (0 = runtime default).
void set_jobs(int jobs);
int jobs();

}  // namespace classlab
