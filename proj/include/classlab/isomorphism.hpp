#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "classlab/homomorphism.hpp"
#include "classlab/perm_group.hpp"

namespace classlab {

/// Isomorphism invariants used to reject quickly. Equal fingerprints never
/// imply isomorphism on their own.
struct Fingerprint {
  std::uint64_t order = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_histogram;  // (element order, count)
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> class_types;  // (element order, class size, count)
  std::uint64_t center_order = 1;
  std::vector<std::uint64_t> derived_orders;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

const Fingerprint& fingerprint(const PermGroup& g);

struct IsoCertificate {
  GroupHom forward;
  Fingerprint source_print;
  Fingerprint target_print;
};

/// Searches for an isomorphism G → H by backtracking over images of a
/// generating set of G, pruned by element order and class size; the first
/// image is taken up to conjugacy in H. Throws CapExceeded when either
/// order exceeds limits().iso_cap.
std::optional<IsoCertificate> isomorphic(const PermGroup& g, const PermGroup& h);

}  // namespace classlab
