#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "classlab/bits.hpp"
#include "classlab/constructions.hpp"
#include "classlab/perm_group.hpp"

namespace classlab {

/// Conjugacy classes as element-table indices, ordered by smallest index.
struct ConjugacyClasses {
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> class_of;  // element index -> class
};

const ConjugacyClasses& conjugacy_classes(const PermGroup& g);

/// Smallest normal subgroup of G containing `gens`. Uses the stabilizer
/// chain only, so it works beyond the enumeration cap.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& gens);
PermGroup derived_subgroup(const PermGroup& g);
/// G, G', G'', ... down to the first repeated term.
std::vector<PermGroup> derived_series(const PermGroup& g);
/// G, [G,G], [[G,G],G], ... down to the first repeated term.
std::vector<PermGroup> lower_central_series(const PermGroup& g);
PermGroup center(const PermGroup& g);

/// Subgroup of an enumerable group as a set of element-table indices.
Bits element_bits(const PermGroup& g, const PermGroup& sub);
/// ⟨gens⟩ as a set of element-table indices of g.
Bits generate_bits(const ElementTable& table, const std::vector<std::uint32_t>& gens);
/// Reduced generating set of the subgroup with the given elements.
PermGroup group_from_bits(const PermGroup& g, const Bits& bits);

/// All normal subgroups of a group, ordered by (order, element set).
/// members.front() is the trivial group and members.back() the group itself.
struct NormalLattice {
  PermGroup parent;
  std::vector<PermGroup> members;
  std::vector<Bits> bits;
  std::vector<bool> maximal;

  std::size_t size() const { return members.size(); }
  std::size_t whole() const { return members.size() - 1; }
  bool contains(std::size_t outer, std::size_t inner) const { return bits[inner].subset_of(bits[outer]); }
  std::size_t find(const Bits& b) const;
  std::size_t meet(std::size_t i, std::size_t j) const { return find(bits[i] & bits[j]); }
  std::size_t order(std::size_t i) const { return bits[i].count(); }
  std::vector<std::size_t> maximal_indices() const;
};

/// Throws CapExceeded above the enumeration cap.
const NormalLattice& normal_subgroups(const PermGroup& g);

/// Intersection of the maximal normal subgroups. Throws PreconditionError
/// for the trivial group.
PermGroup baer_radical(const PermGroup& g);

/// Quotient by the lattice member with index i. The trivial member returns
/// the group itself instead of its regular representation.
const PermGroup& lattice_quotient(const PermGroup& g, std::size_t i);

bool is_abelian(const PermGroup& g);
bool is_cyclic(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);
bool is_simple(const PermGroup& g);
bool is_p_group(const PermGroup& g, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All subgroups, from cyclic subgroups closed under pairwise join, ordered
/// by (order, element set). Throws CapExceeded when more than `limit`
/// subgroups exist.
struct SubgroupList {
  std::vector<PermGroup> groups;
  std::vector<Bits> bits;
};
SubgroupList subgroup_list(const PermGroup& g, std::size_t limit);
std::vector<PermGroup> subgroups(const PermGroup& g, std::size_t limit);

struct RadicalFactorization {
  PermGroup radical;
  std::vector<std::size_t> chosen;  // lattice indices of H_1, ..., H_n
  std::vector<PermGroup> factors;   // G / H_i, each simple
};

/// Irredundant family of maximal normal subgroups meeting in Rad(G): scanned
/// by ascending lattice index, each kept when it shrinks the running
/// intersection, then listed in reverse so H_{i+1} ∩ ... ∩ H_n ⊄ H_i.
/// Verifies |G/Rad(G)| = ∏ |G/H_i|. Throws PreconditionError for the trivial group.
RadicalFactorization radical_factorization(const PermGroup& g);

/// One representative of each isomorphism type of G/H, H maximal normal.
std::vector<PermGroup> simple_quotients(const PermGroup& g);

/// True iff G has a quotient of prime order, i.e. G' ≠ G.
bool has_prime_order_quotient(const PermGroup& g);

/// A complement K of N in G (K ∩ N = 1, KN = G), searched by lifting
/// generators of G/N one at a time and pruning by order. Throws
/// PreconditionError unless N ⊴ G.
std::optional<PermGroup> complement_exists(const PermGroup& g, const PermGroup& n);

/// Elements of g normalizing h, by scanning the element table of g; the
/// scan is split across OpenMP workers.
Bits normalizer_bits(const PermGroup& g, const PermGroup& h);
/// Single-threaded reference for normalizer_bits.
Bits normalizer_bits_serial(const PermGroup& g, const PermGroup& h);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

}  // namespace classlab
