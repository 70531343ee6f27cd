#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "classlab/homomorphism.hpp"
#include "classlab/perm_group.hpp"

namespace classlab {

/// G0^N on N disjoint copies of G0's points; copy c occupies points
/// [c·d, (c+1)·d) where d = degree(G0).
struct DirectPower {
  PermGroup group;
  PermGroup factor;
  std::size_t copies = 1;
  /// Degree of the ambient permutations; at least copies·degree(factor).
  std::size_t total_degree = 1;

  /// p ∈ G0 placed in coordinate c.
  Permutation embed(std::size_t c, const Permutation& p) const;
  /// Subgroup S placed in coordinate c, identity elsewhere.
  PermGroup embed_group(std::size_t c, const PermGroup& s) const;
  /// Restriction of x ∈ G0^N to coordinate c.
  Permutation project(std::size_t c, const Permutation& x) const;
};

/// Throws PreconditionError when n == 0. `total_degree` pads the ambient
/// degree with fixed points (0 means n·degree(g0)).
DirectPower direct_power(const PermGroup& g0, std::size_t n, std::size_t total_degree = 0);

/// Direct product of two groups on the disjoint union of their points.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// Left cosets of S in G, listed in breadth-first order from S itself.
struct CosetSpace {
  std::vector<Permutation> representatives;
  /// Index of the coset x·S. Throws PreconditionError when x ∉ G.
  std::size_t locate(const Permutation& x) const;
  /// Permutation of the cosets induced by left multiplication by g.
  Permutation action_of(const Permutation& g) const;

  PermGroup group;
  PermGroup sub;
  /// Coset index of each element of `group` by element-table position;
  /// empty when the group is not enumerable.
  std::shared_ptr<const std::vector<std::uint32_t>> element_coset;
};

CosetSpace cosets(const PermGroup& g, const PermGroup& s);

/// Left-translation action of G on the cosets of S; the target is the image
/// group on [G:S] points. Throws PreconditionError unless S ≤ G.
GroupHom coset_action(const PermGroup& g, const PermGroup& s);

struct Quotient {
  PermGroup group;
  GroupHom projection;
};

/// G/N realized through the action on cosets of N. Throws
/// PreconditionError unless N ⊴ G.
Quotient quotient(const PermGroup& g, const PermGroup& n);

bool is_normal(const PermGroup& n, const PermGroup& g);

/// G0^N ⋊ Gn, with Gn permuting the N coordinates through its action on the
/// cosets of G_sub and also acting faithfully on its own points appended
/// after the coordinates.
struct Wreath {
  PermGroup gamma;
  DirectPower base;     // G0^N as a subgroup of gamma
  PermGroup top_group;  // Gn
  PermGroup sub;        // G_sub
  CosetSpace coset_space;
  GroupHom top;         // gamma -> Gn, kernel G0^N
  std::size_t coordinates() const { return base.copies; }
  /// Image of g ∈ Gn in gamma.
  Permutation lift(const Permutation& g) const;
};

/// Throws PreconditionError unless G_sub ≤ Gn, CapExceeded when the number
/// of cosets exceeds limits().coordinate_cap.
Wreath wreath_by_cosets(const PermGroup& g0, const PermGroup& gn, const PermGroup& g_sub);

namespace named {
PermGroup cyclic(std::size_t n);
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
/// Dihedral group of order 2n acting on n points (n ≥ 3); n = 2 gives V4.
PermGroup dihedral(std::size_t n);
PermGroup klein_four();
PermGroup quaternion();
/// SL(2, p) acting on the nonzero vectors of F_p^2.
PermGroup special_linear_2(std::size_t p);
/// PSL(2, 7) ≅ GL(3, 2) acting on the 7 points of the Fano plane.
PermGroup psl27();
}  // namespace named

}  // namespace classlab
