#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "classlab/constructions.hpp"
#include "classlab/homomorphism.hpp"
#include "classlab/isomorphism.hpp"
#include "classlab/perm_group.hpp"

namespace classlab {

/// A maximal subgroup H0 of the simple non-abelian group G0 with
/// N_{G0}(H0) = H0. Maximality is certified by primitivity of the action on
/// the cosets of H0. Throws PreconditionError when G0 is abelian or not
/// simple.
PermGroup maximal_selfnormalizing(const PermGroup& g0);

/// True when the group is transitive and preserves no nontrivial block system.
bool is_primitive(const PermGroup& g);

struct RealizationChecks {
  bool structural = false;
  bool brute = false;
  bool order_arithmetic = false;
  bool isomorphism = false;
};

/// Γ = G0^N ⋊ Gn with Gn permuting the cosets of embed(G), and
/// H = H0 × G0^{N−1}; N_Γ(H)/H ≅ G.
struct RealizationCertificate {
  PermGroup target;
  PermGroup g0;
  PermGroup h0;
  PermGroup gn;
  GroupHom embed;
  std::size_t n = 1;
  Wreath wreath;
  PermGroup gamma;
  PermGroup h;
  PermGroup normalizer;
  IsoCertificate iso;
  RealizationChecks checks;
};

/// Throws PreconditionError unless `embed` is an injective map G → Gn,
/// CapExceeded when brute-force checking is requested and |Γ| exceeds
/// limits().brute_cap, and FalsificationAlarm when a check fails.
RealizationCertificate build_realization(const PermGroup& g, const PermGroup& g0, const PermGroup& gn,
                                         const GroupHom& embed, bool brute_check = true);

/// An injective homomorphism G → Gn found through a subgroup of Gn
/// isomorphic to G, if any.
std::optional<GroupHom> find_embedding(const PermGroup& g, const PermGroup& gn);

/// G acting on itself by left multiplication, on two disjoint copies when
/// that action contains odd permutations, padded to `degree` points. The
/// target is A_degree. Throws PreconditionError when degree is too small.
GroupHom regular_alternating_embedding(const PermGroup& g, std::size_t degree);

struct RealizeOptions {
  std::optional<PermGroup> g0;   // default A5
  std::optional<PermGroup> top;  // default G itself
  std::optional<std::size_t> alt;
  bool brute_check = true;
};

RealizationCertificate realize(const PermGroup& g, const RealizeOptions& options = {});

struct SearchHit {
  PermGroup h;
  PermGroup normalizer;
  IsoCertificate iso;
};

/// Every subgroup H of Γ with N_Γ(H)/H ≅ G. Throws CapExceeded when Γ has
/// more than `limit` subgroups.
std::vector<SearchHit> brute_search(const PermGroup& gamma, const PermGroup& g, std::size_t limit);

/// A complement of N in G. Callers assert the hypotheses under which an
/// extension must split, so a missing complement raises FalsificationAlarm.
PermGroup split_check(const PermGroup& g, const PermGroup& n);

struct DiagonalSubgroup {
  PermGroup group;
  std::vector<std::size_t> support;
};

/// {(φ_1(x), ..., φ_N(x)) : x ∈ G0} inside G0^N, absent φ_i meaning the
/// identity coordinate. Throws PreconditionError when every φ_i is absent or
/// one of them is not an automorphism of G0.
DiagonalSubgroup diagonal_subgroup(const PermGroup& g0, std::size_t n,
                                   const std::vector<std::optional<GroupHom>>& phis);

/// Writes S ≤ G0^N as a diagonal subgroup when S ≅ G0: the coordinate maps
/// are recovered by projecting S. Empty when S is not of that form.
std::optional<std::vector<std::optional<GroupHom>>> recover_diagonal(const PermGroup& g0, std::size_t n,
                                                                     const PermGroup& s);

/// The permutation j with θ(G0^{(i)}) = G0^{(j)} for an automorphism θ of
/// G0^N. Throws PreconditionError when θ is not an automorphism of
/// direct_power(g0, n) and FalsificationAlarm when the factors are not
/// permuted.
std::vector<std::size_t> factor_permutation_check(const PermGroup& g0, std::size_t n, const GroupHom& theta);

/// Conjugation x ↦ c x c⁻¹ restricted to G, as a map G → G.
GroupHom conjugation_map(const PermGroup& g, const Permutation& c);

}  // namespace classlab
