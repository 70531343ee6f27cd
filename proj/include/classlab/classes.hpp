#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classlab/perm_group.hpp"
#include "classlab/universe.hpp"

namespace classlab {

enum class ClassKind {
  Trivial,
  All,
  Abelian,
  Cyclic,
  Nilpotent,
  Solvable,
  Simple,
  PGroup,
  Pi,
  OrderAtMost,
  AltGE,
  FiniteSet,
  Union,
  Intersect,
  Dual,
  Hat,
  DualIter,
};

struct ClassExpr;
using ClassPtr = std::shared_ptr<const ClassExpr>;

/// A class of finite groups as a decidable, isomorphism-invariant predicate.
struct ClassExpr {
  ClassKind kind = ClassKind::All;
  std::vector<std::uint64_t> numbers;  // prime, prime set, bound, or iteration count
  std::vector<std::string> specs;      // FiniteSet members as written
  std::vector<PermGroup> groups;       // FiniteSet members, resolved
  std::vector<ClassPtr> children;
  std::string text;  // canonical form, filled by the cls:: builders

  /// Canonical text in the expression grammar; also the memo key.
  const std::string& to_string() const { return text; }
};

/// Parses `trivial | all | abelian | cyclic | nilpotent | solvable | simple |
/// p(2) | pi(2,3) | le(24) | altge(5) | set(C4,Q8) | union(a,b,...) |
/// inter(a,b,...) | dual(a) | hat(a) | dualn(a,k) | fnr`, where fnr means
/// dual(solvable). Throws ParseError on malformed text or unknown group specs.
ClassPtr parse_class(std::string_view text);

namespace cls {
ClassPtr trivial();
ClassPtr all();
ClassPtr abelian();
ClassPtr cyclic();
ClassPtr nilpotent();
ClassPtr solvable();
ClassPtr simple();
ClassPtr p_group(std::uint64_t p);
ClassPtr pi(std::vector<std::uint64_t> primes);
ClassPtr order_at_most(std::uint64_t n);
ClassPtr alt_ge(std::uint64_t n);
ClassPtr finite_set(const std::vector<std::string>& specs);
ClassPtr unite(ClassPtr a, ClassPtr b);
ClassPtr intersect(ClassPtr a, ClassPtr b);
ClassPtr dual(ClassPtr a);
ClassPtr hat(ClassPtr a);
ClassPtr dual_iter(ClassPtr a, std::uint64_t k);
ClassPtr fnr();
}  // namespace cls

/// Membership of G in C. Results are memoized per (expression, isomorphism
/// type); types are identified by fingerprint and a certified isomorphism.
/// Throws CapExceeded for groups above the caps and when an iterated dual
/// exceeds limits().dual_depth.
bool member(const ClassExpr& c, const PermGroup& g);
inline bool member(const ClassPtr& c, const PermGroup& g) { return member(*c, g); }

/// Lattice index of a proper normal H ⊴ G with G/H ∈ C, if any; G ∈ dual(C)
/// exactly when there is none.
std::optional<std::size_t> dual_witness(const ClassExpr& c, const PermGroup& g);

/// A series 1 = G_0 ⊴ G_1 ⊴ ... ⊴ G_n = G of subgroups of G with every
/// G_{i+1}/G_i ∈ C, if one exists; G ∈ hat(C) exactly when it does.
std::optional<std::vector<PermGroup>> hat_series(const ClassExpr& c, const PermGroup& g);

/// For nontrivial G: every maximal-normal quotient lies in C. True for the
/// trivial group.
bool bidual_member_maxnormal(const ClassExpr& c, const PermGroup& g);
/// Every simple factor of the radical factorization lies in C. Throws
/// PreconditionError for the trivial group.
bool bidual_member_radical(const ClassExpr& c, const PermGroup& g);
/// Membership in the k-fold dual of C.
bool dual_chain_member(const ClassPtr& c, const PermGroup& g, std::uint64_t k);

/// Number of isomorphism types registered so far (diagnostics only).
std::size_t registered_types();

enum class Property { C0, C1, C2, C3 };
std::string to_string(Property p);

struct AuditWitness {
  std::string group;                  // universe entry name
  std::string description;
  std::vector<std::string> subgroups;  // generator strings of the witnessing subgroups
};

struct AuditReport {
  Property property = Property::C0;
  bool holds = true;
  std::size_t violations = 0;
  std::vector<AuditWitness> counterexamples;  // first few, in universe order
  std::vector<std::string> skipped;           // entries skipped on cap overflow
  std::string domain;                         // quantification domain, always universe-relative
};

/// Checks one closure property over the universe. Members are processed in
/// parallel; results are merged in universe order.
AuditReport audit_property(const ClassPtr& c, const Catalog& universe, Property which,
                           std::size_t max_witnesses = 5);

struct Classification {
  std::vector<AuditReport> audits;  // C0..C3
  bool pre_formation = false;
  bool formation = false;
  bool extensive_formation = false;
  bool pre_variety = false;
  bool extensive_variety = false;
};

Classification classify(const ClassPtr& c, const Catalog& universe);

}  // namespace classlab
