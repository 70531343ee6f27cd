#pragma once

#include <memory>
#include <vector>

#include "classlab/perm_group.hpp"

namespace classlab {

/// Homomorphism given by images of the source generators.
///
/// Well-definedness is checked on construction through the graph subgroup
/// ⟨(s, f(s))⟩ of Sym(source points ⊔ target points): the assignment extends
/// to a homomorphism exactly when that subgroup has the order of the source.
class GroupHom {
 public:
  /// Throws PreconditionError when an image lies outside the target or the
  /// assignment does not extend to a homomorphism.
  GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> images);

  static GroupHom identity(const PermGroup& g);
  /// Inclusion of a subgroup into a parent group.
  static GroupHom inclusion(const PermGroup& sub, const PermGroup& parent);

  const PermGroup& source() const noexcept { return impl_->source; }
  const PermGroup& target() const noexcept { return impl_->target; }
  const std::vector<Permutation>& images() const noexcept { return impl_->images; }

  /// Throws PreconditionError when x is not in the source.
  Permutation apply(const Permutation& x) const;
  PermGroup image() const;
  PermGroup kernel() const;
  bool injective() const { return kernel().is_trivial(); }
  bool surjective() const { return image().order() == target().order(); }

 private:
  struct Impl {
    PermGroup source;
    PermGroup target;
    std::vector<Permutation> images;
    StabChain graph;         // source points preferred as base points
    StabChain kernel_chain;  // target points preferred as base points
  };
  std::shared_ptr<const Impl> impl_;
};

/// g ∘ f
GroupHom compose(const GroupHom& g, const GroupHom& f);

}  // namespace classlab
