#include "classlab/homomorphism.hpp"

#include <numeric>

#include "classlab/errors.hpp"

namespace classlab {

namespace {

Permutation pair_perm(const Permutation& s, const Permutation& t) {
  std::size_t n = s.degree();
  std::vector<Point> images(n + t.degree());
  for (std::size_t x = 0; x < n; ++x) images[x] = s[static_cast<Point>(x)];
  for (std::size_t y = 0; y < t.degree(); ++y) images[n + y] = static_cast<Point>(n + t[static_cast<Point>(y)]);
  return Permutation::from_images_unchecked(images);
}

}  // namespace

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> images) {
  if (images.size() != source.generators().size())
    throw PreconditionError("homomorphism needs one image per source generator");
  for (const auto& t : images)
    if (!target.contains(t)) throw PreconditionError("image " + t.to_cycle_string() + " is not in the target");

  auto impl = std::make_shared<Impl>();
  std::size_t n = source.degree();
  std::size_t m = target.degree();
  std::vector<Permutation> graph_gens;
  for (std::size_t i = 0; i < images.size(); ++i) graph_gens.push_back(pair_perm(source.generators()[i], images[i]));

  std::vector<Point> source_first(n + m);
  std::iota(source_first.begin(), source_first.end(), Point{0});
  impl->graph = StabChain(n + m, graph_gens, source_first);
  if (impl->graph.order() != source.order())
    throw PreconditionError("generator images do not define a homomorphism");

  std::vector<Point> target_first;
  for (std::size_t y = 0; y < m; ++y) target_first.push_back(static_cast<Point>(n + y));
  for (std::size_t x = 0; x < n; ++x) target_first.push_back(static_cast<Point>(x));
  impl->kernel_chain = StabChain(n + m, graph_gens, target_first, m);

  impl->source = std::move(source);
  impl->target = std::move(target);
  impl->images = std::move(images);
  impl_ = std::move(impl);
}

GroupHom GroupHom::identity(const PermGroup& g) { return GroupHom(g, g, g.generators()); }

GroupHom GroupHom::inclusion(const PermGroup& sub, const PermGroup& parent) {
  return GroupHom(sub, parent, sub.generators());
}

Permutation GroupHom::apply(const Permutation& x) const {
  if (!source().contains(x)) throw PreconditionError("element " + x.to_cycle_string() + " is not in the source");
  std::size_t n = source().degree();
  std::size_t m = target().degree();
  // Sifting (x, 1) leaves (1, f(x)^-1) once every source base point is fixed.
  auto [residue, stop] = impl_->graph.sift(pair_perm(x, Permutation(m)));
  (void)stop;
  std::vector<Point> inv(m);
  for (std::size_t y = 0; y < m; ++y) inv[y] = static_cast<Point>(residue[static_cast<Point>(n + y)] - n);
  return Permutation::from_images_unchecked(inv).inverse();
}

PermGroup GroupHom::image() const { return PermGroup(target().degree(), images()); }

PermGroup GroupHom::kernel() const {
  std::size_t n = source().degree();
  std::size_t m = target().degree();
  const auto& levels = impl_->kernel_chain.levels();
  if (levels.size() > m) {
    {
      std::vector<Permutation> gens;
      for (const auto& g : levels[m].gens) {
        std::vector<Point> restricted(g.images().begin(), g.images().begin() + static_cast<std::ptrdiff_t>(n));
        gens.push_back(Permutation::from_images_unchecked(restricted));
      }
      return PermGroup(n, std::move(gens));
    }
  }
  return PermGroup::trivial(n);
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  std::vector<Permutation> images;
  for (const auto& s : f.images()) images.push_back(g.apply(s));
  return GroupHom(f.source(), g.target(), std::move(images));
}

}  // namespace classlab
