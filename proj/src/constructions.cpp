#include "classlab/constructions.hpp"

#include <algorithm>
#include <array>

#include "classlab/config.hpp"
#include "classlab/errors.hpp"

namespace classlab {

// ---------------------------------------------------------------------------
// Direct products

Permutation DirectPower::embed(std::size_t c, const Permutation& p) const {
  return p.embedded(total_degree, c * factor.degree());
}

PermGroup DirectPower::embed_group(std::size_t c, const PermGroup& s) const {
  std::vector<Permutation> gens;
  for (const auto& g : s.generators()) gens.push_back(embed(c, g));
  return PermGroup(total_degree, std::move(gens));
}

Permutation DirectPower::project(std::size_t c, const Permutation& x) const {
  std::size_t d = factor.degree();
  std::vector<Point> images(d);
  for (std::size_t i = 0; i < d; ++i)
    images[i] = static_cast<Point>(x[static_cast<Point>(c * d + i)] - c * d);
  return Permutation(std::move(images));
}

DirectPower direct_power(const PermGroup& g0, std::size_t n, std::size_t total_degree) {
  if (n == 0) throw PreconditionError("direct power needs at least one factor");
  DirectPower out;
  out.factor = g0;
  out.copies = n;
  out.total_degree = total_degree == 0 ? n * g0.degree() : total_degree;
  if (out.total_degree < n * g0.degree()) throw PreconditionError("ambient degree too small for direct power");
  std::vector<Permutation> gens;
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& g : g0.generators()) gens.push_back(out.embed(c, g));
  out.group = PermGroup(out.total_degree, std::move(gens));
  return out;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::size_t total = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(g.embedded(total, 0));
  for (const auto& g : b.generators()) gens.push_back(g.embedded(total, a.degree()));
  return PermGroup(total, std::move(gens));
}

// ---------------------------------------------------------------------------
// Cosets

std::size_t CosetSpace::locate(const Permutation& x) const {
  if (element_coset) {
    auto idx = group.elements().index_of(x);
    if (!idx) throw PreconditionError("element " + x.to_cycle_string() + " is not in the group");
    return (*element_coset)[*idx];
  }
  if (!group.contains(x)) throw PreconditionError("element " + x.to_cycle_string() + " is not in the group");
  for (std::size_t i = 0; i < representatives.size(); ++i)
    if (sub.contains(representatives[i].inverse() * x)) return i;
  throw PreconditionError("coset lookup failed");
}

Permutation CosetSpace::action_of(const Permutation& g) const {
  std::vector<Point> images(representatives.size());
  for (std::size_t i = 0; i < representatives.size(); ++i)
    images[i] = static_cast<Point>(locate(g * representatives[i]));
  return Permutation(std::move(images));
}

CosetSpace cosets(const PermGroup& g, const PermGroup& s) {
  if (!g.contains_group(s)) throw PreconditionError("subgroup is not contained in the group");
  CosetSpace space;
  space.group = g;
  space.sub = s;
  std::uint64_t index = g.order() / s.order();
  space.representatives.push_back(g.identity());

  if (g.enumerable()) {
    const auto& table = g.elements();
    constexpr std::uint32_t unset = UINT32_MAX;
    auto ids = std::make_shared<std::vector<std::uint32_t>>(table.size(), unset);
    std::vector<std::uint32_t> sub_idx;
    const auto& st = s.chain();
    for (std::uint32_t i = 0; i < table.size() && sub_idx.size() < s.order(); ++i)
      if (st.contains(table.element(i))) sub_idx.push_back(i);
    auto mark = [&](std::uint32_t rep, std::uint32_t id) {
      for (std::uint32_t h : sub_idx) (*ids)[table.mul(rep, h)] = id;
    };
    mark(0, 0);
    std::vector<std::uint32_t> rep_idx{0};
    std::vector<std::uint32_t> gen_idx;
    for (const auto& gen : g.generators()) gen_idx.push_back(*table.index_of(gen));
    for (std::size_t k = 0; k < rep_idx.size(); ++k)
      for (std::uint32_t gi : gen_idx) {
        std::uint32_t y = table.mul(gi, rep_idx[k]);
        if ((*ids)[y] != unset) continue;
        auto id = static_cast<std::uint32_t>(rep_idx.size());
        rep_idx.push_back(y);
        space.representatives.push_back(table.element(y));
        mark(y, id);
      }
    space.element_coset = std::move(ids);
    return space;
  }

  for (std::size_t k = 0; k < space.representatives.size() && space.representatives.size() < index; ++k) {
    for (const auto& gen : g.generators()) {
      Permutation y = gen * space.representatives[k];
      bool known = std::any_of(space.representatives.begin(), space.representatives.end(),
                               [&](const Permutation& r) { return s.contains(r.inverse() * y); });
      if (!known) space.representatives.push_back(std::move(y));
    }
  }
  return space;
}

GroupHom coset_action(const PermGroup& g, const PermGroup& s) {
  auto space = cosets(g, s);
  std::vector<Permutation> images;
  for (const auto& gen : g.generators()) images.push_back(space.action_of(gen));
  std::size_t n = space.representatives.size();
  PermGroup target(n, images);
  return GroupHom(g, std::move(target), std::move(images));
}

bool is_normal(const PermGroup& n, const PermGroup& g) {
  if (!g.contains_group(n)) return false;
  for (const auto& x : g.generators())
    for (const auto& h : n.generators())
      if (!n.contains(conjugate(h, x))) return false;
  return true;
}

Quotient quotient(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(n, g)) throw PreconditionError("quotient by a subgroup that is not normal");
  auto proj = coset_action(g, n);
  PermGroup q = proj.target();
  return Quotient{std::move(q), std::move(proj)};
}

// ---------------------------------------------------------------------------
// Wreath product by a coset action

Permutation Wreath::lift(const Permutation& g) const {
  std::size_t d0 = base.factor.degree();
  std::size_t n = base.copies;
  Permutation pi = coset_space.action_of(g);
  std::vector<Point> images(gamma.degree());
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < d0; ++x) images[c * d0 + x] = static_cast<Point>(pi[static_cast<Point>(c)] * d0 + x);
  for (std::size_t j = 0; j < top_group.degree(); ++j)
    images[n * d0 + j] = static_cast<Point>(n * d0 + g[static_cast<Point>(j)]);
  return Permutation::from_images_unchecked(images);
}

Wreath wreath_by_cosets(const PermGroup& g0, const PermGroup& gn, const PermGroup& g_sub) {
  if (!gn.contains_group(g_sub)) throw PreconditionError("embedded subgroup is not contained in the top group");
  std::uint64_t n = gn.order() / g_sub.order();
  if (n > limits().coordinate_cap)
    throw CapExceeded("wreath needs " + std::to_string(n) + " coordinates, cap is " +
                      std::to_string(limits().coordinate_cap));
  std::size_t total = n * g0.degree() + gn.degree();

  auto space = cosets(gn, g_sub);
  DirectPower base = direct_power(g0, n, total);
  std::vector<Permutation> gens = base.group.generators();

  // Gamma is assembled after the lifts exist; a provisional value lets lift() read the degree.
  Wreath w{PermGroup::trivial(total), base, gn, g_sub, space, GroupHom::identity(gn)};
  std::vector<Permutation> top_images(gens.size(), gn.identity());
  for (const auto& g : gn.generators()) {
    gens.push_back(w.lift(g));
    top_images.push_back(g);
  }
  w.gamma = PermGroup(total, std::move(gens));
  w.top = GroupHom(w.gamma, gn, std::move(top_images));
  return w;
}

// ---------------------------------------------------------------------------
// Named groups

namespace named {

namespace {

Permutation cycle_of(std::size_t degree, std::vector<Point> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::vector<Point> range(std::size_t from, std::size_t to) {
  std::vector<Point> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(static_cast<Point>(i));
  return out;
}

using Matrix2 = std::array<long, 4>;  // row-major

PermGroup matrix_group_2(std::size_t p, const std::vector<Matrix2>& mats) {
  std::size_t degree = p * p - 1;
  auto index = [p](long a, long b) { return static_cast<Point>(a * static_cast<long>(p) + b - 1); };
  std::vector<Permutation> gens;
  for (const auto& m : mats) {
    std::vector<Point> images(degree);
    long q = static_cast<long>(p);
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        long x = ((m[0] * a + m[1] * b) % q + q) % q;
        long y = ((m[2] * a + m[3] * b) % q + q) % q;
        images[index(a, b)] = index(x, y);
      }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

}  // namespace

PermGroup cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group of order 0");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {cycle_of(n, range(0, n))});
}

PermGroup symmetric(std::size_t n) {
  if (n == 0) throw PreconditionError("symmetric group on 0 points");
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup(2, {cycle_of(2, {0, 1})});
  return PermGroup(n, {cycle_of(n, range(0, n)), cycle_of(n, {0, 1})});
}

PermGroup alternating(std::size_t n) {
  if (n == 0) throw PreconditionError("alternating group on 0 points");
  if (n < 3) return PermGroup::trivial(n);
  if (n == 3) return PermGroup(3, {cycle_of(3, {0, 1, 2})});
  Permutation long_cycle = n % 2 == 1 ? cycle_of(n, range(0, n)) : cycle_of(n, range(1, n));
  return PermGroup(n, {cycle_of(n, {0, 1, 2}), long_cycle});
}

PermGroup dihedral(std::size_t n) {
  if (n == 0) throw PreconditionError("dihedral group of order 0");
  if (n == 1) return cyclic(2);
  if (n == 2) return klein_four();
  std::vector<std::vector<Point>> reflection;
  for (std::size_t i = 1; i < n - i; ++i) reflection.push_back({static_cast<Point>(i), static_cast<Point>(n - i)});
  return PermGroup(n, {cycle_of(n, range(0, n)), Permutation::from_cycles(n, reflection)});
}

PermGroup klein_four() {
  return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup quaternion() { return matrix_group_2(3, {{0, -1, 1, 0}, {1, 1, 1, -1}}); }

PermGroup special_linear_2(std::size_t p) {
  if (p < 2) throw PreconditionError("SL(2, p) needs a prime p");
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionError("SL(2, p) needs a prime p");
  return matrix_group_2(p, {{1, 1, 0, 1}, {0, -1, 1, 0}});
}

PermGroup psl27() {
  return PermGroup(7, {cycle_of(7, range(0, 7)), Permutation::from_cycles(7, {{1, 2}, {3, 6}})});
}

}  // namespace named

}  // namespace classlab
