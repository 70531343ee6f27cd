#include "classlab/realization.hpp"

#include <numeric>

#include "classlab/config.hpp"
#include "classlab/errors.hpp"
#include "classlab/structure.hpp"

namespace classlab {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > UINT64_MAX / base) throw CapExceeded("group order overflows 64 bits");
    out *= base;
  }
  return out;
}

PermGroup point_stabilizer(const PermGroup& g, Point p) {
  std::vector<Point> priority{p};
  StabChain chain(g.degree(), g.generators(), priority, 1);
  if (chain.levels().size() < 2) return PermGroup::trivial(g.degree());
  return PermGroup(g.degree(), chain.levels()[1].gens);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Size of the smallest block containing 0 and b.
std::size_t minimal_block_size(const PermGroup& g, Point b) {
  std::size_t d = g.degree();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<Point, Point>> queue{{0, b}};
  parent[b] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [x, y] = queue[k];
    for (const auto& s : g.generators()) {
      std::size_t rx = find_root(parent, s[x]), ry = find_root(parent, s[y]);
      if (rx == ry) continue;
      parent[ry] = rx;
      queue.emplace_back(s[x], s[y]);
    }
  }
  std::size_t root = find_root(parent, 0), size = 0;
  for (std::size_t x = 0; x < d; ++x) size += find_root(parent, x) == root;
  return size;
}

}  // namespace

bool is_primitive(const PermGroup& g) {
  std::size_t d = g.degree();
  if (d <= 1) return true;
  if (g.chain().levels().empty() || g.chain().levels()[0].base != 0 || g.chain().levels()[0].orbit.size() != d) {
    std::vector<bool> seen(d, false);
    std::vector<Point> orbit{0};
    seen[0] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : g.generators())
        if (!seen[s[orbit[k]]]) {
          seen[s[orbit[k]]] = true;
          orbit.push_back(s[orbit[k]]);
        }
    if (orbit.size() != d) return false;
  }
  for (Point b = 1; b < d; ++b)
    if (minimal_block_size(g, b) != d) return false;
  return true;
}

PermGroup maximal_selfnormalizing(const PermGroup& g0) {
  if (is_abelian(g0)) throw PreconditionError("the group is abelian");
  if (!is_simple(g0)) throw PreconditionError("the group is not simple");
  PermGroup h0;
  if (is_primitive(g0)) {
    h0 = point_stabilizer(g0, 0);
  } else {
    auto subs = subgroups(g0, limits().subgroup_limit);
    std::uint64_t best = 0;
    for (const auto& s : subs)
      if (s.order() < g0.order() && s.order() > best) {
        best = s.order();
        h0 = s;
      }
  }
  if (!is_primitive(coset_action(g0, h0).image()))
    throw FalsificationAlarm("subgroup " + h0.generator_string() + " is not maximal");
  if (normalizer(g0, h0).order() != h0.order())
    throw FalsificationAlarm("maximal subgroup " + h0.generator_string() + " is not self-normalizing");
  return h0;
}

RealizationCertificate build_realization(const PermGroup& g, const PermGroup& g0, const PermGroup& gn,
                                         const GroupHom& embed, bool brute_check) {
  if (!(embed.source() == g) || !(embed.target() == gn))
    throw PreconditionError("the embedding must map the target group into the top group");
  if (!embed.injective()) throw PreconditionError("the embedding is not injective");
  PermGroup h0 = maximal_selfnormalizing(g0);
  PermGroup sub = embed.image();
  Wreath w = wreath_by_cosets(g0, gn, sub);
  const std::size_t n = w.coordinates();
  const std::size_t degree = w.gamma.degree();

  std::vector<Permutation> h_gens;
  for (const auto& s : h0.generators()) h_gens.push_back(w.base.embed(0, s));
  for (std::size_t c = 1; c < n; ++c)
    for (const auto& s : g0.generators()) h_gens.push_back(w.base.embed(c, s));
  PermGroup h(degree, h_gens);
  std::vector<Permutation> n_gens = h_gens;
  for (const auto& s : sub.generators()) n_gens.push_back(w.lift(s));
  PermGroup norm(degree, n_gens);

  RealizationChecks checks;
  for (const auto& x : n_gens)
    for (const auto& s : h_gens)
      if (!h.contains(x * s * x.inverse())) throw FalsificationAlarm("structural normalizer does not normalize H");
  checks.structural = true;

  std::uint64_t g0_power = checked_power(g0.order(), n - 1);
  if (w.gamma.order() != g0_power * g0.order() * gn.order() || h.order() != h0.order() * g0_power ||
      norm.order() != h.order() * g.order())
    throw FalsificationAlarm("order arithmetic fails: |Γ| = " + std::to_string(w.gamma.order()) + ", |H| = " +
                             std::to_string(h.order()) + ", |N(H)| = " + std::to_string(norm.order()));
  checks.order_arithmetic = true;

  if (brute_check) {
    if (w.gamma.order() > limits().brute_cap)
      throw CapExceeded("brute-force normalizer over " + std::to_string(w.gamma.order()) + " elements exceeds the cap " +
                        std::to_string(limits().brute_cap));
    if (!(normalizer_bits(w.gamma, h) == element_bits(w.gamma, norm)))
      throw FalsificationAlarm("brute-force normalizer differs from the structural one; H = " + h.generator_string());
    checks.brute = true;
  }

  Quotient q = quotient(norm, h);
  auto iso = isomorphic(q.group, g);
  if (!iso)
    throw FalsificationAlarm("N(H)/H is not isomorphic to the target; N(H) = " + norm.generator_string() +
                             ", H = " + h.generator_string());
  checks.isomorphism = true;

  PermGroup gamma = w.gamma;
  return RealizationCertificate{g, g0, h0, gn, embed, n, std::move(w), std::move(gamma), std::move(h), std::move(norm),
                                std::move(*iso), checks};
}

std::optional<GroupHom> find_embedding(const PermGroup& g, const PermGroup& gn) {
  if (g.is_trivial())
    return GroupHom(g, gn, std::vector<Permutation>(g.generators().size(), gn.identity()));
  if (gn.order() % g.order() != 0) return std::nullopt;
  for (const auto& s : subgroups(gn, limits().subgroup_limit)) {
    if (s.order() != g.order()) continue;
    if (auto iso = isomorphic(g, s)) return compose(GroupHom::inclusion(s, gn), iso->forward);
  }
  return std::nullopt;
}

GroupHom regular_alternating_embedding(const PermGroup& g, std::size_t degree) {
  const auto& table = g.elements();
  const std::size_t m = table.size();
  std::vector<std::vector<Point>> actions;
  bool odd = false;
  for (const auto& s : g.generators()) {
    auto si = *table.index_of(s);
    std::vector<Point> images(m);
    for (std::uint32_t x = 0; x < m; ++x) images[x] = table.mul(si, x);
    odd = odd || !Permutation(images).is_even();
    actions.push_back(std::move(images));
  }
  std::size_t needed = odd ? 2 * m : m;
  if (degree < needed)
    throw PreconditionError("the regular action needs " + std::to_string(needed) + " points, got " +
                            std::to_string(degree));
  std::vector<Permutation> images;
  for (const auto& a : actions) {
    std::vector<Point> p(degree);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t x = 0; x < m; ++x) {
      p[x] = a[x];
      if (odd) p[m + x] = static_cast<Point>(m + a[x]);
    }
    images.emplace_back(std::move(p));
  }
  return GroupHom(g, named::alternating(degree), std::move(images));
}

RealizationCertificate realize(const PermGroup& g, const RealizeOptions& options) {
  PermGroup g0 = options.g0 ? *options.g0 : named::alternating(5);
  if (options.alt) {
    GroupHom embed = regular_alternating_embedding(g, *options.alt);
    return build_realization(g, g0, embed.target(), embed, options.brute_check);
  }
  if (options.top) {
    auto embed = find_embedding(g, *options.top);
    if (!embed) throw PreconditionError("no subgroup of the top group is isomorphic to the target");
    return build_realization(g, g0, *options.top, *embed, options.brute_check);
  }
  return build_realization(g, g0, g, GroupHom::identity(g), options.brute_check);
}

std::vector<SearchHit> brute_search(const PermGroup& gamma, const PermGroup& g, std::size_t limit) {
  std::vector<SearchHit> hits;
  for (const auto& h : subgroups(gamma, limit)) {
    if ((gamma.order() / h.order()) % g.order() != 0) continue;
    PermGroup norm = normalizer(gamma, h);
    if (norm.order() != h.order() * g.order()) continue;
    if (auto iso = isomorphic(quotient(norm, h).group, g)) hits.push_back(SearchHit{h, norm, std::move(*iso)});
  }
  return hits;
}

PermGroup split_check(const PermGroup& g, const PermGroup& n) {
  auto k = complement_exists(g, n);
  if (!k)
    throw FalsificationAlarm("no complement found; G = " + g.generator_string() + ", N = " + n.generator_string());
  return *k;
}

DiagonalSubgroup diagonal_subgroup(const PermGroup& g0, std::size_t n,
                                   const std::vector<std::optional<GroupHom>>& phis) {
  if (phis.size() != n) throw PreconditionError("expected one coordinate map per coordinate");
  DirectPower dp = direct_power(g0, n);
  DiagonalSubgroup out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!phis[i]) continue;
    if (!(phis[i]->source() == g0) || !(phis[i]->target() == g0) || !phis[i]->injective())
      throw PreconditionError("coordinate map " + std::to_string(i) + " is not an automorphism");
    out.support.push_back(i);
  }
  if (out.support.empty()) throw PreconditionError("every coordinate map is absent");
  std::vector<Permutation> gens;
  for (const auto& s : g0.generators()) {
    Permutation x(dp.total_degree);
    for (auto i : out.support) x = x * dp.embed(i, phis[i]->apply(s));
    gens.push_back(std::move(x));
  }
  out.group = PermGroup(dp.total_degree, std::move(gens));
  return out;
}

std::optional<std::vector<std::optional<GroupHom>>> recover_diagonal(const PermGroup& g0, std::size_t n,
                                                                     const PermGroup& s) {
  if (s.order() != g0.order()) return std::nullopt;
  DirectPower dp = direct_power(g0, n);
  std::vector<std::vector<Permutation>> projected(n);
  std::optional<std::size_t> reference;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : s.generators()) projected[i].push_back(dp.project(i, x));
    bool nontrivial = std::any_of(projected[i].begin(), projected[i].end(), [](const Permutation& p) { return !p.is_identity(); });
    if (nontrivial && !reference) reference = i;
  }
  if (!reference) return std::nullopt;
  PermGroup source(g0.degree(), projected[*reference]);
  if (!(source == g0)) return std::nullopt;
  std::vector<std::optional<GroupHom>> phis(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool trivial = std::all_of(projected[i].begin(), projected[i].end(), [](const Permutation& p) { return p.is_identity(); });
    if (trivial) continue;
    try {
      phis[i] = GroupHom(source, g0, projected[i]);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  }
  try {
    if (!(diagonal_subgroup(g0, n, phis).group == s)) return std::nullopt;
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  return phis;
}

std::vector<std::size_t> factor_permutation_check(const PermGroup& g0, std::size_t n, const GroupHom& theta) {
  DirectPower dp = direct_power(g0, n);
  if (!(theta.source() == dp.group) || !(theta.target() == dp.group) || !theta.injective())
    throw PreconditionError("the map is not an automorphism of the direct power");
  std::vector<PermGroup> factors;
  for (std::size_t j = 0; j < n; ++j) factors.push_back(dp.embed_group(j, g0));
  std::vector<std::size_t> out;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Permutation> images;
    for (const auto& s : g0.generators()) images.push_back(theta.apply(dp.embed(i, s)));
    PermGroup image(dp.total_degree, std::move(images));
    std::size_t j = 0;
    while (j < n && !(image == factors[j])) ++j;
    if (j == n || used[j])
      throw FalsificationAlarm("factor " + std::to_string(i) + " is not mapped onto a factor: " + image.generator_string());
    used[j] = true;
    out.push_back(j);
  }
  return out;
}

GroupHom conjugation_map(const PermGroup& g, const Permutation& c) {
  std::vector<Permutation> images;
  for (const auto& s : g.generators()) images.push_back(c * s * c.inverse());
  return GroupHom(g, g, std::move(images));
}

}  // namespace classlab
