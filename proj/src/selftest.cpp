#include "classlab/selftest.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "classlab/classes.hpp"
#include "classlab/config.hpp"
#include "classlab/constructions.hpp"
#include "classlab/errors.hpp"
#include "classlab/isomorphism.hpp"
#include "classlab/realization.hpp"
#include "classlab/structure.hpp"

namespace classlab {

void Recorder::expect(bool ok, const std::string& witness) {
  ++cases_;
  if (ok) return;
  ++failures_;
  if (witnesses_.size() < 5) witnesses_.push_back(witness);
}

namespace {

using Run = std::function<void(const Catalog&, Recorder&)>;

bool iso(const PermGroup& a, const PermGroup& b) { return a.order() == b.order() && isomorphic(a, b).has_value(); }

std::string describe(const PermGroup& g) {
  std::string name = known_name(g);
  return name.empty() ? "group of order " + std::to_string(g.order()) + " <" + g.generator_string() + ">" : name;
}

std::string flag(bool b) { return b ? "true" : "false"; }

Permutation random_permutation(std::size_t degree, std::mt19937& rng) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

PermGroup conjugated(const PermGroup& g, const Permutation& c) {
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(c * s * c.inverse());
  return PermGroup(g.degree(), gens);
}

// ---------------------------------------------------------------------------
// perm_core

void named_orders(const Catalog&, Recorder& r) {
  const std::vector<std::pair<PermGroup, std::uint64_t>> cases{
      {named::symmetric(5), 120}, {named::alternating(6), 360}, {named::dihedral(6), 12},
      {named::quaternion(), 8},   {named::special_linear_2(3), 24}, {named::special_linear_2(5), 120},
      {named::psl27(), 168},      {named::klein_four(), 4},     {named::cyclic(32), 32}};
  for (const auto& [g, order] : cases)
    r.expect(g.order() == order, describe(g) + " has order " + std::to_string(g.order()));
}

void iso_equivalence(const Catalog& u, Recorder& r) {
  std::mt19937 rng(7);
  for (const auto& e : u.entries) {
    const auto& g = e.group;
    r.expect(iso(g, g), e.name + " is not isomorphic to itself");
    auto h1 = conjugated(g, random_permutation(g.degree(), rng));
    auto h2 = conjugated(h1, random_permutation(g.degree(), rng));
    r.expect(iso(g, h1) && iso(h1, g), e.name + ": isomorphism is not symmetric on a conjugate copy");
    r.expect(!(iso(g, h1) && iso(h1, h2)) || iso(g, h2), e.name + ": isomorphism is not transitive");
  }
}

void homomorphism_kernels(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    if (e.group.order() > 120) continue;
    const auto& lattice = normal_subgroups(e.group);
    for (std::size_t i = 1; i < lattice.size(); ++i) {
      Quotient q = quotient(e.group, lattice.members[i]);
      r.expect(q.projection.kernel() == lattice.members[i] && q.group.order() * lattice.order(i) == e.group.order(),
               e.name + ": projection kernel differs from " + lattice.members[i].generator_string());
    }
  }
}

void orders_match_enumeration(const Catalog& u, Recorder& r) {
  auto c4 = named::cyclic(4);
  PermGroup c2_in_c4(4, {c4.generators()[0] * c4.generators()[0]});
  std::vector<PermGroup> groups{wreath_by_cosets(named::symmetric(3), c4, c2_in_c4).gamma,
                                direct_product(named::alternating(5), named::cyclic(2)), named::psl27()};
  for (const auto& e : u.entries) groups.push_back(e.group);
  for (const auto& g : groups) {
    if (g.order() > 2000) continue;
    std::vector<Permutation> seen{g.identity()};
    std::set<Permutation> found{g.identity()};
    for (std::size_t k = 0; k < seen.size(); ++k)
      for (const auto& s : g.generators()) {
        Permutation y = s * seen[k];
        if (found.insert(y).second) seen.push_back(y);
      }
    r.expect(found.size() == g.order() && g.elements().size() == g.order(),
             describe(g) + ": chain order " + std::to_string(g.order()) + ", closure " + std::to_string(found.size()));
  }
}

void wreath_top_maps(const Catalog&, Recorder& r) {
  struct Case {
    PermGroup g0, gn, sub;
  };
  auto c4 = named::cyclic(4);
  const std::vector<Case> cases{{named::symmetric(3), c4, PermGroup(4, {c4.generators()[0] * c4.generators()[0]})},
                                {named::cyclic(3), named::symmetric(3), PermGroup(3, {parse_cycles("(1 2)", 3)})},
                                {named::alternating(5), named::cyclic(2), PermGroup::trivial(2)},
                                {named::cyclic(2), named::symmetric(4), named::alternating(4)}};
  for (const auto& c : cases) {
    Wreath w = wreath_by_cosets(c.g0, c.gn, c.sub);
    r.expect(w.top.kernel() == w.base.group, describe(c.g0) + " by " + describe(c.gn) + ": kernel of the top map");
    r.expect(w.top.surjective(), describe(c.g0) + " by " + describe(c.gn) + ": top map is not onto");
  }
}

void coset_action_cores(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    const auto& g = e.group;
    if (g.order() > 60) continue;
    const auto& table = g.elements();
    auto subs = subgroups(g, limits().subgroup_limit);
    for (std::size_t i = 0; i < subs.size(); i += std::max<std::size_t>(1, subs.size() / 12)) {
      Bits core = element_bits(g, subs[i]);
      for (std::uint32_t x = 0; x < table.size(); ++x) {
        Permutation p = table.element(x);
        std::vector<Permutation> gens;
        for (const auto& s : subs[i].generators()) gens.push_back(p * s * p.inverse());
        core = core & element_bits(g, PermGroup(g.degree(), gens));
      }
      r.expect(coset_action(g, subs[i]).kernel() == group_from_bits(g, core),
               e.name + ": coset action kernel differs from the core of " + subs[i].generator_string());
    }
  }
}

void homomorphisms_multiply(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    const auto& g = e.group;
    if (g.order() > 60 || g.is_trivial()) continue;
    const auto& lattice = normal_subgroups(g);
    auto maximal = lattice.maximal_indices();
    GroupHom f = quotient(g, lattice.members[maximal.front()]).projection;
    const auto& table = g.elements();
    std::vector<Permutation> images;
    for (std::uint32_t x = 0; x < table.size(); ++x) images.push_back(f.apply(table.element(x)));
    bool ok = true;
    for (std::uint32_t x = 0; x < table.size() && ok; ++x)
      for (std::uint32_t y = 0; y < table.size() && ok; ++y)
        ok = images[table.mul(x, y)] == images[x] * images[y];
    r.expect(ok, e.name + ": projection is not multiplicative");
  }
}

// ---------------------------------------------------------------------------
// structure

void normal_completeness(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    if (e.group.order() > 200) continue;
    const auto& lattice = normal_subgroups(e.group);
    std::size_t normal_count = 0;
    for (const auto& s : subgroups(e.group, limits().subgroup_limit)) {
      if (!is_normal(s, e.group)) continue;
      ++normal_count;
      r.expect(lattice.find(element_bits(e.group, s)) < lattice.size(),
               e.name + ": normal subgroup " + s.generator_string() + " missing from the lattice");
    }
    r.expect(normal_count == lattice.size(), e.name + ": lattice has " + std::to_string(lattice.size()) +
                                                 " members, brute force finds " + std::to_string(normal_count));
  }
}

void radical_properties(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    const auto& g = e.group;
    if (g.is_trivial()) continue;
    PermGroup rad = baer_radical(g);
    r.expect(is_normal(rad, g), e.name + ": radical is not normal");
    if (is_simple(g)) r.expect(rad.is_trivial(), e.name + ": simple group with nontrivial radical");
    auto f = radical_factorization(g);
    const auto& lattice = normal_subgroups(g);
    std::size_t meet = lattice.whole();
    std::uint64_t product = 1;
    for (std::size_t k = 0; k < f.chosen.size(); ++k) {
      meet = lattice.meet(meet, f.chosen[k]);
      product *= f.factors[k].order();
      r.expect(is_simple(f.factors[k]), e.name + ": factor " + describe(f.factors[k]) + " is not simple");
      std::size_t rest = lattice.whole();
      for (std::size_t j = k + 1; j < f.chosen.size(); ++j) rest = lattice.meet(rest, f.chosen[j]);
      r.expect(!lattice.contains(f.chosen[k], rest), e.name + ": chosen family is redundant");
    }
    r.expect(lattice.members[meet] == rad, e.name + ": chosen maximal normal subgroups do not meet in the radical");
    r.expect(product * rad.order() == g.order(), e.name + ": factor orders do not multiply to |G/Rad(G)|");
  }
}

void normalizer_kernels(const Catalog& u, Recorder& r) {
  std::vector<PermGroup> parents{named::symmetric(4), direct_product(named::alternating(5), named::symmetric(3))};
  for (const auto& e : u.entries)
    if (e.group.order() >= 24 && e.group.order() <= 120) parents.push_back(e.group);
  for (const auto& g : parents) {
    auto subs = subgroups(g, limits().subgroup_limit);
    for (std::size_t i = 0; i < subs.size(); i += std::max<std::size_t>(1, subs.size() / 25))
      r.expect(normalizer_bits(g, subs[i]) == normalizer_bits_serial(g, subs[i]),
               describe(g) + ": parallel and serial normalizers differ for " + subs[i].generator_string());
  }
}

void complement_examples(const Catalog& u, Recorder& r) {
  auto s4 = named::symmetric(4);
  auto k = complement_exists(s4, named::alternating(4));
  r.expect(k && k->order() == 2, "S4 over A4 has no complement of order 2");
  auto c4 = named::cyclic(4);
  r.expect(!complement_exists(c4, PermGroup(4, {c4.generators()[0] * c4.generators()[0]})), "C4 over C2 splits");
  for (const auto& e : u.entries) {
    auto whole = complement_exists(e.group, PermGroup::trivial(e.group.degree()));
    r.expect(whole && *whole == e.group, e.name + ": complement of the trivial subgroup is not the group");
  }
}

void simple_quotient_lemma(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    const auto& g = e.group;
    if (g.is_trivial()) continue;
    auto tops = simple_quotients(g);
    const auto& lattice = normal_subgroups(g);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const PermGroup& n = lattice.members[i];
      auto upper = simple_quotients(lattice_quotient(g, i));
      const auto& inner = normal_subgroups(n);
      for (const auto& s : tops) {
        bool found = std::any_of(upper.begin(), upper.end(), [&](const PermGroup& q) { return iso(q, s); });
        for (std::size_t j = 0; j < inner.size() && !found; ++j)
          if (inner.order(j) * s.order() == n.order()) found = iso(lattice_quotient(n, j), s);
        r.expect(found, e.name + ": simple quotient " + describe(s) + " is neither a quotient of N = <" +
                            n.generator_string() + "> nor of G/N");
      }
    }
  }
}

// U ∩ V = 1 and KU = KV = G force G/K to be abelian.
void common_supplements(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    const auto& g = e.group;
    const auto& lattice = normal_subgroups(g);
    const std::size_t m = lattice.size();
    auto product_is_whole = [&](std::size_t a, std::size_t b) {
      return lattice.order(a) * lattice.order(b) == g.order() * lattice.order(lattice.meet(a, b));
    };
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        if (lattice.meet(a, b) != 0) continue;
        for (std::size_t k = 0; k < m; ++k) {
          if (!product_is_whole(k, a) || !product_is_whole(k, b)) continue;
          r.expect(is_abelian(lattice_quotient(g, k)),
                   e.name + ": U = <" + lattice.members[a].generator_string() + ">, V = <" +
                       lattice.members[b].generator_string() + ">, K = <" + lattice.members[k].generator_string() +
                       "> with non-abelian G/K");
        }
      }
  }
}

// ---------------------------------------------------------------------------
// classes

void union_duals(const Catalog&, Recorder& r) {
  auto c6 = named::cyclic(6);
  auto c1 = cls::finite_set({"1", "C2"});
  auto c2 = cls::finite_set({"1", "C3"});
  bool in_union = member(cls::unite(cls::dual(c1), cls::dual(c2)), c6);
  bool in_meet_dual = member(cls::dual(cls::intersect(c1, c2)), c6);
  r.expect(!in_union, "C6 lies in the union of the duals");
  r.expect(in_meet_dual, "C6 is not in the dual of the intersection");
  r.expect(member(cls::dual(cls::intersect(c1, c2)), c6) == member(cls::dual(cls::trivial()), c6),
           "the dual of the intersection differs from the dual of the trivial class on C6");
}

void c4_chain(const Catalog& u, Recorder& r) {
  auto c = cls::finite_set({"1", "C4"});
  auto c4 = named::cyclic(4);
  const bool expected[4] = {true, false, false, true};
  for (std::uint64_t k = 0; k < 4; ++k)
    r.expect(dual_chain_member(c, c4, k) == expected[k],
             "C4 at depth " + std::to_string(k) + " is " + flag(dual_chain_member(c, c4, k)));
  for (const auto& e : u.entries) {
    r.expect(dual_chain_member(c, e.group, 2) == e.group.is_trivial(), e.name + " at depth 2");
    r.expect(dual_chain_member(c, e.group, 3), e.name + " is missing at depth 3");
  }
}

void hat_cyclic(const Catalog& u, Recorder& r) {
  auto hc = cls::hat(cls::cyclic());
  for (const auto& e : u.entries) {
    bool solvable = is_solvable(e.group);
    r.expect(member(hc, e.group) == solvable, e.name + ": series closure of cyclic says " + flag(!solvable));
    auto series = hat_series(*cls::cyclic(), e.group);
    r.expect(series.has_value() == solvable, e.name + ": series search disagrees with membership");
    if (!series) continue;
    bool ok = series->front().is_trivial() && series->back() == e.group;
    for (std::size_t i = 0; ok && i + 1 < series->size(); ++i)
      ok = is_normal((*series)[i], (*series)[i + 1]) && is_cyclic(quotient((*series)[i + 1], (*series)[i]).group);
    r.expect(ok, e.name + ": returned series has a non-cyclic factor");
  }
}

void dual_equalities(const Catalog& u, Recorder& r) {
  auto fnr = cls::fnr();
  for (const auto& e : u.entries) {
    bool in = member(fnr, e.group);
    for (const auto& c : {cls::cyclic(), cls::abelian(), cls::nilpotent()})
      r.expect(member(cls::dual(c), e.group) == in, e.name + ": dual(" + c->to_string() + ") differs from fnr");
    bool by_primes = true;
    for (auto p : prime_divisors(e.group.order())) by_primes = by_primes && member(cls::dual(cls::p_group(p)), e.group);
    r.expect(by_primes == in, e.name + ": intersection of duals of p-groups differs from fnr");
  }
}

void bidual_agreement(const Catalog& u, Recorder& r) {
  for (const auto& c : {cls::abelian(), cls::solvable(), cls::simple(), cls::finite_set({"C4"}), cls::finite_set({"1", "C4"})})
    for (const auto& e : u.entries) {
      if (e.group.is_trivial()) continue;
      bool by_max = bidual_member_maxnormal(*c, e.group);
      bool by_rad = bidual_member_radical(*c, e.group);
      bool twice = dual_chain_member(c, e.group, 2);
      r.expect(by_max == by_rad && by_rad == twice, c->to_string() + " on " + e.name + ": maximal-normal " +
                                                        flag(by_max) + ", radical " + flag(by_rad) + ", double dual " +
                                                        flag(twice));
    }
}

void dual_period(const Catalog& u, Recorder& r) {
  for (const auto& c : {cls::solvable(), cls::abelian(), cls::finite_set({"1", "C4"})}) {
    bool c1 = audit_property(c, u, Property::C1).holds;
    for (const auto& e : u.entries) {
      bool d[6];
      for (std::uint64_t k = 1; k <= 5; ++k) d[k] = dual_chain_member(c, e.group, k);
      std::string where = c->to_string() + " on " + e.name;
      r.expect(!d[1] || d[3], where + ": depth 1 not contained in depth 3");
      r.expect(d[2] == d[4], where + ": depths 2 and 4 differ");
      r.expect(d[3] == d[5], where + ": depths 3 and 5 differ");
      if (c1) r.expect(d[1] == d[3], where + ": depths 1 and 3 differ for a quotient-closed class");
    }
  }
}

void taxonomy(const Catalog& u, Recorder& r) {
  struct Row {
    ClassPtr c;
    bool pre_variety, formation, extensive_variety;
  };
  const std::vector<Row> rows{{cls::solvable(), true, true, true}, {cls::p_group(2), true, true, true},
                              {cls::all(), true, true, true},      {cls::trivial(), true, true, true},
                              {cls::abelian(), true, true, false}, {cls::nilpotent(), true, true, false},
                              {cls::cyclic(), true, false, false}};
  for (const auto& row : rows) {
    auto k = classify(row.c, u);
    std::string name = row.c->to_string();
    r.expect(k.pre_variety == row.pre_variety, name + ": pre-variety is " + flag(k.pre_variety));
    r.expect(k.formation == row.formation, name + ": formation is " + flag(k.formation));
    r.expect(k.extensive_variety == row.extensive_variety, name + ": extensive variety is " + flag(k.extensive_variety));
    r.expect(k.extensive_formation == row.extensive_variety, name + ": extensive formation is " + flag(k.extensive_formation));
    for (const auto& a : k.audits)
      r.expect(a.holds || !a.counterexamples.empty(), name + ": " + to_string(a.property) + " fails without a witness");
  }
  auto cyc = audit_property(cls::cyclic(), u, Property::C3);
  r.expect(!cyc.counterexamples.empty() && cyc.counterexamples.front().group == "V4", "cyclic C3 witness is not V4");
  auto ab = audit_property(cls::abelian(), u, Property::C2);
  r.expect(!ab.counterexamples.empty() && ab.counterexamples.front().group == "S3", "abelian C2 witness is not S3");
}

void fnr_witnesses(const Catalog& u, Recorder& r) {
  auto fnr = cls::fnr();
  r.expect(member(fnr, named::alternating(5)), "A5 is not in fnr");
  r.expect(member(fnr, named::special_linear_2(5)), "SL(2,5) is not in fnr");
  for (const auto& g : {named::symmetric(5), named::alternating(4), named::dihedral(4)})
    r.expect(!member(fnr, g), describe(g) + " is in fnr");
  for (const auto& e : u.entries)
    if (!e.group.is_trivial() && is_solvable(e.group)) r.expect(!member(fnr, e.group), e.name + " is solvable and in fnr");
  auto sl25 = named::special_linear_2(5);
  auto z = center(sl25);
  r.expect(z.order() == 2 && is_normal(z, sl25) && !member(fnr, z), "the centre of SL(2,5) does not witness failure");
}

void fnr_properties(const Catalog& u, Recorder& r) {
  auto fnr = cls::fnr();
  auto bidual = cls::dual(fnr);
  for (const auto& e : u.entries) {
    bool in = member(fnr, e.group);
    if (!e.group.is_trivial())
      r.expect(in == !has_prime_order_quotient(e.group), e.name + ": fnr disagrees with the prime-quotient test");
    bool prime_only = true;
    for (const auto& q : simple_quotients(e.group)) prime_only = prime_only && is_prime(q.order());
    r.expect(member(bidual, e.group) == prime_only, e.name + ": dual of fnr disagrees with prime simple quotients");
  }
}

void dual_identities(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    r.expect(member(cls::dual(cls::all()), e.group) == e.group.is_trivial(), e.name + ": dual(all)");
    r.expect(member(cls::dual(cls::trivial()), e.group), e.name + ": dual(trivial)");
  }
}

std::vector<ClassPtr> sampled_classes() {
  return {cls::cyclic(),  cls::abelian(),     cls::nilpotent(),          cls::solvable(),
          cls::simple(),  cls::p_group(2),    cls::p_group(3),           cls::pi({2, 3}),
          cls::order_at_most(12), cls::alt_ge(5), cls::finite_set({"1", "C4"}), cls::finite_set({"C2", "S3"})};
}

void dual_laws(const Catalog& u, Recorder& r) {
  auto classes = sampled_classes();
  for (const auto& e : u.entries)
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        bool lhs = member(cls::dual(cls::unite(classes[i], classes[j])), e.group);
        bool rhs = member(cls::dual(classes[i]), e.group) && member(cls::dual(classes[j]), e.group);
        r.expect(lhs == rhs, e.name + ": dual of union(" + classes[i]->to_string() + ", " + classes[j]->to_string() + ")");
      }
  std::vector<ClassPtr> chain{cls::cyclic(), cls::abelian(), cls::nilpotent(), cls::solvable()};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    for (const auto& e : u.entries) {
      r.expect(!member(chain[i], e.group) || member(chain[i + 1], e.group),
               e.name + ": " + chain[i]->to_string() + " not inside " + chain[i + 1]->to_string());
      r.expect(!member(cls::dual(chain[i + 1]), e.group) || member(cls::dual(chain[i]), e.group),
               e.name + ": dual(" + chain[i + 1]->to_string() + ") not inside dual(" + chain[i]->to_string() + ")");
    }
}

void dual_transmission(const Catalog& u, Recorder& r) {
  for (const auto& c : sampled_classes()) {
    auto d = cls::dual(c);
    r.expect(audit_property(d, u, Property::C1).holds, "dual(" + c->to_string() + ") is not quotient-closed");
    if (audit_property(c, u, Property::C1).holds)
      r.expect(audit_property(d, u, Property::C2).holds, "dual(" + c->to_string() + ") is not extension-closed");
    for (const auto& e : u.entries)
      r.expect(member(d, e.group) == member(cls::dual(cls::hat(c)), e.group),
               e.name + ": dual(" + c->to_string() + ") differs from the dual of its series closure");
  }
}

void hat_transmission(const Catalog& u, Recorder& r) {
  for (const auto& c : {cls::cyclic(), cls::abelian(), cls::p_group(2)}) {
    auto h = cls::hat(c);
    std::string name = h->to_string();
    bool c0 = audit_property(c, u, Property::C0).holds;
    bool c1 = audit_property(c, u, Property::C1).holds;
    if (c0) r.expect(audit_property(h, u, Property::C0).holds, name + " is not subgroup-closed");
    if (c1) r.expect(audit_property(h, u, Property::C1).holds, name + " is not quotient-closed");
    r.expect(audit_property(h, u, Property::C2).holds, name + " is not extension-closed");
    if (c0) r.expect(audit_property(h, u, Property::C3).holds, name + " fails the intersection property");
  }
}

void hat_fixpoints(const Catalog& u, Recorder& r) {
  for (std::uint64_t p : {2, 3, 5})
    for (const auto& e : u.entries)
      r.expect(member(cls::hat(cls::p_group(p)), e.group) == member(cls::p_group(p), e.group),
               e.name + ": series closure of p(" + std::to_string(p) + ")");
  for (const auto& c : {cls::simple(), cls::unite(cls::simple(), cls::cyclic())})
    for (const auto& e : u.entries)
      r.expect(member(cls::hat(c), e.group), e.name + " is missing from hat(" + c->to_string() + ")");
}

void iso_closure(const Catalog& u, Recorder& r) {
  std::mt19937 rng(5);
  auto classes = sampled_classes();
  classes.push_back(cls::fnr());
  classes.push_back(cls::hat(cls::cyclic()));
  for (const auto& e : u.entries) {
    if (e.group.order() > 60) continue;
    PermGroup relabelled = conjugated(e.group, random_permutation(e.group.degree(), rng));
    std::vector<PermGroup> copies{relabelled};
    if (e.group.order() <= 24) copies.push_back(regular_alternating_embedding(e.group, 2 * e.group.order()).image());
    for (const auto& c : classes)
      for (const auto& copy : copies)
        r.expect(member(c, copy) == member(c, e.group),
                 e.name + ": membership in " + c->to_string() + " changes under isomorphism");
  }
}

void class_builtins(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    const auto& g = e.group;
    bool pi23 = true;
    for (auto p : prime_divisors(g.order())) pi23 = pi23 && (p == 2 || p == 3);
    r.expect(member(cls::pi({2, 3}), g) == pi23, e.name + ": pi(2,3)");
    r.expect(member(cls::order_at_most(24), g) == (g.order() <= 24), e.name + ": le(24)");
    bool alt = g.is_trivial() || (iso(g, named::alternating(5))) || (iso(g, named::alternating(6)));
    r.expect(member(cls::alt_ge(5), g) == alt, e.name + ": altge(5)");
  }
}

// ---------------------------------------------------------------------------
// realization

void realize_small(const Catalog& u, Recorder& r) {
  for (const auto& e : u.entries) {
    if (e.group.order() > 12) continue;
    auto cert = realize(e.group);
    r.expect(cert.checks.brute && cert.checks.structural && cert.checks.order_arithmetic && cert.checks.isomorphism,
             e.name + ": realization checks incomplete");
    r.expect(cert.normalizer.order() == cert.h.order() * e.group.order(), e.name + ": normalizer index");
    r.expect(iso(quotient(cert.gamma, cert.wreath.base.group).group, cert.gn), e.name + ": Γ/G0^N is not the top group");
    auto allowed = simple_quotients(cert.gn);
    allowed.push_back(cert.g0);
    for (const auto& q : simple_quotients(cert.gamma))
      r.expect(std::any_of(allowed.begin(), allowed.end(), [&](const PermGroup& a) { return iso(a, q); }),
               e.name + ": Γ has an unexpected simple quotient " + describe(q));
  }
}

void realize_two_coordinates(const Catalog&, Recorder& r) {
  RealizeOptions options;
  options.top = named::cyclic(4);
  auto cert = realize(named::cyclic(2), options);
  r.expect(cert.n == 2 && cert.gamma.order() == 14400 && cert.h.order() == 720, "unexpected wreath shape");
  r.expect(cert.checks.brute, "brute-force normalizer did not run");
  r.expect(iso(quotient(cert.gamma, cert.wreath.base.group).group, named::cyclic(4)), "Γ/G0^N is not C4");
}

void realize_examples(const Catalog&, Recorder& r) {
  r.expect(realize(named::symmetric(3)).gamma.order() == 360, "A5 × S3 has the wrong order");
  r.expect(realize(named::quaternion()).gamma.order() == 480, "A5 × Q8 has the wrong order");
  auto t = realize(PermGroup::trivial());
  r.expect(t.gamma.order() == 60 && t.normalizer == t.h, "trivial target");
  r.expect(maximal_selfnormalizing(named::psl27()).order() == 24, "PSL(2,7) point stabilizer");
  auto s4 = brute_search(named::symmetric(4), named::cyclic(2), limits().subgroup_limit);
  PermGroup c4(4, {parse_cycles("(1 2 3 4)", 4)});
  r.expect(std::any_of(s4.begin(), s4.end(), [&](const SearchHit& h) { return h.h == c4 && h.normalizer.order() == 8; }),
           "S4 search misses <(1 2 3 4)>");
  auto a5 = named::alternating(5);
  auto hits = brute_search(a5, a5, limits().subgroup_limit);
  r.expect(hits.size() == 1 && hits[0].h.is_trivial(), "A5 search");
}

void no_abelian_simple_quotient(const Catalog&, Recorder& r) {
  auto a5 = named::alternating(5);
  for (std::size_t n : {5, 7}) {
    auto an = named::alternating(n);
    r.expect(!has_prime_order_quotient(wreath_by_cosets(a5, an, an).gamma),
             "A5 extended by A" + std::to_string(n) + " has a prime-order quotient");
  }
}

void splitting(const Catalog& u, Recorder& r) {
  auto a5 = named::alternating(5);
  auto g = direct_product(a5, named::cyclic(2));
  std::vector<Permutation> gens;
  for (const auto& s : a5.generators()) gens.push_back(s.embedded(g.degree(), 0));
  r.expect(split_check(g, PermGroup(g.degree(), gens)).order() == 2, "A5 × C2 over A5");
  RealizeOptions options;
  options.top = named::cyclic(4);
  options.brute_check = false;
  auto cert = realize(named::cyclic(2), options);
  r.expect(iso(split_check(cert.gamma, cert.wreath.base.group), named::cyclic(4)), "wreath over A5^2");
  auto s3 = named::symmetric(3);
  for (const auto& e : u.entries) {
    const auto& lattice = normal_subgroups(e.group);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (lattice.order(i) != 6 || !iso(lattice.members[i], s3)) continue;
      auto k = split_check(e.group, lattice.members[i]);
      r.expect(k.order() * 6 == e.group.order(), e.name + ": complement has the wrong order");
    }
  }
}

void diagonal_checks(const Catalog&, Recorder& r) {
  auto a5 = named::alternating(5);
  auto id = GroupHom::identity(a5);
  auto plain = diagonal_subgroup(a5, 2, {id, id});
  auto outer = diagonal_subgroup(a5, 2, {id, conjugation_map(a5, parse_cycles("(1 2)", 5))});
  r.expect(plain.group.order() == 60 && outer.group.order() == 60 && !(outer.group == plain.group),
           "twisted diagonal coincides with the plain one");
  r.expect(iso(outer.group, a5), "twisted diagonal is not A5");
  auto dp = direct_power(a5, 2);
  const auto& table = dp.group.elements();
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(table.size() - 1));
  for (int trial = 0; trial < 400; ++trial) {
    PermGroup s(dp.total_degree, {table.element(pick(rng)), table.element(pick(rng))});
    if (s.order() != 60 || !iso(s, a5)) continue;
    r.expect(recover_diagonal(a5, 2, s).has_value(), "order-60 subgroup <" + s.generator_string() + "> is not diagonal");
  }
}

void factor_permutations(const Catalog&, Recorder& r) {
  auto a5 = named::alternating(5);
  auto dp = direct_power(a5, 2);
  std::vector<Point> swap(10);
  for (Point x = 0; x < 5; ++x) {
    swap[x] = x + 5;
    swap[x + 5] = x;
  }
  auto theta = conjugation_map(dp.group, Permutation(swap));
  auto twist = conjugation_map(dp.group, dp.embed(0, parse_cycles("(1 2)", 5)) * dp.embed(1, parse_cycles("(3 4 5)", 5)));
  r.expect(factor_permutation_check(a5, 2, theta) == std::vector<std::size_t>{1, 0}, "swap");
  r.expect(factor_permutation_check(a5, 2, twist) == std::vector<std::size_t>{0, 1}, "coordinatewise");
  r.expect(factor_permutation_check(a5, 2, compose(theta, twist)) == std::vector<std::size_t>{1, 0}, "composite");
}

// ---------------------------------------------------------------------------
// universe

void universe_distinct(const Catalog& u, Recorder& r) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const auto& a = u.entries[i].group;
      const auto& b = u.entries[j].group;
      if (a.order() != b.order() || fingerprint(a) != fingerprint(b)) continue;
      r.expect(!isomorphic(a, b), u.entries[i].name + " and " + u.entries[j].name + " are isomorphic");
    }
  r.expect(Catalog::parse(u.serialize()).serialize() == u.serialize(), "catalog text does not round-trip");
}

// ---------------------------------------------------------------------------
// acceptance criterion 12, in process

void determinism(const Catalog& u, Recorder& r) {
  auto first = build_universe(u.spec).serialize();
  r.expect(first == build_universe(u.spec).serialize(), "universe build is not reproducible");
  auto audit_text = [&] {
    std::ostringstream out;
    for (const auto& a : classify(cls::cyclic(), u).audits)
      for (const auto& w : a.counterexamples) out << w.group << '|' << w.description << '\n';
    return out.str();
  };
  r.expect(audit_text() == audit_text(), "audit witnesses are not reproducible");
}

void ac_realization(const Catalog& u, Recorder& r) {
  realize_small(u, r);
  realize_two_coordinates(u, r);
}

void ac_quotient_lemmas(const Catalog& u, Recorder& r) {
  common_supplements(u, r);
  simple_quotient_lemma(u, r);
}

void ac_fnr(const Catalog& u, Recorder& r) { fnr_witnesses(u, r); }

}  // namespace

std::vector<Check> invariant_checks() {
  return {
      {"perm_core.named_orders", 0, named_orders},
      {"perm_core.iso_equivalence", 0, iso_equivalence},
      {"perm_core.homomorphism_kernels", 0, homomorphism_kernels},
      {"perm_core.orders_match_enumeration", 0, orders_match_enumeration},
      {"perm_core.wreath_top_maps", 0, wreath_top_maps},
      {"perm_core.coset_action_cores", 0, coset_action_cores},
      {"perm_core.homomorphisms_multiply", 0, homomorphisms_multiply},
      {"structure.normal_completeness", 0, normal_completeness},
      {"structure.radical", 0, radical_properties},
      {"structure.normalizer_kernels", 0, normalizer_kernels},
      {"structure.complements", 0, complement_examples},
      {"structure.simple_quotient_lemma", 0, simple_quotient_lemma},
      {"structure.common_supplements", 0, common_supplements},
      {"classes.builtins", 0, class_builtins},
      {"classes.iso_closure", 0, iso_closure},
      {"classes.dual_identities", 0, dual_identities},
      {"classes.dual_laws", 0, dual_laws},
      {"classes.dual_transmission", 0, dual_transmission},
      {"classes.hat_transmission", 0, hat_transmission},
      {"classes.hat_fixpoints", 0, hat_fixpoints},
      {"classes.bidual_agreement", 0, bidual_agreement},
      {"classes.dual_period", 0, dual_period},
      {"classes.fnr_properties", 0, fnr_properties},
      {"realization.examples", 0, realize_examples},
      {"realization.no_abelian_simple_quotient", 0, no_abelian_simple_quotient},
      {"realization.diagonal_subgroups", 0, diagonal_checks},
      {"realization.factor_permutation", 0, factor_permutations},
      {"universe.distinct_round_trip", 0, universe_distinct},
  };
}

std::vector<Check> acceptance_checks() {
  return {
      {"acceptance.ac01_union_duals", 1, union_duals},
      {"acceptance.ac02_c4_chain", 30, c4_chain},
      {"acceptance.ac03_hat_cyclic", 120, hat_cyclic},
      {"acceptance.ac04_dual_equalities", 120, dual_equalities},
      {"acceptance.ac05_bidual", 120, bidual_agreement},
      {"acceptance.ac06_dual_period", 180, dual_period},
      {"acceptance.ac07_taxonomy", 180, taxonomy},
      {"acceptance.ac08_realization", 300, ac_realization},
      {"acceptance.ac09_splitting", 120, splitting},
      {"acceptance.ac10_fnr", 30, ac_fnr},
      {"acceptance.ac11_quotient_lemmas", 300, ac_quotient_lemmas},
      {"acceptance.ac12_determinism_in_process", 0, determinism},
  };
}

CheckResult run_check(const Check& check, const Catalog& universe) {
  CheckResult out;
  out.name = check.name;
  Recorder recorder;
  auto start = std::chrono::steady_clock::now();
  try {
    check.run(universe, recorder);
    out.status = recorder.failures() == 0 ? "pass" : "fail";
    out.witnesses = recorder.witnesses();
  } catch (const CapExceeded& e) {
    out.status = "skipped";
    out.witnesses = {std::string("cap exceeded: ") + e.what()};
  } catch (const std::exception& e) {
    out.status = "fail";
    out.witnesses = recorder.witnesses();
    out.witnesses.push_back(std::string("error: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.cases = recorder.cases();
  if (check.budget_seconds > 0 && out.seconds > check.budget_seconds && out.status == "pass") {
    out.status = "fail";
    out.witnesses.push_back("exceeded the time budget of " + std::to_string(check.budget_seconds) + " s");
  }
  return out;
}

std::vector<CheckResult> run_selftest(const Catalog& universe, const std::string& filter) {
  std::vector<Check> checks = invariant_checks();
  for (auto& c : acceptance_checks()) checks.push_back(std::move(c));
  std::vector<CheckResult> out;
  for (const auto& c : checks)
    if (c.name.find(filter) != std::string::npos) out.push_back(run_check(c, universe));
  return out;
}

}  // namespace classlab
