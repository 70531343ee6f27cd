#include "doctest.h"
#include "oracle.hpp"

#include <map>

#include "classlab/constructions.hpp"
#include "classlab/errors.hpp"

using namespace classlab;

namespace {

Permutation cyc(std::string_view text, std::size_t degree) { return parse_cycles(text, degree); }

oracle::ElementSet elements_of(const PermGroup& g) { return oracle::closure(g.generators(), g.degree()); }

oracle::ElementSet normal_core(const PermGroup& g, const PermGroup& s) {
  auto all = elements_of(g);
  auto core = elements_of(s);
  for (const auto& x : all) {
    oracle::ElementSet conj;
    for (const auto& h : elements_of(s)) conj.insert(conjugate(h, x));
    core = oracle::intersect(core, conj);
  }
  return core;
}

void check_multiplicative(const GroupHom& f) {
  auto src = elements_of(f.source());
  std::vector<Permutation> xs(src.begin(), src.end());
  std::map<Permutation, Permutation> value;
  for (const auto& x : xs) value.emplace(x, f.apply(x));
  for (const auto& x : xs)
    for (const auto& y : xs) REQUIRE(value.at(x * y) == value.at(x) * value.at(y));
}

}  // namespace

TEST_CASE("named groups have the expected orders") {
  CHECK(named::cyclic(1).order() == 1);
  CHECK(named::cyclic(12).order() == 12);
  CHECK(named::symmetric(5).order() == 120);
  CHECK(named::alternating(5).order() == 60);
  CHECK(named::alternating(6).order() == 360);
  CHECK(named::alternating(7).order() == 2520);
  CHECK(named::dihedral(4).order() == 8);
  CHECK(named::dihedral(6).order() == 12);
  CHECK(named::klein_four().order() == 4);
  CHECK(named::special_linear_2(3).order() == 24);
  CHECK(named::special_linear_2(5).order() == 120);
  CHECK(named::psl27().order() == 168);

  auto q8 = named::quaternion();
  REQUIRE(q8.order() == 8);
  std::map<std::uint64_t, int> histogram;
  for (const auto& x : elements_of(q8)) histogram[x.order()]++;
  CHECK(histogram == std::map<std::uint64_t, int>{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("homomorphisms are verified") {
  auto s3 = named::symmetric(3);
  auto c2 = named::cyclic(2);
  // sign map: the 3-cycle goes to 1, the transposition to the generator
  GroupHom sign(s3, c2, {c2.identity(), c2.generators()[0]});
  CHECK(sign.kernel().order() == 3);
  CHECK(sign.image().order() == 2);
  check_multiplicative(sign);
  CHECK_THROWS_AS(GroupHom(s3, c2, {c2.generators()[0], c2.identity()}), PreconditionError);

  auto s4 = named::symmetric(4);
  auto id = GroupHom::identity(s4);
  CHECK(id.injective());
  CHECK(id.surjective());
  check_multiplicative(id);
}

TEST_CASE("direct powers") {
  auto a5 = named::alternating(5);
  CHECK(direct_power(a5, 1).group.order() == 60);
  auto sq = direct_power(a5, 2);
  CHECK(sq.group.degree() == 10);
  CHECK(sq.group.order() == 3600);
  auto c2 = direct_power(named::cyclic(2), 3);
  CHECK(c2.group.order() == 8);
  for (const auto& x : elements_of(c2.group)) CHECK(x.order() <= 2);
  CHECK_THROWS_AS(direct_power(a5, 0), PreconditionError);
  auto x = sq.embed(1, a5.generators()[0]);
  CHECK(sq.project(1, x) == a5.generators()[0]);
  CHECK(sq.project(0, x).is_identity());
}

TEST_CASE("coset actions") {
  auto s4 = named::symmetric(4);
  auto stab = PermGroup(4, {cyc("(1 2 3)", 4), cyc("(1 2)", 4)});
  auto f = coset_action(s4, stab);
  CHECK(f.target().degree() == 4);
  CHECK(f.image().order() == 24);
  CHECK(f.kernel().is_trivial());

  auto whole = coset_action(s4, s4);
  CHECK(whole.target().degree() == 1);
  CHECK(whole.target().is_trivial());

  auto c4 = named::cyclic(4);
  auto c2 = PermGroup(4, {cyc("(1 3)(2 4)", 4)});
  auto g = coset_action(c4, c2);
  CHECK(g.target().degree() == 2);
  CHECK(g.image().order() == 2);
  CHECK(g.kernel() == c2);
  check_multiplicative(g);

  // kernel is the normal core, compared against a conjugate intersection
  std::vector<std::pair<PermGroup, PermGroup>> cases{
      {s4, PermGroup(4, {cyc("(1 2)", 4)})},
      {s4, PermGroup(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)})},
      {named::dihedral(6), PermGroup(6, {cyc("(2 6)(3 5)", 6)})},
      {named::alternating(5), PermGroup(5, {cyc("(1 2 3)", 5)})},
      {named::special_linear_2(3), PermGroup(8, {named::quaternion().generators()[0]})},
  };
  for (const auto& [grp, sub] : cases) {
    auto hom = coset_action(grp, sub);
    CHECK(hom.target().degree() == grp.order() / sub.order());
    CHECK(elements_of(hom.kernel()) == normal_core(grp, sub));
  }
}

TEST_CASE("quotients") {
  auto s4 = named::symmetric(4);
  auto v4 = PermGroup(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  auto q = quotient(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK(q.projection.kernel() == v4);
  CHECK(quotient(s4, named::alternating(4)).group.order() == 2);
  CHECK(quotient(s4, PermGroup::trivial(4)).group.order() == 24);
  CHECK_THROWS_AS(quotient(s4, PermGroup(4, {cyc("(1 2)", 4)})), PreconditionError);
}

TEST_CASE("wreath by cosets") {
  auto a5 = named::alternating(5);
  auto c2 = named::cyclic(2);
  auto w1 = wreath_by_cosets(a5, c2, c2);
  CHECK(w1.coordinates() == 1);
  CHECK(w1.gamma.order() == 120);

  auto c4 = named::cyclic(4);
  auto sub = PermGroup(4, {cyc("(1 3)(2 4)", 4)});
  auto w2 = wreath_by_cosets(a5, c4, sub);
  CHECK(w2.coordinates() == 2);
  CHECK(w2.gamma.order() == 14400);
  CHECK(w2.top.kernel() == w2.base.group);
  CHECK(w2.top.surjective());

  auto s3 = named::symmetric(3);
  auto s2 = PermGroup(3, {cyc("(1 2)", 3)});
  auto w3 = wreath_by_cosets(named::cyclic(2), s3, s2);
  CHECK(w3.gamma.order() == 48);
  CHECK(elements_of(w3.gamma).size() == 48);
  CHECK(w3.top.kernel() == w3.base.group);
  check_multiplicative(w3.top);

  // the identity coset is coordinate 0: the embedded subgroup fixes it
  for (const auto& g : sub.generators()) CHECK(w2.coset_space.action_of(g)[0] == 0);

  CHECK_THROWS_AS(wreath_by_cosets(a5, c4, PermGroup(4, {cyc("(1 2)", 4)})), PreconditionError);
  CHECK_THROWS_AS(wreath_by_cosets(a5, named::symmetric(4), PermGroup::trivial(4)), CapExceeded);
}
