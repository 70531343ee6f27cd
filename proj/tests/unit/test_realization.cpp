#include <random>

#include "doctest.h"
#include "oracle.hpp"

#include "classlab/config.hpp"
#include "classlab/errors.hpp"
#include "classlab/realization.hpp"
#include "classlab/structure.hpp"
#include "classlab/universe.hpp"

using namespace classlab;

namespace {

Permutation cyc(std::string_view text, std::size_t degree) { return parse_cycles(text, degree); }

oracle::ElementSet oracle_normalizer(const PermGroup& gamma, const PermGroup& h) {
  auto hs = oracle::closure(h.generators(), h.degree());
  oracle::ElementSet out;
  for (const auto& x : oracle::closure(gamma.generators(), gamma.degree())) {
    bool ok = true;
    for (const auto& s : h.generators()) ok = ok && hs.count(x * s * x.inverse());
    if (ok) out.insert(x);
  }
  return out;
}

Permutation block_swap(std::size_t d) {
  std::vector<Point> p(2 * d);
  for (std::size_t x = 0; x < d; ++x) {
    p[x] = static_cast<Point>(d + x);
    p[d + x] = static_cast<Point>(x);
  }
  return Permutation(p);
}

}  // namespace

TEST_CASE("maximal self-normalizing subgroups") {
  auto h = maximal_selfnormalizing(named::alternating(5));
  CHECK(h.order() == 12);
  CHECK(is_abelian(h) == false);
  CHECK(maximal_selfnormalizing(named::psl27()).order() == 24);
  CHECK_THROWS_AS(maximal_selfnormalizing(named::cyclic(5)), PreconditionError);
  CHECK_THROWS_AS(maximal_selfnormalizing(named::alternating(4)), PreconditionError);
  // the regular action is imprimitive, so this goes through the subgroup scan
  auto a5 = named::alternating(5);
  GroupHom regular = regular_alternating_embedding(a5, 60);
  auto h_regular = maximal_selfnormalizing(regular.image());
  CHECK(h_regular.order() == 12);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(named::symmetric(4)));
  CHECK_FALSE(is_primitive(named::dihedral(4)));
  CHECK(is_primitive(named::dihedral(5)));
  CHECK_FALSE(is_primitive(PermGroup(4, {cyc("(1 2)", 4)})));
}

TEST_CASE("realizations by direct product") {
  auto c2 = realize(named::cyclic(2));
  CHECK(c2.n == 1);
  CHECK(c2.gamma.order() == 120);
  CHECK(c2.h.order() == 12);
  CHECK(c2.normalizer.order() == 24);
  CHECK(c2.checks.brute);
  CHECK(oracle_normalizer(c2.gamma, c2.h).size() == 24);

  auto s3 = realize(named::symmetric(3));
  CHECK(s3.gamma.order() == 360);
  auto ns = oracle_normalizer(s3.gamma, s3.h);
  CHECK(ns == oracle::closure(s3.normalizer.generators(), s3.normalizer.degree()));

  CHECK(realize(named::quaternion()).gamma.order() == 480);
  auto trivial = realize(PermGroup::trivial());
  CHECK(trivial.gamma.order() == 60);
  CHECK(trivial.normalizer.order() == 12);
}

TEST_CASE("two-coordinate realization") {
  RealizeOptions options;
  options.top = named::cyclic(4);
  auto cert = realize(named::cyclic(2), options);
  CHECK(cert.n == 2);
  CHECK(cert.gamma.order() == 14400);
  CHECK(cert.h.order() == 720);
  CHECK(cert.normalizer.order() == 1440);
  CHECK(cert.checks.brute);
  auto top = quotient(cert.gamma, cert.wreath.base.group);
  CHECK(isomorphic(top.group, named::cyclic(4)).has_value());
}

TEST_CASE("every small universe group is realized") {
  auto u = build_universe(UniverseSpec::with_default_extras());
  for (const auto& e : u.entries) {
    if (e.group.order() > 12) continue;
    CAPTURE(e.name);
    auto cert = realize(e.group);
    CHECK(cert.checks.brute);
    CHECK(cert.normalizer.order() == cert.h.order() * e.group.order());
    auto gn_quotients = simple_quotients(cert.gn);
    for (const auto& q : simple_quotients(cert.gamma)) {
      bool known = isomorphic(q, cert.g0).has_value();
      for (const auto& t : gn_quotients) known = known || isomorphic(q, t).has_value();
      CHECK(known);
    }
  }
}

TEST_CASE("alternating tops") {
  auto c2 = regular_alternating_embedding(named::cyclic(2), 4);
  CHECK(c2.target().order() == 12);
  CHECK(c2.injective());
  CHECK_THROWS_AS(regular_alternating_embedding(named::cyclic(2), 3), PreconditionError);
  auto c3 = regular_alternating_embedding(named::cyclic(3), 3);
  CHECK(c3.surjective());
  RealizeOptions options;
  options.alt = 3;
  options.brute_check = false;
  auto cert = realize(PermGroup::trivial(), options);
  CHECK(cert.n == 3);
  CHECK(cert.normalizer.order() == cert.h.order());
  options.alt = 4;
  auto six = realize(named::cyclic(2), options);
  CHECK(six.n == 6);
  CHECK(six.normalizer.order() == 2 * six.h.order());
  options.alt = 5;
  CHECK_THROWS_AS(realize(named::cyclic(2), options), CapExceeded);
}

TEST_CASE("no simple quotient of prime order") {
  auto a5 = named::alternating(5);
  CHECK_FALSE(has_prime_order_quotient(wreath_by_cosets(a5, a5, a5).gamma));
  CHECK_FALSE(has_prime_order_quotient(wreath_by_cosets(a5, named::alternating(7), named::alternating(7)).gamma));
  CHECK(has_prime_order_quotient(wreath_by_cosets(a5, named::cyclic(2), named::cyclic(2)).gamma));
}

TEST_CASE("normalizer quotient search") {
  auto s4 = named::symmetric(4);
  auto hits = brute_search(s4, named::cyclic(2), 1000);
  bool found = false;
  for (const auto& hit : hits)
    if (hit.h == PermGroup(4, {cyc("(1 2 3 4)", 4)})) found = hit.normalizer.order() == 8;
  CHECK(found);

  auto s3_hits = brute_search(named::symmetric(3), PermGroup::trivial(), 1000);
  found = false;
  for (const auto& hit : s3_hits) found = found || hit.h == PermGroup(3, {cyc("(1 2)", 3)});
  CHECK(found);

  auto a5 = named::alternating(5);
  auto a5_hits = brute_search(a5, a5, 1000);
  REQUIRE(a5_hits.size() == 1);
  CHECK(a5_hits[0].h.is_trivial());
}

TEST_CASE("split extensions") {
  auto a5 = named::alternating(5);
  auto g = direct_product(a5, named::cyclic(2));
  PermGroup n(g.degree(), {a5.generators()[0].embedded(g.degree(), 0), a5.generators()[1].embedded(g.degree(), 0)});
  CHECK(split_check(g, n).order() == 2);

  RealizeOptions options;
  options.top = named::cyclic(4);
  options.brute_check = false;
  auto cert = realize(named::cyclic(2), options);
  auto k = split_check(cert.gamma, cert.wreath.base.group);
  CHECK(isomorphic(k, named::cyclic(4)).has_value());

  auto s3 = named::symmetric(3);
  auto s3c2 = direct_product(s3, named::cyclic(2));
  PermGroup s3n(s3c2.degree(), {s3.generators()[0].embedded(s3c2.degree(), 0), s3.generators()[1].embedded(s3c2.degree(), 0)});
  CHECK(split_check(s3c2, s3n).order() == 2);
}

TEST_CASE("diagonal subgroups") {
  auto a5 = named::alternating(5);
  auto id = GroupHom::identity(a5);
  auto plain = diagonal_subgroup(a5, 2, {id, id});
  CHECK(plain.group.order() == 60);
  CHECK(plain.support == std::vector<std::size_t>{0, 1});
  auto first = diagonal_subgroup(a5, 2, {id, std::nullopt});
  CHECK(first.group == direct_power(a5, 2).embed_group(0, a5));
  auto outer = diagonal_subgroup(a5, 2, {id, conjugation_map(a5, cyc("(1 2)", 5))});
  CHECK(outer.group.order() == 60);
  CHECK_FALSE(outer.group == plain.group);
  CHECK(isomorphic(outer.group, a5).has_value());
  CHECK_THROWS_AS(diagonal_subgroup(a5, 2, {std::nullopt, std::nullopt}), PreconditionError);
  CHECK_THROWS_AS(conjugation_map(a5, cyc("(1 2)(3 4 5 6)", 6).embedded(5, 0)), std::exception);
}

TEST_CASE("order-60 subgroups of A5 x A5 isomorphic to A5 are diagonal") {
  auto a5 = named::alternating(5);
  auto dp = direct_power(a5, 2);
  const auto& table = dp.group.elements();
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(table.size() - 1));
  std::size_t seen = 0;
  for (int trial = 0; trial < 3000 && seen < 20; ++trial) {
    PermGroup s(10, {table.element(pick(rng)), table.element(pick(rng))});
    if (s.order() != 60 || !isomorphic(s, a5)) continue;
    ++seen;
    CHECK(recover_diagonal(a5, 2, s).has_value());
  }
  CHECK(seen > 0);
  CHECK_FALSE(recover_diagonal(a5, 2, dp.embed_group(0, maximal_selfnormalizing(a5))).has_value());
}

TEST_CASE("automorphisms of A5 x A5 permute the factors") {
  auto a5 = named::alternating(5);
  auto dp = direct_power(a5, 2);
  auto swap = conjugation_map(dp.group, block_swap(5));
  CHECK(factor_permutation_check(a5, 2, swap) == std::vector<std::size_t>{1, 0});
  Permutation twist = dp.embed(0, cyc("(1 2)", 5)) * dp.embed(1, cyc("(1 2 3)", 5));
  auto coordinatewise = conjugation_map(dp.group, twist);
  CHECK(factor_permutation_check(a5, 2, coordinatewise) == std::vector<std::size_t>{0, 1});
  CHECK(factor_permutation_check(a5, 2, compose(swap, coordinatewise)) == std::vector<std::size_t>{1, 0});
}
