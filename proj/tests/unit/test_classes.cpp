#include "doctest.h"
#include "oracle.hpp"

#include "classlab/classes.hpp"
#include "classlab/config.hpp"
#include "classlab/constructions.hpp"
#include "classlab/errors.hpp"
#include "classlab/structure.hpp"

using namespace classlab;

namespace {

const Catalog& universe() {
  static const Catalog u = build_universe(UniverseSpec::with_default_extras());
  return u;
}

oracle::ElementSet elements_of(const PermGroup& g) { return oracle::closure(g.generators(), g.degree()); }

// G/N cyclic iff some x has <x, N> = G.
bool quotient_cyclic(const oracle::ElementSet& g, const oracle::ElementSet& n) {
  std::size_t degree = g.begin()->degree();
  std::vector<Permutation> base(n.begin(), n.end());
  for (const auto& x : g) {
    auto gens = base;
    gens.push_back(x);
    if (oracle::closure(gens, degree).size() == g.size()) return true;
  }
  return false;
}

bool oracle_dual_cyclic(const PermGroup& g) {
  auto all = elements_of(g);
  for (const auto& s : oracle::all_subgroups(all))
    if (s.size() < all.size() && oracle::is_normal(s, all) && quotient_cyclic(all, s)) return false;
  return true;
}

}  // namespace

TEST_CASE("class expressions parse to canonical text") {
  CHECK(parse_class("fnr")->to_string() == "dual(solvable)");
  CHECK(parse_class(" Dual( hat(cyclic) ) ")->to_string() == "dual(hat(cyclic))");
  CHECK(parse_class("pi(3,2,3)")->to_string() == "pi(2,3)");
  CHECK(parse_class("union(abelian,p(3),le(6))")->to_string() == "union(union(abelian,p(3)),le(6))");
  CHECK(parse_class("set(C4, perm4[(1 2);(3 4)])")->groups.size() == 2);
  CHECK(parse_class("set(1,C4)")->groups.size() == 2);
  CHECK(parse_class("dualn(set(1,C4),3)")->to_string() == "dualn(set(1,C4),3)");
  CHECK_THROWS_AS(parse_class("dual(solvable"), ParseError);
  CHECK_THROWS_AS(parse_class("p(4)"), ParseError);
  CHECK_THROWS_AS(parse_class("set(X9)"), ParseError);
  CHECK_THROWS_AS(parse_class("frobnicate"), ParseError);
  CHECK_THROWS_AS(parse_class("abelian junk"), ParseError);
}

TEST_CASE("builtin predicates") {
  auto a5 = named::alternating(5);
  CHECK(member(cls::alt_ge(5), a5));
  CHECK_FALSE(member(cls::alt_ge(6), a5));
  CHECK(member(cls::alt_ge(6), PermGroup::trivial()));
  CHECK_FALSE(member(cls::alt_ge(3), named::cyclic(2)));
  CHECK(member(cls::alt_ge(3), named::cyclic(3)));
  CHECK(member(cls::pi({2, 3}), named::symmetric(4)));
  CHECK_FALSE(member(cls::pi({2, 3}), a5));
  CHECK(member(cls::order_at_most(24), named::symmetric(4)));
  CHECK_FALSE(member(cls::order_at_most(23), named::symmetric(4)));
  CHECK(member(cls::p_group(2), named::quaternion()));
  CHECK_FALSE(member(cls::p_group(3), named::quaternion()));
  CHECK(member(cls::finite_set({"Q8"}), named::quaternion()));
  CHECK_FALSE(member(cls::finite_set({"Q8"}), named::dihedral(4)));
}

TEST_CASE("dual of an intersection versus duals of the parts") {
  auto c6 = named::cyclic(6);
  auto c1 = cls::finite_set({"1", "C2"});
  auto c2 = cls::finite_set({"1", "C3"});
  CHECK_FALSE(member(cls::dual(c1), c6));
  CHECK_FALSE(member(cls::dual(c2), c6));
  CHECK(member(cls::dual(cls::intersect(c1, c2)), c6));
  auto witness = dual_witness(*c1, c6);
  REQUIRE(witness.has_value());
  CHECK(normal_subgroups(c6).order(*witness) == 3);
}

TEST_CASE("dual chain of {1, C4}") {
  auto c = cls::finite_set({"1", "C4"});
  auto c4 = named::cyclic(4);
  CHECK(dual_chain_member(c, c4, 0));
  CHECK_FALSE(dual_chain_member(c, c4, 1));
  CHECK_FALSE(dual_chain_member(c, c4, 2));
  CHECK(dual_chain_member(c, c4, 3));
  for (const auto& e : universe().entries) {
    CHECK(dual_chain_member(c, e.group, 2) == e.group.is_trivial());
    CHECK(dual_chain_member(c, e.group, 3));
  }
  CHECK_FALSE(bidual_member_maxnormal(*cls::finite_set({"C4"}), c4));
}

TEST_CASE("dual of the cyclic class agrees with a brute-force oracle") {
  for (const auto& e : universe().entries) {
    if (e.group.order() > 24) continue;
    CAPTURE(e.name);
    CHECK(member(cls::dual(cls::cyclic()), e.group) == oracle_dual_cyclic(e.group));
  }
  CHECK(oracle_dual_cyclic(named::alternating(5)));
}

TEST_CASE("dual identities and the depth limit") {
  for (const auto& e : universe().entries) {
    CHECK(member(cls::dual(cls::all()), e.group) == e.group.is_trivial());
    CHECK(member(cls::dual(cls::trivial()), e.group));
  }
  CHECK_THROWS_AS(dual_chain_member(cls::solvable(), named::cyclic(2), limits().dual_depth + 1), CapExceeded);
}

TEST_CASE("series closure of the cyclic class is the solvable class") {
  auto hc = cls::hat(cls::cyclic());
  for (const auto& e : universe().entries) {
    CAPTURE(e.name);
    bool solvable = is_solvable(e.group);
    CHECK(member(hc, e.group) == solvable);
    auto series = hat_series(*cls::cyclic(), e.group);
    CHECK(series.has_value() == solvable);
    if (!series || e.group.order() > 48) continue;
    CHECK(series->front().is_trivial());
    CHECK(series->back() == e.group);
    for (std::size_t i = 0; i + 1 < series->size(); ++i) {
      auto lower = elements_of((*series)[i]);
      auto upper = elements_of((*series)[i + 1]);
      CHECK(oracle::is_normal(lower, upper));
      CHECK(quotient_cyclic(upper, lower));
    }
  }
  auto s4 = hat_series(*cls::cyclic(), named::symmetric(4));
  REQUIRE(s4.has_value());
  CHECK(s4->size() == 5);
}

TEST_CASE("series closure fixes p-groups and absorbs simple classes") {
  for (const auto& e : universe().entries) {
    CHECK(member(cls::hat(cls::p_group(2)), e.group) == member(cls::p_group(2), e.group));
    CHECK(member(cls::hat(cls::unite(cls::simple(), cls::abelian())), e.group));
  }
}

TEST_CASE("strongly non-solvable groups") {
  auto fnr = cls::fnr();
  CHECK(member(fnr, named::alternating(5)));
  CHECK(member(fnr, named::special_linear_2(5)));
  CHECK_FALSE(member(fnr, named::symmetric(5)));
  CHECK_FALSE(member(fnr, named::alternating(4)));
  CHECK_FALSE(member(fnr, named::dihedral(4)));
  auto sl25 = named::special_linear_2(5);
  auto z = center(sl25);
  CHECK(z.order() == 2);
  CHECK(is_normal(z, sl25));
  CHECK_FALSE(member(fnr, z));

  std::vector<ClassPtr> chain{cls::cyclic(), cls::abelian(), cls::nilpotent(), cls::solvable()};
  for (const auto& e : universe().entries) {
    CAPTURE(e.name);
    bool in = member(fnr, e.group);
    for (const auto& c : chain) CHECK(member(cls::dual(c), e.group) == in);
    bool by_primes = true;
    for (auto p : prime_divisors(e.group.order())) by_primes = by_primes && member(cls::dual(cls::p_group(p)), e.group);
    CHECK(by_primes == in);
    if (!e.group.is_trivial()) {
      CHECK(in == !has_prime_order_quotient(e.group));
      if (is_solvable(e.group)) CHECK_FALSE(in);
    }
    bool simple_quotients_prime = true;
    for (const auto& q : simple_quotients(e.group)) simple_quotients_prime = simple_quotients_prime && is_prime(q.order());
    CHECK(member(cls::dual(fnr), e.group) == simple_quotients_prime);
  }
}

TEST_CASE("bidual characterizations agree") {
  std::vector<ClassPtr> classes{cls::abelian(), cls::solvable(), cls::simple(), cls::finite_set({"C4"}),
                                cls::finite_set({"1", "C4"})};
  for (const auto& c : classes)
    for (const auto& e : universe().entries) {
      if (e.group.is_trivial()) continue;
      CAPTURE(c->to_string());
      CAPTURE(e.name);
      bool by_max = bidual_member_maxnormal(*c, e.group);
      CHECK(by_max == bidual_member_radical(*c, e.group));
      CHECK(by_max == dual_chain_member(c, e.group, 2));
    }
  CHECK(bidual_member_maxnormal(*cls::abelian(), PermGroup::trivial()));
  CHECK_THROWS_AS(bidual_member_radical(*cls::abelian(), PermGroup::trivial()), PreconditionError);
}

TEST_CASE("duals of unions, monotonicity and period two") {
  std::vector<ClassPtr> classes{cls::cyclic(), cls::abelian(), cls::nilpotent(), cls::solvable(), cls::p_group(2),
                                cls::simple(), cls::finite_set({"1", "C4"})};
  for (const auto& e : universe().entries) {
    const auto& g = e.group;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      CHECK(member(cls::dual(c), g) == member(cls::dual(cls::hat(c)), g));
      if (dual_chain_member(c, g, 1)) CHECK(dual_chain_member(c, g, 3));
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        CHECK(member(cls::dual(cls::unite(c, classes[j])), g) ==
              (member(cls::dual(c), g) && member(cls::dual(classes[j]), g)));
    }
    for (std::size_t i = 0; i + 1 < 4; ++i)
      if (member(cls::dual(classes[i + 1]), g)) CHECK(member(cls::dual(classes[i]), g));
  }
}

TEST_CASE("closure-property taxonomy") {
  const auto& u = universe();
  auto flags = [&](const ClassPtr& c) { return classify(c, u); };

  for (const auto& c : {cls::solvable(), cls::p_group(2), cls::all(), cls::trivial()}) {
    auto k = flags(c);
    CAPTURE(c->to_string());
    CHECK(k.extensive_variety);
    CHECK(k.extensive_formation);
  }
  for (const auto& c : {cls::abelian(), cls::nilpotent()}) {
    auto k = flags(c);
    CAPTURE(c->to_string());
    CHECK(k.pre_variety);
    CHECK(k.formation);
    CHECK_FALSE(k.extensive_formation);
    CHECK_FALSE(k.audits[2].holds);
    CHECK_FALSE(k.audits[2].counterexamples.empty());
  }
  auto cyclic = flags(cls::cyclic());
  CHECK(cyclic.pre_variety);
  CHECK_FALSE(cyclic.formation);
  REQUIRE_FALSE(cyclic.audits[3].counterexamples.empty());
  CHECK(cyclic.audits[3].counterexamples.front().group == "V4");

  auto abelian_c2 = audit_property(cls::abelian(), u, Property::C2);
  REQUIRE_FALSE(abelian_c2.counterexamples.empty());
  CHECK(abelian_c2.counterexamples.front().group == "S3");
}

TEST_CASE("transmission of closure properties to duals") {
  const auto& u = universe();
  std::vector<ClassPtr> classes{cls::cyclic(), cls::abelian(), cls::solvable(), cls::finite_set({"1", "C4"}),
                                cls::finite_set({"C2"})};
  for (const auto& c : classes) {
    CAPTURE(c->to_string());
    CHECK(audit_property(cls::dual(c), u, Property::C1).holds);
    if (audit_property(c, u, Property::C1).holds) CHECK(audit_property(cls::dual(c), u, Property::C2).holds);
  }
}
