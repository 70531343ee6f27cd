#include "doctest.h"
#include "oracle.hpp"

#include "classlab/errors.hpp"
#include "classlab/perm_group.hpp"

using namespace classlab;

namespace {
Permutation cyc(std::string_view text, std::size_t degree) { return parse_cycles(text, degree); }
}

TEST_CASE("cycle notation round trip") {
  auto p = cyc("(1 2 3)(4 5)", 5);
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
  CHECK(cyc("()", 3).is_identity());
  CHECK(cyc(" ( 1 ,2 ) ", 2).order() == 2);
  CHECK_THROWS_AS(cyc("(1 2", 3), ParseError);
  CHECK_THROWS_AS(cyc("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(1 2)(2 3)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0 1)", 3), ParseError);
}

TEST_CASE("composition acts right to left") {
  auto a = cyc("(1 2)", 3);
  auto b = cyc("(2 3)", 3);
  CHECK((a * b)[2] == 0);  // b: 2 -> 1, then a: 1 -> 0 (0-based)
  CHECK((a.inverse() * a).is_identity());
  CHECK(commutator(a, b).order() == 3);
}

TEST_CASE("generate agrees with enumeration") {
  CHECK(generate({}, 1).order() == 1);
  CHECK(generate({cyc("(1 2)", 2)}, 2).order() == 2);

  std::vector<Permutation> a5{cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)};
  auto g = generate(a5, 5);
  CHECK(g.order() == 60);
  CHECK(oracle::closure(a5, 5).size() == 60);

  std::vector<std::vector<Permutation>> cases{
      {cyc("(1 2 3 4 5 6 7)", 7), cyc("(2 3)(4 7)", 7)},
      {cyc("(1 2)(3 4)", 6), cyc("(1 3 5)", 6), cyc("(2 6)", 6)},
      {cyc("(1 2 3 4 5 6)", 6), cyc("(1 2)", 6)},
      {cyc("(1 5)(2 6)", 8), cyc("(1 2 3 4)", 8), cyc("(5 6 7 8)", 8)},
  };
  for (const auto& gens : cases) {
    auto grp = generate(gens, gens[0].degree());
    auto brute = oracle::closure(gens, gens[0].degree());
    REQUIRE(grp.order() == brute.size());
    const auto& table = grp.elements();
    oracle::ElementSet listed;
    for (std::uint32_t i = 0; i < table.size(); ++i) listed.insert(table.element(i));
    CHECK(listed == brute);
    CHECK(table.element(0).is_identity());
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      CHECK(table.index_of(table.element(i)) == i);
      CHECK(table.element(table.inv(i)) == table.element(i).inverse());
    }
    for (std::uint32_t i = 0; i < table.size(); i += 37)
      for (std::uint32_t j = 0; j < table.size(); j += 11)
        CHECK(table.element(table.mul(i, j)) == table.element(i) * table.element(j));
  }
}

TEST_CASE("membership agrees with enumeration") {
  std::vector<Permutation> a5{cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)};
  auto g = generate(a5, 5);
  CHECK_FALSE(g.contains(cyc("(1 2)", 5)));
  CHECK(g.contains(cyc("(1 2 3)", 5)));
  CHECK_THROWS_AS((void)g.contains(cyc("(1 2)", 4)), PreconditionError);

  auto c4 = generate({cyc("(1 2 3 4)", 4)}, 4);
  CHECK(c4.contains(cyc("(1 3)(2 4)", 4)));

  auto s4 = generate({cyc("(1 2 3 4)", 4), cyc("(1 2)", 4)}, 4);
  auto d8 = generate({cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)}, 4);
  auto brute = oracle::closure(d8.generators(), 4);
  for (std::uint32_t i = 0; i < s4.elements().size(); ++i) {
    auto x = s4.elements().element(i);
    CHECK(d8.contains(x) == (brute.count(x) == 1));
  }
}

TEST_CASE("generator degree mismatch is rejected") {
  CHECK_THROWS_AS(PermGroup(3, {cyc("(1 2)", 2)}), PreconditionError);
}

TEST_CASE("base priority does not change the group") {
  std::vector<Permutation> gens{cyc("(1 2 3 4 5 6)", 6), cyc("(1 2)", 6)};
  std::vector<Point> priority{5, 4, 3};
  PermGroup g(6, gens, priority);
  CHECK(g.order() == 720);
  CHECK(g.chain().levels().front().base == 5);
}
