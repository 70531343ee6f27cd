#include "doctest.h"

#include <set>

#include "classlab/errors.hpp"
#include "classlab/structure.hpp"
#include "classlab/universe.hpp"

using namespace classlab;

TEST_CASE("group specs") {
  auto a5 = parse_group_spec("A5");
  CHECK(a5.order() == 60);
  CHECK(a5.degree() == 5);
  auto d8 = parse_group_spec("perm4[(1 2 3 4);(1 3)]");
  CHECK(d8.order() == 8);
  CHECK(isomorphic(parse_group_spec("D8"), d8).has_value());
  CHECK(parse_group_spec("D6").order() == 6);
  CHECK(parse_group_spec(" C1 ").is_trivial());
  CHECK(parse_group_spec("1").is_trivial());
  CHECK(parse_group_spec("SL25").order() == 120);
  CHECK(parse_group_spec("V4").order() == 4);
  CHECK(parse_group_spec("Q8").order() == 8);
  CHECK_THROWS_AS(parse_group_spec("X5"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("C"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("D7"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm3[(1 4)]"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm3[(1 2]"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm99999999[()]"), ParseError);
}

TEST_CASE("small universes") {
  auto u3 = build_universe(UniverseSpec{3, {}});
  REQUIRE(u3.size() == 4);
  std::vector<std::string> names;
  for (const auto& e : u3.entries) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"C1", "C2", "C3", "S3"});

  // 1, C2, C3, C4, V4, S3, D8, A4, S4
  auto u4 = build_universe(UniverseSpec{4, {}});
  CHECK(u4.size() == 9);

  auto u5 = build_universe(UniverseSpec{5, {"Q8"}});
  std::size_t q8 = 0;
  for (const auto& e : u5.entries)
    if (isomorphic(e.group, parse_group_spec("Q8"))) ++q8;
  CHECK(q8 == 1);
}

TEST_CASE("universe entries are pairwise non-isomorphic and round-trip") {
  auto u = build_universe(UniverseSpec::with_default_extras());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) CHECK_FALSE(isomorphic(u.entries[i].group, u.entries[j].group).has_value());
  auto text = u.serialize();
  auto back = Catalog::parse(text);
  REQUIRE(back.size() == u.size());
  CHECK(back.serialize() == text);
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(fingerprint(back.entries[i].group) == fingerprint(u.entries[i].group));
  CHECK(build_universe(UniverseSpec::with_default_extras()).serialize() == text);
}

TEST_CASE("corrupted catalogs are rejected") {
  CHECK_THROWS_AS(Catalog::parse(""), ParseError);
  CHECK_THROWS_AS(Catalog::parse("version 2\nspec sym=3 extras=\nC1\t1\t()\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("version 1\nspec sym=3 extras=\nC2\t2\t(1 3)\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("version 1\nspec sym=3 extras=\nC2 2 (1 2)\n"), ParseError);
  CHECK_NOTHROW(Catalog::parse("version 1\nspec sym=3 extras=\nC2\t2\t(1 2)\n"));
}

TEST_CASE("S6 overflows the default subgroup limit") {
  CHECK_THROWS_AS(build_universe(UniverseSpec{6, {}}), CapExceeded);
}
