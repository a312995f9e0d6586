#include "doctest.h"
#include "ontodiv/alignment.hpp"
#include "ontodiv/errors.hpp"

using namespace ontodiv;

TEST_CASE("relations") {
  CHECK(relation_symbol(Relation::kEquivalent) == "=");
  CHECK(relation_symbol(Relation::kSubsumedBy) == "<");
  CHECK(relation_symbol(Relation::kSubsumes) == ">");
  CHECK(parse_relation(">") == Relation::kSubsumes);
  CHECK_THROWS(parse_relation("~"));
}

TEST_CASE("set semantics ignore confidence and keep the maximum") {
  Alignment a;
  a.insert({"x", "y", Relation::kEquivalent, 0.7});
  a.insert({"x", "y", Relation::kEquivalent, 0.9});
  a.insert({"x", "y", Relation::kEquivalent, 0.8});
  REQUIRE(a.size() == 1);
  CHECK(a.begin()->confidence == doctest::Approx(0.9));
  a.insert({"x", "y", Relation::kSubsumedBy, 0.5});
  CHECK(a.size() == 2);
  CHECK(a.contains({"x", "y", Relation::kSubsumedBy, 1.0}));
}

TEST_CASE("TSV parsing") {
  const auto a = parse_alignment(
      "# comment\n"
      "\n"
      "http://a#1\thttp://b#1\n"
      "http://a#2\thttp://b#2\t<\n"
      "http://a#3\thttp://b#3\t=\t0.25\n");
  REQUIRE(a.size() == 3);
  CHECK(a.contains({"http://a#1", "http://b#1"}));
  CHECK(a.contains({"http://a#2", "http://b#2", Relation::kSubsumedBy}));
  CHECK_THROWS_AS(parse_alignment("a\n"), InputError);
  CHECK_THROWS_AS(parse_alignment("a\tb\t=\t0\n"), InputError);
  CHECK_THROWS_AS(parse_alignment("a\tb\t=\t1.5\n"), InputError);
  CHECK_THROWS_AS(parse_alignment("a\tb\t=\tabc\n"), InputError);
  CHECK_THROWS_AS(parse_alignment("a\tb\t?\n"), InputError);
}

TEST_CASE("TSV round trip is sorted by source then target") {
  Alignment a{{"s2", "t1"}, {"s1", "t2", Relation::kSubsumes, 0.125}, {"s1", "t1"}};
  const auto text = format_alignment(a);
  CHECK(text == "s1\tt1\t=\t1\ns1\tt2\t>\t0.125\ns2\tt1\t=\t1\n");
  const auto again = parse_alignment(text);
  CHECK(again.size() == 3);
  CHECK(format_alignment(again) == text);
}
