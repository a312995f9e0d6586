#include "doctest.h"
#include "json.hpp"
#include "ontodiv/metrics.hpp"
#include "ontodiv/ofn.hpp"

using namespace ontodiv;

namespace {

const std::string kA = "http://a#";
const std::string kB = "http://b#";

Ontology classes(const std::string& ns, std::initializer_list<const char*> names) {
  std::vector<Axiom> axioms;
  for (const auto* name : names) axioms.emplace_back(Declaration{make_class(ns + name)});
  return Ontology(ns, std::move(axioms));
}

Mapping m(const char* s, const char* t) { return Mapping{kA + s, kB + t}; }

}  // namespace

TEST_CASE("precision, recall and F") {
  const Mapping a = m("1", "1"), b = m("2", "2"), c = m("3", "3");
  auto prf = precision_recall_f(Alignment{a, b}, Alignment{b, c});
  CHECK(prf.precision == 0.5);
  CHECK(prf.recall == 0.5);
  CHECK(prf.f_measure == 0.5);

  prf = precision_recall_f(Alignment{a, b}, Alignment{a, b});
  CHECK(prf.precision == 1.0);
  CHECK(prf.recall == 1.0);
  CHECK(prf.f_measure == 1.0);

  prf = precision_recall_f(Alignment{}, Alignment{a});
  CHECK(prf.precision == 0.0);
  CHECK(prf.recall == 0.0);
  CHECK(prf.f_measure == 0.0);

  CHECK_THROWS_AS(precision_recall_f(Alignment{a}, Alignment{}), std::invalid_argument);

  // Relations must match exactly.
  Mapping sub = a;
  sub.relation = Relation::kSubsumedBy;
  CHECK(precision_recall_f(Alignment{sub}, Alignment{a}).precision == 0.0);

  // Swapping system and reference swaps P and R.
  const Alignment x{a, b, c}, y{a};
  const auto xy = precision_recall_f(x, y);
  const auto yx = precision_recall_f(y, x);
  CHECK(xy.precision == yx.recall);
  CHECK(xy.recall == yx.precision);
}

TEST_CASE("size ratios") {
  const auto o1 = classes(kA, {"1", "2", "3", "4"});
  const auto o2 = classes(kB, {"1", "2", "3", "4"});
  MatchingTask whole{0, o1, o2, {}};
  CHECK(size_ratio_task(whole, o1, o2) == 1.0);

  MatchingTask half{0, classes(kA, {"1", "2"}), classes(kB, {"1", "2"}), {}};
  MatchingTask other{1, classes(kA, {"3", "4"}), classes(kB, {"3", "4"}), {}};
  CHECK(size_ratio_task(half, o1, o2) == 0.25);

  Division d;
  d.n = 2;
  d.subtasks = {half, other};
  CHECK(size_ratio_division(d, o1, o2) == 0.5);
  Division one;
  one.n = 1;
  one.subtasks = {whole};
  CHECK(size_ratio_division(one, o1, o2) == 1.0);

  CHECK_THROWS_AS(size_ratio_task(half, Ontology{}, o2), std::invalid_argument);
}

TEST_CASE("coverage") {
  MatchingTask t{0, classes(kA, {"1", "2"}), classes(kB, {"1", "2"}), {}};
  const Alignment inside{m("1", "1"), m("2", "1")};
  CHECK(coverage(t, inside) == inside);
  CHECK(coverage(t, Alignment{}).empty());
  CHECK(coverage(t, Alignment{m("1", "9")}).empty());
  CHECK(coverage(t, Alignment{m("9", "1")}).empty());

  MatchingTask u{1, classes(kA, {"3"}), classes(kB, {"3"}), {}};
  Division d;
  d.n = 2;
  d.subtasks = {t};
  const Alignment mixed{m("1", "1"), m("3", "3"), m("1", "3"), m("9", "9")};
  CHECK(coverage_ratio(d, mixed) == 0.25);
  d.subtasks.push_back(u);
  CHECK(coverage_ratio(d, mixed) == 0.5);  // adding a task never lowers coverage
  CHECK(coverage_ratio(d, Alignment{m("9", "9")}) == 0.0);
  CHECK_THROWS_AS(coverage_ratio(d, Alignment{}), std::invalid_argument);
}

TEST_CASE("union of alignments") {
  const std::vector<Alignment> empty(2);
  CHECK(union_alignments(empty).empty());

  const Mapping a = m("1", "1");
  const std::vector<Alignment> twice{Alignment{a}, Alignment{a}};
  CHECK(union_alignments(twice) == Alignment{a});

  Mapping low = a, high = a;
  low.confidence = 0.7;
  high.confidence = 0.9;
  const std::vector<Alignment> parts{Alignment{low}, Alignment{high}};
  const auto u = union_alignments(parts);
  REQUIRE(u.size() == 1);
  CHECK(u.begin()->confidence == 0.9);
}

TEST_CASE("report JSON uses fixed field names") {
  EvalReport r;
  r.precision = 0.5;
  r.coverage_ratio = 1.0;
  r.size_ratio_per_task = {0.25, 0.5};
  r.size_ratio_total = 0.75;
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j.at("precision") == 0.5);
  CHECK(j.at("recall").is_null());
  CHECK(j.at("f_measure").is_null());
  CHECK(j.at("coverage_ratio") == 1.0);
  CHECK(j.at("size_ratio_total") == 0.75);
  CHECK(j.at("size_ratio_per_task") == nlohmann::json::array({0.25, 0.5}));
}
