#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "json.hpp"
#include "ontodiv/division.hpp"
#include "ontodiv/errors.hpp"
#include "ontodiv/locality.hpp"
#include "ontodiv/metrics.hpp"
#include "ontodiv/ofn.hpp"
#include "support.hpp"

using namespace ontodiv;

namespace {

const std::string kO1 = "http://example.org/o1#";
const std::string kO2 = "http://example.org/o2#";

struct Toy {
  Ontology o1 = load_ontology(testing::data_path("anatomy_toy_1.ofn"));
  Ontology o2 = load_ontology(testing::data_path("anatomy_toy_2.ofn"));
};

DivisionConfig quick(std::uint64_t seed = 1) {
  DivisionConfig cfg;
  cfg.training.epochs = 20;
  cfg.training.dim = 16;
  cfg.training.seed = seed;
  return cfg;
}

std::vector<std::string> strings(const Ontology& o) {
  std::vector<std::string> out;
  for (const auto& a : o.axioms()) out.push_back(to_string(a));
  return out;
}

bool contains(const Ontology& o, const std::string& iri) { return o.find(iri).has_value(); }

}  // namespace

TEST_CASE("subtask from the disorder rows") {
  const auto o1 = load_ontology(testing::data_path("findings_o1.ofn"));
  const auto o2 = load_ontology(testing::data_path("findings_o2.ofn"));
  const auto index = build_lexi(o1, o2);
  std::vector<LexEntry> rows{*index.find(LexKey({"disord"})),
                             *index.find(LexKey({"disord", "pregnanc"}))};
  const auto task = subtask_from_cluster(rows, o1, o2, 7);
  CHECK(task.id == 7);
  CHECK(task.candidates.contains({kO1 + "Disorder_of_stomach", kO2 + "Pregnancy_Disorder"}));
  CHECK(task.candidates.size() == 2);
  for (const auto* name : {"Disorder_of_pregnancy", "Disorder_of_stomach", "Clinical_finding"}) {
    CHECK(contains(task.source, kO1 + name));
  }
  CHECK(contains(task.target, kO2 + "Pregnancy_Disorder"));
  CHECK(contains(task.target, kO2 + "Maternal_Condition"));
  CHECK_FALSE(contains(task.source, kO1 + "Neoplasm"));
  CHECK(coverage(task, task.candidates) == task.candidates);

  CHECK_THROWS_AS(subtask_from_cluster({}, o1, o2), std::invalid_argument);
}

TEST_CASE("singleton cluster") {
  Toy t;
  const auto index = build_lexi(t.o1, t.o2);
  const auto* entry = index.find(LexKey({"femur"}));
  REQUIRE(entry != nullptr);
  REQUIRE(entry->value.size() == 2);
  const auto task = subtask_from_cluster(std::span<const LexEntry>(entry, 1), t.o1, t.o2);
  REQUIRE(task.candidates.size() == 1);
  const auto& m = *task.candidates.begin();
  CHECK(strings(task.source) ==
        strings(extract_module(t.o1, Signature{*t.o1.find(m.source)}).ontology));
  CHECK(strings(task.target) ==
        strings(extract_module(t.o2, Signature{*t.o2.find(m.target)}).ontology));
}

TEST_CASE("one subtask is the context of all candidates") {
  Toy t;
  PipelineTrace trace;
  const auto d = divide(t.o1, t.o2, 1, quick(), &trace);
  REQUIRE(d.subtasks.size() == 1);
  const auto all = mappings_of(trace.index.entries());
  CHECK(d.subtasks[0].candidates == all);
  auto [m1, m2] = context_of(all, t.o1, t.o2);
  CHECK(strings(d.subtasks[0].source) == strings(m1.ontology));
  CHECK(strings(d.subtasks[0].target) == strings(m2.ontology));
}

TEST_CASE("divisions cover their own candidates") {
  Toy t;
  for (std::size_t n : {1, 2, 3, 4}) {
    CAPTURE(n);
    PipelineTrace trace;
    const auto d = divide(t.o1, t.o2, n, quick(n), &trace);
    REQUIRE(d.subtasks.size() == n);
    const auto all = mappings_of(trace.index.entries());
    CHECK(coverage_ratio(d, all) == 1.0);

    std::vector<Alignment> parts;
    for (const auto& task : d.subtasks) {
      parts.push_back(task.candidates);
      CHECK_FALSE(task.source.empty());
      CHECK_FALSE(task.target.empty());
      for (const auto& m : task.candidates) {
        CHECK(task.source.find(m.source));
        CHECK(task.target.find(m.target));
      }
      // Emitted modules are closed: re-extracting from the seeds reproduces them.
      auto [m1, m2] = context_of(task.candidates, t.o1, t.o2);
      CHECK(is_closed_module(t.o1, m1));
      CHECK(strings(task.source) == strings(m1.ontology));
    }
    CHECK(union_alignments(parts) == all);
  }
}

TEST_CASE("divide is deterministic") {
  Toy t;
  const auto a = divide(t.o1, t.o2, 3, quick(9));
  auto cfg = quick(9);
  cfg.threads = 1;
  const auto b = divide(t.o1, t.o2, 3, cfg);
  REQUIRE(a.subtasks.size() == b.subtasks.size());
  for (std::size_t i = 0; i < a.subtasks.size(); ++i) {
    CHECK(a.subtasks[i].candidates == b.subtasks[i].candidates);
    CHECK(strings(a.subtasks[i].source) == strings(b.subtasks[i].source));
    CHECK(strings(a.subtasks[i].target) == strings(b.subtasks[i].target));
  }
}

TEST_CASE("size ratios sum over subtasks") {
  Toy t;
  const auto d = divide(t.o1, t.o2, 4, quick(2));
  double expected = 0.0;
  for (const auto& task : d.subtasks) {
    // Brute-force signature counts.
    std::size_t s = 0, u = 0;
    for (const auto& e : t.o1.signature()) s += task.source.contains(e) ? 1 : 0;
    for (const auto& e : t.o2.signature()) u += task.target.contains(e) ? 1 : 0;
    CHECK(s == task.source.signature().size());
    expected += static_cast<double>(s * u) /
                static_cast<double>(t.o1.signature().size() * t.o2.signature().size());
  }
  CHECK(size_ratio_division(d, t.o1, t.o2) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("coverage of the handcrafted reference") {
  Toy t;
  const auto reference = read_alignment(testing::data_path("anatomy_toy_reference.tsv"));
  REQUIRE(reference.size() == 10);
  const auto d = divide(t.o1, t.o2, 3, quick(4));
  std::size_t members = 0;
  for (const auto& m : reference) {
    bool covered = false;
    for (const auto& task : d.subtasks) {
      covered = covered || (task.source.find(m.source) && task.target.find(m.target));
    }
    members += covered ? 1 : 0;
  }
  CHECK(members == 9);
  CHECK(coverage_ratio(d, reference) == static_cast<double>(members) / 10.0);
}

TEST_CASE("argument errors") {
  Toy t;
  CHECK_THROWS_AS(divide(t.o1, t.o2, 0, quick()), InputError);
  const auto entries = build_lexi(t.o1, t.o2).size();
  try {
    divide(t.o1, t.o2, entries + 1, quick());
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("smaller n") != std::string::npos);
  }
  const auto lone = parse_ontology(
      "Ontology(<http://x> Declaration(Class(<http://x#Zebra>)))");
  CHECK_THROWS_AS(divide(t.o1, lone, 1, quick()), InputError);
}

TEST_CASE("division directory round trip") {
  Toy t;
  const auto d = divide(t.o1, t.o2, 2, quick(3));
  const auto dir = testing::scratch_dir("division");
  write_division(d, t.o1, t.o2, dir);
  for (const auto* f : {"task_0/source.ofn", "task_0/target.ofn", "task_0/candidates.tsv",
                        "task_1/source.ofn", "division.json"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
  const auto manifest = nlohmann::json::parse(testing::read_text(dir / "division.json"));
  CHECK(manifest.at("n") == 2);
  CHECK(manifest.at("provenance").at("seed") == 3);
  CHECK(manifest.at("provenance").at("dim") == 16);
  CHECK(manifest.at("provenance").at("alpha") == 60);
  CHECK(manifest.at("provenance").at("max_subsets") == 50);
  CHECK(manifest.at("tasks").size() == 2);
  CHECK(manifest.at("size_ratio_total").get<double>() ==
        doctest::Approx(size_ratio_division(d, t.o1, t.o2)));

  const auto stored = read_division(dir);
  CHECK(stored.division.n == 2);
  CHECK(stored.source_signature == t.o1.signature().size());
  CHECK(stored.division.provenance.seed == 3);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(stored.division.subtasks[i].candidates == d.subtasks[i].candidates);
    CHECK(stored.division.subtasks[i].source.signature() == d.subtasks[i].source.signature());
    CHECK(stored.division.subtasks[i].target.axioms() == d.subtasks[i].target.axioms());
  }

  std::filesystem::remove(dir / "task_1" / "target.ofn");
  CHECK_THROWS_AS(read_division(dir), InputError);
  CHECK_THROWS_AS(read_division(dir / "missing"), InputError);
  std::filesystem::remove_all(dir);
}
