#include <algorithm>
#include <random>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "ontodiv/errors.hpp"
#include "ontodiv/ofn.hpp"
#include "ontodiv/ontology.hpp"
#include "support.hpp"

using namespace ontodiv;

namespace {

const std::string kEx = "http://example.org/t#";

std::string wrap(const std::string& body) {
  return "Prefix(:=<" + kEx + ">)\nOntology(<http://example.org/t>\n" + body + "\n)\n";
}

std::set<std::string> axiom_strings(const Ontology& o) {
  std::set<std::string> out;
  for (const auto& a : o.axioms()) out.insert(to_string(a));
  return out;
}

}  // namespace

TEST_CASE("minimal input gets an automatic declaration") {
  std::vector<std::string> warnings;
  const auto o = parse_ontology(wrap("Declaration(Class(:A)) SubClassOf(:A :B)"),
                                default_label_properties(), &warnings);
  REQUIRE(o.axioms().size() == 3);
  CHECK(std::holds_alternative<Declaration>(o.axioms()[0]));
  CHECK(std::holds_alternative<SubClassOf>(o.axioms()[1]));
  const auto* auto_decl = std::get_if<Declaration>(&o.axioms()[2]);
  REQUIRE(auto_decl != nullptr);
  CHECK(auto_decl->entity == make_class(kEx + "B"));
  CHECK(warnings.size() == 1);

  const auto sig = signature(o);
  CHECK(sig == std::vector<EntityRef>{make_class(kEx + "A"), make_class(kEx + "B")});
}

TEST_CASE("equivalence with one member is rejected") {
  try {
    parse_ontology(wrap("EquivalentClasses(:A)"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("EquivalentClasses requires ≥ 2 members") !=
          std::string::npos);
    CHECK(e.line() == 3);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_ontology("Ontology(<http://x>\n  SubClassOf(<http://x#A>\n)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("constructs outside the subset are hard errors naming the construct") {
  for (const std::string bad : {"SubClassOf(:A ObjectAllValuesFrom(:r :B))",
                                "Declaration(DataProperty(:d))", "DisjointClasses(:A :B)",
                                "SubClassOf(:A ObjectMinCardinality(1 :r :B))",
                                "Import(<http://other>)"}) {
    CAPTURE(bad);
    try {
      parse_ontology(wrap(bad));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("unsupported construct") != std::string::npos);
    }
  }
}

TEST_CASE("kind conflicts are rejected") {
  CHECK_THROWS_AS(parse_ontology(wrap("Declaration(ObjectProperty(:A)) SubClassOf(:A :B)")),
                  InputError);
}

TEST_CASE("comments, prefixed names and literals") {
  const auto o = parse_ontology(wrap(
      "# leading comment\n"
      "Declaration(Class(:A)) # trailing\n"
      "AnnotationAssertion(rdfs:label :A \"A \\\"quoted\\\" # label\"@en)\n"
      "AnnotationAssertion(skos:altLabel :A \"typed\"^^xsd:string)\n"));
  REQUIRE(o.axioms().size() == 3);
  const auto& a = std::get<AnnotationAssertion>(o.axioms()[1]);
  CHECK(a.literal == "A \"quoted\" # label");
  CHECK(a.language == "en");
  CHECK(a.property == std::string(iri::kRdfs) + "label");
  CHECK(entity_labels(o, make_class(kEx + "A")) ==
        std::vector<std::string>{"A \"quoted\" # label", "typed"});
}

TEST_CASE("empty ontology has an empty signature") {
  const auto o = parse_ontology("Ontology(<http://example.org/empty>)");
  CHECK(o.empty());
  CHECK(signature(o).empty());
}

TEST_CASE("axiom signatures") {
  const auto a = make_class(kEx + "A");
  const auto b = make_class(kEx + "B");
  const auto r = make_property(kEx + "r");
  CHECK(axiom_signature(SubClassOf{ClassExpr::named(a), ClassExpr::some(r, ClassExpr::named(b))}) ==
        std::set<EntityRef>{a, b, r});
  CHECK(axiom_signature(Declaration{a}) == std::set<EntityRef>{a});
  CHECK(axiom_signature(AnnotationAssertion{a, iri::rdfs_label(), "x", ""}) ==
        std::set<EntityRef>{a});
}

TEST_CASE("labels fall back to the IRI fragment") {
  CHECK(fragment_label("http://x.org/o#Lunate_facet_of_hamate") == "Lunate facet of hamate");
  CHECK(fragment_label("http://x.org/o/PregnancyDisorder") == "Pregnancy Disorder");
  CHECK(fragment_label("http://x.org/o#MA_0000003") == "MA 0000003");

  const auto o = parse_ontology(wrap(
      "Declaration(Class(:Lunate_facet_of_hamate))\n"
      "Declaration(Class(:PregnancyDisorder))\n"
      "Declaration(Class(:Basaloid_carcinoma))\n"
      "AnnotationAssertion(rdfs:label :Basaloid_carcinoma \"Basaloid carcinoma\")\n"
      "AnnotationAssertion(rdfs:comment :Basaloid_carcinoma \"not a label\")\n"
      "AnnotationAssertion(oboInOwl:hasExactSynonym :Basaloid_carcinoma \"Basaloid Ca\")\n"));
  CHECK(entity_labels(o, make_class(kEx + "Lunate_facet_of_hamate")) ==
        std::vector<std::string>{"Lunate facet of hamate"});
  CHECK(entity_labels(o, make_class(kEx + "PregnancyDisorder")) ==
        std::vector<std::string>{"Pregnancy Disorder"});
  CHECK(entity_labels(o, make_class(kEx + "Basaloid_carcinoma")) ==
        std::vector<std::string>{"Basaloid carcinoma", "Basaloid Ca"});
  CHECK_THROWS_AS(entity_labels(o, make_class(kEx + "Missing")), std::invalid_argument);
}

TEST_CASE("class expression invariants") {
  CHECK_THROWS_AS(ClassExpr::intersection({ClassExpr::thing()}), std::invalid_argument);
  CHECK_THROWS_AS(ClassExpr::union_of({}), std::invalid_argument);
  CHECK_THROWS_AS(ClassExpr::some(make_class(kEx + "A"), ClassExpr::thing()),
                  std::invalid_argument);
}

TEST_CASE("ontology construction requires declarations") {
  const auto a = make_class(kEx + "A");
  const auto b = make_class(kEx + "B");
  CHECK_THROWS_AS(Ontology("http://o", {Declaration{a}, SubClassOf{ClassExpr::named(a),
                                                                   ClassExpr::named(b)}}),
                  InputError);
}

TEST_CASE("anatomy toy fixture: 30 classes and 2 object properties") {
  const auto path = testing::data_path("anatomy_toy_1.ofn");
  const auto text = testing::read_text(path);
  // Independent count: declaration lines in the file.
  std::size_t class_lines = 0;
  std::size_t property_lines = 0;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("Declaration(Class(", 0) == 0) ++class_lines;
    if (line.rfind("Declaration(ObjectProperty(", 0) == 0) ++property_lines;
  }
  REQUIRE(class_lines == 30);
  REQUIRE(property_lines == 2);

  const auto o = load_ontology(path);
  const auto sig = signature(o);
  CHECK(std::count_if(sig.begin(), sig.end(),
                      [](const EntityRef& e) { return e.kind == EntityKind::kClass; }) == 30);
  CHECK(std::count_if(sig.begin(), sig.end(), [](const EntityRef& e) {
          return e.kind == EntityKind::kObjectProperty;
        }) == 2);
}

TEST_CASE("signature is the union of declared and used entities") {
  for (const auto* name : {"anatomy_toy_1.ofn", "anatomy_toy_2.ofn", "findings_o1.ofn"}) {
    const auto o = load_ontology(testing::data_path(name));
    std::set<EntityRef> expected;
    for (const auto& a : o.axioms()) {
      if (is_logical(a) || std::holds_alternative<Declaration>(a)) {
        auto s = axiom_signature(a);
        expected.insert(s.begin(), s.end());
      }
    }
    const auto sig = signature(o);
    CHECK(std::set<EntityRef>(sig.begin(), sig.end()) == expected);
  }
}

TEST_CASE("serialization round-trips") {
  for (const auto* name : {"anatomy_toy_1.ofn", "anatomy_toy_2.ofn", "findings_o2.ofn"}) {
    CAPTURE(name);
    const auto o = load_ontology(testing::data_path(name));
    const auto text = serialize_ontology(o);
    const auto again = parse_ontology(text);
    CHECK(again.iri() == o.iri());
    CHECK(axiom_strings(again) == axiom_strings(o));
    CHECK(again.axioms() == o.axioms());
    CHECK(serialize_ontology(again) == text);
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto o = testing::random_ontology(rng);
    CHECK(parse_ontology(serialize_ontology(o)).axioms() == o.axioms());
  }
}

TEST_CASE("parsing is deterministic") {
  const auto text = testing::read_text(testing::data_path("anatomy_toy_2.ofn"));
  CHECK(serialize_ontology(parse_ontology(text)) == serialize_ontology(parse_ontology(text)));
}

TEST_CASE("missing file reports the path") {
  try {
    load_ontology("/nonexistent/file.ofn");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/file.ofn") != std::string::npos);
  }
}
