// Copyright 2026 The ontodiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace ontodiv {

enum class EntityKind { kClass, kObjectProperty, kIndividual };

std::string_view to_string(EntityKind kind);

/// A named entity of an ontology. The IRI is always absolute (prefixes are
/// expanded at parse time) and identifies the entity within one ontology.
struct EntityRef {
  std::string iri;
  EntityKind kind = EntityKind::kClass;

  friend auto operator<=>(const EntityRef&, const EntityRef&) = default;
  friend bool operator==(const EntityRef&, const EntityRef&) = default;
};

inline EntityRef make_class(std::string iri) {
  return {std::move(iri), EntityKind::kClass};
}
inline EntityRef make_property(std::string iri) {
  return {std::move(iri), EntityKind::kObjectProperty};
}

/// Class expression in the supported EL-like fragment. Value type; operands
/// own their children.
class ClassExpr {
 public:
  enum class Kind {
    kNamed,
    kThing,
    kNothing,
    kIntersection,
    kUnion,
    kSomeValuesFrom,
  };

  static ClassExpr named(EntityRef cls);
  static ClassExpr named(std::string iri);
  static ClassExpr thing();
  static ClassExpr nothing();
  // Throw std::invalid_argument when given fewer than two members.
  static ClassExpr intersection(std::vector<ClassExpr> members);
  static ClassExpr union_of(std::vector<ClassExpr> members);
  static ClassExpr some(EntityRef property, ClassExpr filler);

  Kind kind() const { return kind_; }

  // Named class for kNamed, property for kSomeValuesFrom.
  const EntityRef& entity() const { return entity_; }
  // Members of an intersection/union; the single filler of an existential.
  const std::vector<ClassExpr>& operands() const { return operands_; }
  const ClassExpr& filler() const { return operands_.front(); }

  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;

 private:
  ClassExpr(Kind kind, EntityRef entity, std::vector<ClassExpr> operands)
      : kind_(kind), entity_(std::move(entity)), operands_(std::move(operands)) {}

  Kind kind_ = Kind::kThing;
  EntityRef entity_;
  std::vector<ClassExpr> operands_;
};

struct Declaration {
  EntityRef entity;
  friend bool operator==(const Declaration&, const Declaration&) = default;
};

struct SubClassOf {
  ClassExpr sub;
  ClassExpr sup;
  friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};

struct EquivalentClasses {
  std::vector<ClassExpr> members;  // at least two
  friend bool operator==(const EquivalentClasses&, const EquivalentClasses&) = default;
};

struct SubObjectPropertyOf {
  EntityRef sub;
  EntityRef sup;
  friend bool operator==(const SubObjectPropertyOf&, const SubObjectPropertyOf&) = default;
};

struct AnnotationAssertion {
  EntityRef subject;
  std::string property;  // IRI
  std::string literal;
  std::string language;  // empty when untagged
  friend bool operator==(const AnnotationAssertion&, const AnnotationAssertion&) = default;
};

using Axiom = std::variant<Declaration, SubClassOf, EquivalentClasses,
                           SubObjectPropertyOf, AnnotationAssertion>;

/// True for SubClassOf, EquivalentClasses and SubObjectPropertyOf.
bool is_logical(const Axiom& axiom);

/// Class and property names occurring in `axiom`; the subject for annotation
/// assertions (the annotation property is not part of it).
std::set<EntityRef> axiom_signature(const Axiom& axiom);

/// Canonical single-line functional-syntax rendering with full IRIs.
std::string to_string(const Axiom& axiom);
std::string to_string(const ClassExpr& expr);

namespace iri {
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kOboInOwl = "http://www.geneontology.org/formats/oboInOwl#";

std::string rdfs_label();
}  // namespace iri

/// rdfs:label, skos:prefLabel, skos:altLabel, oboInOwl:hasExactSynonym and
/// oboInOwl:hasRelatedSynonym.
const std::set<std::string>& default_label_properties();

/// Immutable ontology: axioms in input order plus derived indexes.
///
/// Construction validates that every entity used by a logical axiom is
/// declared with a matching kind; the signature is exactly the set of
/// declared entities.
class Ontology {
 public:
  Ontology() = default;
  Ontology(std::string iri, std::vector<Axiom> axioms,
           std::set<std::string> label_properties = default_label_properties());

  const std::string& iri() const { return iri_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  const std::set<std::string>& label_properties() const { return label_properties_; }

  /// Declared entities, sorted.
  const std::vector<EntityRef>& signature() const { return signature_; }
  bool empty() const { return signature_.empty(); }

  bool contains(const EntityRef& entity) const;
  std::optional<EntityRef> find(std::string_view iri) const;

  /// Axiom indexes mentioning `entity` (by axiom_signature), ascending.
  const std::vector<std::size_t>& axioms_mentioning(const EntityRef& entity) const;

 private:
  std::string iri_;
  std::vector<Axiom> axioms_;
  std::set<std::string> label_properties_;
  std::vector<EntityRef> signature_;
  std::unordered_map<std::string, EntityKind> kinds_;
  std::unordered_map<std::string, std::vector<std::size_t>> usage_;
};

std::vector<EntityRef> signature(const Ontology& ontology);

/// Label strings for `entity`, in axiom order. Falls back to the IRI fragment
/// with underscores and camel-case boundaries turned into spaces. Throws
/// std::invalid_argument if `entity` is not declared in `ontology`.
std::vector<std::string> entity_labels(const Ontology& ontology, const EntityRef& entity);

/// "Lunate_facet_of_hamate" -> "Lunate facet of hamate",
/// "PregnancyDisorder" -> "Pregnancy Disorder".
std::string fragment_label(std::string_view iri);

}  // namespace ontodiv
