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

#include "ontodiv/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ontodiv/errors.hpp"

namespace ontodiv {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void collect(const ClassExpr& expr, std::set<EntityRef>& out) {
  switch (expr.kind()) {
    case ClassExpr::Kind::kNamed:
      out.insert(expr.entity());
      break;
    case ClassExpr::Kind::kSomeValuesFrom:
      out.insert(expr.entity());
      collect(expr.filler(), out);
      break;
    case ClassExpr::Kind::kIntersection:
    case ClassExpr::Kind::kUnion:
      for (const auto& member : expr.operands()) collect(member, out);
      break;
    case ClassExpr::Kind::kThing:
    case ClassExpr::Kind::kNothing:
      break;
  }
}

std::string render_iri(const std::string& iri) { return "<" + iri + ">"; }

std::string render_literal(const AnnotationAssertion& a) {
  std::string out = "\"";
  for (char c : a.literal) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  if (!a.language.empty()) out += "@" + a.language;
  return out;
}

std::string_view declaration_keyword(EntityKind kind) {
  switch (kind) {
    case EntityKind::kClass:
      return "Class";
    case EntityKind::kObjectProperty:
      return "ObjectProperty";
    case EntityKind::kIndividual:
      return "NamedIndividual";
  }
  return "Class";
}

}  // namespace

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::kClass:
      return "class";
    case EntityKind::kObjectProperty:
      return "object-property";
    case EntityKind::kIndividual:
      return "individual";
  }
  return "class";
}

ClassExpr ClassExpr::named(EntityRef cls) {
  if (cls.iri.empty()) throw std::invalid_argument("named class requires an IRI");
  cls.kind = EntityKind::kClass;
  return ClassExpr(Kind::kNamed, std::move(cls), {});
}

ClassExpr ClassExpr::named(std::string iri) { return named(make_class(std::move(iri))); }

ClassExpr ClassExpr::thing() { return ClassExpr(Kind::kThing, {}, {}); }

ClassExpr ClassExpr::nothing() { return ClassExpr(Kind::kNothing, {}, {}); }

ClassExpr ClassExpr::intersection(std::vector<ClassExpr> members) {
  if (members.size() < 2) {
    throw std::invalid_argument("ObjectIntersectionOf requires >= 2 members");
  }
  return ClassExpr(Kind::kIntersection, {}, std::move(members));
}

ClassExpr ClassExpr::union_of(std::vector<ClassExpr> members) {
  if (members.size() < 2) throw std::invalid_argument("ObjectUnionOf requires >= 2 members");
  return ClassExpr(Kind::kUnion, {}, std::move(members));
}

ClassExpr ClassExpr::some(EntityRef property, ClassExpr filler) {
  if (property.kind != EntityKind::kObjectProperty) {
    throw std::invalid_argument("ObjectSomeValuesFrom requires an object property: " +
                                property.iri);
  }
  std::vector<ClassExpr> operands;
  operands.push_back(std::move(filler));
  return ClassExpr(Kind::kSomeValuesFrom, std::move(property), std::move(operands));
}

bool is_logical(const Axiom& axiom) {
  return std::holds_alternative<SubClassOf>(axiom) ||
         std::holds_alternative<EquivalentClasses>(axiom) ||
         std::holds_alternative<SubObjectPropertyOf>(axiom);
}

std::set<EntityRef> axiom_signature(const Axiom& axiom) {
  std::set<EntityRef> out;
  std::visit(Overloaded{
                 [&](const Declaration& a) { out.insert(a.entity); },
                 [&](const SubClassOf& a) {
                   collect(a.sub, out);
                   collect(a.sup, out);
                 },
                 [&](const EquivalentClasses& a) {
                   for (const auto& m : a.members) collect(m, out);
                 },
                 [&](const SubObjectPropertyOf& a) {
                   out.insert(a.sub);
                   out.insert(a.sup);
                 },
                 [&](const AnnotationAssertion& a) { out.insert(a.subject); },
             },
             axiom);
  return out;
}

std::string to_string(const ClassExpr& expr) {
  switch (expr.kind()) {
    case ClassExpr::Kind::kNamed:
      return render_iri(expr.entity().iri);
    case ClassExpr::Kind::kThing:
      return "owl:Thing";
    case ClassExpr::Kind::kNothing:
      return "owl:Nothing";
    case ClassExpr::Kind::kIntersection:
    case ClassExpr::Kind::kUnion: {
      std::string out = expr.kind() == ClassExpr::Kind::kIntersection ? "ObjectIntersectionOf("
                                                                      : "ObjectUnionOf(";
      for (std::size_t i = 0; i < expr.operands().size(); ++i) {
        if (i > 0) out += ' ';
        out += to_string(expr.operands()[i]);
      }
      return out + ")";
    }
    case ClassExpr::Kind::kSomeValuesFrom:
      return "ObjectSomeValuesFrom(" + render_iri(expr.entity().iri) + " " +
             to_string(expr.filler()) + ")";
  }
  return {};
}

std::string to_string(const Axiom& axiom) {
  return std::visit(
      Overloaded{
          [](const Declaration& a) {
            return "Declaration(" + std::string(declaration_keyword(a.entity.kind)) + "(" +
                   render_iri(a.entity.iri) + "))";
          },
          [](const SubClassOf& a) {
            return "SubClassOf(" + to_string(a.sub) + " " + to_string(a.sup) + ")";
          },
          [](const EquivalentClasses& a) {
            std::string out = "EquivalentClasses(";
            for (std::size_t i = 0; i < a.members.size(); ++i) {
              if (i > 0) out += ' ';
              out += to_string(a.members[i]);
            }
            return out + ")";
          },
          [](const SubObjectPropertyOf& a) {
            return "SubObjectPropertyOf(" + render_iri(a.sub.iri) + " " + render_iri(a.sup.iri) +
                   ")";
          },
          [](const AnnotationAssertion& a) {
            return "AnnotationAssertion(" + render_iri(a.property) + " " +
                   render_iri(a.subject.iri) + " " + render_literal(a) + ")";
          },
      },
      axiom);
}

std::string iri::rdfs_label() { return std::string(kRdfs) + "label"; }

const std::set<std::string>& default_label_properties() {
  static const std::set<std::string> props = {
      std::string(iri::kRdfs) + "label",
      std::string(iri::kSkos) + "prefLabel",
      std::string(iri::kSkos) + "altLabel",
      std::string(iri::kOboInOwl) + "hasExactSynonym",
      std::string(iri::kOboInOwl) + "hasRelatedSynonym",
  };
  return props;
}

Ontology::Ontology(std::string iri, std::vector<Axiom> axioms,
                   std::set<std::string> label_properties)
    : iri_(std::move(iri)),
      axioms_(std::move(axioms)),
      label_properties_(std::move(label_properties)) {
  for (const auto& axiom : axioms_) {
    if (const auto* decl = std::get_if<Declaration>(&axiom)) {
      const auto& e = decl->entity;
      if (e.iri.empty()) throw InputError("declaration with empty IRI");
      auto [it, inserted] = kinds_.emplace(e.iri, e.kind);
      if (!inserted && it->second != e.kind) {
        throw InputError("entity <" + e.iri + "> declared as both " +
                         std::string(to_string(it->second)) + " and " +
                         std::string(to_string(e.kind)));
      }
    }
  }
  for (std::size_t i = 0; i < axioms_.size(); ++i) {
    const bool logical = is_logical(axioms_[i]);
    for (const auto& e : axiom_signature(axioms_[i])) {
      auto it = kinds_.find(e.iri);
      if (logical) {
        if (it == kinds_.end()) {
          throw InputError("entity <" + e.iri + "> is used in " + to_string(axioms_[i]) +
                           " but not declared");
        }
        if (it->second != e.kind) {
          throw InputError("entity <" + e.iri + "> used as " + std::string(to_string(e.kind)) +
                           " but declared as " + std::string(to_string(it->second)));
        }
      }
      usage_[e.iri].push_back(i);
    }
  }
  signature_.reserve(kinds_.size());
  for (const auto& [name, kind] : kinds_) signature_.push_back({name, kind});
  std::sort(signature_.begin(), signature_.end());
}

bool Ontology::contains(const EntityRef& entity) const {
  auto it = kinds_.find(entity.iri);
  return it != kinds_.end() && it->second == entity.kind;
}

std::optional<EntityRef> Ontology::find(std::string_view iri) const {
  auto it = kinds_.find(std::string(iri));
  if (it == kinds_.end()) return std::nullopt;
  return EntityRef{it->first, it->second};
}

const std::vector<std::size_t>& Ontology::axioms_mentioning(const EntityRef& entity) const {
  static const std::vector<std::size_t> kNone;
  auto it = usage_.find(entity.iri);
  return it == usage_.end() ? kNone : it->second;
}

std::vector<EntityRef> signature(const Ontology& ontology) { return ontology.signature(); }

std::string fragment_label(std::string_view iri) {
  auto cut = iri.find_last_of("#/");
  std::string_view fragment = cut == std::string_view::npos ? iri : iri.substr(cut + 1);
  std::string out;
  out.reserve(fragment.size() + 4);
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(fragment[i]);
    if (c == '_') {
      if (!out.empty() && out.back() != ' ') out += ' ';
      continue;
    }
    if (std::isupper(c) && i > 0) {
      const unsigned char prev = static_cast<unsigned char>(fragment[i - 1]);
      if ((std::islower(prev) || std::isdigit(prev)) && !out.empty() && out.back() != ' ') {
        out += ' ';
      }
    }
    out += static_cast<char>(c);
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<std::string> entity_labels(const Ontology& ontology, const EntityRef& entity) {
  if (!ontology.contains(entity)) {
    throw std::invalid_argument("entity <" + entity.iri + "> is not in the signature");
  }
  std::vector<std::string> labels;
  for (std::size_t index : ontology.axioms_mentioning(entity)) {
    const auto* a = std::get_if<AnnotationAssertion>(&ontology.axioms()[index]);
    if (a != nullptr && a->subject.iri == entity.iri &&
        ontology.label_properties().contains(a->property)) {
      labels.push_back(a->literal);
    }
  }
  if (labels.empty()) labels.push_back(fragment_label(entity.iri));
  return labels;
}

}  // namespace ontodiv
