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

// Reader and writer for the OWL 2 functional-syntax subset used by ontodiv.
//
//   Prefix(p:=<IRI>)*
//   Ontology([<IRI> [<IRI>]] axiom* )
//
// Axioms: Declaration(Class|ObjectProperty|NamedIndividual(x)),
// SubClassOf(C D), EquivalentClasses(C1 ... Cn), SubObjectPropertyOf(r s),
// AnnotationAssertion(p x "literal"[@lang|^^dt]).
// Class expressions: named classes, owl:Thing, owl:Nothing,
// ObjectIntersectionOf, ObjectUnionOf, ObjectSomeValuesFrom.
// '#' starts a comment outside IRIs and strings.

#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontodiv/ontology.hpp"

namespace ontodiv {

/// Parses `text`. Entities used by logical axioms without a declaration are
/// declared automatically (appended after the input axioms, in order of first
/// use) and reported through `warnings` and the log.
///
/// Throws ParseError (with line/column) on syntax errors, unsupported
/// constructs and arity violations.
Ontology parse_ontology(std::string_view text,
                        const std::set<std::string>& label_properties = default_label_properties(),
                        std::vector<std::string>* warnings = nullptr);

Ontology load_ontology(const std::filesystem::path& path,
                       const std::set<std::string>& label_properties = default_label_properties());

/// Functional-syntax rendering with full IRIs, one axiom per line.
std::string serialize_ontology(const Ontology& ontology);

void save_ontology(const Ontology& ontology, const std::filesystem::path& path);

}  // namespace ontodiv
