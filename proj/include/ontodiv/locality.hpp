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

// Syntactic bottom-locality and module extraction.
//
// An axiom is local w.r.t. a signature S when replacing every class and
// property name outside S by the empty concept/relation turns it into a
// tautology, as recognized by the syntactic rules below. The module for a
// seed signature is the least set of axioms M such that every axiom outside
// M is local w.r.t. seed + sig(M).

#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "ontodiv/alignment.hpp"
#include "ontodiv/ontology.hpp"

namespace ontodiv {

class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<EntityRef> entities) : entities_(entities) {}
  explicit Signature(std::set<EntityRef> entities) : entities_(std::move(entities)) {}

  bool contains(const EntityRef& e) const { return entities_.contains(e); }
  bool insert(const EntityRef& e) { return entities_.insert(e).second; }
  std::size_t size() const { return entities_.size(); }
  bool empty() const { return entities_.empty(); }
  const std::set<EntityRef>& entities() const { return entities_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::set<EntityRef> entities_;
};

/// C is equivalent to owl:Nothing once names outside `sig` are emptied.
bool is_bot_equivalent(const ClassExpr& c, const Signature& sig);

/// C is equivalent to owl:Thing once names outside `sig` are emptied.
bool is_top_equivalent(const ClassExpr& c, const Signature& sig);

/// Declarations and annotation assertions are always local.
bool is_local(const Axiom& axiom, const Signature& sig);

struct Module {
  Ontology ontology;                       // logical axioms plus declarations/annotations
  Signature seed;                          // seed restricted to the source signature
  std::vector<std::size_t> logical_axioms; // indexes into the source ontology, ascending
};

/// Bottom-locality module of `ontology` for `seed`. Seed entities not in the
/// ontology are skipped with a warning. Declarations and annotation
/// assertions for every entity of the module (and of the seed) are appended so the
/// module is a self-contained ontology.
Module extract_module(const Ontology& ontology, const Signature& seed);

/// Same fixpoint computed by repeated full scans; intended for checking.
std::vector<std::size_t> naive_module_axioms(const Ontology& ontology, const Signature& seed);

/// True if no logical axiom of `ontology` outside the module is non-local
/// w.r.t. seed + sig(module).
bool is_closed_module(const Ontology& ontology, const Module& module);

/// Pair of modules for the source and target entities of `mappings`.
/// Mappings whose entities are not in the respective signatures are dropped
/// with a warning.
std::pair<Module, Module> context_of(const Alignment& mappings, const Ontology& source,
                                     const Ontology& target);

}  // namespace ontodiv
