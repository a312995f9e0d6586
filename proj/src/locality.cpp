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

#include "ontodiv/locality.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <deque>

namespace ontodiv {

bool is_bot_equivalent(const ClassExpr& c, const Signature& sig) {
  switch (c.kind()) {
    case ClassExpr::Kind::kNamed:
      return !sig.contains(c.entity());
    case ClassExpr::Kind::kNothing:
      return true;
    case ClassExpr::Kind::kThing:
      return false;
    case ClassExpr::Kind::kIntersection:
      return std::any_of(c.operands().begin(), c.operands().end(),
                         [&](const ClassExpr& m) { return is_bot_equivalent(m, sig); });
    case ClassExpr::Kind::kUnion:
      return std::all_of(c.operands().begin(), c.operands().end(),
                         [&](const ClassExpr& m) { return is_bot_equivalent(m, sig); });
    case ClassExpr::Kind::kSomeValuesFrom:
      return !sig.contains(c.entity()) || is_bot_equivalent(c.filler(), sig);
  }
  return false;
}

bool is_top_equivalent(const ClassExpr& c, const Signature& sig) {
  switch (c.kind()) {
    case ClassExpr::Kind::kThing:
      return true;
    case ClassExpr::Kind::kIntersection:
      return std::all_of(c.operands().begin(), c.operands().end(),
                         [&](const ClassExpr& m) { return is_top_equivalent(m, sig); });
    case ClassExpr::Kind::kUnion:
      return std::any_of(c.operands().begin(), c.operands().end(),
                         [&](const ClassExpr& m) { return is_top_equivalent(m, sig); });
    case ClassExpr::Kind::kNamed:
    case ClassExpr::Kind::kNothing:
    case ClassExpr::Kind::kSomeValuesFrom:
      return false;
  }
  return false;
}

bool is_local(const Axiom& axiom, const Signature& sig) {
  if (const auto* a = std::get_if<SubClassOf>(&axiom)) {
    return is_bot_equivalent(a->sub, sig) || is_top_equivalent(a->sup, sig);
  }
  if (const auto* a = std::get_if<EquivalentClasses>(&axiom)) {
    const auto& m = a->members;
    return std::all_of(m.begin(), m.end(), [&](const ClassExpr& c) { return is_bot_equivalent(c, sig); }) ||
           std::all_of(m.begin(), m.end(), [&](const ClassExpr& c) { return is_top_equivalent(c, sig); });
  }
  if (const auto* a = std::get_if<SubObjectPropertyOf>(&axiom)) {
    return !sig.contains(a->sub);
  }
  return true;
}

namespace {

Signature restrict_seed(const Ontology& ontology, const Signature& seed) {
  Signature out;
  for (const auto& e : seed.entities()) {
    if (ontology.contains(e)) {
      out.insert(e);
    } else {
      spdlog::warn("seed entity <{}> is not in ontology <{}>; ignored", e.iri, ontology.iri());
    }
  }
  return out;
}

Ontology assemble(const Ontology& ontology, const Signature& closure,
                  const std::vector<std::size_t>& logical) {
  std::vector<bool> keep(ontology.axioms().size(), false);
  for (auto i : logical) keep[i] = true;
  for (const auto& e : closure.entities()) {
    for (auto i : ontology.axioms_mentioning(e)) {
      const auto& axiom = ontology.axioms()[i];
      if (const auto* d = std::get_if<Declaration>(&axiom)) {
        if (d->entity == e) keep[i] = true;
      } else if (const auto* a = std::get_if<AnnotationAssertion>(&axiom)) {
        if (a->subject.iri == e.iri) keep[i] = true;
      }
    }
  }
  std::vector<Axiom> axioms;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) axioms.push_back(ontology.axioms()[i]);
  }
  return Ontology(ontology.iri(), std::move(axioms), ontology.label_properties());
}

}  // namespace

Module extract_module(const Ontology& ontology, const Signature& seed) {
  Module module;
  module.seed = restrict_seed(ontology, seed);
  Signature sig = module.seed;

  const auto& axioms = ontology.axioms();
  std::vector<bool> in_module(axioms.size(), false);
  std::deque<EntityRef> pending;

  auto add_axiom = [&](std::size_t i) {
    in_module[i] = true;
    for (const auto& e : axiom_signature(axioms[i])) {
      if (sig.insert(e)) pending.push_back(e);
    }
  };

  // Locality of an axiom only depends on which of its own names are in the
  // signature, so after the first scan only axioms mentioning a newly added
  // name need rechecking.
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (is_logical(axioms[i]) && !in_module[i] && !is_local(axioms[i], sig)) add_axiom(i);
  }
  while (!pending.empty()) {
    const EntityRef e = pending.front();
    pending.pop_front();
    for (auto i : ontology.axioms_mentioning(e)) {
      if (in_module[i] || !is_logical(axioms[i])) continue;
      if (!is_local(axioms[i], sig)) add_axiom(i);
    }
  }

  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (in_module[i]) module.logical_axioms.push_back(i);
  }
  module.ontology = assemble(ontology, sig, module.logical_axioms);
  return module;
}

std::vector<std::size_t> naive_module_axioms(const Ontology& ontology, const Signature& seed) {
  Signature sig;
  for (const auto& e : seed.entities()) {
    if (ontology.contains(e)) sig.insert(e);
  }
  const auto& axioms = ontology.axioms();
  std::vector<bool> in_module(axioms.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      if (in_module[i] || !is_logical(axioms[i]) || is_local(axioms[i], sig)) continue;
      in_module[i] = true;
      changed = true;
      for (const auto& e : axiom_signature(axioms[i])) sig.insert(e);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (in_module[i]) out.push_back(i);
  }
  return out;
}

bool is_closed_module(const Ontology& ontology, const Module& module) {
  Signature sig = module.seed;
  for (auto i : module.logical_axioms) {
    for (const auto& e : axiom_signature(ontology.axioms()[i])) sig.insert(e);
  }
  std::vector<bool> in_module(ontology.axioms().size(), false);
  for (auto i : module.logical_axioms) in_module[i] = true;
  for (std::size_t i = 0; i < ontology.axioms().size(); ++i) {
    if (!in_module[i] && is_logical(ontology.axioms()[i]) &&
        !is_local(ontology.axioms()[i], sig)) {
      return false;
    }
  }
  return true;
}

std::pair<Module, Module> context_of(const Alignment& mappings, const Ontology& source,
                                     const Ontology& target) {
  Signature left;
  Signature right;
  for (const auto& m : mappings) {
    auto e1 = source.find(m.source);
    auto e2 = target.find(m.target);
    if (!e1 || !e2) {
      spdlog::warn("mapping <{}> -> <{}> references an unknown entity; dropped", m.source,
                   m.target);
      continue;
    }
    left.insert(*e1);
    right.insert(*e2);
  }
  return {extract_module(source, left), extract_module(target, right)};
}

}  // namespace ontodiv
