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

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <tuple>

namespace ontodiv {

enum class Relation { kEquivalent, kSubsumedBy, kSubsumes };

/// "=", "<", ">".
std::string_view relation_symbol(Relation relation);
Relation parse_relation(std::string_view symbol);

/// Correspondence between a source entity and a target entity, both by IRI.
/// Identity (ordering and equality) ignores the confidence.
struct Mapping {
  std::string source;
  std::string target;
  Relation relation = Relation::kEquivalent;
  double confidence = 1.0;

  auto key() const { return std::tie(source, target, relation); }
  friend bool operator<(const Mapping& a, const Mapping& b) { return a.key() < b.key(); }
  friend bool operator==(const Mapping& a, const Mapping& b) { return a.key() == b.key(); }
};

/// Set of mappings, ordered by (source, target, relation). Inserting a
/// duplicate keeps the larger confidence.
class Alignment {
 public:
  using const_iterator = std::set<Mapping>::const_iterator;

  Alignment() = default;
  Alignment(std::initializer_list<Mapping> mappings);

  void insert(Mapping mapping);
  bool contains(const Mapping& mapping) const { return mappings_.contains(mapping); }

  std::size_t size() const { return mappings_.size(); }
  bool empty() const { return mappings_.empty(); }
  const_iterator begin() const { return mappings_.begin(); }
  const_iterator end() const { return mappings_.end(); }

  std::string source_label;
  std::string target_label;

  /// Compares mapping identities only.
  friend bool operator==(const Alignment& a, const Alignment& b) {
    return a.mappings_ == b.mappings_;
  }

 private:
  std::set<Mapping> mappings_;
};

/// Tab-separated `source-iri  target-iri  relation  confidence`, sorted.
/// Blank lines and lines starting with '#' are ignored when reading; the
/// relation and confidence columns are optional (default "=" and 1.0).
Alignment read_alignment(const std::filesystem::path& path);
Alignment parse_alignment(std::string_view text);
std::string format_alignment(const Alignment& alignment);
void write_alignment(const Alignment& alignment, const std::filesystem::path& path);

}  // namespace ontodiv
