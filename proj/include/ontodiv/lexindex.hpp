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

// Inverted lexical index over the labels of two ontologies.
//
// Each label is tokenized, stop-words are dropped and the remaining words
// are stemmed. Subsets of the resulting word set become keys; each key maps
// to the entities of either ontology whose labels produced it. Entries that
// only reference one ontology, or that reference more than `alpha` entities,
// are discarded.

#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontodiv/alignment.hpp"
#include "ontodiv/ontology.hpp"

namespace ontodiv {

/// Sorted, duplicate-free set of stemmed words.
struct LexKey {
  std::vector<std::string> words;

  LexKey() = default;
  explicit LexKey(std::vector<std::string> w);

  std::size_t size() const { return words.size(); }
  /// Words joined by '|'.
  std::string str() const;

  friend auto operator<=>(const LexKey&, const LexKey&) = default;
  friend bool operator==(const LexKey&, const LexKey&) = default;
};

struct LexValue {
  std::set<EntityRef> source;
  std::set<EntityRef> target;

  std::size_t size() const { return source.size() + target.size(); }
  friend bool operator==(const LexValue&, const LexValue&) = default;
};

struct LexEntry {
  LexKey key;
  LexValue value;
};

/// Version 1 of the bundled English list.
const std::set<std::string>& default_stopwords();

struct LexConfig {
  std::size_t alpha = 60;
  std::size_t max_subsets = 50;
  std::set<std::string> stopwords = default_stopwords();
};

struct LexStats {
  std::size_t raw_entries = 0;
  std::size_t one_sided_removed = 0;
  std::size_t alpha_removed = 0;
  std::size_t retained = 0;
};

class LexIndex {
 public:
  LexIndex() = default;
  /// Entries must have unique keys; they are stored sorted by key.
  LexIndex(std::vector<LexEntry> entries, std::size_t alpha, LexStats stats = {});

  const std::vector<LexEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t alpha() const { return alpha_; }
  const LexStats& stats() const { return stats_; }

  const LexEntry* find(const LexKey& key) const;

 private:
  std::vector<LexEntry> entries_;
  std::size_t alpha_ = 60;
  LexStats stats_;
};

/// Splits on every non-alphanumeric ASCII character, lower-cases, drops
/// stop-words and stems what is left.
std::set<std::string> normalize_label(std::string_view label,
                                      const std::set<std::string>& stopwords);

/// Subsets with max(1, n-2) <= size <= n, largest first, lexicographic within
/// a size, truncated to `max_subsets`.
std::vector<LexKey> word_subsets(const std::set<std::string>& words, std::size_t max_subsets);

/// Builds the index for the pair (source, target). Keys for a label are
/// word_subsets(...) plus every single word, so two entities sharing a stem
/// always meet in some entry before filtering.
LexIndex build_lexi(const Ontology& source, const Ontology& target, const LexConfig& config = {});

/// Cartesian product source x target of every entry, relation "=",
/// confidence 1.
Alignment mappings_of(std::span<const LexEntry> entries);

/// key-words (|-joined) \t source IRIs (,-joined) \t target IRIs (,-joined)
std::string format_lexindex(const LexIndex& index);
void write_lexindex(const LexIndex& index, const std::filesystem::path& path);

}  // namespace ontodiv
