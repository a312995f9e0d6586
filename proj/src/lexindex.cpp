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

#include "ontodiv/lexindex.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <stdexcept>

#include "ontodiv/errors.hpp"
#include "ontodiv/stemmer.hpp"
#include "stopwords_data.hpp"

namespace ontodiv {

LexKey::LexKey(std::vector<std::string> w) : words(std::move(w)) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

std::string LexKey::str() const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += '|';
    out += words[i];
  }
  return out;
}

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = [] {
    std::set<std::string> out;
    std::string_view text = detail::kStopwordsEn;
    while (!text.empty()) {
      auto nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
        line.remove_suffix(1);
      }
      if (line.empty() || line.front() == '#') continue;
      out.emplace(line);
    }
    return out;
  }();
  return words;
}

LexIndex::LexIndex(std::vector<LexEntry> entries, std::size_t alpha, LexStats stats)
    : entries_(std::move(entries)), alpha_(alpha), stats_(stats) {
  std::sort(entries_.begin(), entries_.end(),
            [](const LexEntry& a, const LexEntry& b) { return a.key < b.key; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1].key == entries_[i].key) {
      throw std::invalid_argument("duplicate LexIndex key " + entries_[i].key.str());
    }
  }
}

const LexEntry* LexIndex::find(const LexKey& key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const LexEntry& e, const LexKey& k) { return e.key < k; });
  return it != entries_.end() && it->key == key ? &*it : nullptr;
}

std::set<std::string> normalize_label(std::string_view label,
                                      const std::set<std::string>& stopwords) {
  std::set<std::string> out;
  std::string word;
  auto flush = [&] {
    if (!word.empty() && !stopwords.contains(word)) out.insert(porter_stem(word));
    word.clear();
  };
  for (char ch : label) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || c >= 0x80) {
      word += static_cast<char>(std::tolower(c));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::vector<LexKey> word_subsets(const std::set<std::string>& words, std::size_t max_subsets) {
  std::vector<LexKey> out;
  const std::vector<std::string> sorted(words.begin(), words.end());
  const std::size_t n = sorted.size();
  if (n == 0 || max_subsets == 0) return out;
  const std::size_t min_size = n > 3 ? n - 2 : 1;
  for (std::size_t size = n; size >= min_size && out.size() < max_subsets; --size) {
    // Lexicographic k-combinations of the sorted words.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (out.size() < max_subsets) {
      std::vector<std::string> key;
      key.reserve(size);
      for (auto i : idx) key.push_back(sorted[i]);
      out.emplace_back(std::move(key));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (size == 1) break;
  }
  return out;
}

namespace {

void index_ontology(const Ontology& ontology, const LexConfig& config, bool is_source,
                    std::map<LexKey, LexValue>& raw) {
  for (const auto& entity : ontology.signature()) {
    for (const auto& label : entity_labels(ontology, entity)) {
      const auto words = normalize_label(label, config.stopwords);
      if (words.empty()) continue;
      auto keys = word_subsets(words, config.max_subsets);
      for (const auto& w : words) keys.emplace_back(std::vector<std::string>{w});
      for (const auto& key : keys) {
        auto& value = raw[key];
        (is_source ? value.source : value.target).insert(entity);
      }
    }
  }
}

}  // namespace

LexIndex build_lexi(const Ontology& source, const Ontology& target, const LexConfig& config) {
  if (config.alpha == 0) throw InputError("alpha must be positive");
  std::map<LexKey, LexValue> raw;
  index_ontology(source, config, true, raw);
  index_ontology(target, config, false, raw);

  LexStats stats;
  stats.raw_entries = raw.size();
  std::vector<LexEntry> kept;
  for (auto& [key, value] : raw) {
    if (value.source.empty() || value.target.empty()) {
      ++stats.one_sided_removed;
    } else if (value.size() > config.alpha) {
      ++stats.alpha_removed;
    } else {
      kept.push_back({key, std::move(value)});
    }
  }
  stats.retained = kept.size();
  return LexIndex(std::move(kept), config.alpha, stats);
}

Alignment mappings_of(std::span<const LexEntry> entries) {
  Alignment out;
  for (const auto& entry : entries) {
    for (const auto& s : entry.value.source) {
      for (const auto& t : entry.value.target) out.insert(Mapping{s.iri, t.iri});
    }
  }
  return out;
}

std::string format_lexindex(const LexIndex& index) {
  std::string out;
  auto join = [](const std::set<EntityRef>& entities) {
    std::string s;
    for (const auto& e : entities) {
      if (!s.empty()) s += ',';
      s += e.iri;
    }
    return s;
  };
  for (const auto& entry : index.entries()) {
    out += entry.key.str();
    out += '\t';
    out += join(entry.value.source);
    out += '\t';
    out += join(entry.value.target);
    out += '\n';
  }
  return out;
}

void write_lexindex(const LexIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_lexindex(index);
}

}  // namespace ontodiv
