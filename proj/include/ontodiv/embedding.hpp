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

// Word/entity embeddings trained on the lexical index.
//
// Positive examples are (key word, value entity) pairs of every index entry.
// Each positive is ranked against `negatives` entities drawn from the values
// of the index with a margin hinge loss on dot-product similarity, and the
// vectors are updated with plain SGD under a linearly decaying learning rate.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontodiv/lexindex.hpp"

namespace ontodiv {

struct TrainingConfig {
  std::size_t dim = 64;
  std::size_t epochs = 100;
  std::size_t negatives = 10;
  double margin = 0.05;
  double learning_rate = 0.05;  // decays linearly to 0 over all updates
  double max_norm = 10.0;       // vectors are projected back into this ball
  std::uint64_t seed = 0;

  /// Throws InputError on a non-positive dim/negatives/learning rate or a
  /// negative margin.
  void validate() const;
};

/// Raised when training produces a NaN or infinite value.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmbeddingSpace {
 public:
  EmbeddingSpace() = default;
  /// Zero-initialized vectors for the given (deduplicated) tokens.
  EmbeddingSpace(std::size_t dim, std::vector<std::string> words,
                 std::vector<std::string> entities);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& words() const { return words_; }
  const std::vector<std::string>& entities() const { return entities_; }

  bool has_word(std::string_view word) const;
  bool has_entity(std::string_view iri) const;

  /// Throw std::out_of_range naming the missing token.
  std::span<const double> word(std::string_view word) const;
  std::span<const double> entity(std::string_view iri) const;
  std::span<double> word(std::string_view word);
  std::span<double> entity(std::string_view iri);

  /// Rows: words first (in words() order), then entities.
  std::span<double> row(std::size_t index);
  std::span<const double> row(std::size_t index) const;
  std::size_t word_row(std::string_view word) const;
  std::size_t entity_row(std::string_view iri) const;

  friend bool operator==(const EmbeddingSpace&, const EmbeddingSpace&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<std::string> entities_;
  std::unordered_map<std::string, std::size_t> word_rows_;
  std::unordered_map<std::string, std::size_t> entity_rows_;
  std::vector<double> data_;
};

struct PositivePair {
  std::string word;
  EntityRef entity;
  friend bool operator==(const PositivePair&, const PositivePair&) = default;
};

/// For every entry, each key word paired with each value entity (source side
/// first), in index order.
std::vector<PositivePair> positive_pairs(const LexIndex& index);

/// Draws from the multiset of all value entities (an entity listed under k
/// entries has k chances).
class NegativeSampler {
 public:
  explicit NegativeSampler(const LexIndex& index);

  std::size_t population() const { return pool_.size(); }
  /// Index into the pool; uniform with replacement.
  const EntityRef& draw(std::mt19937_64& rng) const;

 private:
  std::vector<EntityRef> pool_;
};

/// `count` uniform draws with replacement. Throws std::invalid_argument when
/// count is 0 or the index has no entities.
std::vector<EntityRef> sample_negatives(const LexIndex& index, std::size_t count,
                                        std::mt19937_64& rng);

/// Dot product. Throws std::invalid_argument on a length mismatch.
double similarity(std::span<const double> a, std::span<const double> b);

struct HingeGradient {
  double loss = 0.0;
  std::vector<double> word;
  std::vector<double> positive;
  std::vector<std::vector<double>> negatives;
};

/// Loss sum_k max(0, margin - w.e + w.e_k) and its gradient with respect to
/// every argument (each negative treated as an independent vector).
HingeGradient hinge_loss_gradient(std::span<const double> word, std::span<const double> positive,
                                  const std::vector<std::span<const double>>& negatives,
                                  double margin);

/// Trains from a seeded uniform [-1/d, 1/d] initialization. If `epoch_loss`
/// is given it receives the summed loss of every epoch. epochs == 0 returns
/// the initialization.
EmbeddingSpace train_embeddings(const LexIndex& index, const TrainingConfig& config,
                                std::vector<double>* epoch_loss = nullptr);

/// Seeded initialization only.
EmbeddingSpace initial_embeddings(const LexIndex& index, const TrainingConfig& config);

struct EntryVector {
  LexKey key;
  std::vector<double> vector;  // 2 * dim
};

/// Mean of the key-word vectors followed by the mean of the value-entity
/// vectors. Throws std::out_of_range naming any token without a vector.
EntryVector entry_vector(const LexEntry& entry, const EmbeddingSpace& space);

/// token \t word|entity \t dim values with 9 significant digits.
std::string format_embeddings(const EmbeddingSpace& space);
void write_embeddings(const EmbeddingSpace& space, const std::filesystem::path& path);

}  // namespace ontodiv
