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

#include "ontodiv/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "ontodiv/errors.hpp"

namespace ontodiv {

void TrainingConfig::validate() const {
  if (dim == 0) throw InputError("dim must be positive");
  if (negatives == 0) throw InputError("negatives must be positive");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InputError("learning rate must be positive");
  }
  if (!(margin >= 0.0) || !std::isfinite(margin)) throw InputError("margin must be >= 0");
  if (!(max_norm > 0.0)) throw InputError("max norm must be positive");
}

EmbeddingSpace::EmbeddingSpace(std::size_t dim, std::vector<std::string> words,
                               std::vector<std::string> entities)
    : dim_(dim), words_(std::move(words)), entities_(std::move(entities)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  std::sort(entities_.begin(), entities_.end());
  entities_.erase(std::unique(entities_.begin(), entities_.end()), entities_.end());
  for (std::size_t i = 0; i < words_.size(); ++i) word_rows_.emplace(words_[i], i);
  for (std::size_t i = 0; i < entities_.size(); ++i) {
    entity_rows_.emplace(entities_[i], words_.size() + i);
  }
  data_.assign((words_.size() + entities_.size()) * dim_, 0.0);
}

bool EmbeddingSpace::has_word(std::string_view word) const {
  return word_rows_.contains(std::string(word));
}

bool EmbeddingSpace::has_entity(std::string_view iri) const {
  return entity_rows_.contains(std::string(iri));
}

std::size_t EmbeddingSpace::word_row(std::string_view word) const {
  auto it = word_rows_.find(std::string(word));
  if (it == word_rows_.end()) throw std::out_of_range("no vector for word '" + std::string(word) + "'");
  return it->second;
}

std::size_t EmbeddingSpace::entity_row(std::string_view iri) const {
  auto it = entity_rows_.find(std::string(iri));
  if (it == entity_rows_.end()) {
    throw std::out_of_range("no vector for entity <" + std::string(iri) + ">");
  }
  return it->second;
}

std::span<double> EmbeddingSpace::row(std::size_t index) {
  return std::span<double>(data_).subspan(index * dim_, dim_);
}

std::span<const double> EmbeddingSpace::row(std::size_t index) const {
  return std::span<const double>(data_).subspan(index * dim_, dim_);
}

std::span<const double> EmbeddingSpace::word(std::string_view word) const {
  return row(word_row(word));
}
std::span<const double> EmbeddingSpace::entity(std::string_view iri) const {
  return row(entity_row(iri));
}
std::span<double> EmbeddingSpace::word(std::string_view word) { return row(word_row(word)); }
std::span<double> EmbeddingSpace::entity(std::string_view iri) { return row(entity_row(iri)); }

std::vector<PositivePair> positive_pairs(const LexIndex& index) {
  std::vector<PositivePair> out;
  for (const auto& entry : index.entries()) {
    for (const auto& word : entry.key.words) {
      for (const auto& e : entry.value.source) out.push_back({word, e});
      for (const auto& e : entry.value.target) out.push_back({word, e});
    }
  }
  return out;
}

NegativeSampler::NegativeSampler(const LexIndex& index) {
  for (const auto& entry : index.entries()) {
    pool_.insert(pool_.end(), entry.value.source.begin(), entry.value.source.end());
    pool_.insert(pool_.end(), entry.value.target.begin(), entry.value.target.end());
  }
}

const EntityRef& NegativeSampler::draw(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  return pool_[pick(rng)];
}

std::vector<EntityRef> sample_negatives(const LexIndex& index, std::size_t count,
                                        std::mt19937_64& rng) {
  if (count == 0) throw std::invalid_argument("number of negatives must be >= 1");
  NegativeSampler sampler(index);
  if (sampler.population() == 0) throw std::invalid_argument("index has no entities");
  std::vector<EntityRef> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.draw(rng));
  return out;
}

double similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("similarity: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

HingeGradient hinge_loss_gradient(std::span<const double> word, std::span<const double> positive,
                                  const std::vector<std::span<const double>>& negatives,
                                  double margin) {
  const std::size_t d = word.size();
  HingeGradient g;
  g.word.assign(d, 0.0);
  g.positive.assign(d, 0.0);
  g.negatives.assign(negatives.size(), std::vector<double>(d, 0.0));
  const double pos = similarity(word, positive);
  for (std::size_t k = 0; k < negatives.size(); ++k) {
    const double violation = margin - pos + similarity(word, negatives[k]);
    if (violation <= 0.0) continue;
    g.loss += violation;
    for (std::size_t i = 0; i < d; ++i) {
      g.word[i] += negatives[k][i] - positive[i];
      g.positive[i] -= word[i];
      g.negatives[k][i] = word[i];
    }
  }
  return g;
}

namespace {

EmbeddingSpace empty_space(const LexIndex& index, std::size_t dim) {
  std::set<std::string> words;
  std::set<std::string> entities;
  for (const auto& entry : index.entries()) {
    words.insert(entry.key.words.begin(), entry.key.words.end());
    for (const auto& e : entry.value.source) entities.insert(e.iri);
    for (const auto& e : entry.value.target) entities.insert(e.iri);
  }
  return EmbeddingSpace(dim, {words.begin(), words.end()}, {entities.begin(), entities.end()});
}

void project(std::span<double> v, double max_norm) {
  double sq = 0.0;
  for (double x : v) sq += x * x;
  if (sq > max_norm * max_norm) {
    const double scale = max_norm / std::sqrt(sq);
    for (double& x : v) x *= scale;
  }
}

void check_finite(std::span<const double> v, const std::string& token, std::size_t epoch,
                  std::size_t step) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw TrainingError("non-finite value in vector of " + token + " at epoch " +
                          std::to_string(epoch) + ", step " + std::to_string(step) +
                          "; lower the learning rate or max norm");
    }
  }
}

}  // namespace

EmbeddingSpace initial_embeddings(const LexIndex& index, const TrainingConfig& config) {
  config.validate();
  EmbeddingSpace space = empty_space(index, config.dim);
  std::mt19937_64 rng(config.seed);
  const double bound = 1.0 / static_cast<double>(config.dim);
  std::uniform_real_distribution<double> init(-bound, bound);
  const std::size_t rows = space.words().size() + space.entities().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (double& x : space.row(r)) x = init(rng);
  }
  return space;
}

EmbeddingSpace train_embeddings(const LexIndex& index, const TrainingConfig& config,
                                std::vector<double>* epoch_loss) {
  if (index.empty()) throw InputError("cannot train embeddings on an empty index");
  EmbeddingSpace space = initial_embeddings(index, config);
  if (epoch_loss != nullptr) epoch_loss->clear();
  if (config.epochs == 0) return space;

  struct Example {
    std::size_t word;
    std::size_t entity;
  };
  std::vector<Example> examples;
  for (const auto& p : positive_pairs(index)) {
    examples.push_back({space.word_row(p.word), space.entity_row(p.entity.iri)});
  }
  // Same multiset as NegativeSampler, as row indexes.
  std::vector<std::size_t> pool;
  for (const auto& entry : index.entries()) {
    for (const auto& e : entry.value.source) pool.push_back(space.entity_row(e.iri));
    for (const auto& e : entry.value.target) pool.push_back(space.entity_row(e.iri));
  }

  // Stream separate from initialization so the init does not depend on epochs.
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

  const std::size_t d = config.dim;
  const double total_steps = static_cast<double>(config.epochs) * examples.size();
  std::size_t step = 0;
  std::vector<double> grad_word(d);
  std::vector<double> grad_pos(d);
  std::map<std::size_t, std::vector<double>> grad_neg;

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(examples.begin(), examples.end(), rng);
    double loss = 0.0;
    for (const auto& ex : examples) {
      const double lr = config.learning_rate * (1.0 - static_cast<double>(step) / total_steps);
      ++step;
      auto w = space.row(ex.word);
      auto e = space.row(ex.entity);
      const double pos = similarity(w, e);

      std::fill(grad_word.begin(), grad_word.end(), 0.0);
      std::fill(grad_pos.begin(), grad_pos.end(), 0.0);
      grad_neg.clear();
      for (std::size_t k = 0; k < config.negatives; ++k) {
        const std::size_t neg = pool[pick(rng)];
        // A negative equal to the positive has a constant loss and no gradient.
        if (neg == ex.entity) continue;
        auto n = space.row(neg);
        const double violation = config.margin - pos + similarity(w, n);
        if (violation <= 0.0) continue;
        loss += violation;
        auto& gn = grad_neg[neg];
        if (gn.empty()) gn.assign(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
          grad_word[i] += n[i] - e[i];
          grad_pos[i] -= w[i];
          gn[i] += w[i];
        }
      }
      if (grad_neg.empty()) continue;
      for (std::size_t i = 0; i < d; ++i) {
        w[i] -= lr * grad_word[i];
        e[i] -= lr * grad_pos[i];
      }
      for (auto& [row, g] : grad_neg) {
        auto n = space.row(row);
        for (std::size_t i = 0; i < d; ++i) n[i] -= lr * g[i];
      }
      project(w, config.max_norm);
      project(e, config.max_norm);
      check_finite(w, "word '" + space.words()[ex.word] + "'", epoch, step);
      check_finite(e, "entity <" + space.entities()[ex.entity - space.words().size()] + ">",
                   epoch, step);
      for (auto& [row, g] : grad_neg) {
        auto n = space.row(row);
        project(n, config.max_norm);
        check_finite(n, "entity <" + space.entities()[row - space.words().size()] + ">", epoch,
                     step);
      }
    }
    if (!std::isfinite(loss)) {
      throw TrainingError("non-finite loss at epoch " + std::to_string(epoch));
    }
    if (epoch_loss != nullptr) epoch_loss->push_back(loss);
  }
  return space;
}

EntryVector entry_vector(const LexEntry& entry, const EmbeddingSpace& space) {
  const std::size_t d = space.dim();
  EntryVector out{entry.key, std::vector<double>(2 * d, 0.0)};
  if (entry.key.words.empty() || entry.value.size() == 0) {
    throw std::invalid_argument("entry " + entry.key.str() + " has an empty key or value");
  }
  for (const auto& word : entry.key.words) {
    auto v = space.word(word);
    for (std::size_t i = 0; i < d; ++i) out.vector[i] += v[i];
  }
  auto add_entities = [&](const std::set<EntityRef>& entities) {
    for (const auto& e : entities) {
      auto v = space.entity(e.iri);
      for (std::size_t i = 0; i < d; ++i) out.vector[d + i] += v[i];
    }
  };
  add_entities(entry.value.source);
  add_entities(entry.value.target);
  const double nk = static_cast<double>(entry.key.words.size());
  const double nv = static_cast<double>(entry.value.size());
  for (std::size_t i = 0; i < d; ++i) {
    out.vector[i] /= nk;
    out.vector[d + i] /= nv;
  }
  return out;
}

std::string format_embeddings(const EmbeddingSpace& space) {
  std::string out;
  char buf[32];
  auto emit = [&](const std::string& token, const char* kind, std::span<const double> v) {
    out += token;
    out += '\t';
    out += kind;
    for (double x : v) {
      std::snprintf(buf, sizeof buf, "\t%.9g", x);
      out += buf;
    }
    out += '\n';
  };
  for (const auto& w : space.words()) emit(w, "word", space.word(w));
  for (const auto& e : space.entities()) emit(e, "entity", space.entity(e));
  return out;
}

void write_embeddings(const EmbeddingSpace& space, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_embeddings(space);
}

}  // namespace ontodiv
