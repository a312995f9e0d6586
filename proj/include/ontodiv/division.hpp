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

// Splitting a matching task into n subtasks:
//   LexI -> embeddings -> k-means over entries -> candidates per cluster
//   -> locality modules of the candidates' entities.

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "ontodiv/embedding.hpp"
#include "ontodiv/kmeans.hpp"
#include "ontodiv/lexindex.hpp"
#include "ontodiv/task.hpp"

namespace ontodiv {

struct DivisionConfig {
  LexConfig lex;
  TrainingConfig training;  // training.seed also seeds k-means
  std::size_t kmeans_max_iters = 300;
  std::size_t threads = 0;  // 0: hardware concurrency
};

Provenance provenance_of(const DivisionConfig& config);

/// Intermediate products, filled on request.
struct PipelineTrace {
  LexIndex index;
  EmbeddingSpace space;
  ClusterAssignment clusters;
};

/// Throws std::invalid_argument on an empty cluster.
MatchingTask subtask_from_cluster(std::span<const LexEntry> cluster, const Ontology& source,
                                  const Ontology& target, std::size_t id = 0);

/// Throws InputError if n is 0, the index is empty, or n exceeds the number
/// of index entries.
Division divide(const Ontology& source, const Ontology& target, std::size_t n,
                const DivisionConfig& config = {}, PipelineTrace* trace = nullptr);

/// Writes task_<i>/{source.ofn,target.ofn,candidates.tsv} and division.json.
void write_division(const Division& division, const Ontology& source, const Ontology& target,
                    const std::filesystem::path& dir);

struct StoredDivision {
  Division division;
  std::size_t source_signature = 0;  // of the original task
  std::size_t target_signature = 0;
};

/// Reads a directory produced by write_division. Throws InputError if a
/// listed file is missing or malformed.
StoredDivision read_division(const std::filesystem::path& dir);

}  // namespace ontodiv
