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
#include <cstdint>
#include <vector>

#include "ontodiv/alignment.hpp"
#include "ontodiv/ontology.hpp"

namespace ontodiv {

/// A pair of ontologies (or modules of them) to be aligned, with the
/// candidate mappings that motivated it.
struct MatchingTask {
  std::size_t id = 0;
  Ontology source;
  Ontology target;
  Alignment candidates;
};

/// Every parameter that influences a division.
struct Provenance {
  std::uint64_t seed = 0;
  std::size_t alpha = 60;
  std::size_t max_subsets = 50;
  std::size_t dim = 64;
  std::size_t epochs = 100;
  std::size_t negatives = 10;
  double margin = 0.05;
  double learning_rate = 0.05;
  double max_norm = 10.0;
  std::size_t kmeans_max_iters = 300;
};

struct Division {
  std::size_t n = 0;
  std::vector<MatchingTask> subtasks;
  Provenance provenance;
};

}  // namespace ontodiv
