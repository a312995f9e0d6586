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

// Quality measures for alignments and divisions of a matching task.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontodiv/alignment.hpp"
#include "ontodiv/task.hpp"

namespace ontodiv {

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

/// Mappings match on (source, target, relation). An empty system alignment
/// scores 0 precision. Throws std::invalid_argument if `reference` is empty.
PrecisionRecall precision_recall_f(const Alignment& system, const Alignment& reference);

/// (|sub_source| * |sub_target|) / (|orig_source| * |orig_target|).
/// Throws std::invalid_argument if an original size is zero.
double size_ratio(std::size_t sub_source, std::size_t sub_target, std::size_t orig_source,
                  std::size_t orig_target);
double size_ratio_task(const MatchingTask& task, const Ontology& source, const Ontology& target);
/// Sum of the per-task ratios; exceeds 1 when subtasks overlap.
double size_ratio_division(const Division& division, const Ontology& source,
                           const Ontology& target);

/// Mappings whose source entity is in the task's source signature and whose
/// target entity is in its target signature.
Alignment coverage(const MatchingTask& task, const Alignment& alignment);

/// Mappings covered by at least one task.
Alignment coverage(std::span<const MatchingTask> tasks, const Alignment& alignment);

/// |coverage(tasks, alignment)| / |alignment|. Throws std::invalid_argument
/// on an empty alignment.
double coverage_ratio(std::span<const MatchingTask> tasks, const Alignment& alignment);
double coverage_ratio(const Division& division, const Alignment& alignment);

/// Set union keeping the highest confidence of duplicates.
Alignment union_alignments(std::span<const Alignment> parts);

struct EvalReport {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f_measure;
  std::optional<double> coverage_ratio;
  std::optional<double> size_ratio_total;
  std::vector<double> size_ratio_per_task;
};

/// JSON object with keys precision, recall, f_measure, coverage_ratio,
/// size_ratio_total and size_ratio_per_task (null when not computed).
std::string to_json(const EvalReport& report);

}  // namespace ontodiv
