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

#include "ontodiv/metrics.hpp"

#include "json.hpp"

#include <stdexcept>

namespace ontodiv {

PrecisionRecall precision_recall_f(const Alignment& system, const Alignment& reference) {
  if (reference.empty()) throw std::invalid_argument("reference alignment is empty");
  std::size_t hits = 0;
  for (const auto& m : system) {
    if (reference.contains(m)) ++hits;
  }
  PrecisionRecall out;
  out.precision = system.empty() ? 0.0 : static_cast<double>(hits) / system.size();
  out.recall = static_cast<double>(hits) / reference.size();
  const double sum = out.precision + out.recall;
  out.f_measure = sum > 0.0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

double size_ratio(std::size_t sub_source, std::size_t sub_target, std::size_t orig_source,
                  std::size_t orig_target) {
  if (orig_source == 0 || orig_target == 0) {
    throw std::invalid_argument("original task has an empty signature");
  }
  return (static_cast<double>(sub_source) * static_cast<double>(sub_target)) /
         (static_cast<double>(orig_source) * static_cast<double>(orig_target));
}

double size_ratio_task(const MatchingTask& task, const Ontology& source, const Ontology& target) {
  return size_ratio(task.source.signature().size(), task.target.signature().size(),
                    source.signature().size(), target.signature().size());
}

double size_ratio_division(const Division& division, const Ontology& source,
                           const Ontology& target) {
  double total = 0.0;
  for (const auto& task : division.subtasks) total += size_ratio_task(task, source, target);
  return total;
}

Alignment coverage(const MatchingTask& task, const Alignment& alignment) {
  Alignment out;
  for (const auto& m : alignment) {
    if (task.source.find(m.source) && task.target.find(m.target)) out.insert(m);
  }
  return out;
}

Alignment coverage(std::span<const MatchingTask> tasks, const Alignment& alignment) {
  Alignment out;
  for (const auto& m : alignment) {
    for (const auto& task : tasks) {
      if (task.source.find(m.source) && task.target.find(m.target)) {
        out.insert(m);
        break;
      }
    }
  }
  return out;
}

double coverage_ratio(std::span<const MatchingTask> tasks, const Alignment& alignment) {
  if (alignment.empty()) throw std::invalid_argument("alignment is empty");
  return static_cast<double>(coverage(tasks, alignment).size()) / alignment.size();
}

double coverage_ratio(const Division& division, const Alignment& alignment) {
  return coverage_ratio(std::span<const MatchingTask>(division.subtasks), alignment);
}

Alignment union_alignments(std::span<const Alignment> parts) {
  Alignment out;
  for (const auto& part : parts) {
    for (const auto& m : part) out.insert(m);
  }
  return out;
}

std::string to_json(const EvalReport& report) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["precision"] = opt(report.precision);
  j["recall"] = opt(report.recall);
  j["f_measure"] = opt(report.f_measure);
  j["coverage_ratio"] = opt(report.coverage_ratio);
  j["size_ratio_total"] = opt(report.size_ratio_total);
  j["size_ratio_per_task"] = report.size_ratio_per_task;
  return j.dump(2) + "\n";
}

}  // namespace ontodiv
