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

#include "ontodiv/division.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "ontodiv/errors.hpp"
#include "ontodiv/locality.hpp"
#include "ontodiv/metrics.hpp"
#include "ontodiv/ofn.hpp"

namespace ontodiv {

namespace {

using nlohmann::json;

constexpr const char* kManifest = "division.json";
constexpr int kFormatVersion = 1;

std::string task_dir_name(std::size_t id) { return "task_" + std::to_string(id); }

std::vector<MatchingTask> build_subtasks(const std::vector<std::vector<LexEntry>>& clusters,
                                         const Ontology& source, const Ontology& target,
                                         std::size_t threads) {
  const std::size_t count = clusters.size();
  std::vector<std::optional<MatchingTask>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = subtask_from_cluster(clusters[i], source, target, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }

  std::vector<MatchingTask> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

json provenance_json(const Provenance& p) {
  return json{{"seed", p.seed},
              {"alpha", p.alpha},
              {"max_subsets", p.max_subsets},
              {"dim", p.dim},
              {"epochs", p.epochs},
              {"negatives", p.negatives},
              {"margin", p.margin},
              {"learning_rate", p.learning_rate},
              {"max_norm", p.max_norm},
              {"kmeans_max_iters", p.kmeans_max_iters}};
}

Provenance provenance_from_json(const json& j) {
  Provenance p;
  p.seed = j.at("seed").get<std::uint64_t>();
  p.alpha = j.at("alpha").get<std::size_t>();
  p.max_subsets = j.at("max_subsets").get<std::size_t>();
  p.dim = j.at("dim").get<std::size_t>();
  p.epochs = j.at("epochs").get<std::size_t>();
  p.negatives = j.at("negatives").get<std::size_t>();
  p.margin = j.at("margin").get<double>();
  p.learning_rate = j.at("learning_rate").get<double>();
  p.max_norm = j.at("max_norm").get<double>();
  p.kmeans_max_iters = j.at("kmeans_max_iters").get<std::size_t>();
  return p;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace

Provenance provenance_of(const DivisionConfig& config) {
  Provenance p;
  p.seed = config.training.seed;
  p.alpha = config.lex.alpha;
  p.max_subsets = config.lex.max_subsets;
  p.dim = config.training.dim;
  p.epochs = config.training.epochs;
  p.negatives = config.training.negatives;
  p.margin = config.training.margin;
  p.learning_rate = config.training.learning_rate;
  p.max_norm = config.training.max_norm;
  p.kmeans_max_iters = config.kmeans_max_iters;
  return p;
}

MatchingTask subtask_from_cluster(std::span<const LexEntry> cluster, const Ontology& source,
                                  const Ontology& target, std::size_t id) {
  if (cluster.empty()) throw std::invalid_argument("cluster " + std::to_string(id) + " is empty");
  MatchingTask task;
  task.id = id;
  task.candidates = mappings_of(cluster);
  auto [left, right] = context_of(task.candidates, source, target);
  task.source = std::move(left.ontology);
  task.target = std::move(right.ontology);
  return task;
}

Division divide(const Ontology& source, const Ontology& target, std::size_t n,
                const DivisionConfig& config, PipelineTrace* trace) {
  if (n == 0) throw InputError("n must be ≥ 1");
  config.training.validate();

  LexIndex index = build_lexi(source, target, config.lex);
  spdlog::info("lexical index: {} entries ({} raw, {} one-sided, {} above alpha)", index.size(),
               index.stats().raw_entries, index.stats().one_sided_removed,
               index.stats().alpha_removed);
  if (index.empty()) throw InputError("the ontologies share no lexical entries; nothing to divide");
  if (n > index.size()) {
    throw InputError("n = " + std::to_string(n) + " exceeds the " + std::to_string(index.size()) +
                     " lexical index entries; choose a smaller n");
  }

  EmbeddingSpace space = train_embeddings(index, config.training);

  std::vector<EntryVector> points;
  points.reserve(index.size());
  for (const auto& entry : index.entries()) points.push_back(entry_vector(entry, space));

  ClusterAssignment clusters;
  try {
    clusters = kmeans(points, n, config.training.seed, config.kmeans_max_iters);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(e.what()) + "; choose a smaller n");
  }
  spdlog::info("k-means: {} iterations, inertia {:.6g}{}", clusters.iterations, clusters.inertia,
               clusters.converged ? "" : " (not converged)");

  const auto grouped = clusters_to_entries(clusters, index);
  for (std::size_t i = 0; i < grouped.size(); ++i) {
    if (grouped[i].empty()) throw InvariantError("cluster " + std::to_string(i) + " is empty");
  }

  Division division;
  division.n = n;
  division.provenance = provenance_of(config);
  division.subtasks = build_subtasks(grouped, source, target, config.threads);

  if (trace != nullptr) {
    trace->index = std::move(index);
    trace->space = std::move(space);
    trace->clusters = std::move(clusters);
  }
  return division;
}

void write_division(const Division& division, const Ontology& source, const Ontology& target,
                    const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());

  json tasks = json::array();
  double total = 0.0;
  for (const auto& task : division.subtasks) {
    const auto sub = dir / task_dir_name(task.id);
    std::filesystem::create_directories(sub, ec);
    if (ec) throw InputError("cannot create " + sub.string() + ": " + ec.message());
    save_ontology(task.source, sub / "source.ofn");
    save_ontology(task.target, sub / "target.ofn");
    write_alignment(task.candidates, sub / "candidates.tsv");

    const double ratio = size_ratio_task(task, source, target);
    total += ratio;
    tasks.push_back(json{{"id", task.id},
                         {"directory", task_dir_name(task.id)},
                         {"source_signature", task.source.signature().size()},
                         {"target_signature", task.target.signature().size()},
                         {"candidates", task.candidates.size()},
                         {"size_ratio", ratio}});
  }

  json manifest{{"format_version", kFormatVersion},
                {"n", division.n},
                {"source", {{"iri", source.iri()}, {"signature_size", source.signature().size()}}},
                {"target", {{"iri", target.iri()}, {"signature_size", target.signature().size()}}},
                {"provenance", provenance_json(division.provenance)},
                {"size_ratio_total", total},
                {"tasks", std::move(tasks)}};
  write_text(dir / kManifest, manifest.dump(2) + "\n");
}

StoredDivision read_division(const std::filesystem::path& dir) {
  const auto manifest_path = dir / kManifest;
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw InputError("cannot read " + manifest_path.string());

  StoredDivision out;
  try {
    const json manifest = json::parse(in);
    if (manifest.at("format_version").get<int>() != kFormatVersion) {
      throw InputError(manifest_path.string() + ": unsupported format_version");
    }
    out.division.n = manifest.at("n").get<std::size_t>();
    out.division.provenance = provenance_from_json(manifest.at("provenance"));
    out.source_signature = manifest.at("source").at("signature_size").get<std::size_t>();
    out.target_signature = manifest.at("target").at("signature_size").get<std::size_t>();
    for (const auto& t : manifest.at("tasks")) {
      const auto sub = dir / t.at("directory").get<std::string>();
      MatchingTask task;
      task.id = t.at("id").get<std::size_t>();
      task.source = load_ontology(sub / "source.ofn");
      task.target = load_ontology(sub / "target.ofn");
      task.candidates = read_alignment(sub / "candidates.tsv");
      out.division.subtasks.push_back(std::move(task));
    }
  } catch (const json::exception& e) {
    throw InputError(manifest_path.string() + ": " + e.what());
  }
  if (out.division.subtasks.size() != out.division.n) {
    throw InputError(manifest_path.string() + ": lists " +
                     std::to_string(out.division.subtasks.size()) + " tasks but n = " +
                     std::to_string(out.division.n));
  }
  return out;
}

}  // namespace ontodiv
