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

#include "ontodiv/cli.hpp"

#include <spdlog/fmt/fmt.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "ontodiv/alignment.hpp"
#include "ontodiv/division.hpp"
#include "ontodiv/errors.hpp"
#include "ontodiv/metrics.hpp"
#include "ontodiv/ofn.hpp"

namespace ontodiv {

namespace {

struct DivideOptions {
  std::string source;
  std::string target;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t alpha = 60;
  std::size_t dim = 64;
  std::size_t epochs = 100;
  std::size_t negatives = 10;
  double margin = 0.05;
  double lr = 0.05;
  std::size_t max_subsets = 50;
  std::size_t kmeans_max_iters = 300;
  std::size_t threads = 0;
  std::string out_dir;
  std::string dump_lexindex;
  std::string dump_embeddings;
  std::string dump_clusters;
};

struct CoverageOptions {
  std::string division;
  std::string alignment;
  std::string report;
};

struct EvalOptions {
  std::vector<std::string> system;
  std::string reference;
  std::string report;
};

struct StatsOptions {
  std::string source;
  std::string target;
  std::size_t alpha = 60;
  std::size_t max_subsets = 50;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int cmd_divide(const DivideOptions& opt, std::ostream& out) {
  if (opt.n == 0) throw InputError("n must be ≥ 1");
  const Ontology source = load_ontology(opt.source);
  const Ontology target = load_ontology(opt.target);
  if (source.empty() || target.empty()) throw InputError("empty signature");

  DivisionConfig config;
  config.lex.alpha = opt.alpha;
  config.lex.max_subsets = opt.max_subsets;
  config.training.dim = opt.dim;
  config.training.epochs = opt.epochs;
  config.training.negatives = opt.negatives;
  config.training.margin = opt.margin;
  config.training.learning_rate = opt.lr;
  config.training.seed = opt.seed;
  config.kmeans_max_iters = opt.kmeans_max_iters;
  config.threads = opt.threads;

  PipelineTrace trace;
  const Division division = divide(source, target, opt.n, config, &trace);
  write_division(division, source, target, opt.out_dir);
  if (!opt.dump_lexindex.empty()) write_lexindex(trace.index, opt.dump_lexindex);
  if (!opt.dump_embeddings.empty()) write_embeddings(trace.space, opt.dump_embeddings);
  if (!opt.dump_clusters.empty()) write_clusters(trace.clusters, opt.dump_clusters);

  out << fmt::format("original\t|Sig1|={}\t|Sig2|={}\tlexindex_entries={}\n",
                     source.signature().size(), target.signature().size(), trace.index.size());
  out << "task\tsource\ttarget\tcandidates\tsize_ratio\n";
  for (const auto& task : division.subtasks) {
    out << fmt::format("{}\t{}\t{}\t{}\t{:.6g}\n", task.id, task.source.signature().size(),
                       task.target.signature().size(), task.candidates.size(),
                       size_ratio_task(task, source, target));
  }
  out << fmt::format("size_ratio_total\t{:.6g}\n", size_ratio_division(division, source, target));
  return kExitOk;
}

int cmd_coverage(const CoverageOptions& opt, std::ostream& out) {
  const Alignment reference = read_alignment(opt.alignment);
  if (reference.empty()) throw InputError("reference alignment is empty");
  const StoredDivision stored = read_division(opt.division);

  const auto& tasks = stored.division.subtasks;
  const Alignment covered = coverage(std::span<const MatchingTask>(tasks), reference);
  EvalReport report;
  report.coverage_ratio = coverage_ratio(stored.division, reference);
  double total = 0.0;
  for (const auto& task : tasks) {
    const double r = size_ratio(task.source.signature().size(), task.target.signature().size(),
                                stored.source_signature, stored.target_signature);
    report.size_ratio_per_task.push_back(r);
    total += r;
  }
  report.size_ratio_total = total;

  out << fmt::format("coverage_ratio\t{}\n", *report.coverage_ratio);
  out << fmt::format("covered\t{}/{}\n", covered.size(), reference.size());
  for (const auto& m : reference) {
    if (!covered.contains(m)) {
      out << fmt::format("uncovered\t{}\t{}\t{}\n", m.source, m.target,
                         relation_symbol(m.relation));
    }
  }
  const std::string report_path =
      opt.report.empty() ? (std::filesystem::path(opt.division) / "coverage_report.json").string()
                         : opt.report;
  write_file(report_path, to_json(report));
  return kExitOk;
}

int cmd_eval(const EvalOptions& opt, std::ostream& out) {
  const Alignment reference = read_alignment(opt.reference);
  if (reference.empty()) throw InputError("reference alignment is empty");
  std::vector<Alignment> parts;
  for (const auto& path : opt.system) parts.push_back(read_alignment(path));
  const Alignment system = union_alignments(parts);
  const PrecisionRecall prf = precision_recall_f(system, reference);

  out << fmt::format("system\t{}\nreference\t{}\n", system.size(), reference.size());
  out << fmt::format("precision\t{}\nrecall\t{}\nf_measure\t{}\n", prf.precision, prf.recall,
                     prf.f_measure);
  if (!opt.report.empty()) {
    EvalReport report;
    report.precision = prf.precision;
    report.recall = prf.recall;
    report.f_measure = prf.f_measure;
    write_file(opt.report, to_json(report));
  }
  return kExitOk;
}

int cmd_stats(const StatsOptions& opt, std::ostream& out) {
  const Ontology source = load_ontology(opt.source);
  const Ontology target = load_ontology(opt.target);
  if (source.empty() || target.empty()) throw InputError("empty signature");
  LexConfig lex;
  lex.alpha = opt.alpha;
  lex.max_subsets = opt.max_subsets;
  const LexIndex index = build_lexi(source, target, lex);
  const Alignment candidates = mappings_of(index.entries());

  const std::size_t s1 = source.signature().size();
  const std::size_t s2 = target.signature().size();
  out << fmt::format("source_signature\t{}\n", s1);
  out << fmt::format("target_signature\t{}\n", s2);
  out << fmt::format("cartesian_product\t{}\n",
                     static_cast<unsigned long long>(s1) * static_cast<unsigned long long>(s2));
  out << fmt::format("lexindex_entries\t{}\n", index.size());
  out << fmt::format("lexindex_mappings\t{}\n", candidates.size());
  return kExitOk;
}

}  // namespace

int exit_status_for(std::exception_ptr error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (...) {
    err << "internal error: unknown exception\n";
    return kExitInternalError;
  }
}

void log_to_stderr() {
  auto logger = spdlog::get("ontodiv");
  if (!logger) logger = spdlog::stderr_color_mt("ontodiv");
  spdlog::set_default_logger(logger);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divide an ontology matching task into smaller subtasks."};
  app.require_subcommand(1);
  bool verbose = false;
  bool quiet = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");
  app.add_flag("-q,--quiet", quiet, "Only log warnings and errors");

  DivideOptions div;
  auto* divide_cmd = app.add_subcommand("divide", "Split a matching task into n subtasks");
  divide_cmd->add_option("--source", div.source, "Source ontology (.ofn)")->required();
  divide_cmd->add_option("--target", div.target, "Target ontology (.ofn)")->required();
  divide_cmd->add_option("-n", div.n, "Number of subtasks")->required();
  divide_cmd->add_option("--seed", div.seed, "Seed for all randomness")->capture_default_str();
  divide_cmd->add_option("--alpha", div.alpha, "Maximum entities per index entry")
      ->capture_default_str();
  divide_cmd->add_option("--dim", div.dim, "Embedding dimension")->capture_default_str();
  divide_cmd->add_option("--epochs", div.epochs, "Training epochs")->capture_default_str();
  divide_cmd->add_option("--negatives", div.negatives, "Negatives per positive pair")
      ->capture_default_str();
  divide_cmd->add_option("--margin", div.margin, "Hinge margin")->capture_default_str();
  divide_cmd->add_option("--lr", div.lr, "Initial learning rate")->capture_default_str();
  divide_cmd->add_option("--max-subsets", div.max_subsets, "Word subsets kept per label")
      ->capture_default_str();
  divide_cmd->add_option("--kmeans-max-iters", div.kmeans_max_iters, "Lloyd iteration cap")
      ->capture_default_str();
  divide_cmd->add_option("--threads", div.threads, "Module extraction threads (0: all cores)")
      ->capture_default_str();
  divide_cmd->add_option("--out", div.out_dir, "Output directory")->required();
  divide_cmd->add_option("--dump-lexindex", div.dump_lexindex, "Write the lexical index TSV");
  divide_cmd->add_option("--dump-embeddings", div.dump_embeddings, "Write the embeddings TSV");
  divide_cmd->add_option("--dump-clusters", div.dump_clusters, "Write cluster assignments TSV");

  CoverageOptions cov;
  auto* coverage_cmd = app.add_subcommand("coverage", "Coverage of an alignment by a division");
  coverage_cmd->add_option("--division", cov.division, "Division directory")->required();
  coverage_cmd->add_option("--alignment", cov.alignment, "Alignment TSV")->required();
  coverage_cmd->add_option("--report", cov.report,
                           "Report JSON (default: <division>/coverage_report.json)");

  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "Precision, recall and F-measure");
  eval_cmd->add_option("--system", ev.system, "Partial system alignments (TSV)")->required();
  eval_cmd->add_option("--reference", ev.reference, "Reference alignment TSV")->required();
  eval_cmd->add_option("--report", ev.report, "Also write the report as JSON");

  StatsOptions st;
  auto* stats_cmd = app.add_subcommand("stats", "Search-space statistics of a matching task");
  stats_cmd->add_option("--source", st.source, "Source ontology (.ofn)")->required();
  stats_cmd->add_option("--target", st.target, "Target ontology (.ofn)")->required();
  stats_cmd->add_option("--alpha", st.alpha)->capture_default_str();
  stats_cmd->add_option("--max-subsets", st.max_subsets)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (verbose) spdlog::set_level(spdlog::level::debug);
  else if (quiet) spdlog::set_level(spdlog::level::warn);
  else spdlog::set_level(spdlog::level::info);

  try {
    if (divide_cmd->parsed()) return cmd_divide(div, out);
    if (coverage_cmd->parsed()) return cmd_coverage(cov, out);
    if (eval_cmd->parsed()) return cmd_eval(ev, out);
    if (stats_cmd->parsed()) return cmd_stats(st, out);
  } catch (...) {
    return exit_status_for(std::current_exception(), err);
  }
  return kExitInternalError;
}

}  // namespace ontodiv
