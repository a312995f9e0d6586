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

#include "ontodiv/kmeans.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "ontodiv/errors.hpp"

namespace ontodiv {

namespace {

using Vec = std::vector<double>;

double sq_dist(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

std::size_t count_distinct(std::span<const EntryVector> points) {
  std::vector<const Vec*> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) sorted.push_back(&p.vector);
  std::sort(sorted.begin(), sorted.end(), [](const Vec* a, const Vec* b) { return *a < *b; });
  auto last = std::unique(sorted.begin(), sorted.end(),
                          [](const Vec* a, const Vec* b) { return *a == *b; });
  return static_cast<std::size_t>(last - sorted.begin());
}

class Lloyd {
 public:
  Lloyd(std::span<const EntryVector> points, std::size_t n)
      : points_(points), n_(n), dim_(points.front().vector.size()) {}

  void seed_plus_plus(std::mt19937_64& rng) {
    const std::size_t count = points_.size();
    std::uniform_int_distribution<std::size_t> first(0, count - 1);
    centroids_.push_back(points_[first(rng)].vector);
    std::vector<double> d2(count);
    for (std::size_t i = 0; i < count; ++i) d2[i] = sq_dist(points_[i].vector, centroids_[0]);
    while (centroids_.size() < n_) {
      double total = 0.0;
      for (double x : d2) total += x;
      std::uniform_real_distribution<double> u(0.0, total);
      const double target = u(rng);
      std::size_t chosen = count;
      double acc = 0.0;
      for (std::size_t i = 0; i < count; ++i) {
        if (d2[i] <= 0.0) continue;
        acc += d2[i];
        chosen = i;
        if (acc > target) break;
      }
      if (chosen == count) throw InvariantError("k-means++ ran out of distinct points");
      centroids_.push_back(points_[chosen].vector);
      for (std::size_t i = 0; i < count; ++i) {
        d2[i] = std::min(d2[i], sq_dist(points_[i].vector, centroids_.back()));
      }
    }
  }

  std::vector<std::size_t> assign() const {
    std::vector<std::size_t> labels(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < n_; ++c) {
        const double d = sq_dist(points_[i].vector, centroids_[c]);
        if (d < best) {
          best = d;
          labels[i] = c;
        }
      }
    }
    return labels;
  }

  void repair_empty(std::vector<std::size_t>& labels) {
    while (true) {
      std::vector<std::size_t> sizes(n_, 0);
      for (auto l : labels) ++sizes[l];
      auto empty = std::find(sizes.begin(), sizes.end(), 0);
      if (empty == sizes.end()) return;
      std::size_t farthest = points_.size();
      double best = -1.0;
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (sizes[labels[i]] < 2) continue;
        const double d = sq_dist(points_[i].vector, centroids_[labels[i]]);
        if (d > best) {
          best = d;
          farthest = i;
        }
      }
      if (farthest == points_.size()) throw InvariantError("cannot repair empty cluster");
      const auto c = static_cast<std::size_t>(empty - sizes.begin());
      labels[farthest] = c;
      centroids_[c] = points_[farthest].vector;
    }
  }

  // Fixed summation order (point index) per cluster.
  void update(const std::vector<std::size_t>& labels) {
    std::vector<Vec> sums(n_, Vec(dim_, 0.0));
    std::vector<std::size_t> sizes(n_, 0);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto& s = sums[labels[i]];
      const auto& v = points_[i].vector;
      for (std::size_t j = 0; j < dim_; ++j) s[j] += v[j];
      ++sizes[labels[i]];
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (sizes[c] == 0) throw InvariantError("empty cluster during centroid update");
      for (std::size_t j = 0; j < dim_; ++j) {
        centroids_[c][j] = sums[c][j] / static_cast<double>(sizes[c]);
      }
    }
  }

  double cost(const std::vector<std::size_t>& labels) const {
    double total = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      total += sq_dist(points_[i].vector, centroids_[labels[i]]);
    }
    return total;
  }

  std::vector<Vec>& centroids() { return centroids_; }

 private:
  std::span<const EntryVector> points_;
  std::size_t n_;
  std::size_t dim_;
  std::vector<Vec> centroids_;
};

}  // namespace

std::size_t ClusterAssignment::cluster_of(const LexKey& key) const {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == key) return labels[i];
  }
  throw std::out_of_range("key " + key.str() + " was not clustered");
}

ClusterAssignment kmeans(std::span<const EntryVector> points, std::size_t n, std::uint64_t seed,
                         std::size_t max_iters) {
  if (n == 0) throw std::invalid_argument("number of clusters must be >= 1");
  if (points.empty()) throw std::invalid_argument("no points to cluster");
  if (max_iters == 0) throw std::invalid_argument("max_iters must be >= 1");
  const std::size_t dim = points.front().vector.size();
  for (const auto& p : points) {
    if (p.vector.size() != dim) throw std::invalid_argument("points differ in dimension");
  }
  const std::size_t distinct = count_distinct(points);
  if (n > distinct) {
    throw std::invalid_argument("cannot form " + std::to_string(n) + " clusters from " +
                                std::to_string(distinct) + " distinct points");
  }

  std::mt19937_64 rng(seed);
  Lloyd lloyd(points, n);
  lloyd.seed_plus_plus(rng);

  ClusterAssignment out;
  out.n = n;
  std::vector<std::size_t> labels = lloyd.assign();
  for (std::size_t it = 0; it < max_iters; ++it) {
    lloyd.repair_empty(labels);
    lloyd.update(labels);
    out.inertia_history.push_back(lloyd.cost(labels));
    ++out.iterations;
    auto next = lloyd.assign();
    if (next == labels) {
      out.converged = true;
      break;
    }
    labels = std::move(next);
  }
  if (!out.converged) {
    lloyd.repair_empty(labels);
    lloyd.update(labels);
    out.inertia_history.push_back(lloyd.cost(labels));
  }

  out.inertia = out.inertia_history.back();
  out.labels = std::move(labels);
  out.centroids = std::move(lloyd.centroids());
  out.keys.reserve(points.size());
  for (const auto& p : points) out.keys.push_back(p.key);
  return out;
}

std::vector<std::vector<LexEntry>> clusters_to_entries(const ClusterAssignment& assignment,
                                                       const LexIndex& index) {
  std::map<LexKey, std::size_t> lookup;
  for (std::size_t i = 0; i < assignment.keys.size(); ++i) {
    lookup.emplace(assignment.keys[i], assignment.labels[i]);
  }
  std::vector<std::vector<LexEntry>> out(assignment.n);
  for (const auto& entry : index.entries()) {
    auto it = lookup.find(entry.key);
    if (it == lookup.end()) {
      throw std::invalid_argument("entry " + entry.key.str() + " has no cluster assignment");
    }
    out.at(it->second).push_back(entry);
  }
  return out;
}

std::string format_clusters(const ClusterAssignment& assignment) {
  std::vector<std::size_t> order(assignment.keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return assignment.keys[a] < assignment.keys[b];
  });
  std::string out;
  for (auto i : order) {
    out += std::to_string(assignment.labels[i]);
    out += '\t';
    out += assignment.keys[i].str();
    out += '\n';
  }
  return out;
}

void write_clusters(const ClusterAssignment& assignment, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_clusters(assignment);
}

}  // namespace ontodiv
