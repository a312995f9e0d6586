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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ontodiv/embedding.hpp"
#include "ontodiv/lexindex.hpp"

namespace ontodiv {

struct ClusterAssignment {
  std::size_t n = 0;
  std::vector<LexKey> keys;         // point order of the input
  std::vector<std::size_t> labels;  // labels[i] in [0, n) for keys[i]
  std::vector<std::vector<double>> centroids;
  double inertia = 0.0;
  // Sum of squared distances after every centroid update; non-increasing.
  std::vector<double> inertia_history;
  std::size_t iterations = 0;
  bool converged = false;

  /// Throws std::out_of_range if `key` was not clustered.
  std::size_t cluster_of(const LexKey& key) const;
};

/// Lloyd's algorithm with k-means++ seeding on squared Euclidean distance.
/// Clusters that empty out are re-seeded with the point farthest from its
/// centroid, so every returned cluster is non-empty.
///
/// Throws std::invalid_argument if n == 0, n exceeds the number of distinct
/// points, or the vectors differ in length.
ClusterAssignment kmeans(std::span<const EntryVector> points, std::size_t n, std::uint64_t seed,
                         std::size_t max_iters = 300);

/// Entries grouped by cluster id. Throws std::invalid_argument if an index
/// entry has no assignment.
std::vector<std::vector<LexEntry>> clusters_to_entries(const ClusterAssignment& assignment,
                                                       const LexIndex& index);

/// cluster-id \t key-words, in key order.
std::string format_clusters(const ClusterAssignment& assignment);
void write_clusters(const ClusterAssignment& assignment, const std::filesystem::path& path);

}  // namespace ontodiv
