// Copyright 2026 The QReliefF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrelieff/rng.hpp"

namespace qrelieff {

// M samples x N features, row-major, with dense class ids in [0, P).
struct Dataset {
  std::size_t num_samples = 0;
  std::size_t num_features = 0;
  std::vector<double> values;
  std::vector<std::size_t> labels;
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;

  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * num_features, num_features};
  }
  std::size_t num_classes() const { return class_names.size(); }
  std::vector<std::size_t> class_sizes() const;
  std::vector<std::size_t> members(std::size_t class_id) const;

  // Throws DataError unless M >= 2, N >= 1, shapes agree and every class
  // has at least one sample.
  void validate() const;
};

// Convenience constructor; names default to F0.. and the class ids as text.
Dataset make_dataset(std::vector<std::vector<double>> rows, std::vector<std::size_t> labels,
                     std::vector<std::string> feature_names = {},
                     std::vector<std::string> class_names = {});

// Dataset whose rows have unit L2 norm.
struct NormalizedDataset {
  Dataset data;

  std::span<const double> row(std::size_t i) const { return data.row(i); }
  std::size_t num_samples() const { return data.num_samples; }
  std::size_t num_features() const { return data.num_features; }
};

enum class FeatureKind { kAuto, kContinuous, kDiscrete };

struct FeatureStats {
  std::vector<double> min;
  std::vector<double> max;
  std::vector<bool> discrete;
};

// Per-feature range over `d`. With kAuto a feature is discrete when all of
// its values lie in {0, c} for a single constant c.
FeatureStats compute_feature_stats(const Dataset& d, FeatureKind kind = FeatureKind::kAuto);

struct Normalized {
  NormalizedDataset dataset;
  FeatureStats stats;
};

// Divides every row by its L2 norm. Throws DataError naming an all-zero row.
Normalized normalize(const Dataset& d, FeatureKind kind = FeatureKind::kAuto);

double diff(std::size_t feature, std::span<const double> u, std::span<const double> v,
            const FeatureStats& stats);

// (u . v)^2 for unit vectors.
double similarity(std::span<const double> u, std::span<const double> v);

enum class NeighborOrder { kMaxSimilarity, kMinSimilarity };
enum class PickPolicy { kSeededRandom, kRoundRobin };

struct NeighborSet {
  std::vector<std::size_t> hits;
  // misses[p] for every class p != class(u); empty for class(u).
  std::vector<std::vector<std::size_t>> misses;

  bool operator==(const NeighborSet&) const = default;
};

// Similarities closer than this are ties, resolved by ascending index.
inline constexpr double kSimilarityTieTolerance = 1e-12;

NeighborSet find_neighbors(const NormalizedDataset& nd, std::size_t u, std::size_t k,
                           NeighborOrder order);

// p(C)/(1 - p(class(u))) for every class, 0 for class(u). Priors are the
// empirical class frequencies.
std::vector<double> miss_coefficients(const Dataset& d, std::size_t u_class);

void update_weights(std::vector<double>& wt, std::size_t u, const NeighborSet& nb,
                    const NormalizedDataset& nd, const FeatureStats& stats);

struct RunConfig {
  std::size_t iterations = 4;  // T
  std::size_t k = 1;
  double tau = 0.5;
  std::uint64_t seed = 0;
  NeighborOrder order = NeighborOrder::kMaxSimilarity;
  PickPolicy pick = PickPolicy::kSeededRandom;

  // Throws ConfigError.
  void validate() const;
};

// Sample picked at `iteration` (0-based). Seeded-random draws exactly one
// value from `rng`; round-robin draws nothing.
std::size_t pick_sample(PickPolicy policy, std::size_t iteration, std::size_t num_samples,
                        RngStream& rng);

struct IterationRecord {
  std::size_t picked = 0;
  NeighborSet neighbors;
  std::vector<double> weights;  // WT after this iteration's update
};

struct RunResult {
  std::vector<double> averaged;  // WT / T
  std::vector<IterationRecord> trace;
};

RunResult relieff_run(const NormalizedDataset& nd, const FeatureStats& stats,
                      const RunConfig& cfg, RngStream& rng);

// Indices i with weights[i] >= tau, in feature order.
std::vector<std::size_t> select_features(std::span<const double> weights, double tau);

}  // namespace qrelieff
