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

#include "qrelieff/relieff.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qrelieff/error.hpp"

namespace qrelieff {

std::vector<std::size_t> Dataset::class_sizes() const {
  std::vector<std::size_t> sizes(num_classes(), 0);
  for (std::size_t label : labels) {
    ++sizes.at(label);
  }
  return sizes;
}

std::vector<std::size_t> Dataset::members(std::size_t class_id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == class_id) {
      out.push_back(i);
    }
  }
  return out;
}

void Dataset::validate() const {
  if (num_samples < 2) {
    throw DataError("dataset needs at least 2 samples, got " + std::to_string(num_samples));
  }
  if (num_features < 1) {
    throw DataError("dataset needs at least 1 feature");
  }
  if (values.size() != num_samples * num_features || labels.size() != num_samples ||
      feature_names.size() != num_features) {
    throw DataError("dataset shape is inconsistent");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw DataError("dataset contains a non-finite value");
    }
  }
  std::vector<std::size_t> sizes(num_classes(), 0);
  for (std::size_t label : labels) {
    if (label >= num_classes()) {
      throw DataError("label " + std::to_string(label) + " has no class name");
    }
    ++sizes[label];
  }
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] == 0) {
      throw DataError("class '" + class_names[p] + "' has no samples");
    }
  }
}

Dataset make_dataset(std::vector<std::vector<double>> rows, std::vector<std::size_t> labels,
                     std::vector<std::string> feature_names,
                     std::vector<std::string> class_names) {
  Dataset d;
  d.num_samples = rows.size();
  d.num_features = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != d.num_features) {
      throw DataError("ragged dataset rows");
    }
    d.values.insert(d.values.end(), r.begin(), r.end());
  }
  d.labels = std::move(labels);
  if (feature_names.empty()) {
    for (std::size_t i = 0; i < d.num_features; ++i) {
      feature_names.push_back("F" + std::to_string(i));
    }
  }
  d.feature_names = std::move(feature_names);
  if (class_names.empty()) {
    std::size_t p = 0;
    for (std::size_t label : d.labels) {
      p = std::max(p, label + 1);
    }
    for (std::size_t i = 0; i < p; ++i) {
      class_names.push_back(std::to_string(i));
    }
  }
  d.class_names = std::move(class_names);
  d.validate();
  return d;
}

FeatureStats compute_feature_stats(const Dataset& d, FeatureKind kind) {
  FeatureStats stats;
  stats.min.assign(d.num_features, 0.0);
  stats.max.assign(d.num_features, 0.0);
  stats.discrete.assign(d.num_features, false);
  for (std::size_t i = 0; i < d.num_features; ++i) {
    double lo = d.values[i];
    double hi = d.values[i];
    bool have_level = false;
    double level = 0.0;
    bool two_level = true;
    for (std::size_t q = 0; q < d.num_samples; ++q) {
      const double v = d.row(q)[i];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (std::abs(v) <= 1e-12) {
        continue;
      }
      if (!have_level) {
        have_level = true;
        level = v;
      } else if (std::abs(v - level) > 1e-12) {
        two_level = false;
      }
    }
    stats.min[i] = lo;
    stats.max[i] = hi;
    switch (kind) {
      case FeatureKind::kAuto:
        stats.discrete[i] = two_level;
        break;
      case FeatureKind::kContinuous:
        stats.discrete[i] = false;
        break;
      case FeatureKind::kDiscrete:
        stats.discrete[i] = true;
        break;
    }
  }
  return stats;
}

Normalized normalize(const Dataset& d, FeatureKind kind) {
  d.validate();
  Dataset out = d;
  for (std::size_t q = 0; q < d.num_samples; ++q) {
    double norm2 = 0.0;
    for (double v : d.row(q)) {
      norm2 += v * v;
    }
    if (norm2 == 0.0) {
      throw DataError("sample " + std::to_string(q) + " is all zeros and cannot be normalized");
    }
    const double norm = std::sqrt(norm2);
    for (std::size_t i = 0; i < d.num_features; ++i) {
      out.values[q * d.num_features + i] = d.values[q * d.num_features + i] / norm;
    }
  }
  FeatureStats stats = compute_feature_stats(out, kind);
  return {NormalizedDataset{std::move(out)}, std::move(stats)};
}

double diff(std::size_t feature, std::span<const double> u, std::span<const double> v,
            const FeatureStats& stats) {
  const double delta = std::abs(u[feature] - v[feature]);
  if (stats.discrete[feature]) {
    return delta > 1e-12 ? 1.0 : 0.0;
  }
  const double range = stats.max[feature] - stats.min[feature];
  if (range <= 0.0) {
    return 0.0;
  }
  return std::clamp(delta / range, 0.0, 1.0);
}

double similarity(std::span<const double> u, std::span<const double> v) {
  double dot = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
  }
  return std::clamp(dot * dot, 0.0, 1.0);
}

namespace {

// Picks up to k candidates by similarity, ties to the lower sample index.
std::vector<std::size_t> nearest(std::vector<std::size_t> candidates,
                                 const std::vector<double>& sim, std::size_t k,
                                 NeighborOrder order) {
  std::vector<std::size_t> out;
  while (out.size() < k && !candidates.empty()) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c) {
      const double gap = sim[candidates[c]] - sim[candidates[best]];
      const bool better = order == NeighborOrder::kMaxSimilarity
                              ? gap > kSimilarityTieTolerance
                              : gap < -kSimilarityTieTolerance;
      if (better) {
        best = c;
      }
    }
    out.push_back(candidates[best]);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

NeighborSet find_neighbors(const NormalizedDataset& nd, std::size_t u, std::size_t k,
                           NeighborOrder order) {
  const Dataset& d = nd.data;
  if (u >= d.num_samples) {
    throw DataError("sample index " + std::to_string(u) + " out of range");
  }
  std::vector<double> sim(d.num_samples, 0.0);
  for (std::size_t q = 0; q < d.num_samples; ++q) {
    sim[q] = similarity(nd.row(u), nd.row(q));
  }
  const std::size_t u_class = d.labels[u];
  NeighborSet nb;
  nb.misses.resize(d.num_classes());
  for (std::size_t p = 0; p < d.num_classes(); ++p) {
    std::vector<std::size_t> candidates = d.members(p);
    if (p == u_class) {
      std::erase(candidates, u);
      if (candidates.empty()) {
        throw DataError("sample " + std::to_string(u) + " is the only member of class '" +
                        d.class_names[p] + "'; it has no hit");
      }
      nb.hits = nearest(std::move(candidates), sim, k, order);
    } else {
      nb.misses[p] = nearest(std::move(candidates), sim, k, order);
    }
  }
  return nb;
}

std::vector<double> miss_coefficients(const Dataset& d, std::size_t u_class) {
  const std::vector<std::size_t> sizes = d.class_sizes();
  const std::size_t others = d.num_samples - sizes.at(u_class);
  std::vector<double> coeff(sizes.size(), 0.0);
  if (others == 0) {
    return coeff;
  }
  // p(C)/(1 - p(class(u))) reduced to M_C/(M - M_u): one rounding, not three.
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (p != u_class) {
      coeff[p] = static_cast<double>(sizes[p]) / static_cast<double>(others);
    }
  }
  return coeff;
}

void update_weights(std::vector<double>& wt, std::size_t u, const NeighborSet& nb,
                    const NormalizedDataset& nd, const FeatureStats& stats) {
  const Dataset& d = nd.data;
  if (wt.size() != d.num_features) {
    throw PreconditionError("weight vector length does not match feature count");
  }
  const std::vector<double> coeff = miss_coefficients(d, d.labels.at(u));
  const auto ur = nd.row(u);
  for (std::size_t i = 0; i < d.num_features; ++i) {
    double hit_sum = 0.0;
    for (std::size_t h : nb.hits) {
      hit_sum += diff(i, ur, nd.row(h), stats);
    }
    double miss_sum = 0.0;
    for (std::size_t p = 0; p < nb.misses.size(); ++p) {
      double class_sum = 0.0;
      for (std::size_t m : nb.misses[p]) {
        class_sum += diff(i, ur, nd.row(m), stats);
      }
      miss_sum += coeff[p] * class_sum;
    }
    wt[i] += miss_sum - hit_sum;
  }
}

void RunConfig::validate() const {
  if (iterations < 1) {
    throw ConfigError("T must be >= 1");
  }
  if (k < 1) {
    throw ConfigError("k must be >= 1");
  }
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw ConfigError("tau must lie in [0, 1]");
  }
}

std::size_t pick_sample(PickPolicy policy, std::size_t iteration, std::size_t num_samples,
                        RngStream& rng) {
  if (policy == PickPolicy::kRoundRobin) {
    return iteration % num_samples;
  }
  return static_cast<std::size_t>(rng.below(num_samples));
}

RunResult relieff_run(const NormalizedDataset& nd, const FeatureStats& stats,
                      const RunConfig& cfg, RngStream& rng) {
  cfg.validate();
  RunResult result;
  std::vector<double> wt(nd.num_features(), 0.0);
  for (std::size_t t = 0; t < cfg.iterations; ++t) {
    IterationRecord rec;
    rec.picked = pick_sample(cfg.pick, t, nd.num_samples(), rng);
    rec.neighbors = find_neighbors(nd, rec.picked, cfg.k, cfg.order);
    update_weights(wt, rec.picked, rec.neighbors, nd, stats);
    rec.weights = wt;
    result.trace.push_back(std::move(rec));
  }
  result.averaged = wt;
  for (double& w : result.averaged) {
    w /= static_cast<double>(cfg.iterations);
  }
  return result;
}

std::vector<std::size_t> select_features(std::span<const double> weights, double tau) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] >= tau) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace qrelieff
