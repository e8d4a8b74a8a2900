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

#include "qrelieff/pipeline.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qrelieff/error.hpp"

namespace qrelieff {

namespace {

constexpr std::uint64_t kSwapTestTag = 1;
constexpr std::uint64_t kSearchTag = 2;

}  // namespace

void PipelineConfig::validate() const {
  run.validate();
  if (mode == ExecutionMode::kSampled && shots < 1) {
    throw ConfigError("shots must be >= 1 in sampled mode");
  }
  if (ae_bits < 1 || ae_bits > 10) {
    throw ConfigError("ae-bits must lie in [1, 10]");
  }
}

PreparedStates prepare_states(const NormalizedDataset& nd) {
  PreparedStates out;
  out.num_features = nd.num_features();
  out.layout = {register_width(nd.num_features()), register_width(nd.num_samples())};
  if (out.layout.num_qubits() > kMaxQubits) {
    throw CapacityError("encoding needs " + std::to_string(out.layout.num_qubits()) + " qubits");
  }
  out.states.reserve(nd.num_samples());
  for (std::size_t q = 0; q < nd.num_samples(); ++q) {
    out.states.push_back(encode_sample(nd.row(q), q, out.layout.sample_bits));
  }
  return out;
}

QuantumSimilarity quantum_similarity(const StateVector& u_state, const StateVector& v_state,
                                     const EncodingLayout& layout, std::size_t num_features,
                                     const PipelineConfig& cfg, RngStream& rng,
                                     std::span<const double> u, std::span<const double> v) {
  const StateVector a = swap_flag(strip_sample_register(u_state, layout));
  const StateVector b = strip_sample_register(v_state, layout);

  QuantumSimilarity out;
  if (cfg.mode == ExecutionMode::kExact) {
    out.p_one = swap_test(a, b);
  } else {
    const std::size_t ancilla = 0;
    const Histogram hist = sample(swap_test_state(a, b), {&ancilla, 1}, cfg.shots, rng);
    const auto it = hist.find("1");
    const std::size_t ones = it == hist.end() ? 0 : it->second;
    out.p_one = static_cast<double>(ones) / static_cast<double>(cfg.shots);
  }

  const auto n = static_cast<double>(num_features);
  const double s = (1.0 - 2.0 * out.p_one) * n * n;
  out.noise_clamped = s < -kNormTolerance || s > 1.0 + kNormTolerance;
  out.s_raw = std::clamp(s, 0.0, 1.0);

  Preparation prep;
  if (cfg.ae_circuit == AeCircuit::kFull && cfg.mode == ExecutionMode::kExact) {
    if (u.size() != num_features || v.size() != num_features) {
      throw PreconditionError("quantum_similarity: full AE circuit needs the feature vectors");
    }
    prep = overlap_preparation(u, v);
  } else {
    prep = rotation_preparation(out.s_raw);
  }
  out.ae = amplitude_estimate(prep, cfg.ae_bits, cfg.ae_circuit).modal();
  return out;
}

NeighborSet quantum_neighbors(const SimilarityTable& table, std::size_t picked_class,
                              std::size_t k, NeighborOrder order, RngStream& rng) {
  const Direction direction =
      order == NeighborOrder::kMaxSimilarity ? Direction::kMax : Direction::kMin;
  NeighborSet nb;
  nb.misses.resize(table.classes.size());
  for (std::size_t p = 0; p < table.classes.size(); ++p) {
    std::vector<std::size_t> samples;
    std::vector<std::uint64_t> values;
    for (const SimilarityRecord& rec : table.classes[p]) {
      if (!rec.excluded) {
        samples.push_back(rec.sample);
        values.push_back(rec.quantized());
      }
    }
    if (samples.empty()) {
      if (p == picked_class) {
        throw DataError("picked sample is the only member of its class; it has no hit");
      }
      continue;
    }
    RngStream search_rng = rng.derive({kSearchTag, p});
    const std::vector<std::size_t> local =
        quantum_extreme_search(values, std::min(k, values.size()), direction, search_rng);
    std::vector<std::size_t>& dest = p == picked_class ? nb.hits : nb.misses[p];
    for (std::size_t idx : local) {
      dest.push_back(samples[idx]);
    }
  }
  return nb;
}

QuantumRunResult qrelieff_run(const NormalizedDataset& nd, const FeatureStats& stats,
                              const PipelineConfig& cfg, RngStream& rng) {
  cfg.validate();
  const Dataset& d = nd.data;
  const PreparedStates prepared = prepare_states(nd);

  QuantumRunResult result;
  std::vector<double> wt(nd.num_features(), 0.0);
  for (std::size_t t = 0; t < cfg.run.iterations; ++t) {
    QuantumIterationRecord rec;
    rec.picked = pick_sample(cfg.run.pick, t, nd.num_samples(), rng);
    const std::size_t picked_class = d.labels[rec.picked];

    rec.table.classes.resize(d.num_classes());
    for (std::size_t q = 0; q < nd.num_samples(); ++q) {
      RngStream job = rng.derive({t, q, kSwapTestTag});
      const QuantumSimilarity qs =
          quantum_similarity(prepared.states[rec.picked], prepared.states[q], prepared.layout,
                             prepared.num_features, cfg, job, nd.row(rec.picked), nd.row(q));
      SimilarityRecord sr;
      sr.sample = q;
      sr.p_one = qs.p_one;
      sr.s_raw = qs.s_raw;
      sr.ae = qs.ae;
      sr.excluded = q == rec.picked;
      sr.noise_clamped = qs.noise_clamped;
      rec.table.classes[d.labels[q]].push_back(sr);
    }

    RngStream search = rng.derive({t, kSearchTag});
    rec.neighbors = quantum_neighbors(rec.table, picked_class, cfg.run.k, cfg.run.order, search);
    update_weights(wt, rec.picked, rec.neighbors, nd, stats);
    rec.weights = wt;
    result.trace.push_back(std::move(rec));
  }
  result.averaged = wt;
  for (double& w : result.averaged) {
    w /= static_cast<double>(cfg.run.iterations);
  }
  return result;
}

}  // namespace qrelieff
