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
#include <vector>

#include "qrelieff/blocks.hpp"
#include "qrelieff/relieff.hpp"
#include "qrelieff/rng.hpp"
#include "qrelieff/statevector.hpp"

namespace qrelieff {

enum class ExecutionMode { kExact, kSampled };

struct PipelineConfig {
  RunConfig run;
  ExecutionMode mode = ExecutionMode::kExact;
  std::size_t shots = 1024;
  std::size_t ae_bits = 6;  // t
  AeCircuit ae_circuit = AeCircuit::kReduced;

  // Throws ConfigError.
  void validate() const;
};

struct PreparedStates {
  EncodingLayout layout;
  std::size_t num_features = 0;
  std::vector<StateVector> states;
};

// One encoded state per sample; sample register ceil(log2 M) wide, feature
// register ceil(log2 N) wide, both at least one qubit.
PreparedStates prepare_states(const NormalizedDataset& nd);

struct QuantumSimilarity {
  double p_one = 0.0;   // swap-test ancilla P(1), exact or estimated
  double s_raw = 0.0;   // (1 - 2 P(1)) N^2, clamped to [0, 1]
  AEOutcome ae;         // canonical t-bit reading of s
  bool noise_clamped = false;
};

// Swap test between the flag-swapped `u_state` and `v_state` over the
// feature, flag and data qubits, followed by amplitude estimation of s.
// `u` and `v` are the unit feature vectors; only the full AE circuit reads
// them.
QuantumSimilarity quantum_similarity(const StateVector& u_state, const StateVector& v_state,
                                     const EncodingLayout& layout, std::size_t num_features,
                                     const PipelineConfig& cfg, RngStream& rng,
                                     std::span<const double> u = {},
                                     std::span<const double> v = {});

struct SimilarityRecord {
  std::size_t sample = 0;
  double p_one = 0.0;
  double s_raw = 0.0;
  AEOutcome ae;
  bool excluded = false;  // the picked sample itself
  bool noise_clamped = false;

  std::uint64_t quantized() const { return ae.y; }
};

struct SimilarityTable {
  // classes[p] lists every sample of class p in ascending index order.
  std::vector<std::vector<SimilarityRecord>> classes;
};

// Per class, the k extreme non-excluded records by quantized similarity
// (largest for max-s, smallest for min-s), ties to the lower sample index.
NeighborSet quantum_neighbors(const SimilarityTable& table, std::size_t picked_class,
                              std::size_t k, NeighborOrder order, RngStream& rng);

struct QuantumIterationRecord {
  std::size_t picked = 0;
  SimilarityTable table;
  NeighborSet neighbors;
  std::vector<double> weights;
};

struct QuantumRunResult {
  std::vector<double> averaged;
  std::vector<QuantumIterationRecord> trace;
};

// Picks draw from `rng` exactly as relieff_run does; every measurement uses a
// substream derived from (seed, iteration, sample), so picks stay aligned
// with the classical run under a shared seed.
QuantumRunResult qrelieff_run(const NormalizedDataset& nd, const FeatureStats& stats,
                              const PipelineConfig& cfg, RngStream& rng);

}  // namespace qrelieff
