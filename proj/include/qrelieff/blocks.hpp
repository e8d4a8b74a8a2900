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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qrelieff/circuit.hpp"
#include "qrelieff/rng.hpp"
#include "qrelieff/statevector.hpp"

namespace qrelieff {

// ---------------------------------------------------------------------------
// Registers and state preparation
// ---------------------------------------------------------------------------

// Qubits needed to index `count` items; never less than one.
std::size_t register_width(std::uint64_t count);

// Qubit list {first, first + 1, ..., first + width - 1}.
std::vector<std::size_t> qubit_range(std::size_t first, std::size_t width);

// Reversible comparator: flips `flag` on every branch whose `reg` value is
// >= bound. Built from mixed-polarity multi-controlled X gates, one per
// prefix pattern of `bound`, so the terms are mutually exclusive.
Circuit comparator(std::span<const std::size_t> reg, std::uint64_t bound, std::size_t flag);

// |i>|0>_flag -> |i>|i >= bound>_flag. The flag must start clear.
StateVector cmp_flag(StateVector state, std::span<const std::size_t> reg, std::uint64_t bound,
                     std::size_t flag);

// (1/sqrt(count)) sum_{i<count} |i> on n qubits: H on every qubit, comparator
// into a scratch flag, postselect the flag on 0, discard it.
StateVector uniform_mod_n(std::size_t n, std::uint64_t count);

struct SampledUniform {
  StateVector state;
  std::size_t attempts;
};

// Repeat-until-success variant of uniform_mod_n that measures the flag.
SampledUniform uniform_mod_n_sampled(std::size_t n, std::uint64_t count, RngStream& rng);

// Index-multiplexed Ry: for every value i of `select`, Ry(angles[i]) on
// `target`. Zero angles are skipped.
Circuit multiplexed_ry(std::size_t target, std::span<const std::size_t> select,
                       std::span<const double> angles);

// Unitary preparing sum_i values[i] |i> on `reg` from |0...0>. Values must be
// non-negative with unit L2 norm.
Circuit amplitude_encoding(std::span<const double> values, std::span<const std::size_t> reg);

// Qubit layout of an encoded sample, least significant first:
//   qubit 0                     data qubit (sqrt(1 - v_i^2)|0> + v_i|1>)
//   qubit 1                     flag qubit, |1>
//   qubits 2 .. 2+f-1           feature index i
//   qubits 2+f .. 2+f+s-1       sample index q
struct EncodingLayout {
  std::size_t feature_bits = 1;
  std::size_t sample_bits = 0;

  static constexpr std::size_t data_qubit() { return 0; }
  static constexpr std::size_t flag_qubit() { return 1; }
  std::vector<std::size_t> feature_qubits() const { return qubit_range(2, feature_bits); }
  std::vector<std::size_t> sample_qubits() const {
    return qubit_range(2 + feature_bits, sample_bits);
  }
  std::size_t payload_qubits() const { return 2 + feature_bits; }
  std::size_t num_qubits() const { return 2 + feature_bits + sample_bits; }
};

// (1/sqrt(N)) |q> sum_i |i> |1> (sqrt(1 - v_i^2)|0> + v_i|1>).
StateVector encode_sample(std::span<const double> unit_vector, std::uint64_t sample_index,
                          std::size_t index_bits);

// Closed-form amplitudes of encode_sample, computed without any gates.
std::vector<Amplitude> encoded_amplitudes(std::span<const double> unit_vector,
                                          std::uint64_t sample_index, std::size_t index_bits);

// Discards the sample-index register, which is always in a basis state.
StateVector strip_sample_register(StateVector state, const EncodingLayout& layout);

// Exchanges the flag and data qubits.
StateVector swap_flag(StateVector state);

// ---------------------------------------------------------------------------
// Swap test
// ---------------------------------------------------------------------------

// Composite ancilla (qubit 0) + A (qubits 1..w) + B (qubits w+1..2w) after
// H, pairwise controlled-SWAP, H.
StateVector swap_test_state(const StateVector& a, const StateVector& b);

// Exact P(ancilla = 1) = 1/2 - |<A|B>|^2 / 2.
double swap_test(const StateVector& a, const StateVector& b);

// ---------------------------------------------------------------------------
// Grover-Long amplitude amplification
// ---------------------------------------------------------------------------

using BasisPredicate = std::function<bool(std::uint64_t)>;

struct GroverPlan {
  std::size_t n = 0;
  std::uint64_t space_size = 0;
  std::uint64_t marked_estimate = 0;
  std::size_t iterations = 0;  // J
  double eta = 0.0;            // sin(eta) = sqrt(marked / space)
  double phi = 0.0;            // phase-matching angle
};

// Picks the smallest J with 4J + 2 >= pi/eta and the matching phase
// phi = 2 asin(sin(pi / (4J + 2)) / sin(eta)).
GroverPlan grover_plan(std::size_t n, std::uint64_t marked_estimate);

// G = -W I0 W^-1 O, where O and I0 multiply by e^{i phi} on the marked
// branches and on |0...0> of `reg` respectively.
Circuit grover_operator(std::span<const std::size_t> reg, BasisPredicate oracle, double phi,
                        const Circuit& prep);

StateVector grover_iterate(StateVector state, std::span<const std::size_t> reg,
                           const GroverPlan& plan, BasisPredicate oracle, const Circuit& prep);

// H^n |0>, followed by plan.iterations Grover-Long iterates.
StateVector grover_long_search(const GroverPlan& plan, const BasisPredicate& oracle);

// ---------------------------------------------------------------------------
// Quantum Fourier transform
// ---------------------------------------------------------------------------

// |x> -> 2^{-t/2} sum_y e^{2 pi i x y / 2^t} |y>, reg[0] the least significant bit.
Circuit qft(std::span<const std::size_t> reg);
StateVector apply_qft(StateVector state, std::span<const std::size_t> reg);
StateVector inverse_qft(StateVector state, std::span<const std::size_t> reg);

// ---------------------------------------------------------------------------
// Amplitude estimation
// ---------------------------------------------------------------------------

// A circuit acting on qubits [0, num_qubits) from |0...0>; a = P(flag = 1).
struct Preparation {
  Circuit circuit;
  std::size_t num_qubits = 1;
  std::optional<std::size_t> flag;
};

// Single-qubit preparation Ry(2 asin(sqrt(a))) with flag qubit 0.
Preparation rotation_preparation(double a);

// Work register `u` encoded, then `v` unencoded, flag set iff the register
// returns to |0...0>; P(flag = 1) = (u . v)^2.
Preparation overlap_preparation(std::span<const double> u, std::span<const double> v);

enum class AeCircuit { kFull, kReduced };

struct AEOutcome {
  std::uint64_t y = 0;
  std::size_t t = 0;
  double a_hat = 0.0;  // sin^2(pi y / 2^t)
};

AEOutcome make_outcome(std::uint64_t y, std::size_t t);

class AEDistribution {
 public:
  AEDistribution(std::size_t t, std::vector<double> probabilities);

  std::size_t bits() const { return t_; }
  std::span<const double> probabilities() const { return probs_; }

  // Mass folded onto c = min(y, 2^t - y), c in [0, 2^{t-1}].
  std::vector<double> canonical() const;
  // Most probable canonical estimate; ties go to the smaller c.
  AEOutcome modal() const;
  // Canonical mass on the two grid points bracketing asin(sqrt(a)) 2^t / pi.
  double mass_near(double a) const;

 private:
  std::size_t t_;
  std::vector<double> probs_;
};

AEDistribution amplitude_estimate(const Preparation& prep, std::size_t t, AeCircuit mode);

// min(y, 2^t - y): y and 2^t - y encode the same amplitude.
std::uint64_t canonical_estimate(std::uint64_t y, std::size_t t);

// |a_hat - a| <= sin(pi/2^t) (2 sqrt(a(1-a)) + sin(pi/2^t))
double ae_error_bound(double a, std::size_t t);

// ---------------------------------------------------------------------------
// Quantum k-extreme search
// ---------------------------------------------------------------------------

enum class Direction { kMin, kMax };

// Loop state of the threshold search.
struct ExtremeSearchState {
  std::uint64_t threshold = 0;  // d0, the value at `pivot`
  std::size_t pivot = 0;
  std::vector<std::size_t> found;
  Direction direction = Direction::kMin;
};

struct ExtremeSearchStats {
  std::size_t grover_runs = 0;
  std::size_t grover_iterations = 0;
  std::size_t failed_measurements = 0;
};

// k most extreme entries of `values` under (value, index) ordering, found by
// repeated Grover-Long searches for entries beyond the current threshold.
std::vector<std::size_t> quantum_extreme_search(std::span<const std::uint64_t> values,
                                                std::size_t k, Direction direction,
                                                RngStream& rng,
                                                ExtremeSearchStats* stats = nullptr);

}  // namespace qrelieff
