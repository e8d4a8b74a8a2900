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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qrelieff/rng.hpp"

namespace qrelieff {

using Amplitude = std::complex<double>;

// 2^28 amplitudes of 16 bytes each is 4 GiB.
inline constexpr std::size_t kMaxQubits = 28;

// Tolerances shared by the simulator and its tests.
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kAmplitudeTolerance = 1e-10;
inline constexpr double kZeroProbability = 1e-12;

enum class Polarity { kOne, kZero };

struct Control {
  std::size_t qubit;
  Polarity polarity = Polarity::kOne;
};

enum class GateKind { kH, kX, kRy, kPhase, kSwap };

// One (possibly multi-controlled) gate. Ry(theta) is
//   [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]
// and Phase(phi) is diag(1, e^{i phi}).
struct GateOp {
  GateKind kind = GateKind::kX;
  double angle = 0.0;
  std::vector<std::size_t> targets;
  std::vector<Control> controls;

  static GateOp h(std::size_t q);
  static GateOp x(std::size_t q);
  static GateOp ry(std::size_t q, double theta);
  static GateOp phase(std::size_t q, double phi);
  static GateOp swap(std::size_t a, std::size_t b);

  GateOp controlled(std::size_t q, Polarity polarity = Polarity::kOne) const;
  GateOp inverse() const;
};

// Multiplies e^{i phase} onto every basis branch whose controls are satisfied
// and whose `reg` value is accepted by `marked`. An empty `reg` passes the
// value 0, so an unconditional ConditionalPhase is a global phase.
struct ConditionalPhase {
  std::vector<std::size_t> reg;
  std::function<bool(std::uint64_t)> marked;
  double phase = 0.0;
  std::vector<Control> controls;

  ConditionalPhase controlled(std::size_t q, Polarity polarity = Polarity::kOne) const;
  ConditionalPhase inverse() const;
};

// Value of the sub-register `qubits` inside basis index `index`; qubits[0]
// supplies bit 0 of the result.
std::uint64_t register_value(std::uint64_t index, std::span<const std::size_t> qubits);

// Bitstring with qubits.back() first, i.e. the register value written in
// binary, most significant bit on the left.
std::string bitstring(std::uint64_t value, std::size_t width);

using Histogram = std::map<std::string, std::size_t>;

// Dense state of n qubits. Qubit j is bit j of the basis index (qubit 0 is
// the least-significant bit).
class StateVector {
 public:
  static StateVector zero(std::size_t num_qubits);
  static StateVector basis(std::size_t num_qubits, std::uint64_t index);
  // Length must be a power of two and the norm must be 1 within kNormTolerance.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude operator[](std::uint64_t index) const { return amplitudes_.at(index); }
  double norm_squared() const;

  void apply(const GateOp& gate);
  void apply(const ConditionalPhase& op);

  double probability_one(std::size_t qubit) const;
  // Exact distribution of the register value of `qubits`.
  std::vector<double> marginal(std::span<const std::size_t> qubits) const;

  void postselect(std::size_t qubit, int outcome);
  // Projective measurement of one qubit; collapses the state.
  int measure(std::size_t qubit, RngStream& rng);
  // Removes a qubit that is in a definite basis state.
  void drop_qubit(std::size_t qubit);

 private:
  StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

  void check_qubit(std::size_t qubit) const;

  std::size_t num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

StateVector zero_state(std::size_t num_qubits);
StateVector apply(StateVector state, const GateOp& gate);
double probability_one(const StateVector& state, std::size_t qubit);
StateVector postselect(StateVector state, std::size_t qubit, int outcome);
Histogram sample(const StateVector& state, std::span<const std::size_t> qubits,
                 std::size_t shots, RngStream& rng);
// <a|b> = sum_i conj(a_i) b_i
Amplitude inner_product(const StateVector& a, const StateVector& b);
// `low` occupies qubits [0, low.n), `high` the qubits above it.
StateVector tensor(const StateVector& low, const StateVector& high);

}  // namespace qrelieff
