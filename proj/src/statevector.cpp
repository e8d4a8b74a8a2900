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

#include "qrelieff/statevector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qrelieff/error.hpp"

namespace qrelieff {

namespace {

using Matrix2 = std::array<Amplitude, 4>;

Matrix2 gate_matrix(const GateOp& gate) {
  switch (gate.kind) {
    case GateKind::kH: {
      const double s = std::numbers::sqrt2 / 2.0;
      return {s, s, s, -s};
    }
    case GateKind::kX:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kRy: {
      const double c = std::cos(gate.angle / 2.0);
      const double s = std::sin(gate.angle / 2.0);
      return {c, -s, s, c};
    }
    case GateKind::kPhase:
      return {1.0, 0.0, 0.0, std::polar(1.0, gate.angle)};
    case GateKind::kSwap:
      break;
  }
  throw PreconditionError("gate has no single-qubit matrix");
}

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;

  bool satisfied(std::uint64_t index) const { return (index & mask) == value; }
};

ControlMask make_mask(std::span<const Control> controls) {
  ControlMask m;
  for (const Control& c : controls) {
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    m.mask |= bit;
    if (c.polarity == Polarity::kOne) {
      m.value |= bit;
    }
  }
  return m;
}

// Targets and controls must be in range and pairwise distinct.
void validate_indices(std::size_t num_qubits, std::span<const std::size_t> targets,
                      std::span<const Control> controls) {
  std::vector<std::size_t> all(targets.begin(), targets.end());
  for (const Control& c : controls) {
    all.push_back(c.qubit);
  }
  for (std::size_t q : all) {
    if (q >= num_qubits) {
      throw IndexError("qubit index " + std::to_string(q) + " out of range for " +
                       std::to_string(num_qubits) + "-qubit state");
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw IndexError("gate targets and controls must be pairwise distinct");
  }
}

void check_capacity(std::size_t num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

GateOp GateOp::h(std::size_t q) { return {GateKind::kH, 0.0, {q}, {}}; }
GateOp GateOp::x(std::size_t q) { return {GateKind::kX, 0.0, {q}, {}}; }
GateOp GateOp::ry(std::size_t q, double theta) { return {GateKind::kRy, theta, {q}, {}}; }
GateOp GateOp::phase(std::size_t q, double phi) { return {GateKind::kPhase, phi, {q}, {}}; }
GateOp GateOp::swap(std::size_t a, std::size_t b) { return {GateKind::kSwap, 0.0, {a, b}, {}}; }

GateOp GateOp::controlled(std::size_t q, Polarity polarity) const {
  GateOp out = *this;
  out.controls.push_back({q, polarity});
  return out;
}

GateOp GateOp::inverse() const {
  GateOp out = *this;
  if (kind == GateKind::kRy || kind == GateKind::kPhase) {
    out.angle = -angle;
  }
  return out;
}

ConditionalPhase ConditionalPhase::controlled(std::size_t q, Polarity polarity) const {
  ConditionalPhase out = *this;
  out.controls.push_back({q, polarity});
  return out;
}

ConditionalPhase ConditionalPhase::inverse() const {
  ConditionalPhase out = *this;
  out.phase = -phase;
  return out;
}

std::uint64_t register_value(std::uint64_t index, std::span<const std::size_t> qubits) {
  std::uint64_t value = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    value |= ((index >> qubits[j]) & 1U) << j;
  }
  return value;
}

std::string bitstring(std::uint64_t value, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t j = 0; j < width; ++j) {
    if ((value >> j) & 1U) {
      out[width - 1 - j] = '1';
    }
  }
  return out;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::zero(std::size_t num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
  check_capacity(num_qubits);
  std::vector<Amplitude> amps(std::uint64_t{1} << num_qubits);
  if (index >= amps.size()) {
    throw IndexError("basis index " + std::to_string(index) + " out of range");
  }
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::uint64_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw PreconditionError("amplitude count must be a power of two >= 2");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  check_capacity(n);
  StateVector out(n, std::move(amplitudes));
  if (std::abs(out.norm_squared() - 1.0) > kNormTolerance) {
    throw PreconditionError("amplitudes are not normalized");
  }
  return out;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amplitudes_) {
    total += std::norm(a);
  }
  return total;
}

void StateVector::check_qubit(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw IndexError("qubit index " + std::to_string(qubit) + " out of range for " +
                     std::to_string(num_qubits_) + "-qubit state");
  }
}

void StateVector::apply(const GateOp& gate) {
  const std::size_t expected_targets = gate.kind == GateKind::kSwap ? 2 : 1;
  if (gate.targets.size() != expected_targets) {
    throw IndexError("gate has wrong number of targets");
  }
  validate_indices(num_qubits_, gate.targets, gate.controls);
  const ControlMask ctrl = make_mask(gate.controls);
  const std::uint64_t dim = amplitudes_.size();

  if (gate.kind == GateKind::kSwap) {
    const std::uint64_t a = std::uint64_t{1} << gate.targets[0];
    const std::uint64_t b = std::uint64_t{1} << gate.targets[1];
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & a) && !(i & b) && ctrl.satisfied(i)) {
        std::swap(amplitudes_[i], amplitudes_[i ^ a ^ b]);
      }
    }
    return;
  }

  const std::uint64_t t = std::uint64_t{1} << gate.targets[0];
  if (gate.kind == GateKind::kX) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (!(i & t) && ctrl.satisfied(i)) {
        std::swap(amplitudes_[i], amplitudes_[i | t]);
      }
    }
    return;
  }

  const Matrix2 m = gate_matrix(gate);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & t) || !ctrl.satisfied(i)) {
      continue;
    }
    const Amplitude a0 = amplitudes_[i];
    const Amplitude a1 = amplitudes_[i | t];
    amplitudes_[i] = m[0] * a0 + m[1] * a1;
    amplitudes_[i | t] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply(const ConditionalPhase& op) {
  validate_indices(num_qubits_, op.reg, op.controls);
  if (!op.marked) {
    throw PreconditionError("conditional phase has no predicate");
  }
  const ControlMask ctrl = make_mask(op.controls);
  const Amplitude factor = std::polar(1.0, op.phase);
  const std::uint64_t dim = amplitudes_.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (ctrl.satisfied(i) && op.marked(register_value(i, op.reg))) {
      amplitudes_[i] *= factor;
    }
  }
}

double StateVector::probability_one(std::size_t qubit) const {
  check_qubit(qubit);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double p = 0.0;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & bit) {
      p += std::norm(amplitudes_[i]);
    }
  }
  return std::clamp(p, 0.0, 1.0);
}

std::vector<double> StateVector::marginal(std::span<const std::size_t> qubits) const {
  validate_indices(num_qubits_, qubits, {});
  std::vector<double> probs(std::uint64_t{1} << qubits.size(), 0.0);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    probs[register_value(i, qubits)] += std::norm(amplitudes_[i]);
  }
  return probs;
}

void StateVector::postselect(std::size_t qubit, int outcome) {
  check_qubit(qubit);
  if (outcome != 0 && outcome != 1) {
    throw PreconditionError("measurement outcome must be 0 or 1");
  }
  const double p1 = probability_one(qubit);
  const double p = outcome == 1 ? p1 : 1.0 - p1;
  if (p <= kZeroProbability) {
    throw DegeneratePostselectionError("postselecting qubit " + std::to_string(qubit) +
                                       " on a zero-probability outcome");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const double scale = 1.0 / std::sqrt(p);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const bool one = (i & bit) != 0;
    if (one == (outcome == 1)) {
      amplitudes_[i] *= scale;
    } else {
      amplitudes_[i] = 0.0;
    }
  }
}

int StateVector::measure(std::size_t qubit, RngStream& rng) {
  const double p1 = probability_one(qubit);
  const int outcome = rng.uniform() < p1 ? 1 : 0;
  postselect(qubit, outcome);
  return outcome;
}

void StateVector::drop_qubit(std::size_t qubit) {
  check_qubit(qubit);
  if (num_qubits_ == 1) {
    throw CapacityError("cannot drop the only qubit of a state");
  }
  const double p1 = probability_one(qubit);
  std::uint64_t keep;
  if (p1 <= kZeroProbability) {
    keep = 0;
  } else if (p1 >= 1.0 - kZeroProbability) {
    keep = 1;
  } else {
    throw PreconditionError("qubit " + std::to_string(qubit) + " is not in a basis state");
  }
  const std::uint64_t low_mask = (std::uint64_t{1} << qubit) - 1;
  std::vector<Amplitude> out(amplitudes_.size() / 2);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (((i >> qubit) & 1U) == keep) {
      out[(i & low_mask) | ((i >> (qubit + 1)) << qubit)] = amplitudes_[i];
    }
  }
  amplitudes_ = std::move(out);
  --num_qubits_;
  const double scale = 1.0 / std::sqrt(norm_squared());
  for (Amplitude& a : amplitudes_) {
    a *= scale;
  }
}

StateVector zero_state(std::size_t num_qubits) { return StateVector::zero(num_qubits); }

StateVector apply(StateVector state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

double probability_one(const StateVector& state, std::size_t qubit) {
  return state.probability_one(qubit);
}

StateVector postselect(StateVector state, std::size_t qubit, int outcome) {
  state.postselect(qubit, outcome);
  return state;
}

Histogram sample(const StateVector& state, std::span<const std::size_t> qubits,
                 std::size_t shots, RngStream& rng) {
  if (qubits.empty()) {
    throw PreconditionError("sample: qubit list is empty");
  }
  if (shots == 0) {
    throw PreconditionError("sample: shots must be >= 1");
  }
  const std::vector<double> probs = state.marginal(qubits);
  std::vector<double> cumulative(probs.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    cumulative[i] = running;
  }
  std::vector<std::size_t> counts(probs.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    const double r = rng.uniform() * running;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    auto idx = static_cast<std::size_t>(it - cumulative.begin());
    // Guard against r landing past the last bucket through rounding.
    idx = std::min(idx, probs.size() - 1);
    while (probs[idx] == 0.0 && idx > 0) {
      --idx;
    }
    ++counts[idx];
  }
  Histogram hist;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) {
      hist[bitstring(i, qubits.size())] = counts[i];
    }
  }
  return hist;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw IndexError("inner_product: dimension mismatch");
  }
  Amplitude total = 0.0;
  const auto lhs = a.amplitudes();
  const auto rhs = b.amplitudes();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    total += std::conj(lhs[i]) * rhs[i];
  }
  return total;
}

StateVector tensor(const StateVector& low, const StateVector& high) {
  const std::size_t n = low.num_qubits() + high.num_qubits();
  if (n > kMaxQubits) {
    throw CapacityError("tensor product needs " + std::to_string(n) + " qubits");
  }
  std::vector<Amplitude> amps(std::uint64_t{1} << n);
  const auto lo = low.amplitudes();
  const auto hi = high.amplitudes();
  for (std::uint64_t h = 0; h < hi.size(); ++h) {
    if (hi[h] == Amplitude{}) {
      continue;
    }
    for (std::uint64_t l = 0; l < lo.size(); ++l) {
      amps[l | (h << low.num_qubits())] = lo[l] * hi[h];
    }
  }
  return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace qrelieff
