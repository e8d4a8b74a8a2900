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

#include "qrelieff/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "qrelieff/error.hpp"

namespace qrelieff {

namespace {

constexpr double kPi = std::numbers::pi;

void check_unit_nonnegative(std::span<const double> values, const char* what) {
  if (values.empty()) {
    throw PreconditionError(std::string(what) + ": empty vector");
  }
  double norm2 = 0.0;
  for (double v : values) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw PreconditionError(std::string(what) + ": entries must be finite and non-negative");
    }
    norm2 += v * v;
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance) {
    throw PreconditionError(std::string(what) + ": vector is not unit-norm");
  }
}

std::size_t draw_index(std::span<const double> probs, RngStream& rng) {
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  const double r = rng.uniform() * total;
  double running = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) {
      continue;
    }
    last_nonzero = i;
    running += probs[i];
    if (r < running) {
      return i;
    }
  }
  return last_nonzero;
}

}  // namespace

std::size_t register_width(std::uint64_t count) {
  std::size_t bits = 1;
  while ((std::uint64_t{1} << bits) < count) {
    ++bits;
  }
  return bits;
}

std::vector<std::size_t> qubit_range(std::size_t first, std::size_t width) {
  std::vector<std::size_t> out(width);
  std::iota(out.begin(), out.end(), first);
  return out;
}

Circuit comparator(std::span<const std::size_t> reg, std::uint64_t bound, std::size_t flag) {
  const std::size_t w = reg.size();
  if (w == 0 || w > 62) {
    throw PreconditionError("comparator: register width out of range");
  }
  const std::uint64_t space = std::uint64_t{1} << w;
  if (bound < 1 || bound > space) {
    throw PreconditionError("comparator: bound " + std::to_string(bound) + " outside [1, " +
                            std::to_string(space) + "]");
  }
  Circuit out;
  if (bound == space) {
    return out;
  }
  // i > bound first differs from bound at some bit j where bound_j = 0, i_j = 1.
  for (std::size_t jj = w; jj-- > 0;) {
    if ((bound >> jj) & 1U) {
      continue;
    }
    GateOp gate = GateOp::x(flag);
    for (std::size_t h = jj + 1; h < w; ++h) {
      gate = gate.controlled(reg[h], ((bound >> h) & 1U) ? Polarity::kOne : Polarity::kZero);
    }
    gate = gate.controlled(reg[jj], Polarity::kOne);
    out.add(gate);
  }
  // i == bound.
  GateOp equal = GateOp::x(flag);
  for (std::size_t h = 0; h < w; ++h) {
    equal = equal.controlled(reg[h], ((bound >> h) & 1U) ? Polarity::kOne : Polarity::kZero);
  }
  out.add(equal);
  return out;
}

StateVector cmp_flag(StateVector state, std::span<const std::size_t> reg, std::uint64_t bound,
                     std::size_t flag) {
  if (state.probability_one(flag) > kZeroProbability) {
    throw PreconditionError("cmp_flag: flag qubit is not clear");
  }
  comparator(reg, bound, flag).apply_to(state);
  return state;
}

namespace {

StateVector hadamard_with_flag(std::size_t n, std::uint64_t count) {
  if (n < 1 || n + 1 > kMaxQubits) {
    throw CapacityError("uniform_mod_n: register width out of range");
  }
  if (count < 1 || count > (std::uint64_t{1} << n)) {
    throw PreconditionError("uniform_mod_n: count outside [1, 2^n]");
  }
  StateVector state = zero_state(n + 1);
  for (std::size_t q = 0; q < n; ++q) {
    state.apply(GateOp::h(q));
  }
  const auto reg = qubit_range(0, n);
  return cmp_flag(std::move(state), reg, count, n);
}

}  // namespace

StateVector uniform_mod_n(std::size_t n, std::uint64_t count) {
  StateVector state = hadamard_with_flag(n, count);
  state.postselect(n, 0);
  state.drop_qubit(n);
  return state;
}

SampledUniform uniform_mod_n_sampled(std::size_t n, std::uint64_t count, RngStream& rng) {
  for (std::size_t attempt = 1;; ++attempt) {
    StateVector state = hadamard_with_flag(n, count);
    if (state.measure(n, rng) == 0) {
      state.drop_qubit(n);
      return {std::move(state), attempt};
    }
  }
}

Circuit multiplexed_ry(std::size_t target, std::span<const std::size_t> select,
                       std::span<const double> angles) {
  if (select.size() >= 63 || angles.size() > (std::uint64_t{1} << select.size())) {
    throw PreconditionError("multiplexed_ry: more angles than select values");
  }
  Circuit out;
  for (std::uint64_t i = 0; i < angles.size(); ++i) {
    if (angles[i] == 0.0) {
      continue;
    }
    GateOp gate = GateOp::ry(target, angles[i]);
    for (std::size_t j = 0; j < select.size(); ++j) {
      gate = gate.controlled(select[j], ((i >> j) & 1U) ? Polarity::kOne : Polarity::kZero);
    }
    out.add(gate);
  }
  return out;
}

Circuit amplitude_encoding(std::span<const double> values, std::span<const std::size_t> reg) {
  check_unit_nonnegative(values, "amplitude_encoding");
  const std::size_t w = reg.size();
  if (w == 0 || values.size() > (std::uint64_t{1} << w)) {
    throw PreconditionError("amplitude_encoding: register too narrow");
  }
  const std::uint64_t space = std::uint64_t{1} << w;
  std::vector<double> weight(space, 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    weight[i] = values[i] * values[i];
  }
  Circuit out;
  // Decide bits from the most significant down; each level splits the mass
  // of every prefix between its two children.
  for (std::size_t level = w; level-- > 0;) {
    const std::uint64_t prefixes = std::uint64_t{1} << (w - 1 - level);
    const std::uint64_t half = std::uint64_t{1} << level;
    std::vector<double> angles(prefixes, 0.0);
    for (std::uint64_t p = 0; p < prefixes; ++p) {
      const std::uint64_t base = p << (level + 1);
      double w0 = 0.0;
      double w1 = 0.0;
      for (std::uint64_t i = 0; i < half; ++i) {
        w0 += weight[base + i];
        w1 += weight[base + half + i];
      }
      angles[p] = 2.0 * std::atan2(std::sqrt(w1), std::sqrt(w0));
    }
    const std::vector<std::size_t> select(reg.begin() + static_cast<std::ptrdiff_t>(level) + 1,
                                          reg.end());
    out.append(multiplexed_ry(reg[level], select, angles));
  }
  return out;
}

std::vector<Amplitude> encoded_amplitudes(std::span<const double> unit_vector,
                                          std::uint64_t sample_index, std::size_t index_bits) {
  const std::size_t n = register_width(unit_vector.size());
  const EncodingLayout layout{n, index_bits};
  std::vector<Amplitude> amps(std::uint64_t{1} << layout.num_qubits());
  const double scale = 1.0 / std::sqrt(static_cast<double>(unit_vector.size()));
  for (std::uint64_t i = 0; i < unit_vector.size(); ++i) {
    const double v = unit_vector[i];
    const std::uint64_t base = (sample_index << (2 + n)) | (i << 2) | 0b10U;
    amps[base] = scale * std::sqrt(std::max(0.0, 1.0 - v * v));
    amps[base | 1U] = scale * v;
  }
  return amps;
}

StateVector encode_sample(std::span<const double> unit_vector, std::uint64_t sample_index,
                          std::size_t index_bits) {
  check_unit_nonnegative(unit_vector, "encode_sample");
  const std::uint64_t count = unit_vector.size();
  const EncodingLayout layout{register_width(count), index_bits};
  if (index_bits < 63 && sample_index >= (std::uint64_t{1} << index_bits)) {
    throw IndexError("encode_sample: sample index does not fit the index register");
  }
  const bool needs_cut = count < (std::uint64_t{1} << layout.feature_bits);
  const std::size_t scratch = layout.num_qubits();
  StateVector state = zero_state(layout.num_qubits() + (needs_cut ? 1 : 0));

  const auto sample_reg = layout.sample_qubits();
  for (std::size_t j = 0; j < sample_reg.size(); ++j) {
    if ((sample_index >> j) & 1U) {
      state.apply(GateOp::x(sample_reg[j]));
    }
  }
  state.apply(GateOp::x(EncodingLayout::flag_qubit()));

  const auto feature_reg = layout.feature_qubits();
  for (std::size_t q : feature_reg) {
    state.apply(GateOp::h(q));
  }
  if (needs_cut) {
    state = cmp_flag(std::move(state), feature_reg, count, scratch);
    state.postselect(scratch, 0);
    state.drop_qubit(scratch);
  }

  std::vector<double> angles(count);
  for (std::size_t i = 0; i < count; ++i) {
    angles[i] = 2.0 * std::asin(std::min(1.0, unit_vector[i]));
  }
  multiplexed_ry(EncodingLayout::data_qubit(), feature_reg, angles).apply_to(state);
  return state;
}

StateVector strip_sample_register(StateVector state, const EncodingLayout& layout) {
  if (state.num_qubits() != layout.num_qubits()) {
    throw IndexError("strip_sample_register: state does not match layout");
  }
  const auto sample_reg = layout.sample_qubits();
  for (auto it = sample_reg.rbegin(); it != sample_reg.rend(); ++it) {
    state.drop_qubit(*it);
  }
  return state;
}

StateVector swap_flag(StateVector state) {
  state.apply(GateOp::swap(EncodingLayout::data_qubit(), EncodingLayout::flag_qubit()));
  return state;
}

StateVector swap_test_state(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw IndexError("swap_test: register width mismatch");
  }
  const std::size_t w = a.num_qubits();
  if (1 + 2 * w > kMaxQubits) {
    throw CapacityError("swap_test: composite register needs " + std::to_string(1 + 2 * w) +
                        " qubits");
  }
  StateVector state = tensor(zero_state(1), tensor(a, b));
  state.apply(GateOp::h(0));
  for (std::size_t j = 0; j < w; ++j) {
    state.apply(GateOp::swap(1 + j, 1 + w + j).controlled(0));
  }
  state.apply(GateOp::h(0));
  return state;
}

double swap_test(const StateVector& a, const StateVector& b) {
  return swap_test_state(a, b).probability_one(0);
}

GroverPlan grover_plan(std::size_t n, std::uint64_t marked_estimate) {
  if (n < 1 || n > 62) {
    throw PreconditionError("grover_plan: register width out of range");
  }
  const std::uint64_t space = std::uint64_t{1} << n;
  if (marked_estimate == 0) {
    throw NoSolutionError("grover_plan: no marked element");
  }
  if (marked_estimate > space) {
    throw PreconditionError("grover_plan: marked count exceeds search space");
  }
  GroverPlan plan;
  plan.n = n;
  plan.space_size = space;
  plan.marked_estimate = marked_estimate;
  const double sin_eta =
      std::sqrt(static_cast<double>(marked_estimate) / static_cast<double>(space));
  plan.eta = std::asin(sin_eta);
  // Slack absorbs rounding when pi/eta lands exactly on 4J + 2.
  const double needed = (kPi / plan.eta - 2.0) / 4.0;
  plan.iterations = needed <= 1e-9 ? 0 : static_cast<std::size_t>(std::ceil(needed - 1e-9));
  const double ratio = std::sin(kPi / (4.0 * static_cast<double>(plan.iterations) + 2.0)) / sin_eta;
  plan.phi = 2.0 * std::asin(std::min(1.0, ratio));
  return plan;
}

Circuit grover_operator(std::span<const std::size_t> reg, BasisPredicate oracle, double phi,
                        const Circuit& prep) {
  const std::vector<std::size_t> r(reg.begin(), reg.end());
  Circuit g;
  g.add(ConditionalPhase{r, std::move(oracle), phi, {}});
  g.append(prep.inverse());
  g.add(ConditionalPhase{r, [](std::uint64_t v) { return v == 0; }, phi, {}});
  g.append(prep);
  g.add(ConditionalPhase{{}, [](std::uint64_t) { return true; }, kPi, {}});
  return g;
}

StateVector grover_iterate(StateVector state, std::span<const std::size_t> reg,
                           const GroverPlan& plan, BasisPredicate oracle, const Circuit& prep) {
  grover_operator(reg, std::move(oracle), plan.phi, prep).apply_to(state);
  return state;
}

StateVector grover_long_search(const GroverPlan& plan, const BasisPredicate& oracle) {
  const auto reg = qubit_range(0, plan.n);
  Circuit prep;
  for (std::size_t q : reg) {
    prep.add(GateOp::h(q));
  }
  StateVector state = run(prep, zero_state(plan.n));
  const Circuit g = grover_operator(reg, oracle, plan.phi, prep);
  for (std::size_t j = 0; j < plan.iterations; ++j) {
    g.apply_to(state);
  }
  return state;
}

Circuit qft(std::span<const std::size_t> reg) {
  if (reg.empty()) {
    throw PreconditionError("qft: empty register");
  }
  const std::size_t t = reg.size();
  Circuit out;
  for (std::size_t j = t; j-- > 0;) {
    out.add(GateOp::h(reg[j]));
    for (std::size_t k = j; k-- > 0;) {
      const double angle = kPi / static_cast<double>(std::uint64_t{1} << (j - k));
      out.add(GateOp::phase(reg[j], angle).controlled(reg[k]));
    }
  }
  for (std::size_t i = 0; i < t / 2; ++i) {
    out.add(GateOp::swap(reg[i], reg[t - 1 - i]));
  }
  return out;
}

StateVector apply_qft(StateVector state, std::span<const std::size_t> reg) {
  qft(reg).apply_to(state);
  return state;
}

StateVector inverse_qft(StateVector state, std::span<const std::size_t> reg) {
  qft(reg).inverse().apply_to(state);
  return state;
}

Preparation rotation_preparation(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw PreconditionError("rotation_preparation: a outside [0, 1]");
  }
  Preparation prep;
  prep.circuit.add(GateOp::ry(0, 2.0 * std::asin(std::sqrt(a))));
  prep.num_qubits = 1;
  prep.flag = 0;
  return prep;
}

Preparation overlap_preparation(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw PreconditionError("overlap_preparation: length mismatch");
  }
  const std::size_t w = register_width(u.size());
  const auto reg = qubit_range(0, w);
  Preparation prep;
  prep.circuit.append(amplitude_encoding(u, reg));
  prep.circuit.append(amplitude_encoding(v, reg).inverse());
  GateOp flag = GateOp::x(w);
  for (std::size_t q : reg) {
    flag = flag.controlled(q, Polarity::kZero);
  }
  prep.circuit.add(flag);
  prep.num_qubits = w + 1;
  prep.flag = w;
  return prep;
}

std::uint64_t canonical_estimate(std::uint64_t y, std::size_t t) {
  const std::uint64_t space = std::uint64_t{1} << t;
  return std::min(y, (space - y) % space);
}

AEOutcome make_outcome(std::uint64_t y, std::size_t t) {
  const double s = std::sin(kPi * static_cast<double>(y) / static_cast<double>(std::uint64_t{1} << t));
  return {y, t, std::clamp(s * s, 0.0, 1.0)};
}

double ae_error_bound(double a, std::size_t t) {
  const double s = std::sin(kPi / static_cast<double>(std::uint64_t{1} << t));
  return s * (2.0 * std::sqrt(std::max(0.0, a * (1.0 - a))) + s);
}

AEDistribution::AEDistribution(std::size_t t, std::vector<double> probabilities)
    : t_(t), probs_(std::move(probabilities)) {
  if (probs_.size() != (std::uint64_t{1} << t_)) {
    throw PreconditionError("AEDistribution: size must be 2^t");
  }
}

std::vector<double> AEDistribution::canonical() const {
  const std::uint64_t space = probs_.size();
  std::vector<double> out(space / 2 + 1, 0.0);
  for (std::uint64_t y = 0; y < space; ++y) {
    out[canonical_estimate(y, t_)] += probs_[y];
  }
  return out;
}

AEOutcome AEDistribution::modal() const {
  const std::vector<double> c = canonical();
  std::uint64_t best = 0;
  for (std::uint64_t i = 1; i < c.size(); ++i) {
    if (c[i] > c[best] + 1e-12) {
      best = i;
    }
  }
  return make_outcome(best, t_);
}

double AEDistribution::mass_near(double a) const {
  const std::vector<double> c = canonical();
  const double x = std::asin(std::sqrt(std::clamp(a, 0.0, 1.0))) *
                   static_cast<double>(probs_.size()) / kPi;
  const auto lo = static_cast<std::uint64_t>(std::floor(x));
  const std::uint64_t hi = std::min<std::uint64_t>(lo + 1, c.size() - 1);
  double mass = c[std::min<std::uint64_t>(lo, c.size() - 1)];
  if (hi != lo) {
    mass += c[hi];
  }
  return mass;
}

AEDistribution amplitude_estimate(const Preparation& prep, std::size_t t, AeCircuit mode) {
  if (t < 1) {
    throw PreconditionError("amplitude_estimate: t must be >= 1");
  }
  if (!prep.flag.has_value()) {
    throw PreconditionError("amplitude_estimate: preparation has no designated flag qubit");
  }
  if (*prep.flag >= prep.num_qubits) {
    throw IndexError("amplitude_estimate: flag qubit outside the preparation register");
  }
  Preparation work = prep;
  if (mode == AeCircuit::kReduced) {
    const double a = run(prep.circuit, zero_state(prep.num_qubits)).probability_one(*prep.flag);
    work = rotation_preparation(a);
  }
  const std::size_t w = work.num_qubits;
  if (w + t > kMaxQubits) {
    throw CapacityError("amplitude_estimate: needs " + std::to_string(w + t) + " qubits");
  }
  const auto work_reg = qubit_range(0, w);
  const auto readout = qubit_range(w, t);
  const std::size_t flag = *work.flag;

  StateVector state = run(work.circuit, zero_state(w + t));
  for (std::size_t q : readout) {
    state.apply(GateOp::h(q));
  }
  const Circuit q_op = grover_operator(
      work_reg, [flag](std::uint64_t v) { return ((v >> flag) & 1U) != 0; }, kPi, work.circuit);
  for (std::size_t j = 0; j < t; ++j) {
    const Circuit controlled = q_op.controlled(readout[j]);
    const std::uint64_t power = std::uint64_t{1} << j;
    for (std::uint64_t r = 0; r < power; ++r) {
      controlled.apply_to(state);
    }
  }
  state = inverse_qft(std::move(state), readout);
  return AEDistribution(t, state.marginal(readout));
}

std::vector<std::size_t> quantum_extreme_search(std::span<const std::uint64_t> values,
                                                std::size_t k, Direction direction,
                                                RngStream& rng, ExtremeSearchStats* stats) {
  if (values.empty()) {
    throw PreconditionError("quantum_extreme_search: empty table");
  }
  if (k < 1 || k > values.size()) {
    throw PreconditionError("quantum_extreme_search: k=" + std::to_string(k) +
                            " outside [1, " + std::to_string(values.size()) + "]");
  }
  const std::size_t population = values.size();
  const std::size_t n = register_width(population);
  auto beyond = [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) {
      return direction == Direction::kMax ? values[a] > values[b] : values[a] < values[b];
    }
    return a < b;
  };

  ExtremeSearchStats local;
  ExtremeSearchStats& st = stats != nullptr ? *stats : local;
  std::vector<bool> taken(population, false);
  auto first_free = [&] {
    return static_cast<std::size_t>(std::find(taken.begin(), taken.end(), false) - taken.begin());
  };

  ExtremeSearchState search;
  search.direction = direction;
  search.pivot = 0;
  search.threshold = values[0];
  std::size_t consecutive_failures = 0;

  while (search.found.size() < k) {
    std::vector<bool> marked(std::uint64_t{1} << n, false);
    std::uint64_t marked_count = 0;
    for (std::size_t i = 0; i < population; ++i) {
      if (!taken[i] && i != search.pivot && beyond(i, search.pivot)) {
        marked[i] = true;
        ++marked_count;
      }
    }
    if (marked_count == 0) {
      // Nothing beats the threshold: the pivot is the next extreme.
      search.found.push_back(search.pivot);
      taken[search.pivot] = true;
      if (search.found.size() < k) {
        search.pivot = first_free();
        search.threshold = values[search.pivot];
      }
      continue;
    }
    const GroverPlan plan = grover_plan(n, marked_count);
    const StateVector out =
        grover_long_search(plan, [&marked](std::uint64_t v) { return marked[v]; });
    ++st.grover_runs;
    st.grover_iterations += plan.iterations;
    const auto reg = qubit_range(0, n);
    const std::size_t hit = draw_index(out.marginal(reg), rng);
    if (hit < population && marked[hit]) {
      search.pivot = hit;
      search.threshold = values[hit];
      consecutive_failures = 0;
    } else {
      ++st.failed_measurements;
      if (++consecutive_failures > 64) {
        throw Error("quantum_extreme_search: Grover-Long search keeps missing marked items");
      }
    }
  }
  return search.found;
}

}  // namespace qrelieff
