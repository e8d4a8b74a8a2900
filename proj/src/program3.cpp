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

#include "qrelieff/program3.hpp"

#include <cmath>
#include <numbers>

#include "qrelieff/error.hpp"
#include "qrelieff/statevector.hpp"

namespace qrelieff {

namespace {

GateOp ccnot(std::size_t c0, std::size_t c1, std::size_t target) {
  return GateOp::x(target).controlled(c0).controlled(c1);
}

// The listing's CRY(1) gate: [[sqrt(1 - th^2), -th^2], [th^2, sqrt(1 - th^2)]]
// at th = 1, i.e. a controlled Ry(pi).
GateOp cry1(std::size_t control, std::size_t target) {
  return GateOp::ry(target, std::numbers::pi).controlled(control);
}

GateOp cswap(std::size_t control, std::size_t a, std::size_t b) {
  return GateOp::swap(a, b).controlled(control);
}

}  // namespace

Circuit program3_circuit() {
  Circuit c;
  // First sample register: qubits 0-8, comparator ancilla 18.
  c.add(GateOp::x(1)).add(GateOp::h(2)).add(GateOp::h(4)).add(GateOp::h(5));
  c.add(GateOp::x(2)).add(GateOp::x(5));
  c.add(ccnot(2, 5, 18));
  c.add(GateOp::x(2)).add(GateOp::x(5));
  c.add(cry1(18, 0));
  c.add(GateOp::swap(0, 1));
  // Second sample register: qubits 9-16, comparator ancilla 17.
  c.add(GateOp::x(10)).add(GateOp::h(11)).add(GateOp::h(12)).add(GateOp::h(13));
  c.add(GateOp::x(14)).add(GateOp::x(11)).add(GateOp::x(12));
  c.add(ccnot(11, 12, 17));
  c.add(GateOp::x(11)).add(GateOp::x(12));
  c.add(cry1(17, 9));
  // Swap test controlled by qubit 19.
  c.add(GateOp::h(19));
  c.add(cswap(19, 0, 9)).add(cswap(19, 1, 10)).add(cswap(19, 2, 11));
  c.add(cswap(19, 4, 12)).add(cswap(19, 5, 13)).add(cswap(19, 6, 14));
  c.add(cswap(19, 7, 15)).add(cswap(19, 8, 16));
  c.add(GateOp::h(19));
  return c;
}

bool Program3Result::within_band(double k_sigma) const {
  return std::abs(sampled_mean - exact_p1) <= k_sigma * sigma;
}

Program3Result reproduce_program3(RngStream& rng, std::size_t runs, std::size_t shots) {
  if (runs < 1 || shots < 1) {
    throw ConfigError("program3: runs and shots must be >= 1");
  }
  const StateVector state = run(program3_circuit(), zero_state(kProgram3Qubits));
  Program3Result out;
  out.runs = runs;
  out.shots = shots;
  out.exact_p1 = state.probability_one(kProgram3ResultQubit);
  const std::size_t result_qubit = kProgram3ResultQubit;
  double total = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    const Histogram hist = sample(state, {&result_qubit, 1}, shots, rng);
    const auto it = hist.find("1");
    const double p = it == hist.end() ? 0.0
                                      : static_cast<double>(it->second) / static_cast<double>(shots);
    out.run_p1.push_back(p);
    total += p;
  }
  out.sampled_mean = total / static_cast<double>(runs);
  const double trials = static_cast<double>(runs * shots);
  out.sigma = std::sqrt(out.exact_p1 * (1.0 - out.exact_p1) / trials);
  return out;
}

}  // namespace qrelieff
