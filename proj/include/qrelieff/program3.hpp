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
#include <vector>

#include "qrelieff/circuit.hpp"
#include "qrelieff/rng.hpp"

namespace qrelieff {

// Two-sample similarity circuit originally run on a 20-qubit superconducting
// device. Qubits keep their device labels 0..19; qubit 3 was off-line there
// and stays idle in |0> here. Qubit 19 is the swap-test result qubit.
inline constexpr std::size_t kProgram3Qubits = 20;
inline constexpr std::size_t kProgram3ResultQubit = 19;
// Mean P(1) over eight 1024-shot hardware runs, kept for comparison only.
inline constexpr double kProgram3ReportedMean = 0.435125;

Circuit program3_circuit();

struct Program3Result {
  double exact_p1 = 0.0;
  std::vector<double> run_p1;  // per-run sampled P(1)
  double sampled_mean = 0.0;
  double sigma = 0.0;          // binomial std. error of the mean
  std::size_t runs = 0;
  std::size_t shots = 0;

  bool within_band(double k_sigma = 3.0) const;
};

Program3Result reproduce_program3(RngStream& rng, std::size_t runs = 8, std::size_t shots = 1024);

}  // namespace qrelieff
