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

#include <gtest/gtest.h>

#include <cmath>

#include "qrelieff/program3.hpp"
#include "qrelieff/statevector.hpp"

namespace qrelieff {
namespace {

TEST(Program3, CircuitShape) {
  const Circuit c = program3_circuit();
  EXPECT_EQ(c.size(), 32U);
  for (const Operation& op : c.operations()) {
    const auto& g = std::get<GateOp>(op);
    for (std::size_t q : g.targets) {
      EXPECT_NE(q, 3U);
      EXPECT_LT(q, kProgram3Qubits);
    }
  }
}

TEST(Program3, ExactProbabilityIsStable) {
  const StateVector a = run(program3_circuit(), zero_state(kProgram3Qubits));
  const StateVector b = run(program3_circuit(), zero_state(kProgram3Qubits));
  const double p = a.probability_one(kProgram3ResultQubit);
  EXPECT_NEAR(p, b.probability_one(kProgram3ResultQubit), 1e-12);
  EXPECT_GE(p, 0.0);
  EXPECT_LE(p, 0.5 + 1e-12);
  EXPECT_NEAR(a.norm_squared(), 1.0, kNormTolerance);
  // Idle qubit 3 never leaves |0>.
  EXPECT_NEAR(a.probability_one(3), 0.0, 1e-15);
}

TEST(Program3, SampledMeanWithinBinomialBand) {
  for (std::uint64_t seed : {0U, 1U, 2U}) {
    RngStream rng(seed);
    const Program3Result r = reproduce_program3(rng);
    EXPECT_EQ(r.runs, 8U);
    EXPECT_EQ(r.shots, 1024U);
    EXPECT_EQ(r.run_p1.size(), 8U);
    EXPECT_TRUE(r.within_band(3.0)) << r.sampled_mean << " vs " << r.exact_p1;
  }
}

TEST(Program3, SeedDeterminism) {
  RngStream a(5), b(5);
  EXPECT_EQ(reproduce_program3(a).run_p1, reproduce_program3(b).run_p1);
}

}  // namespace
}  // namespace qrelieff
