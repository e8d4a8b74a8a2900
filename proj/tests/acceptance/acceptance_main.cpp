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

// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// limit. Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrelieff/blocks.hpp"
#include "qrelieff/cli.hpp"
#include "qrelieff/pipeline.hpp"
#include "qrelieff/program3.hpp"
#include "qrelieff/relieff.hpp"
#include "qrelieff/report.hpp"
#include "support/datasets.hpp"

namespace qrelieff {
namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<double> random_unit(std::size_t n, RngStream& rng) {
  std::vector<double> v(n);
  double norm = 0.0;
  for (double& x : v) {
    x = rng.uniform();
    norm += x * x;
  }
  for (double& x : v) x /= std::sqrt(norm);
  return v;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Verdict comparator_exhaustive() {
  Verdict v;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto reg = qubit_range(0, n);
    const std::uint64_t space = std::uint64_t{1} << n;
    for (std::uint64_t bound = 1; bound <= space; ++bound) {
      const Circuit c = comparator(reg, bound, n);
      for (std::uint64_t i = 0; i < space; ++i) {
        const StateVector s = run(c, StateVector::basis(n + 1, i));
        const std::uint64_t expect = i | (i >= bound ? space : 0);
        if (std::abs(std::norm(s[expect]) - 1.0) > 1e-12) {
          v.fail("n=" + std::to_string(n) + " N=" + std::to_string(bound) +
                 " i=" + std::to_string(i));
        }
        ++cases;
      }
    }
  }
  if (v.pass) v.detail = std::to_string(cases) + " (n, N, i) cases";
  return v;
}

Verdict encoding_fidelity() {
  Verdict v;
  RngStream rng(2002);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 2 + rng.below(15);
    const auto u = random_unit(len, rng);
    const std::size_t f = register_width(len);
    const std::size_t sample_bits = 1 + rng.below(3);
    const std::uint64_t q = rng.below(std::uint64_t{1} << sample_bits);
    const StateVector s = encode_sample(u, q, sample_bits);
    // (1/sqrt N) |q> sum_i |i> |1> (sqrt(1 - v_i^2)|0> + v_i|1>)
    const double r = 1.0 / std::sqrt(static_cast<double>(len));
    for (std::uint64_t idx = 0; idx < s.dimension(); ++idx) {
      const std::uint64_t data = idx & 1U;
      const std::uint64_t flag = (idx >> 1) & 1U;
      const std::uint64_t i = (idx >> 2) & ((std::uint64_t{1} << f) - 1);
      const std::uint64_t sample = idx >> (2 + f);
      double expect = 0.0;
      if (flag == 1 && sample == q && i < len) {
        expect = data == 1 ? u[i] * r : std::sqrt(1.0 - u[i] * u[i]) * r;
      }
      worst = std::max(worst, std::abs(s[idx] - Amplitude(expect)));
    }
  }
  if (worst > 1e-10) v.fail("max elementwise error " + fmt(worst));
  v.detail = v.pass ? "200 vectors, max elementwise error " + fmt(worst) : v.detail;
  return v;
}

Verdict swap_test_identity() {
  Verdict v;
  RngStream rng(3003);
  double worst_p = 0.0, worst_s = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = 2 + rng.below(15);
    const auto a = random_unit(len, rng);
    const auto b = random_unit(len, rng);
    const Dataset d = make_dataset({a, b}, {0, 0});
    const Normalized nd = normalize(d);
    const PreparedStates p = prepare_states(nd.dataset);
    PipelineConfig cfg;
    RngStream job(trial);
    const QuantumSimilarity qs =
        quantum_similarity(p.states[0], p.states[1], p.layout, len, cfg, job);
    const double dot = std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
    const double n = static_cast<double>(len);
    const double p_expect = 0.5 - 0.5 * std::pow(dot / n, 2);
    worst_p = std::max(worst_p, std::abs(qs.p_one - p_expect));
    worst_s = std::max(worst_s, std::abs((1 - 2 * qs.p_one) * n * n - dot * dot));
  }
  if (worst_p > 1e-10) v.fail("P(1) error " + fmt(worst_p));
  if (worst_s > 1e-9) v.fail("s error " + fmt(worst_s));
  if (v.pass) v.detail = "100 pairs, P(1) err " + fmt(worst_p) + ", s err " + fmt(worst_s);
  return v;
}

Verdict grover_long_success() {
  Verdict v;
  RngStream rng(4004);
  double worst = 1.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t space = std::uint64_t{1} << n;
    for (std::uint64_t m = 1; m <= space; ++m) {
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<std::uint64_t> idx(space);
        std::iota(idx.begin(), idx.end(), 0);
        for (std::uint64_t i = space - 1; i > 0; --i) std::swap(idx[i], idx[rng.below(i + 1)]);
        std::vector<bool> marked(space, false);
        for (std::uint64_t i = 0; i < m; ++i) marked[idx[i]] = true;
        const StateVector s =
            grover_long_search(grover_plan(n, m), [&](std::uint64_t x) { return marked[x]; });
        double p = 0.0;
        for (std::uint64_t i = 0; i < space; ++i) {
          if (marked[i]) p += std::norm(s[i]);
        }
        worst = std::min(worst, p);
        if (p < 0.999) v.fail("n=" + std::to_string(n) + " M=" + std::to_string(m) + " p=" + fmt(p));
      }
    }
  }
  if (v.pass) v.detail = "min success probability " + fmt(worst);
  return v;
}

Verdict amplitude_estimation_bound() {
  Verdict v;
  const std::size_t t = 6;
  const double floor = 8.0 / (kPi * kPi);
  double worst = 1.0;
  for (double a : {0.0, 1.0 / 16, 0.25, 0.5, 0.75, 1.0}) {
    const std::vector<double> u = {1.0, 0.0};
    const std::vector<double> w = {std::sqrt(a), std::sqrt(1.0 - a)};
    for (AeCircuit mode : {AeCircuit::kReduced, AeCircuit::kFull}) {
      const Preparation prep =
          mode == AeCircuit::kReduced ? rotation_preparation(a) : overlap_preparation(u, w);
      const AEDistribution d = amplitude_estimate(prep, t, mode);
      const double mass = d.mass_near(a);
      worst = std::min(worst, mass);
      const double x = std::asin(std::sqrt(a)) * 64.0 / kPi;
      const bool aligned = std::abs(x - std::round(x)) < 1e-9;
      const double need = aligned ? 0.999 : floor;
      const double got = aligned ? d.canonical()[static_cast<std::size_t>(std::round(x))] : mass;
      if (got < need) {
        v.fail("a=" + fmt(a) + (mode == AeCircuit::kFull ? " full" : " reduced") +
               " mass " + fmt(got));
      }
    }
  }
  for (std::uint64_t y = 0; y <= 32; ++y) {
    const double a = std::pow(std::sin(kPi * static_cast<double>(y) / 64), 2);
    const AEDistribution d = amplitude_estimate(rotation_preparation(a), t, AeCircuit::kReduced);
    if (d.canonical()[y] < 0.999) v.fail("grid point y=" + std::to_string(y));
  }
  if (v.pass) v.detail = "min two-point mass " + fmt(worst) + " (floor " + fmt(floor) + ")";
  return v;
}

Verdict extreme_search_equivalence() {
  Verdict v;
  RngStream rng(6006);
  std::size_t instances = 0;
  for (std::size_t pop = 1; pop <= 16; ++pop) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(pop, 4); ++k) {
      for (Direction dir : {Direction::kMin, Direction::kMax}) {
        for (int rep = 0; rep < 50; ++rep) {
          std::vector<std::uint64_t> values(pop);
          const std::uint64_t range = 1 + rng.below(2 * pop);
          for (auto& x : values) x = rng.below(range);
          std::vector<std::size_t> expect(pop);
          std::iota(expect.begin(), expect.end(), 0);
          std::stable_sort(expect.begin(), expect.end(), [&](std::size_t a, std::size_t b) {
            return dir == Direction::kMax ? values[a] > values[b] : values[a] < values[b];
          });
          expect.resize(k);
          if (quantum_extreme_search(values, k, dir, rng) != expect) {
            v.fail("population " + std::to_string(pop) + " k=" + std::to_string(k));
          }
          ++instances;
        }
      }
    }
  }
  if (v.pass) v.detail = std::to_string(instances) + " instances";
  return v;
}

std::string row_text(const std::vector<double>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + fmt(w[i]);
  return s + "]";
}

Verdict worked_example() {
  Verdict v;
  const Normalized nd = normalize(testing::worked_example());
  PipelineConfig cfg;
  cfg.run.pick = PickPolicy::kRoundRobin;
  cfg.run.k = 1;
  cfg.run.iterations = 4;
  cfg.run.tau = 0.5;
  cfg.run.order = NeighborOrder::kMaxSimilarity;
  cfg.ae_bits = 6;
  RngStream crng(1), qrng(1);
  const RunResult c = relieff_run(nd.dataset, nd.stats, cfg.run, crng);
  const QuantumRunResult q = qrelieff_run(nd.dataset, nd.stats, cfg, qrng);
  const std::vector<std::size_t> want = {0, 1, 2};
  for (const auto* w : {&c.averaged, &q.averaged}) {
    if (select_features(*w, 0.5) != want) v.fail("selected set differs from {F0, F1, F2}");
    const double low = *std::min_element(w->begin(), w->begin() + 3);
    const double high = *std::max_element(w->begin() + 3, w->end());
    if (!(low > high)) v.fail("F0..F2 do not dominate F3..F5");
  }
  std::cout << "    computed WT rows (quantum backend):\n";
  for (std::size_t t = 0; t < q.trace.size(); ++t) {
    std::cout << "      " << t + 1 << "  " << row_text(q.trace[t].weights) << "\n";
  }
  std::cout << "    reference WT rows (published, not asserted):\n"
            << "      1  [1 1 1 0 0 -1]\n      2  [2 2 2 -1 0 -1]\n"
            << "      3  [3 3 3 -1 0 -2]\n      4  [4 4 4 -2 0 -2]\n";
  if (v.pass) v.detail = "both backends select {F0, F1, F2}; averaged " + row_text(q.averaged);
  return v;
}

Verdict backend_agreement() {
  Verdict v;
  RngStream gen(8008);
  std::size_t iterations = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 6 + gen.below(3);
    const std::size_t n = 2 + gen.below(7);
    const Dataset d = testing::random_binary(gen, m, n, 3);
    const Normalized nd = normalize(d);
    PipelineConfig cfg;
    cfg.ae_bits = 8;
    cfg.run.iterations = m;
    cfg.run.tau = 0.2;
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(trial);
    cfg.run.seed = seed;
    RngStream crng(seed), qrng(seed);
    const RunResult c = relieff_run(nd.dataset, nd.stats, cfg.run, crng);
    const QuantumRunResult q = qrelieff_run(nd.dataset, nd.stats, cfg, qrng);
    for (std::size_t t = 0; t < c.trace.size(); ++t) {
      if (c.trace[t].picked != q.trace[t].picked ||
          c.trace[t].neighbors != q.trace[t].neighbors) {
        v.fail("dataset " + std::to_string(trial) + " iteration " + std::to_string(t + 1) +
               ": neighbor sets differ");
      }
      ++iterations;
    }
    if (select_features(c.averaged, cfg.run.tau) != select_features(q.averaged, cfg.run.tau)) {
      v.fail("dataset " + std::to_string(trial) + ": selected sets differ");
    }
  }
  if (v.pass) v.detail = "20 datasets, " + std::to_string(iterations) + " iterations agree";
  return v;
}

Verdict program3() {
  Verdict v;
  RngStream rng(9009);
  const Program3Result r = reproduce_program3(rng, 8, 1024);
  if (!r.within_band(3.0)) {
    v.fail("sampled " + fmt(r.sampled_mean) + " outside 3 sigma of exact " + fmt(r.exact_p1));
  }
  std::cout << "    exact P(1) " << fmt(r.exact_p1) << ", sampled mean " << fmt(r.sampled_mean)
            << ", sigma " << fmt(r.sigma) << ", published hardware mean "
            << fmt(kProgram3ReportedMean) << " (reference only)\n";
  if (v.pass) v.detail = "sampled mean within 3 sigma of exact value";
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::string input = std::string(QRELIEFF_DATA_DIR) + "/example_text.csv";
  const std::vector<std::vector<std::string>> invocations = {
      {"--input", input},
      {"--input", input, "--backend", "quantum", "--mode", "sampled", "--shots", "1024", "--seed",
       "7"},
      {"--input", input, "--backend", "both", "--pick", "round-robin", "--emit-iterations",
       "--timing"},
      {"--input", input, "--backend", "both", "--mode", "sampled", "--shots", "64",
       "--ae-circuit", "full", "--order", "min", "--seed", "11", "--T", "9", "--emit-iterations"},
      {"--input", input, "--format", "text", "--emit-iterations", "--seed", "3"},
      {"program3", "--seed", "5"},
  };
  for (const auto& args : invocations) {
    std::string bodies[2];
    for (std::string& body : bodies) {
      std::ostringstream out, err;
      if (run_cli(args, out, err) != 0) {
        v.fail("invocation failed: " + err.str());
        return v;
      }
      body = out.str();
      if (body.front() == '{') body = canonical_body(nlohmann::json::parse(body));
    }
    if (bodies[0] != bodies[1]) v.fail("canonical bodies differ for " + args[1]);
  }
  if (v.pass) v.detail = std::to_string(invocations.size()) + " invocations byte-identical";
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> check;
};

}  // namespace
}  // namespace qrelieff

int main() {
  using namespace qrelieff;
  const std::vector<Criterion> criteria = {
      {1, "CMP exhaustive", 1, comparator_exhaustive},
      {2, "encoding fidelity", 5, encoding_fidelity},
      {3, "swap-test inner-product identity", 30, swap_test_identity},
      {4, "Grover-Long success", 10, grover_long_success},
      {5, "amplitude estimation bound", 10, amplitude_estimation_bound},
      {6, "quantum extreme search equivalence", 60, extreme_search_equivalence},
      {7, "worked-example reproduction", 60, worked_example},
      {8, "backend agreement", 600, backend_agreement},
      {9, "20-qubit similarity circuit", 60, program3},
      {10, "CLI determinism", 10, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && secs > c.limit_seconds) {
      v.fail("runtime " + fmt(secs) + " s exceeds " + fmt(c.limit_seconds) + " s");
    }
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %2d %-36s %8.3f s  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
