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

#include "qrelieff/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrelieff/csv.hpp"
#include "qrelieff/error.hpp"
#include "qrelieff/pipeline.hpp"
#include "qrelieff/program3.hpp"
#include "qrelieff/relieff.hpp"
#include "qrelieff/report.hpp"

namespace qrelieff {

namespace {

struct Options {
  std::string input;
  std::string label_col = kDefaultLabelColumn;
  std::string backend = "both";
  std::size_t k = 1;
  std::size_t iterations = 4;
  double tau = 0.5;
  std::uint64_t seed = 0;
  std::string pick = "random";
  std::string order = "max";
  std::string mode = "exact";
  std::size_t shots = 1024;
  std::size_t ae_bits = 6;
  std::string ae_circuit = "reduced";
  std::string feature_kind = "auto";
  std::string format = "json";
  std::string output;
  bool emit_iterations = false;
  bool timing = false;
};

struct Program3Options {
  std::uint64_t seed = 0;
  std::size_t runs = 8;
  std::size_t shots = 1024;
  std::string output;
};

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

nlohmann::json echo(const Options& o) {
  return {{"input", o.input},
          {"label_col", o.label_col},
          {"backend", o.backend},
          {"k", o.k},
          {"T", o.iterations},
          {"tau", o.tau},
          {"seed", o.seed},
          {"pick", o.pick},
          {"order", o.order},
          {"mode", o.mode},
          {"shots", o.shots},
          {"ae_bits", o.ae_bits},
          {"ae_circuit", o.ae_circuit},
          {"feature_kind", o.feature_kind}};
}

PipelineConfig to_config(const Options& o) {
  PipelineConfig cfg;
  cfg.run.iterations = o.iterations;
  cfg.run.k = o.k;
  cfg.run.tau = o.tau;
  cfg.run.seed = o.seed;
  cfg.run.order = o.order == "min" ? NeighborOrder::kMinSimilarity : NeighborOrder::kMaxSimilarity;
  cfg.run.pick = o.pick == "round-robin" ? PickPolicy::kRoundRobin : PickPolicy::kSeededRandom;
  cfg.mode = o.mode == "sampled" ? ExecutionMode::kSampled : ExecutionMode::kExact;
  cfg.shots = o.shots;
  cfg.ae_bits = o.ae_bits;
  cfg.ae_circuit = o.ae_circuit == "full" ? AeCircuit::kFull : AeCircuit::kReduced;
  return cfg;
}

void emit(const std::string& body, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw ConfigError("cannot open output file '" + path + "'");
  }
  file << body;
  if (!file) {
    throw ConfigError("failed writing output file '" + path + "'");
  }
}

void run_selection(const Options& o, std::ostream& out) {
  PipelineConfig cfg = to_config(o);
  cfg.validate();

  Stopwatch clock;
  RunReport report;
  report.config = echo(o);
  report.tau = o.tau;
  report.emit_iterations = o.emit_iterations;

  const Dataset data = load_csv(o.input, o.label_col);
  const FeatureKind kind = o.feature_kind == "continuous" ? FeatureKind::kContinuous
                           : o.feature_kind == "discrete" ? FeatureKind::kDiscrete
                                                          : FeatureKind::kAuto;
  const Normalized norm = normalize(data, kind);
  report.dataset = &norm.dataset.data;
  report.timings.emplace_back("load", clock.lap());

  if (o.backend != "quantum") {
    RngStream rng(o.seed);
    report.classical = relieff_run(norm.dataset, norm.stats, cfg.run, rng);
    report.timings.emplace_back("classical", clock.lap());
  }
  if (o.backend != "classical") {
    RngStream rng(o.seed);
    report.quantum = qrelieff_run(norm.dataset, norm.stats, cfg, rng);
    report.timings.emplace_back("quantum", clock.lap());
  }
  if (!o.timing) {
    report.timings.clear();
  }

  const nlohmann::json doc = report_to_json(report);
  if (o.format == "text") {
    emit(render_text(doc), o.output, out);
  } else {
    emit(doc.dump(2) + "\n", o.output, out);
  }
}

void run_program3(const Program3Options& o, std::ostream& out) {
  if (o.runs == 0 || o.shots == 0) {
    throw ConfigError("--runs and --shots must be positive");
  }
  RngStream rng(o.seed);
  const Program3Result r = reproduce_program3(rng, o.runs, o.shots);
  const nlohmann::json doc = {{"qubits", kProgram3Qubits},
                              {"result_qubit", kProgram3ResultQubit},
                              {"seed", o.seed},
                              {"runs", r.runs},
                              {"shots", r.shots},
                              {"exact_p1", r.exact_p1},
                              {"run_p1", r.run_p1},
                              {"sampled_mean", r.sampled_mean},
                              {"sigma", r.sigma},
                              {"within_3sigma", r.within_band(3.0)},
                              {"reference_mean", kProgram3ReportedMean}};
  emit(doc.dump(2) + "\n", o.output, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relief-family feature selection with a simulated quantum similarity backend",
               "qrelieff"};
  app.set_version_flag("--version", "qrelieff 0.1.0");

  Options o;
  app.add_option("--input", o.input, "CSV file with a header row and one label column");
  app.add_option("--label-col", o.label_col, "Label column name")->capture_default_str();
  app.add_option("--backend", o.backend)
      ->check(CLI::IsMember({"classical", "quantum", "both"}))
      ->capture_default_str();
  app.add_option("--k", o.k, "Neighbors per class")->capture_default_str();
  app.add_option("--T", o.iterations, "Iterations")->capture_default_str();
  app.add_option("--tau", o.tau, "Selection threshold in [0, 1]")->capture_default_str();
  app.add_option("--seed", o.seed)->capture_default_str();
  app.add_option("--pick", o.pick)
      ->check(CLI::IsMember({"random", "round-robin"}))
      ->capture_default_str();
  app.add_option("--order", o.order)->check(CLI::IsMember({"max", "min"}))->capture_default_str();
  app.add_option("--mode", o.mode)
      ->check(CLI::IsMember({"exact", "sampled"}))
      ->capture_default_str();
  app.add_option("--shots", o.shots, "Swap-test shots in sampled mode")->capture_default_str();
  app.add_option("--ae-bits", o.ae_bits, "Amplitude estimation readout bits")
      ->capture_default_str();
  app.add_option("--ae-circuit", o.ae_circuit)
      ->check(CLI::IsMember({"reduced", "full"}))
      ->capture_default_str();
  app.add_option("--feature-kind", o.feature_kind)
      ->check(CLI::IsMember({"auto", "continuous", "discrete"}))
      ->capture_default_str();
  app.add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--output", o.output, "Report path (default: standard output)");
  app.add_flag("--emit-iterations", o.emit_iterations, "Include per-iteration WT rows");
  app.add_flag("--timing", o.timing, "Include wall-clock seconds per phase");

  Program3Options p3;
  CLI::App* program3 =
      app.add_subcommand("program3", "Simulate the 20-qubit two-sample similarity circuit");
  program3->add_option("--seed", p3.seed)->capture_default_str();
  program3->add_option("--runs", p3.runs)->capture_default_str();
  program3->add_option("--shots", p3.shots)->capture_default_str();
  program3->add_option("--output", p3.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qrelieff: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (program3->parsed()) {
      run_program3(p3, out);
    } else {
      if (o.input.empty()) {
        throw ConfigError("--input is required");
      }
      run_selection(o, out);
    }
  } catch (const ConfigError& e) {
    err << "qrelieff: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError& e) {
    err << "qrelieff: data error: " << e.what() << "\n";
    return kExitData;
  } catch (const CapacityError& e) {
    err << "qrelieff: capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const PreconditionError& e) {
    // Raised by the encoders for inputs they cannot represent.
    err << "qrelieff: data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "qrelieff: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace qrelieff
