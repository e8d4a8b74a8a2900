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

#include "qrelieff/report.hpp"

#include <iomanip>
#include <sstream>

#include "qrelieff/error.hpp"

namespace qrelieff {

namespace {

using nlohmann::json;

json neighbors_json(const NeighborSet& nb, const Dataset& d) {
  json misses = json::object();
  for (std::size_t p = 0; p < nb.misses.size(); ++p) {
    if (!nb.misses[p].empty()) {
      misses[d.class_names[p]] = nb.misses[p];
    }
  }
  return {{"hits", nb.hits}, {"misses", misses}};
}

json selection_json(const std::vector<double>& averaged, double tau, const Dataset& d) {
  const std::vector<std::size_t> selected = select_features(averaged, tau);
  std::vector<std::string> names;
  for (std::size_t i : selected) {
    names.push_back(d.feature_names[i]);
  }
  return {{"averaged_weights", averaged}, {"selected", selected}, {"selected_names", names}};
}

json classical_json(const RunResult& r, const RunReport& report) {
  const Dataset& d = *report.dataset;
  json out = selection_json(r.averaged, report.tau, d);
  if (report.emit_iterations) {
    json rows = json::array();
    for (std::size_t t = 0; t < r.trace.size(); ++t) {
      const IterationRecord& rec = r.trace[t];
      json row = neighbors_json(rec.neighbors, d);
      row["iteration"] = t + 1;
      row["picked"] = rec.picked;
      row["weights"] = rec.weights;
      rows.push_back(std::move(row));
    }
    out["iterations"] = std::move(rows);
  }
  return out;
}

json quantum_json(const QuantumRunResult& r, const RunReport& report) {
  const Dataset& d = *report.dataset;
  json out = selection_json(r.averaged, report.tau, d);
  if (report.emit_iterations) {
    json rows = json::array();
    for (std::size_t t = 0; t < r.trace.size(); ++t) {
      const QuantumIterationRecord& rec = r.trace[t];
      json row = neighbors_json(rec.neighbors, d);
      row["iteration"] = t + 1;
      row["picked"] = rec.picked;
      row["weights"] = rec.weights;
      json sims = json::array();
      for (std::size_t p = 0; p < rec.table.classes.size(); ++p) {
        for (const SimilarityRecord& s : rec.table.classes[p]) {
          sims.push_back({{"sample", s.sample},
                          {"class", d.class_names[p]},
                          {"p_one", s.p_one},
                          {"s_raw", s.s_raw},
                          {"y", s.ae.y},
                          {"a_hat", s.ae.a_hat},
                          {"excluded", s.excluded},
                          {"noise_clamped", s.noise_clamped}});
        }
      }
      row["similarities"] = std::move(sims);
      rows.push_back(std::move(row));
    }
    out["iterations"] = std::move(rows);
  }
  return out;
}

}  // namespace

json report_to_json(const RunReport& report) {
  if (report.dataset == nullptr || (!report.classical && !report.quantum)) {
    throw PreconditionError("report needs a dataset and at least one backend result");
  }
  const Dataset& d = *report.dataset;
  json out;
  out["schema_version"] = kReportSchemaVersion;
  out["config"] = report.config;
  json classes = json::array();
  const auto sizes = d.class_sizes();
  for (std::size_t p = 0; p < d.num_classes(); ++p) {
    classes.push_back({{"name", d.class_names[p]}, {"size", sizes[p]}});
  }
  out["dataset"] = {{"samples", d.num_samples},
                    {"features", d.num_features},
                    {"feature_names", d.feature_names},
                    {"classes", classes}};
  out["tau"] = report.tau;

  json backends = json::object();
  if (report.classical) {
    backends["classical"] = classical_json(*report.classical, report);
  }
  if (report.quantum) {
    backends["quantum"] = quantum_json(*report.quantum, report);
  }
  const std::string primary = report.quantum ? "quantum" : "classical";
  out["primary_backend"] = primary;
  out["averaged_weights"] = backends[primary]["averaged_weights"];
  out["selected"] = backends[primary]["selected"];
  out["selected_names"] = backends[primary]["selected_names"];
  out["backends"] = std::move(backends);

  if (report.classical && report.quantum) {
    json per_iteration = json::array();
    bool all_equal = report.classical->trace.size() == report.quantum->trace.size();
    for (std::size_t t = 0; t < report.classical->trace.size() && all_equal; ++t) {
      const auto& c = report.classical->trace[t];
      const auto& q = report.quantum->trace[t];
      const bool same = c.picked == q.picked && c.neighbors == q.neighbors;
      per_iteration.push_back(same);
      all_equal = all_equal && same;
    }
    const bool selection_equal = out["backends"]["classical"]["selected"] ==
                                 out["backends"]["quantum"]["selected"];
    out["agreement"] = {{"neighbor_sets", per_iteration},
                        {"neighbors_agree", all_equal},
                        {"selection_agrees", selection_equal}};
  }

  if (!report.timings.empty()) {
    json timing = json::object();
    for (const auto& [phase, seconds] : report.timings) {
      timing[phase] = seconds;
    }
    out["timing"] = std::move(timing);
  }
  return out;
}

std::string canonical_body(const json& report) {
  json body = report;
  body.erase("timing");
  return body.dump(2);
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << std::setprecision(6);
  auto row = [&](const json& weights) {
    os << '[';
    for (std::size_t i = 0; i < weights.size(); ++i) {
      os << (i ? " " : "") << weights[i].get<double>();
    }
    os << ']';
  };
  for (const auto& [name, backend] : report.at("backends").items()) {
    os << "== " << name << " ==\n";
    if (backend.contains("iterations")) {
      os << "Iteration  Picked  WT\n";
      for (const json& it : backend["iterations"]) {
        os << std::left << std::setw(11) << it["iteration"].get<std::size_t>() << std::setw(8)
           << it["picked"].get<std::size_t>();
        row(it["weights"]);
        os << '\n';
      }
    }
    os << "Averaged   ";
    row(backend["averaged_weights"]);
    os << "\nSelected (tau=" << report["tau"].get<double>() << "):";
    for (const json& n : backend["selected_names"]) {
      os << ' ' << n.get<std::string>();
    }
    os << "\n";
  }
  if (report.contains("agreement")) {
    os << "Backends agree on neighbors: "
       << (report["agreement"]["neighbors_agree"].get<bool>() ? "yes" : "no")
       << ", on selection: "
       << (report["agreement"]["selection_agrees"].get<bool>() ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace qrelieff
