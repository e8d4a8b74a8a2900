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

#include "qrelieff/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <vector>

#include "qrelieff/error.hpp"

namespace qrelieff {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(trim(cell));
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  cells.push_back(trim(cell));
  return cells;
}

bool parse_real(const std::string& text, double& out) {
  if (text.empty()) {
    return false;
  }
  errno = 0;
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return errno == 0 && end == text.c_str() + text.size() && std::isfinite(out);
}

}  // namespace

Dataset parse_csv(std::istream& in, const std::string& label_column, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
      line.erase(0, 3);
    }
    if (!trim(line).empty()) {
      header = split_line(line);
      break;
    }
  }
  if (header.empty()) {
    throw DataError(source + ": missing header row");
  }
  const auto label_it = std::find(header.begin(), header.end(), label_column);
  if (label_it == header.end()) {
    throw DataError(source + ": label column '" + label_column + "' not found in header");
  }
  const auto label_pos = static_cast<std::size_t>(label_it - header.begin());

  Dataset d;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != label_pos) {
      d.feature_names.push_back(header[c]);
    }
  }
  d.num_features = d.feature_names.size();

  std::map<std::string, std::size_t> class_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw DataError(source + ": line " + std::to_string(line_no) + " has " +
                      std::to_string(cells.size()) + " cells, header has " +
                      std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_pos) {
        if (cells[c].empty()) {
          throw DataError(source + ": line " + std::to_string(line_no) + ", column '" +
                          header[c] + "': empty class label");
        }
        auto [it, inserted] = class_ids.try_emplace(cells[c], d.class_names.size());
        if (inserted) {
          d.class_names.push_back(cells[c]);
        }
        d.labels.push_back(it->second);
        continue;
      }
      double value = 0.0;
      if (!parse_real(cells[c], value)) {
        throw DataError(source + ": line " + std::to_string(line_no) + ", column '" + header[c] +
                        "': '" + cells[c] + "' is not a number");
      }
      d.values.push_back(value);
    }
    ++d.num_samples;
  }
  d.validate();
  return d;
}

Dataset load_csv(const std::filesystem::path& path, const std::string& label_column) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open input file '" + path.string() + "'");
  }
  return parse_csv(in, label_column, path.string());
}

}  // namespace qrelieff
