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

#include "qrelieff/relieff.hpp"
#include "qrelieff/rng.hpp"

namespace qrelieff::testing {

// Six one-hot-pair vectors, two per class, as used by the worked example.
inline Dataset worked_example() {
  return make_dataset({{1, 0, 0, 1, 0, 0},
                       {1, 0, 0, 0, 1, 0},
                       {0, 1, 0, 0, 0, 1},
                       {0, 1, 0, 1, 0, 0},
                       {0, 0, 1, 0, 1, 0},
                       {0, 0, 1, 0, 0, 1}},
                      {0, 0, 1, 1, 2, 2}, {}, {"A", "B", "C"});
}

// Binary dataset with `classes` classes of at least two members each and no
// all-zero row.
inline Dataset random_binary(RngStream& rng, std::size_t m, std::size_t n,
                             std::size_t classes = 3) {
  std::vector<std::vector<double>> rows(m, std::vector<double>(n, 0.0));
  for (auto& r : rows) {
    bool any = false;
    for (double& x : r) {
      x = static_cast<double>(rng.below(2));
      any = any || x != 0.0;
    }
    if (!any) r[rng.below(n)] = 1.0;
  }
  std::vector<std::size_t> labels(m);
  for (std::size_t q = 0; q < m; ++q) {
    labels[q] = q < 2 * classes ? q / 2 : rng.below(classes);
  }
  return make_dataset(std::move(rows), std::move(labels));
}

}  // namespace qrelieff::testing
