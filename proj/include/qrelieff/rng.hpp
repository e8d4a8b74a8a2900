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

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qrelieff {

// Seeded pseudo-random stream. Identical seed and identical draw order give
// identical outputs on every platform: only the raw 64-bit engine output is
// consumed, never a std:: distribution.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t next();
  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform();
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Independent stream keyed by (seed, tags...). Does not consume draws.
  RngStream derive(std::initializer_list<std::uint64_t> tags) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace qrelieff
