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
#include <variant>
#include <vector>

#include "qrelieff/statevector.hpp"

namespace qrelieff {

using Operation = std::variant<GateOp, ConditionalPhase>;

// Ordered gate list. Every operation has an exact inverse and can take extra
// controls, so a Circuit can be inverted or controlled as a whole.
class Circuit {
 public:
  Circuit() = default;

  Circuit& add(Operation op);
  Circuit& append(const Circuit& other);

  Circuit inverse() const;
  Circuit controlled(std::size_t qubit, Polarity polarity = Polarity::kOne) const;

  void apply_to(StateVector& state) const;

  const std::vector<Operation>& operations() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

 private:
  std::vector<Operation> ops_;
};

StateVector run(const Circuit& circuit, StateVector state);

}  // namespace qrelieff
