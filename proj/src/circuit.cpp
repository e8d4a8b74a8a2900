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

#include "qrelieff/circuit.hpp"

#include <algorithm>
#include <utility>

namespace qrelieff {

Circuit& Circuit::add(Operation op) {
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out;
  out.ops_.reserve(ops_.size());
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    out.ops_.push_back(std::visit([](const auto& op) -> Operation { return op.inverse(); }, *it));
  }
  return out;
}

Circuit Circuit::controlled(std::size_t qubit, Polarity polarity) const {
  Circuit out;
  out.ops_.reserve(ops_.size());
  for (const Operation& op : ops_) {
    out.ops_.push_back(std::visit(
        [&](const auto& o) -> Operation { return o.controlled(qubit, polarity); }, op));
  }
  return out;
}

void Circuit::apply_to(StateVector& state) const {
  for (const Operation& op : ops_) {
    std::visit([&](const auto& o) { state.apply(o); }, op);
  }
}

StateVector run(const Circuit& circuit, StateVector state) {
  circuit.apply_to(state);
  return state;
}

}  // namespace qrelieff
