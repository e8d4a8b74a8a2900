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

// Naive dense-matrix simulator used as an independent oracle in tests.
// Every gate is expanded into a full 2^n x 2^n matrix and multiplied in.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "qrelieff/statevector.hpp"

namespace qrelieff::testing {

using C = std::complex<double>;
using Matrix = std::vector<std::vector<C>>;

inline bool bit(std::uint64_t index, std::size_t q) { return ((index >> q) & 1U) != 0; }

inline bool controls_hold(const GateOp& g, std::uint64_t index) {
  for (const Control& c : g.controls) {
    if (bit(index, c.qubit) != (c.polarity == Polarity::kOne)) {
      return false;
    }
  }
  return true;
}

inline void single_qubit_matrix(const GateOp& g, C m[2][2]) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::kH:
      m[0][0] = r, m[0][1] = r, m[1][0] = r, m[1][1] = -r;
      break;
    case GateKind::kX:
      m[0][0] = 0, m[0][1] = 1, m[1][0] = 1, m[1][1] = 0;
      break;
    case GateKind::kRy: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      m[0][0] = c, m[0][1] = -s, m[1][0] = s, m[1][1] = c;
      break;
    }
    case GateKind::kPhase:
      m[0][0] = 1, m[0][1] = 0, m[1][0] = 0, m[1][1] = std::polar(1.0, g.angle);
      break;
    case GateKind::kSwap:
      break;
  }
}

inline Matrix gate_matrix(const GateOp& g, std::size_t n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  Matrix u(dim, std::vector<C>(dim, 0.0));
  for (std::uint64_t col = 0; col < dim; ++col) {
    if (!controls_hold(g, col)) {
      u[col][col] = 1.0;
      continue;
    }
    if (g.kind == GateKind::kSwap) {
      const std::size_t a = g.targets[0], b = g.targets[1];
      std::uint64_t row = col;
      if (bit(col, a) != bit(col, b)) {
        row ^= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      }
      u[row][col] = 1.0;
      continue;
    }
    C m[2][2];
    single_qubit_matrix(g, m);
    const std::size_t q = g.targets[0];
    const int in = bit(col, q) ? 1 : 0;
    const std::uint64_t base = col & ~(std::uint64_t{1} << q);
    u[base][col] += m[0][in];
    u[base | (std::uint64_t{1} << q)][col] += m[1][in];
  }
  return u;
}

inline std::vector<C> multiply(const Matrix& u, const std::vector<C>& v) {
  std::vector<C> out(v.size(), 0.0);
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      out[r] += u[r][c] * v[c];
    }
  }
  return out;
}

inline std::vector<C> basis(std::size_t n, std::uint64_t index) {
  std::vector<C> v(std::size_t{1} << n, 0.0);
  v[index] = 1.0;
  return v;
}

inline std::vector<C> run_gates(const std::vector<GateOp>& gates, std::vector<C> state,
                                std::size_t n) {
  for (const GateOp& g : gates) {
    state = multiply(gate_matrix(g, n), state);
  }
  return state;
}

// Textbook DFT over the register value (qubit 0 least significant):
// |x> -> 2^{-t/2} sum_y e^{sign 2 pi i x y / 2^t} |y>.
inline std::vector<C> dft(const std::vector<C>& v, int sign = +1) {
  const std::size_t dim = v.size();
  std::vector<C> out(dim, 0.0);
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t x = 0; x < dim; ++x) {
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(x * y) /
                           static_cast<double>(dim);
      out[y] += v[x] * std::polar(1.0, angle);
    }
    out[y] /= std::sqrt(static_cast<double>(dim));
  }
  return out;
}

inline double max_abs_diff(std::span<const C> a, std::span<const C> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace qrelieff::testing
