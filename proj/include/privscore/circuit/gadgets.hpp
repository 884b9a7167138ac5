// Copyright 2026 The PrivScore Authors
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

#ifndef PRIVSCORE_CIRCUIT_GADGETS_HPP_
#define PRIVSCORE_CIRCUIT_GADGETS_HPP_

#include <span>
#include <vector>

#include "privscore/circuit/circuit.hpp"

namespace privscore::circuit {

// Word gadgets over LSB-first wire vectors. AND-gate costs (the unit the
// sharing layer pays communication for), with w = word width:
//   adder        2w - 3        ripple carry, no carry out of the top bit
//   lt (signed)  2w - 1        borrow chain on sign-biased operands
//   mux          w
//   onehot       d * w         d = selector width

// (a + b) mod 2^w, two's-complement wrap-around.
std::vector<Wire> build_adder(CircuitBuilder& cb, std::span<const Wire> a, std::span<const Wire> b);

// 1 iff signed(a) < signed(b), strict.
Wire build_comparator_lt(CircuitBuilder& cb, std::span<const Wire> a, std::span<const Wire> b);

// sel ? a : b, per bit b XOR (sel AND (a XOR b)).
std::vector<Wire> build_mux(CircuitBuilder& cb, Wire sel, std::span<const Wire> a,
                            std::span<const Wire> b);

// Output bit j = XOR_i (sel[i] AND values[i][j]). Selects values[i*] when sel
// is one-hot at i*; an all-zero selector yields 0. The caller guarantees sel
// is one-hot.
std::vector<Wire> build_onehot_select(CircuitBuilder& cb, std::span<const Wire> sel,
                                      const std::vector<std::vector<Wire>>& values);

}  // namespace privscore::circuit

#endif  // PRIVSCORE_CIRCUIT_GADGETS_HPP_
