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

#ifndef PRIVSCORE_CIRCUIT_EVAL_HPP_
#define PRIVSCORE_CIRCUIT_EVAL_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "privscore/circuit/circuit.hpp"
#include "privscore/circuit/fixed_point.hpp"

namespace privscore::circuit {

// Plaintext input bits per owner, in the circuit's declared input order.
struct Assignment {
  std::array<std::vector<uint8_t>, kNumOwners> bits;

  std::vector<uint8_t>& of(Owner o) { return bits[static_cast<int>(o)]; }
  const std::vector<uint8_t>& of(Owner o) const { return bits[static_cast<int>(o)]; }
};

// Serial topological evaluation; the correctness oracle for everything the
// sharing layer computes. Throws DimensionError when an owner's bit count
// does not match the circuit's declaration.
std::vector<uint8_t> eval_plain(const Circuit& c, const Assignment& in);

// Evaluates one circuit over many assignments, parallelized across rows.
// Row i equals eval_plain(c, in[i]) exactly.
std::vector<std::vector<uint8_t>> eval_plain_batch(const Circuit& c,
                                                   std::span<const Assignment> in);

// Helpers to move words across the bit-vector boundary (LSB first).
void append_word_bits(std::vector<uint8_t>& bits, uint64_t value, int width);
uint64_t word_from_bits(std::span<const uint8_t> bits);

}  // namespace privscore::circuit

#endif  // PRIVSCORE_CIRCUIT_EVAL_HPP_
