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

#ifndef PRIVSCORE_CIRCUIT_CIRCUIT_HPP_
#define PRIVSCORE_CIRCUIT_CIRCUIT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace privscore::circuit {

// Who supplies an input wire's plaintext bit.
enum class Owner : uint8_t { ModelOwner = 0, TestOwner = 1, Public = 2 };
inline constexpr int kNumOwners = 3;

enum class GateKind : uint8_t { Input = 0, Const = 1, Xor = 2, And = 3, Not = 4 };

// A wire is the output of the gate with the same index; gates only reference
// lower-indexed wires, so the gate list is topologically ordered by
// construction.
struct Wire {
  uint32_t id = 0;
  friend bool operator==(Wire a, Wire b) { return a.id == b.id; }
};

struct Gate {
  GateKind kind;
  // Input: a = owner tag. Const: a = bit. Not: a = operand.
  // Xor/And: a, b = operands.
  uint32_t a = 0;
  uint32_t b = 0;
};

struct CircuitStats {
  uint64_t and_count = 0;
  uint64_t xor_count = 0;
  uint64_t not_count = 0;
  uint64_t const_count = 0;
  uint64_t input_count = 0;
  uint64_t total_gates = 0;
  uint64_t depth = 0;  // longest AND-gate chain
  std::array<uint64_t, kNumOwners> input_bits{};
};

struct Circuit {
  std::vector<Gate> gates;
  std::array<std::vector<Wire>, kNumOwners> inputs;  // per owner, in sharing order
  std::vector<Wire> outputs;

  const std::vector<Wire>& inputs_of(Owner o) const { return inputs[static_cast<int>(o)]; }
};

// Appends gates while folding operations on Const wires, so dead constant
// logic never reaches the sharing layer.
class CircuitBuilder {
 public:
  Wire input(Owner who);
  Wire constant(bool bit);
  Wire bxor(Wire a, Wire b);
  Wire band(Wire a, Wire b);
  Wire bnot(Wire a);

  std::vector<Wire> input_word(Owner who, int width);
  std::vector<Wire> constant_word(uint64_t value, int width);
  Wire fold_and(const std::vector<Wire>& ws);
  Wire fold_xor(const std::vector<Wire>& ws);

  size_t size() const { return gates_.size(); }

  // Finalizes the circuit; the builder must not be used afterwards.
  Circuit finish(std::vector<Wire> outputs);

 private:
  std::optional<bool> const_value(Wire w) const;
  Wire append(GateKind kind, uint32_t a, uint32_t b);

  std::vector<Gate> gates_;
  std::array<std::vector<Wire>, kNumOwners> inputs_;
  std::optional<Wire> const_wire_[2];
};

CircuitStats stats(const Circuit& c);

// SHA-256 over a canonical serialization; used to reject mismatched circuits
// at session start.
std::array<uint8_t, 32> circuit_hash(const Circuit& c);

}  // namespace privscore::circuit

#endif  // PRIVSCORE_CIRCUIT_CIRCUIT_HPP_
