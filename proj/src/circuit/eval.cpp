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

#include "privscore/circuit/eval.hpp"

#include <string>

#include "privscore/errors.hpp"

namespace privscore::circuit {

std::vector<uint8_t> eval_plain(const Circuit& c, const Assignment& in) {
  for (int o = 0; o < kNumOwners; ++o) {
    if (in.bits[o].size() != c.inputs[o].size()) {
      throw DimensionError("owner " + std::to_string(o) + " supplied " +
                           std::to_string(in.bits[o].size()) + " bits, circuit declares " +
                           std::to_string(c.inputs[o].size()));
    }
  }
  std::vector<uint8_t> val(c.gates.size());
  std::array<size_t, kNumOwners> cursor{};
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.kind) {
      case GateKind::Input:
        val[i] = in.bits[g.a][cursor[g.a]++] & 1;
        break;
      case GateKind::Const:
        val[i] = static_cast<uint8_t>(g.a & 1);
        break;
      case GateKind::Xor:
        val[i] = val[g.a] ^ val[g.b];
        break;
      case GateKind::And:
        val[i] = val[g.a] & val[g.b];
        break;
      case GateKind::Not:
        val[i] = val[g.a] ^ 1;
        break;
    }
  }
  std::vector<uint8_t> out(c.outputs.size());
  for (size_t i = 0; i < c.outputs.size(); ++i) out[i] = val[c.outputs[i].id];
  return out;
}

std::vector<std::vector<uint8_t>> eval_plain_batch(const Circuit& c,
                                                   std::span<const Assignment> in) {
  std::vector<std::vector<uint8_t>> out(in.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(in.size()); ++i) {
    out[i] = eval_plain(c, in[i]);
  }
  return out;
}

void append_word_bits(std::vector<uint8_t>& bits, uint64_t value, int width) {
  for (int i = 0; i < width; ++i) bits.push_back(static_cast<uint8_t>((value >> i) & 1));
}

uint64_t word_from_bits(std::span<const uint8_t> bits) {
  uint64_t v = 0;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1) v |= uint64_t{1} << i;
  }
  return v;
}

}  // namespace privscore::circuit
