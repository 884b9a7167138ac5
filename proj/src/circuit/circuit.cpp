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

#include "privscore/circuit/circuit.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <stdexcept>

#include "privscore/errors.hpp"

namespace privscore::circuit {

std::optional<bool> CircuitBuilder::const_value(Wire w) const {
  if (w.id >= gates_.size()) throw PreconditionError("wire references a gate that does not exist");
  const Gate& g = gates_[w.id];
  if (g.kind == GateKind::Const) return g.a != 0;
  return std::nullopt;
}

Wire CircuitBuilder::append(GateKind kind, uint32_t a, uint32_t b) {
  gates_.push_back(Gate{kind, a, b});
  return Wire{static_cast<uint32_t>(gates_.size() - 1)};
}

Wire CircuitBuilder::input(Owner who) {
  Wire w = append(GateKind::Input, static_cast<uint32_t>(who), 0);
  inputs_[static_cast<int>(who)].push_back(w);
  return w;
}

Wire CircuitBuilder::constant(bool bit) {
  auto& cached = const_wire_[bit ? 1 : 0];
  if (!cached) cached = append(GateKind::Const, bit ? 1 : 0, 0);
  return *cached;
}

Wire CircuitBuilder::bxor(Wire a, Wire b) {
  auto ca = const_value(a), cb = const_value(b);
  if (ca && cb) return constant(*ca != *cb);
  if (ca) return *ca ? bnot(b) : b;
  if (cb) return *cb ? bnot(a) : a;
  if (a == b) return constant(false);
  return append(GateKind::Xor, a.id, b.id);
}

Wire CircuitBuilder::band(Wire a, Wire b) {
  auto ca = const_value(a), cb = const_value(b);
  if (ca && cb) return constant(*ca && *cb);
  if (ca) return *ca ? b : constant(false);
  if (cb) return *cb ? a : constant(false);
  if (a == b) return a;
  return append(GateKind::And, a.id, b.id);
}

Wire CircuitBuilder::bnot(Wire a) {
  if (auto ca = const_value(a)) return constant(!*ca);
  if (gates_[a.id].kind == GateKind::Not) return Wire{gates_[a.id].a};
  return append(GateKind::Not, a.id, 0);
}

std::vector<Wire> CircuitBuilder::input_word(Owner who, int width) {
  std::vector<Wire> ws;
  ws.reserve(width);
  for (int i = 0; i < width; ++i) ws.push_back(input(who));
  return ws;
}

std::vector<Wire> CircuitBuilder::constant_word(uint64_t value, int width) {
  std::vector<Wire> ws;
  ws.reserve(width);
  for (int i = 0; i < width; ++i) ws.push_back(constant((value >> i) & 1));
  return ws;
}

Wire CircuitBuilder::fold_and(const std::vector<Wire>& ws) {
  if (ws.empty()) return constant(true);
  Wire acc = ws[0];
  for (size_t i = 1; i < ws.size(); ++i) acc = band(acc, ws[i]);
  return acc;
}

Wire CircuitBuilder::fold_xor(const std::vector<Wire>& ws) {
  if (ws.empty()) return constant(false);
  Wire acc = ws[0];
  for (size_t i = 1; i < ws.size(); ++i) acc = bxor(acc, ws[i]);
  return acc;
}

Circuit CircuitBuilder::finish(std::vector<Wire> outputs) {
  for (Wire w : outputs) {
    if (w.id >= gates_.size()) throw PreconditionError("output wire out of range");
  }
  Circuit c;
  c.gates = std::move(gates_);
  c.inputs = std::move(inputs_);
  c.outputs = std::move(outputs);
  return c;
}

CircuitStats stats(const Circuit& c) {
  CircuitStats s;
  s.total_gates = c.gates.size();
  std::vector<uint32_t> level(c.gates.size(), 0);
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.kind) {
      case GateKind::Input:
        ++s.input_count;
        ++s.input_bits[g.a];
        break;
      case GateKind::Const:
        ++s.const_count;
        break;
      case GateKind::Not:
        ++s.not_count;
        level[i] = level[g.a];
        break;
      case GateKind::Xor:
        ++s.xor_count;
        level[i] = std::max(level[g.a], level[g.b]);
        break;
      case GateKind::And:
        ++s.and_count;
        level[i] = std::max(level[g.a], level[g.b]) + 1;
        break;
    }
    s.depth = std::max<uint64_t>(s.depth, level[i]);
  }
  return s;
}

std::array<uint8_t, 32> circuit_hash(const Circuit& c) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("SHA-256 init failed");
  }
  auto feed_u32 = [&](uint32_t v) {
    uint8_t buf[4] = {static_cast<uint8_t>(v >> 24), static_cast<uint8_t>(v >> 16),
                      static_cast<uint8_t>(v >> 8), static_cast<uint8_t>(v)};
    EVP_DigestUpdate(ctx, buf, 4);
  };
  feed_u32(static_cast<uint32_t>(c.gates.size()));
  for (const Gate& g : c.gates) {
    const uint8_t k = static_cast<uint8_t>(g.kind);
    EVP_DigestUpdate(ctx, &k, 1);
    feed_u32(g.a);
    feed_u32(g.b);
  }
  for (const auto& owner_inputs : c.inputs) {
    feed_u32(static_cast<uint32_t>(owner_inputs.size()));
    for (Wire w : owner_inputs) feed_u32(w.id);
  }
  feed_u32(static_cast<uint32_t>(c.outputs.size()));
  for (Wire w : c.outputs) feed_u32(w.id);

  std::array<uint8_t, 32> out{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, out.data(), &len);
  EVP_MD_CTX_free(ctx);
  return out;
}

}  // namespace privscore::circuit
