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

#include "privscore/circuit/gadgets.hpp"

#include <string>

#include "privscore/errors.hpp"

namespace privscore::circuit {

namespace {
void require_same_width(std::span<const Wire> a, std::span<const Wire> b, const char* what) {
  if (a.size() != b.size() || a.empty()) {
    throw DimensionError(std::string(what) + ": operand widths " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " must match and be nonzero");
  }
}
}  // namespace

std::vector<Wire> build_adder(CircuitBuilder& cb, std::span<const Wire> a,
                              std::span<const Wire> b) {
  require_same_width(a, b, "adder");
  const size_t w = a.size();
  std::vector<Wire> sum(w);
  sum[0] = cb.bxor(a[0], b[0]);
  if (w == 1) return sum;
  Wire carry = cb.band(a[0], b[0]);
  for (size_t i = 1; i < w; ++i) {
    Wire axb = cb.bxor(a[i], b[i]);
    sum[i] = cb.bxor(axb, carry);
    if (i + 1 < w) {
      // carry-out = maj(a, b, carry); the two AND terms cannot both be 1.
      carry = cb.bxor(cb.band(a[i], b[i]), cb.band(carry, axb));
    }
  }
  return sum;
}

Wire build_comparator_lt(CircuitBuilder& cb, std::span<const Wire> a, std::span<const Wire> b) {
  require_same_width(a, b, "comparator");
  const size_t w = a.size();
  // Signed order equals unsigned order once the sign bits are flipped, so run
  // an unsigned borrow chain with both MSBs negated.
  auto bit = [&](std::span<const Wire> v, size_t i) {
    return i + 1 == w ? cb.bnot(v[i]) : v[i];
  };
  Wire borrow = cb.band(cb.bnot(bit(a, 0)), bit(b, 0));
  for (size_t i = 1; i < w; ++i) {
    Wire ai = bit(a, i), bi = bit(b, i);
    Wire lt_here = cb.band(cb.bnot(ai), bi);
    Wire eq_here = cb.bnot(cb.bxor(ai, bi));
    // lt_here and eq_here are mutually exclusive, so XOR realizes the OR.
    borrow = cb.bxor(lt_here, cb.band(eq_here, borrow));
  }
  return borrow;
}

std::vector<Wire> build_mux(CircuitBuilder& cb, Wire sel, std::span<const Wire> a,
                            std::span<const Wire> b) {
  require_same_width(a, b, "mux");
  std::vector<Wire> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = cb.bxor(b[i], cb.band(sel, cb.bxor(a[i], b[i])));
  }
  return out;
}

std::vector<Wire> build_onehot_select(CircuitBuilder& cb, std::span<const Wire> sel,
                                      const std::vector<std::vector<Wire>>& values) {
  if (sel.empty() || values.size() != sel.size()) {
    throw DimensionError("onehot: selector width " + std::to_string(sel.size()) +
                         " must match row count " + std::to_string(values.size()));
  }
  const size_t w = values[0].size();
  for (const auto& row : values) {
    if (row.size() != w) throw DimensionError("onehot: ragged value rows");
  }
  std::vector<Wire> out(w);
  for (size_t j = 0; j < w; ++j) {
    Wire acc = cb.band(sel[0], values[0][j]);
    for (size_t i = 1; i < sel.size(); ++i) {
      acc = cb.bxor(acc, cb.band(sel[i], values[i][j]));
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace privscore::circuit
