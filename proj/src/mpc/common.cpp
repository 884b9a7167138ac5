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

#include "privscore/mpc/common.hpp"

#include "privscore/errors.hpp"

namespace privscore::mpc {

std::array<ShareVector, 3> share_bits(std::span<const uint8_t> bits, std::mt19937_64& rng) {
  std::array<ShareVector, 3> out;
  for (auto& v : out) v.resize(bits.size());
  uint64_t pool = 0;
  int pool_left = 0;
  auto random_bit = [&]() -> uint8_t {
    if (pool_left == 0) {
      pool = rng();
      pool_left = 64;
    }
    const uint8_t b = pool & 1;
    pool >>= 1;
    --pool_left;
    return b;
  };
  for (size_t i = 0; i < bits.size(); ++i) {
    const uint8_t x1 = random_bit();
    const uint8_t x2 = random_bit();
    const uint8_t x0 = (bits[i] & 1) ^ x1 ^ x2;
    out[0][i] = BitShare{x0, x1};
    out[1][i] = BitShare{x1, x2};
    out[2][i] = BitShare{x2, x0};
  }
  return out;
}

std::vector<uint8_t> reconstruct_bits(const std::array<ShareVector, 3>& shares) {
  const size_t n = shares[0].size();
  if (shares[1].size() != n || shares[2].size() != n) {
    throw DimensionError("share vectors differ in length");
  }
  std::vector<uint8_t> bits(n);
  for (size_t i = 0; i < n; ++i) {
    for (int p = 0; p < 3; ++p) {
      if (shares[p][i].next != shares[(p + 1) % 3][i].own) {
        throw ProtocolError("replicated components disagree at bit " + std::to_string(i));
      }
    }
    bits[i] = shares[0][i].own ^ shares[1][i].own ^ shares[2][i].own;
  }
  return bits;
}

std::vector<uint8_t> pack_bits(std::span<const uint8_t> bits) {
  std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1) bytes[i >> 3] |= static_cast<uint8_t>(1u << (i & 7));
  }
  return bytes;
}

std::vector<uint8_t> unpack_bits(std::span<const uint8_t> bytes, size_t n_bits) {
  if (bytes.size() != (n_bits + 7) / 8) {
    throw DimensionError("packed payload is " + std::to_string(bytes.size()) +
                         " bytes, expected " + std::to_string((n_bits + 7) / 8));
  }
  std::vector<uint8_t> bits(n_bits);
  for (size_t i = 0; i < n_bits; ++i) {
    bits[i] = (bytes[i >> 3] >> (i & 7)) & 1;
  }
  return bits;
}

}  // namespace privscore::mpc
