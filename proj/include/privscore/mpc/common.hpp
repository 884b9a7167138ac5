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

#ifndef PRIVSCORE_MPC_COMMON_HPP_
#define PRIVSCORE_MPC_COMMON_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace privscore::mpc {

// Exactly three parties; arithmetic on ids is mod 3.
struct PartyId {
  int v = 0;
  int next() const { return (v + 1) % 3; }
  int prev() const { return (v + 2) % 3; }
  friend bool operator==(PartyId a, PartyId b) { return a.v == b.v; }
};

// Party i's view of a replicated bit x = x_0 ^ x_1 ^ x_2: the pair
// (x_i, x_{i+1}).
struct BitShare {
  uint8_t own = 0;
  uint8_t next = 0;
};

using ShareVector = std::vector<BitShare>;

struct CommStats {
  uint64_t bytes_to_next = 0;  // framed bytes on the wire
  uint64_t bytes_to_prev = 0;
  uint64_t payload_bits = 0;  // AND cross-term bits sent (one per AND gate)
  uint64_t recon_bits = 0;    // reconstruction bits sent
  uint32_t round_count = 0;   // gate-batch rounds

  uint64_t bytes_total() const { return bytes_to_next + bytes_to_prev; }
};

// Splits plaintext bits into the three parties' replicated share vectors.
// The two mask bits per input are drawn from rng; each single party's pair is
// then uniform regardless of the secret.
std::array<ShareVector, 3> share_bits(std::span<const uint8_t> bits, std::mt19937_64& rng);

// Recombines the three share vectors; asserts replication consistency.
std::vector<uint8_t> reconstruct_bits(const std::array<ShareVector, 3>& shares);

// Bit packing for wire messages, LSB of byte 0 first.
std::vector<uint8_t> pack_bits(std::span<const uint8_t> bits);
std::vector<uint8_t> unpack_bits(std::span<const uint8_t> bytes, size_t n_bits);

}  // namespace privscore::mpc

#endif  // PRIVSCORE_MPC_COMMON_HPP_
