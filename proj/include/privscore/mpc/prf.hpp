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

#ifndef PRIVSCORE_MPC_PRF_HPP_
#define PRIVSCORE_MPC_PRF_HPP_

#include <array>
#include <cstdint>
#include <memory>

namespace privscore::mpc {

using Key128 = std::array<uint8_t, 16>;
using SessionId = std::array<uint8_t, 16>;

// The one pinned PRF choice: AES-128. A session key is derived as
// AES(key, session_id); keystream block i is then AES(session_key, i).
// Identical (key, session_id) pairs replay identical streams; different
// session ids give independent streams under the same key.
class PrfStream {
 public:
  PrfStream(const Key128& key, const SessionId& session_id);
  PrfStream(PrfStream&&) noexcept;
  PrfStream& operator=(PrfStream&&) noexcept;
  ~PrfStream();

  // Bit `counter` of the keystream; sequential access costs one AES block
  // per 128 bits.
  bool bit(uint64_t counter);

  std::array<uint8_t, 16> block(uint64_t index);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Party i holds keys shared with its two neighbors; the masks
// alpha_0 ^ alpha_1 ^ alpha_2 cancel for every counter because each key is
// held by exactly two parties.
class ZeroShareStream {
 public:
  ZeroShareStream(const Key128& with_next, const Key128& with_prev, const SessionId& session_id)
      : next_(with_next, session_id), prev_(with_prev, session_id) {}

  bool alpha(uint64_t counter) { return next_.bit(counter) != prev_.bit(counter); }

 private:
  PrfStream next_;
  PrfStream prev_;
};

}  // namespace privscore::mpc

#endif  // PRIVSCORE_MPC_PRF_HPP_
