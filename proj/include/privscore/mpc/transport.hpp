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

#ifndef PRIVSCORE_MPC_TRANSPORT_HPP_
#define PRIVSCORE_MPC_TRANSPORT_HPP_

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <vector>

namespace privscore::mpc {

// Wire format, identical on every backend:
//   4-byte big-endian payload length | 1-byte sender id | 1-byte type |
//   4-byte big-endian sequence number | payload
// Types: 0 handshake, 1 seed setup, 2 input share, 3 gate batch,
// 4 reconstruct. The handshake payload is 16-byte session id, 1-byte party
// id, 32-byte circuit hash.
enum class MsgType : uint8_t {
  Handshake = 0,
  SeedSetup = 1,
  InputShare = 2,
  GateBatch = 3,
  Reconstruct = 4,
};

struct Frame {
  uint8_t sender = 0;
  MsgType type = MsgType::Handshake;
  uint32_t seq = 0;
  std::vector<uint8_t> payload;
};

inline constexpr size_t kFrameHeaderBytes = 10;

std::vector<uint8_t> encode_frame(const Frame& f);
// Parses one frame from `bytes`; throws TransportError on malformed input.
Frame decode_frame(const std::vector<uint8_t>& bytes);

// One reliable, ordered, full-duplex link to a single neighbor. A channel is
// used by one party thread at a time but may be created on a different
// thread than it is used on.
class Channel {
 public:
  virtual ~Channel() = default;
  // Returns the framed byte count, for communication accounting.
  virtual size_t send(const Frame& f) = 0;
  virtual Frame recv() = 0;
};

// In-process backend: frames travel through blocking queues as encoded
// bytes, so framing and accounting match the TCP backend exactly.
class ByteQueue {
 public:
  void push(std::vector<uint8_t> frame_bytes);
  std::vector<uint8_t> pop();

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<std::vector<uint8_t>> q_;
};

class InProcessChannel : public Channel {
 public:
  InProcessChannel(std::shared_ptr<ByteQueue> out, std::shared_ptr<ByteQueue> in)
      : out_(std::move(out)), in_(std::move(in)) {}
  size_t send(const Frame& f) override;
  Frame recv() override;

 private:
  std::shared_ptr<ByteQueue> out_;
  std::shared_ptr<ByteQueue> in_;
};

// The six directed links of a three-party in-process mesh.
// channels[p] = {link to next(p), link to prev(p)}.
struct InProcessMesh {
  std::array<std::unique_ptr<Channel>, 3> to_next;
  std::array<std::unique_ptr<Channel>, 3> to_prev;
};
InProcessMesh make_inprocess_mesh();

}  // namespace privscore::mpc

#endif  // PRIVSCORE_MPC_TRANSPORT_HPP_
