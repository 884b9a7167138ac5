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

#include "privscore/mpc/transport.hpp"

#include <array>

#include "privscore/errors.hpp"

namespace privscore::mpc {

std::vector<uint8_t> encode_frame(const Frame& f) {
  std::vector<uint8_t> out;
  out.reserve(kFrameHeaderBytes + f.payload.size());
  const uint32_t len = static_cast<uint32_t>(f.payload.size());
  out.push_back(static_cast<uint8_t>(len >> 24));
  out.push_back(static_cast<uint8_t>(len >> 16));
  out.push_back(static_cast<uint8_t>(len >> 8));
  out.push_back(static_cast<uint8_t>(len));
  out.push_back(f.sender);
  out.push_back(static_cast<uint8_t>(f.type));
  out.push_back(static_cast<uint8_t>(f.seq >> 24));
  out.push_back(static_cast<uint8_t>(f.seq >> 16));
  out.push_back(static_cast<uint8_t>(f.seq >> 8));
  out.push_back(static_cast<uint8_t>(f.seq));
  out.insert(out.end(), f.payload.begin(), f.payload.end());
  return out;
}

Frame decode_frame(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < kFrameHeaderBytes) throw TransportError("frame shorter than its header");
  const uint32_t len = (uint32_t{bytes[0]} << 24) | (uint32_t{bytes[1]} << 16) |
                       (uint32_t{bytes[2]} << 8) | uint32_t{bytes[3]};
  if (bytes.size() != kFrameHeaderBytes + len) {
    throw TransportError("frame length field disagrees with frame size");
  }
  Frame f;
  f.sender = bytes[4];
  if (bytes[5] > 4) throw TransportError("unknown message type " + std::to_string(bytes[5]));
  f.type = static_cast<MsgType>(bytes[5]);
  f.seq = (uint32_t{bytes[6]} << 24) | (uint32_t{bytes[7]} << 16) | (uint32_t{bytes[8]} << 8) |
          uint32_t{bytes[9]};
  f.payload.assign(bytes.begin() + kFrameHeaderBytes, bytes.end());
  return f;
}

void ByteQueue::push(std::vector<uint8_t> frame_bytes) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    q_.push_back(std::move(frame_bytes));
  }
  cv_.notify_one();
}

std::vector<uint8_t> ByteQueue::pop() {
  std::unique_lock<std::mutex> lock(mu_);
  cv_.wait(lock, [&] { return !q_.empty(); });
  std::vector<uint8_t> front = std::move(q_.front());
  q_.pop_front();
  return front;
}

size_t InProcessChannel::send(const Frame& f) {
  std::vector<uint8_t> bytes = encode_frame(f);
  const size_t n = bytes.size();
  out_->push(std::move(bytes));
  return n;
}

Frame InProcessChannel::recv() { return decode_frame(in_->pop()); }

InProcessMesh make_inprocess_mesh() {
  // queue[i][0]: party i -> next(i); queue[i][1]: party i -> prev(i).
  std::array<std::array<std::shared_ptr<ByteQueue>, 2>, 3> queues;
  for (auto& pair : queues) {
    pair[0] = std::make_shared<ByteQueue>();
    pair[1] = std::make_shared<ByteQueue>();
  }
  InProcessMesh mesh;
  for (int p = 0; p < 3; ++p) {
    const int next = (p + 1) % 3;
    const int prev = (p + 2) % 3;
    mesh.to_next[p] = std::make_unique<InProcessChannel>(queues[p][0], queues[next][1]);
    mesh.to_prev[p] = std::make_unique<InProcessChannel>(queues[p][1], queues[prev][0]);
  }
  return mesh;
}

}  // namespace privscore::mpc
