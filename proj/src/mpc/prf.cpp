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

#include "privscore/mpc/prf.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace privscore::mpc {

namespace {

class AesBlock {
 public:
  explicit AesBlock(const Key128& key) : ctx_(EVP_CIPHER_CTX_new()) {
    if (!ctx_ || EVP_EncryptInit_ex(ctx_, EVP_aes_128_ecb(), nullptr, key.data(), nullptr) != 1) {
      EVP_CIPHER_CTX_free(ctx_);
      throw std::runtime_error("AES-128 init failed");
    }
    EVP_CIPHER_CTX_set_padding(ctx_, 0);
  }
  AesBlock(const AesBlock&) = delete;
  AesBlock& operator=(const AesBlock&) = delete;
  ~AesBlock() { EVP_CIPHER_CTX_free(ctx_); }

  std::array<uint8_t, 16> encrypt(const std::array<uint8_t, 16>& in) const {
    std::array<uint8_t, 16> out{};
    int len = 0;
    if (EVP_EncryptUpdate(ctx_, out.data(), &len, in.data(), 16) != 1 || len != 16) {
      throw std::runtime_error("AES-128 block encryption failed");
    }
    return out;
  }

 private:
  EVP_CIPHER_CTX* ctx_;
};

}  // namespace

struct PrfStream::Impl {
  Impl(const Key128& key, const SessionId& session_id)
      : session_cipher([&] {
          AesBlock master(key);
          Key128 session_key{};
          auto derived = master.encrypt(session_id);
          std::memcpy(session_key.data(), derived.data(), 16);
          return session_key;
        }()) {}

  std::array<uint8_t, 16> block(uint64_t index) {
    if (have_cached && cached_index == index) return cached;
    std::array<uint8_t, 16> in{};
    for (int i = 0; i < 8; ++i) in[15 - i] = static_cast<uint8_t>(index >> (8 * i));
    cached = session_cipher.encrypt(in);
    cached_index = index;
    have_cached = true;
    return cached;
  }

  AesBlock session_cipher;
  std::array<uint8_t, 16> cached{};
  uint64_t cached_index = 0;
  bool have_cached = false;
};

PrfStream::PrfStream(const Key128& key, const SessionId& session_id)
    : impl_(std::make_unique<Impl>(key, session_id)) {}
PrfStream::PrfStream(PrfStream&&) noexcept = default;
PrfStream& PrfStream::operator=(PrfStream&&) noexcept = default;
PrfStream::~PrfStream() = default;

bool PrfStream::bit(uint64_t counter) {
  const auto b = impl_->block(counter >> 7);
  const unsigned off = counter & 127;
  return (b[off >> 3] >> (off & 7)) & 1;
}

std::array<uint8_t, 16> PrfStream::block(uint64_t index) { return impl_->block(index); }

}  // namespace privscore::mpc
