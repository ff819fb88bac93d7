/*
 * Copyright 2026 The DBE Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dbe/shake.h"

#include <openssl/evp.h>

#include <cstdlib>

namespace dbe {

Shake256::Shake256() : ctx_(EVP_MD_CTX_new()) {
  if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, EVP_shake256(), nullptr) != 1) {
    std::abort();
  }
}

Shake256::~Shake256() { EVP_MD_CTX_free(ctx_); }

void Shake256::Absorb(std::span<const uint8_t> data) {
  if (data.empty()) return;
  if (EVP_DigestUpdate(ctx_, data.data(), data.size()) != 1) std::abort();
}

void Shake256::Squeeze(std::span<uint8_t> out) {
  if (EVP_DigestFinalXOF(ctx_, out.data(), out.size()) != 1) std::abort();
}

}  // namespace dbe
