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

#ifndef DBE_SHAKE_H_
#define DBE_SHAKE_H_

#include <cstdint>
#include <span>

typedef struct evp_md_ctx_st EVP_MD_CTX;

namespace dbe {

// Thin RAII wrapper over OpenSSL's SHAKE256. Squeeze may be called once.
class Shake256 {
 public:
  Shake256();
  ~Shake256();
  Shake256(const Shake256&) = delete;
  Shake256& operator=(const Shake256&) = delete;

  void Absorb(std::span<const uint8_t> data);
  void Squeeze(std::span<uint8_t> out);

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace dbe

#endif  // DBE_SHAKE_H_
