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

#include "dbe/random.h"

#include <openssl/rand.h>

#include <algorithm>
#include <cstdlib>
#include <string_view>

#include "dbe/shake.h"

namespace dbe {

uint64_t RandomSource::NextU64() {
  uint8_t buf[8];
  Fill(buf);
  uint64_t v = 0;
  for (uint8_t b : buf) v = (v << 8) | b;
  return v;
}

bool RandomSource::NextBit() {
  uint8_t b;
  Fill(std::span<uint8_t>(&b, 1));
  return (b & 1) != 0;
}

void SystemRandom::Fill(std::span<uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) std::abort();
}

SeededRandom::SeededRandom(std::span<const uint8_t> seed)
    : seed_(seed.begin(), seed.end()) {}

SeededRandom::SeededRandom(uint64_t seed) {
  seed_.resize(8);
  for (int i = 0; i < 8; ++i) {
    seed_[static_cast<size_t>(i)] = static_cast<uint8_t>(seed >> (56 - 8 * i));
  }
}

void SeededRandom::Refill() {
  constexpr std::string_view kTag = "dbe/drbg";
  uint8_t counter[8];
  for (int i = 0; i < 8; ++i) {
    counter[i] = static_cast<uint8_t>(counter_ >> (56 - 8 * i));
  }
  ++counter_;
  Shake256 xof;
  xof.Absorb(std::span(reinterpret_cast<const uint8_t*>(kTag.data()),
                       kTag.size()));
  xof.Absorb(seed_);
  xof.Absorb(counter);
  xof.Squeeze(block_);
  used_ = 0;
}

void SeededRandom::Fill(std::span<uint8_t> out) {
  size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == kBlockBytes) Refill();
    size_t take = std::min(out.size() - pos, kBlockBytes - used_);
    std::copy_n(block_.begin() + static_cast<ptrdiff_t>(used_), take,
                out.begin() + static_cast<ptrdiff_t>(pos));
    used_ += take;
    pos += take;
  }
}

}  // namespace dbe
