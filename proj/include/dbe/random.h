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

#ifndef DBE_RANDOM_H_
#define DBE_RANDOM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dbe {

// Entropy source handed to every randomized operation. Not thread-safe; use
// one instance per thread.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void Fill(std::span<uint8_t> out) = 0;

  uint64_t NextU64();
  bool NextBit();
};

// Operating-system entropy (OpenSSL RAND_bytes). Aborts if the system
// generator fails.
class SystemRandom final : public RandomSource {
 public:
  void Fill(std::span<uint8_t> out) override;
};

// Deterministic generator for tests and reproducible runs: SHAKE256 in
// counter mode, block_i = SHAKE256("dbe/drbg" || seed || be64(i)).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::span<const uint8_t> seed);
  explicit SeededRandom(uint64_t seed);

  void Fill(std::span<uint8_t> out) override;

 private:
  void Refill();

  static constexpr size_t kBlockBytes = 136;
  std::vector<uint8_t> seed_;
  uint64_t counter_ = 0;
  std::array<uint8_t, kBlockBytes> block_{};
  size_t used_ = kBlockBytes;
};

}  // namespace dbe

#endif  // DBE_RANDOM_H_
