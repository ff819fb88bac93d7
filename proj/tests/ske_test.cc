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

#include "dbe/ske.h"

#include <vector>

#include "dbe/status.h"
#include "gtest/gtest.h"

namespace dbe {
namespace {

TEST(SkeTest, KeyLength) {
  SeededRandom rng(1);
  EXPECT_EQ(SkeGenKey(rng).bytes.size(), 32u);
}

TEST(SkeTest, KeysDistinctAndReproducible) {
  SeededRandom a(1), b(1);
  SymmetricKey k1 = SkeGenKey(a);
  EXPECT_NE(k1, SkeGenKey(a));
  EXPECT_EQ(k1, SkeGenKey(b));
}

TEST(SkeTest, ZeroMessageGivesKey) {
  SeededRandom rng(2);
  SymmetricKey k = SkeGenKey(rng);
  SkeBlock zero{};
  EXPECT_EQ(*SkeEncrypt(k, zero), k.bytes);
}

TEST(SkeTest, RoundTripAndPadStructure) {
  SeededRandom rng(3);
  for (int n = 0; n < 100; ++n) {
    SymmetricKey k = SkeGenKey(rng);
    SkeBlock m;
    rng.Fill(m);
    SkeBlock c = *SkeEncrypt(k, m);
    EXPECT_EQ(*SkeDecrypt(k, c), m);
    for (size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i] ^ m[i], k.bytes[i]);
  }
}

TEST(SkeTest, LengthMismatch) {
  SymmetricKey k;
  std::vector<uint8_t> longer(33), shorter(31);
  EXPECT_EQ(ErrorCodeOf(SkeEncrypt(k, longer).status()),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(ErrorCodeOf(SkeDecrypt(k, longer).status()),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(ErrorCodeOf(SkeDecrypt(k, shorter).status()),
            ErrorCode::kLengthMismatch);
}

TEST(SkeTest, UniformKeyGivesUniformPlaintextBits) {
  // For a fixed ciphertext, each plaintext bit flips with the key bit.
  SeededRandom rng(4);
  SkeBlock c{};
  std::array<int, 256> ones{};
  constexpr int kTrials = 2000;
  for (int n = 0; n < kTrials; ++n) {
    SkeBlock m = *SkeDecrypt(SkeGenKey(rng), c);
    for (int b = 0; b < 256; ++b) ones[b] += (m[b / 8] >> (b % 8)) & 1;
  }
  for (int b = 0; b < 256; ++b) {
    EXPECT_GT(ones[b], kTrials / 2 - 200);
    EXPECT_LT(ones[b], kTrials / 2 + 200);
  }
}

}  // namespace
}  // namespace dbe
