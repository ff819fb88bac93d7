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

#include "dbe/ots.h"

#include <string>
#include <vector>

#include "dbe/hashes.h"
#include "dbe/status.h"
#include "gtest/gtest.h"

namespace dbe {
namespace {

TEST(OtsTest, VerificationKeyRecomputable) {
  SeededRandom rng(1);
  auto [sk, vk] = OtsGenKey(rng);
  EXPECT_FALSE(sk.x.IsZero());
  EXPECT_EQ(vk.X, GroupContext::Get().g_hat.Pow(sk.x));
  auto [sk2, vk2] = OtsGenKey(rng);
  EXPECT_NE(vk.X, vk2.X);
}

TEST(OtsTest, CorrectnessOnRandomKeysAndMessages) {
  SeededRandom rng(2);
  for (int n = 0; n < 100; ++n) {
    auto [sk, vk] = OtsGenKey(rng);
    std::vector<uint8_t> m(n);
    rng.Fill(m);
    auto sig = OtsSign(sk, m);
    ASSERT_TRUE(sig.ok());
    EXPECT_TRUE(OtsVerify(vk, *sig, m));
  }
}

TEST(OtsTest, SigningIsDeterministic) {
  SeededRandom rng(3);
  auto [sk, vk] = OtsGenKey(rng);
  EXPECT_EQ(*OtsSign(sk, AsBytes("msg")), *OtsSign(sk, AsBytes("msg")));
}

TEST(OtsTest, BitFlippedMessageRejected) {
  SeededRandom rng(4);
  auto [sk, vk] = OtsGenKey(rng);
  std::vector<uint8_t> m(40);
  rng.Fill(m);
  OtsSignature sig = *OtsSign(sk, m);
  for (size_t bit = 0; bit < m.size() * 8; bit += 37) {
    auto flipped = m;
    flipped[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    EXPECT_FALSE(OtsVerify(vk, sig, flipped));
  }
}

TEST(OtsTest, PerturbedSignaturesRejected) {
  SeededRandom rng(5);
  auto [sk, vk] = OtsGenKey(rng);
  OtsSignature sig = *OtsSign(sk, AsBytes("m"));
  G1Element shift;
  for (int k = 1; k <= 16; ++k) {
    shift *= GroupContext::Get().g;
    EXPECT_FALSE(OtsVerify(vk, OtsSignature{sig.sigma * shift}, AsBytes("m")));
  }
  EXPECT_FALSE(OtsVerify(vk, OtsSignature{G1Element::Identity()}, AsBytes("m")));
}

TEST(OtsTest, WrongVerificationKeyRejected) {
  SeededRandom rng(6);
  auto [sk, vk] = OtsGenKey(rng);
  OtsSignature sig = *OtsSign(sk, AsBytes("m"));
  OtsVerificationKey other{GroupContext::Get().g_hat.Pow(Scalar::Random(rng))};
  EXPECT_FALSE(OtsVerify(other, sig, AsBytes("m")));
  EXPECT_FALSE(OtsVerify(OtsVerificationKey{}, sig, AsBytes("m")));
}

TEST(OtsTest, UnsignableKey) {
  // x = -h(m) makes the exponent 1/(x + h) undefined.
  OtsSigningKey sk{-HashToScalar(kOtsHashTag, AsBytes("m"))};
  auto sig = OtsSign(sk, AsBytes("m"));
  ASSERT_FALSE(sig.ok());
  EXPECT_EQ(ErrorCodeOf(sig.status()), ErrorCode::kUnsignableKey);
}

TEST(OtsTest, VerifyUsesOnePairing) {
  if (!kCountersEnabled) GTEST_SKIP();
  SeededRandom rng(7);
  auto [sk, vk] = OtsGenKey(rng);
  OtsSignature sig = *OtsSign(sk, AsBytes("m"));
  ResetCounters();
  EXPECT_TRUE(OtsVerify(vk, sig, AsBytes("m")));
  EXPECT_EQ(ReadCounters().pairings, 1u);
}

}  // namespace
}  // namespace dbe
