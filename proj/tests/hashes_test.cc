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

#include "dbe/hashes.h"

#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace dbe {
namespace {

using testing::Hex;

// Reference values computed with Python's hashlib.shake_256 over the framed
// preimage, independently of this library.
constexpr char kH2IdentityHex[] =
    "ae20159d44c68e0c2c028fe71a6e22a9046d103c3f05ce2845e72578df8097e4";
constexpr char kH1IdentityEmptyHex[] =
    "68f22cc678da4a2fa62b31dba968dc40350e2eee23292b46467316269eeb5c67";
constexpr char kH1IdentityAHex[] =
    "03c9b95607e8d34d235403182da915c43cd0ce80a4d032f5f07d117378dbcb20";

TEST(HashSuiteTest, Parameters) {
  EXPECT_EQ(HashSuite::kLambdaBits, 256u);
  EXPECT_NE(HashSuite::kTagH1, HashSuite::kTagH2);
  EXPECT_GE(HashSuite::kWideBytes * 8, 255u + 128u);
}

TEST(H2Test, IdentityGolden) {
  EXPECT_EQ(H2(GtElement::Identity()).Hex(), kH2IdentityHex);
}

TEST(H2Test, Deterministic) {
  GtElement e = GroupContext::Get().gt_generator;
  EXPECT_EQ(H2(e), H2(e));
}

TEST(H2Test, DistinctInputsGiveDistinctDigests) {
  std::set<std::string> seen;
  GtElement e = GroupContext::Get().gt_generator;
  for (int n = 0; n < 10000; ++n) {
    seen.insert(H2(e).Hex());
    e *= GroupContext::Get().gt_generator;
  }
  EXPECT_EQ(seen.size(), 10000u);
}

TEST(H1Test, IdentityGolden) {
  EXPECT_EQ(Hex(H1(G2Element::Identity(), {}).ToBytes()), kH1IdentityEmptyHex);
  EXPECT_EQ(Hex(H1(G2Element::Identity(), AsBytes("a")).ToBytes()),
            kH1IdentityAHex);
}

TEST(H1Test, DeterministicAndAuxSensitive) {
  G2Element x = GroupContext::Get().g_hat;
  EXPECT_EQ(H1(x, AsBytes("a")), H1(x, AsBytes("a")));
  EXPECT_NE(H1(x, AsBytes("a")), H1(x, {}));
}

TEST(H1Test, ElementSensitive) {
  G2Element x = GroupContext::Get().g_hat;
  EXPECT_NE(H1(x, AsBytes("ab")), H1(x * x, AsBytes("ab")));
}

TEST(H1Test, PreimageEncodingIsInjective) {
  // Every split of one byte string into (element bytes, aux) must be
  // distinguishable; with a fixed-width element, the aux framing is what
  // prevents "a" || "b" colliding with "ab".
  G2Element x = GroupContext::Get().g_hat;
  const std::string joined = "abcdef";
  std::set<std::vector<uint8_t>> seen;
  for (size_t cut = 0; cut <= joined.size(); ++cut) {
    std::string aux = joined.substr(0, cut);
    seen.insert(H1Preimage(x, AsBytes(aux)));
    seen.insert(H1Preimage(x * x, AsBytes(aux)));
  }
  EXPECT_EQ(seen.size(), 2 * (joined.size() + 1));
  // An aux that embeds another element's encoding does not alias.
  auto xb = (x * x).ToBytes();
  std::vector<uint8_t> embedded(xb.begin(), xb.end());
  EXPECT_NE(H1Preimage(x, embedded), H1Preimage(x * x, {}));
}

TEST(H1Test, ChiSquareUniformity) {
  constexpr int kSamples = 10000;
  constexpr int kBuckets = 16;
  std::array<int, kBuckets> counts{};
  G2Element x = GroupContext::Get().g_hat;
  for (int n = 0; n < kSamples; ++n) {
    std::string aux = std::to_string(n);
    auto bytes = H1(x, AsBytes(aux)).ToBytes();
    counts[bytes.back() & (kBuckets - 1)]++;
  }
  const double expected = static_cast<double>(kSamples) / kBuckets;
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // Critical value for 15 degrees of freedom at p = 0.001.
  EXPECT_LT(chi2, 37.697);
}

TEST(HashToScalarTest, TagSeparatesDomains) {
  EXPECT_NE(HashToScalar("a", AsBytes("m")), HashToScalar("b", AsBytes("m")));
  EXPECT_NE(HashToScalar("a", AsBytes("bc")), HashToScalar("ab", AsBytes("c")));
}

}  // namespace
}  // namespace dbe
