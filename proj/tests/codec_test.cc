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

#include "dbe/codec.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "dbe/groups/curve.h"
#include "dbe/status.h"
#include "gtest/gtest.h"

namespace dbe::codec {
namespace {

using Bytes = std::vector<uint8_t>;

struct Objects {
  ss::PublicParams pp;
  ss::UserPublicKey ss_upk;
  ss::UserSecretKey ss_usk;
  ss::Header ss_ch;
  ad::UserPublicKey ad_upk;
  ad::UserSecretKey ad_usk;
  ad::Header ad_ch;
  OtsVerificationKey vk;
};

Objects MakeObjects(uint64_t seed) {
  SeededRandom rng(seed);
  Objects o;
  o.pp = *ad::Setup(2, rng);
  auto [ss_usk, ss_upk] = *ss::GenKey(3, o.pp, rng);
  o.ss_usk = ss_usk;
  o.ss_upk = ss_upk;
  ss::PublicKeyMap ss_keys{{3, ss_upk}};
  o.ss_ch = ss::Encaps({3}, ss_keys, o.pp, AsBytes("au"), rng)->first;
  ad::PublicKeyMap keys;
  for (Index i = 1; i <= 2; ++i) {
    auto [usk, upk] = *ad::GenKey(i, o.pp, rng);
    if (i == 2) {
      o.ad_usk = usk;
      o.ad_upk = upk;
    }
    keys.emplace(i, upk);
  }
  o.ad_ch = ad::Encaps({1, 2}, keys, o.pp, {}, rng)->first;
  o.vk = o.ad_ch.vk;
  return o;
}

std::vector<std::pair<std::string, Bytes>> Encoded(const Objects& o) {
  return {{"pp", Encode(o.pp)},         {"upk_ss", Encode(o.ss_upk)},
          {"usk_ss", Encode(o.ss_usk)}, {"ch_ss", Encode(o.ss_ch)},
          {"upk_ad", Encode(o.ad_upk)}, {"usk_ad", Encode(o.ad_usk)},
          {"ch_ad", Encode(o.ad_ch)},   {"ots_vk", Encode(o.vk)}};
}

// Decodes with the decoder matching the envelope kind and re-encodes.
absl::StatusOr<Bytes> Reencode(const Bytes& b) {
  DBE_ASSIGN_OR_RETURN(Kind kind, PeekKind(b));
  switch (kind) {
    case Kind::kPublicParams: {
      DBE_ASSIGN_OR_RETURN(auto v, DecodePublicParams(b));
      return Encode(v);
    }
    case Kind::kSsPublicKey: {
      DBE_ASSIGN_OR_RETURN(auto v, DecodeSsPublicKey(b));
      return Encode(v);
    }
    case Kind::kSsSecretKey: {
      DBE_ASSIGN_OR_RETURN(auto v, DecodeSsSecretKey(b));
      return Encode(v);
    }
    case Kind::kSsHeader: {
      DBE_ASSIGN_OR_RETURN(auto v, DecodeSsHeader(b));
      return Encode(v);
    }
    case Kind::kAdPublicKey: {
      DBE_ASSIGN_OR_RETURN(auto v, DecodeAdPublicKey(b));
      return Encode(v);
    }
    case Kind::kAdSecretKey: {
      DBE_ASSIGN_OR_RETURN(auto v, DecodeAdSecretKey(b));
      return Encode(v);
    }
    case Kind::kAdHeader: {
      DBE_ASSIGN_OR_RETURN(auto v, DecodeAdHeader(b));
      return Encode(v);
    }
    case Kind::kOtsVerificationKey: {
      DBE_ASSIGN_OR_RETURN(auto v, DecodeOtsVerificationKey(b));
      return Encode(v);
    }
  }
  return MakeError(ErrorCode::kUnknownKind, "unreachable");
}

std::string GoldenPath(const std::string& name) {
  return std::string(DBE_GOLDEN_DIR) + "/" + name + ".dbe";
}

Bytes ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

const Objects& Golden() {
  static const Objects* o = new Objects(MakeObjects(0x601d));
  return *o;
}

TEST(GoldenTest, FilesMatchAndRoundTrip) {
  const bool update = std::getenv("DBE_UPDATE_GOLDEN") != nullptr;
  for (const auto& [name, bytes] : Encoded(Golden())) {
    const std::string path = GoldenPath(name);
    if (update) {
      std::ofstream(path, std::ios::binary)
          .write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    }
    Bytes golden = ReadFile(path);
    ASSERT_FALSE(golden.empty()) << path;
    EXPECT_EQ(golden, bytes) << name;
    auto again = Reencode(golden);
    ASSERT_TRUE(again.ok()) << name << ": " << again.status();
    EXPECT_EQ(*again, golden) << name;
  }
}

TEST(RoundTripTest, RandomizedInstances) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    SeededRandom rng(seed);
    ss::PublicParams pp = *ss::Setup(1 + seed % 3, rng);
    Index i = 1 + seed % pp.capacity;
    auto [usk, upk] = *ss::GenKey(i, pp, rng);
    auto ch = ss::Encaps({i}, {{i, upk}}, pp, {}, rng)->first;
    EXPECT_EQ(*DecodeSsPublicKey(Encode(upk)), upk);
    EXPECT_EQ(*DecodeSsSecretKey(Encode(usk)), usk);
    EXPECT_EQ(*DecodeSsHeader(Encode(ch)), ch);
    if (seed <= 20) EXPECT_EQ(*DecodePublicParams(Encode(pp)), pp);
  }
}

TEST(RoundTripTest, RandomizedAdaptiveInstances) {
  SeededRandom rng(77);
  ad::PublicParams pp = *ad::Setup(3, rng);
  ad::PublicKeyMap keys;
  for (Index i = 1; i <= 3; ++i) {
    auto [usk, upk] = *ad::GenKey(i, pp, rng);
    EXPECT_EQ(*DecodeAdPublicKey(Encode(upk)), upk);
    EXPECT_EQ(*DecodeAdSecretKey(Encode(usk)), usk);
    keys.emplace(i, upk);
  }
  for (int n = 0; n < 100; ++n) {
    IndexSet s;
    for (Index i = 1; i <= 3; ++i) {
      if (rng.NextBit()) s.insert(i);
    }
    if (s.empty()) s.insert(1);
    if (n % 10 == 0) {
      auto ch = ad::Encaps(s, keys, pp, {}, rng)->first;
      EXPECT_EQ(*DecodeAdHeader(Encode(ch)), ch);
      EXPECT_EQ(*DecodeOtsVerificationKey(Encode(ch.vk)), ch.vk);
    }
    // Cheaper synthetic headers cover the bitmap encoding.
    ad::Header h;
    h.cm.z.resize(rng.NextU64() % 20);
    for (size_t k = 0; k < h.cm.z.size(); ++k) h.cm.z[k] = rng.NextBit();
    rng.Fill(h.cm.ct0);
    rng.Fill(h.cm.ct1);
    EXPECT_EQ(*DecodeAdHeader(Encode(h)), h);
  }
}

TEST(EnvelopeTest, Rejections) {
  Bytes b = Encode(Golden().ss_ch);
  auto code = [](const Bytes& x) {
    return ErrorCodeOf(DecodeSsHeader(x).status());
  };
  Bytes bad = b;
  bad[0] = 'X';
  EXPECT_EQ(code(bad), ErrorCode::kBadMagic);
  bad = b;
  bad[5] = 0x02;
  EXPECT_EQ(code(bad), ErrorCode::kUnsupportedVersion);
  bad = b;
  bad[4] = 0x09;
  EXPECT_EQ(code(bad), ErrorCode::kUnknownKind);
  bad = b;
  bad[4] = 0x00;
  EXPECT_EQ(code(bad), ErrorCode::kUnknownKind);
  bad = b;
  bad.push_back(0);
  EXPECT_EQ(code(bad), ErrorCode::kTrailingBytes);
  EXPECT_EQ(ErrorCodeOf(DecodeAdHeader(b).status()), ErrorCode::kWrongKind);
  EXPECT_EQ(code(Bytes{}), ErrorCode::kTruncated);
}

TEST(EnvelopeTest, EveryTruncationRejected) {
  for (const auto& [name, bytes] : Encoded(Golden())) {
    if (name == "pp") continue;
    for (size_t n = 0; n < bytes.size(); ++n) {
      Bytes prefix(bytes.begin(), bytes.begin() + n);
      auto r = Reencode(prefix);
      ASSERT_FALSE(r.ok()) << name << " prefix " << n;
      EXPECT_EQ(ErrorCodeOf(r.status()), ErrorCode::kTruncated)
          << name << " prefix " << n;
    }
  }
}

TEST(IndexSetTest, PublicParamsWithForbiddenIndex) {
  ss::PublicParams pp = Golden().pp;
  pp.a.emplace(pp.capacity + 2, GroupContext::Get().g);
  EXPECT_EQ(ErrorCodeOf(DecodePublicParams(Encode(pp)).status()),
            ErrorCode::kIndexSet);
  pp = Golden().pp;
  pp.a_hat.erase(1);
  EXPECT_EQ(ErrorCodeOf(DecodePublicParams(Encode(pp)).status()),
            ErrorCode::kIndexSet);
}

TEST(IndexSetTest, PublicKeyWithExcludedIndex) {
  ss::UserPublicKey upk = Golden().ss_upk;
  upk.vk.emplace(upk.capacity + 2 - upk.index, GroupContext::Get().g);
  EXPECT_EQ(ErrorCodeOf(DecodeSsPublicKey(Encode(upk)).status()),
            ErrorCode::kIndexSet);
  upk = Golden().ss_upk;
  upk.index = upk.capacity + 1;
  EXPECT_EQ(ErrorCodeOf(DecodeSsPublicKey(Encode(upk)).status()),
            ErrorCode::kIndexSet);
}

TEST(IndexSetTest, AdaptiveSlotsChecked) {
  ad::UserPublicKey upk = Golden().ad_upk;
  std::swap(upk.even, upk.odd);
  EXPECT_EQ(ErrorCodeOf(DecodeAdPublicKey(Encode(upk)).status()),
            ErrorCode::kIndexSet);
  ad::UserSecretKey usk = Golden().ad_usk;
  usk.kept_bit ^= 1;
  EXPECT_EQ(ErrorCodeOf(DecodeAdSecretKey(Encode(usk)).status()),
            ErrorCode::kIndexSet);
}

TEST(MapEncodingTest, UnsortedIndicesRejected) {
  Bytes b = Encode(Golden().ss_upk);
  // Body: L, i, V, V^, count, then entries of (u32, 48 bytes).
  const size_t first = kEnvelopeBytes + 8 + 48 + 96 + 4;
  const size_t second = first + 4 + 48;
  Bytes swapped = b;
  std::swap_ranges(swapped.begin() + first, swapped.begin() + second,
                   swapped.begin() + second);
  EXPECT_EQ(ErrorCodeOf(DecodeSsPublicKey(swapped).status()),
            ErrorCode::kBadEncoding);
}

TEST(ElementTest, OffSubgroupPointRejected) {
  using bls12::Fp;
  Fp x = Fp::FromU64(9);
  bls12::G1Point q;
  for (;;) {
    auto y = (x.Square() * x + Fp::FromU64(4)).Sqrt();
    if (y) {
      q = bls12::G1Point::FromAffineUnchecked(x, *y).MulBits(
          bls12::Fr::kModulus);
      if (!q.IsIdentity()) break;
    }
    x += Fp::One();
  }
  ss::Header ch = Golden().ss_ch;
  ch.c2 = G1Element::FromPointUnchecked(q);
  EXPECT_EQ(ErrorCodeOf(DecodeSsHeader(Encode(ch)).status()),
            ErrorCode::kNotInSubgroup);
}

TEST(BitmapTest, NonzeroPaddingRejected) {
  ad::Header h;
  h.cm.z = {true, false, true};
  Bytes b = Encode(h);
  // The bitmap byte precedes sigma and VK.
  const size_t at = b.size() - 48 - 96 - 1;
  EXPECT_EQ(b[at], 0xa0);
  b[at] |= 0x01;
  EXPECT_EQ(ErrorCodeOf(DecodeAdHeader(b).status()), ErrorCode::kBadEncoding);
}

TEST(CmPreimageTest, InjectiveAcrossSplices) {
  std::vector<ad::CipherMessage> cms;
  ad::CipherMessage base = Golden().ad_ch.cm;
  cms.push_back(base);
  for (size_t len = 0; len <= 17; ++len) {
    ad::CipherMessage cm = base;
    cm.z.assign(len, false);
    cms.push_back(cm);
    if (len > 0) {
      cm.z.back() = true;
      cms.push_back(cm);
    }
  }
  ad::CipherMessage swapped = base;
  std::swap(swapped.ch0, swapped.ch1);
  cms.push_back(swapped);
  swapped = base;
  std::swap(swapped.ct0, swapped.ct1);
  cms.push_back(swapped);
  for (size_t a = 0; a < cms.size(); ++a) {
    for (size_t b = 0; b < cms.size(); ++b) {
      EXPECT_EQ(CmPreimage(cms[a]) == CmPreimage(cms[b]), cms[a] == cms[b])
          << a << " vs " << b;
    }
  }
  Bytes pre = CmPreimage(base);
  EXPECT_TRUE(std::equal(kCmDomain.begin(), kCmDomain.end(), pre.begin()));
}

TEST(SecretScanTest, PublicEncodingsHoldNoSecrets) {
  const Objects& o = Golden();
  auto contains = [](const Bytes& hay, const auto& needle) {
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
           hay.end();
  };
  const auto ss_secret = o.ss_usk.k.ToBytes();
  const auto ad_secret = o.ad_usk.slot_key.k.ToBytes();
  for (const auto& [name, bytes] : Encoded(o)) {
    Kind kind = *PeekKind(bytes);
    if (IsSecretKind(kind)) continue;
    EXPECT_FALSE(contains(bytes, ss_secret)) << name;
    EXPECT_FALSE(contains(bytes, ad_secret)) << name;
    for (uint8_t secret_kind : {uint8_t{0x03}, uint8_t{0x06}}) {
      Bytes tag(kMagic.begin(), kMagic.end());
      tag.push_back(secret_kind);
      EXPECT_FALSE(contains(bytes, tag)) << name;
    }
  }
}

TEST(SizeTest, HeaderSizesAreConstant) {
  EXPECT_EQ(Encode(Golden().ss_ch).size(), kEnvelopeBytes + 96 + 48);
}

}  // namespace
}  // namespace dbe::codec
