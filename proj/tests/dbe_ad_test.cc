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

#include "dbe/dbe_ad.h"

#include <functional>
#include <string>
#include <vector>

#include "dbe/codec.h"
#include "dbe/status.h"
#include "gtest/gtest.h"

namespace dbe::ad {
namespace {

// Public keys plus the secrets of both slots, so each user can be exercised
// with either kept bit against the same public key.
struct World {
  PublicParams pp;
  PublicKeyMap upks;
  std::map<Index, std::array<UserSecretKey, 2>> usks;
};

World MakeWorld(Index users, uint64_t seed) {
  SeededRandom rng(seed);
  World w;
  w.pp = *ad::Setup(users, rng);
  for (Index i = 1; i <= users; ++i) {
    auto even = *ss::GenKey(EvenSlot(i), w.pp, rng);
    auto odd = *ss::GenKey(OddSlot(i), w.pp, rng);
    w.upks.emplace(i, UserPublicKey{i, even.second, odd.second});
    w.usks.emplace(i, std::array<UserSecretKey, 2>{
                          UserSecretKey{i, 0, even.first},
                          UserSecretKey{i, 1, odd.first}});
  }
  return w;
}

const World& World3() {
  static const World* w = new World(MakeWorld(3, 200));
  return *w;
}

TEST(SetupTest, DoubledCapacity) {
  SeededRandom rng(1);
  PublicParams pp = *ad::Setup(2, rng);
  EXPECT_EQ(pp.capacity, 4u);
  EXPECT_EQ(UserCapacity(pp), 2u);
  EXPECT_EQ(pp.a.size(), 9u);
  EXPECT_FALSE(pp.a.contains(6));
  EXPECT_EQ(pp.omega, Pairing(pp.A(5), pp.AHat(1)));
  EXPECT_FALSE(ad::Setup(0, rng).ok());
}

TEST(GenKeyTest, SlotsAndKeptBit) {
  SeededRandom rng(2);
  const PublicParams& pp = World3().pp;
  for (int n = 0; n < 6; ++n) {
    auto [usk, upk] = *ad::GenKey(1, pp, rng);
    EXPECT_EQ(upk.even.index, 2u);
    EXPECT_EQ(upk.odd.index, 1u);
    EXPECT_EQ(usk.slot_key.index, 2u - usk.kept_bit);
    EXPECT_TRUE(ad::IsValid(1, upk, pp, rng));
  }
  auto [usk0, upk0] = *ad::GenKeyWithBit(2, 0, pp, rng);
  EXPECT_EQ(usk0.slot_key.index, 4u);
  auto [usk1, upk1] = *ad::GenKeyWithBit(2, 1, pp, rng);
  EXPECT_EQ(usk1.slot_key.index, 3u);
  EXPECT_FALSE(ad::GenKey(4, pp, rng).ok());
  EXPECT_FALSE(ad::GenKeyWithBit(1, 2, pp, rng).ok());
}

TEST(GenKeyTest, DiscardedSlotNeverSerialized) {
  SeededRandom rng(3);
  auto [usk, upk] = *ad::GenKeyWithBit(1, 0, World3().pp, rng);
  auto bytes = codec::Encode(usk);
  auto decoded = *codec::DecodeAdSecretKey(bytes);
  EXPECT_EQ(decoded.slot_key.index, 2u);
  EXPECT_EQ(bytes.size(), codec::Encode(usk.slot_key).size() + 9);
}

TEST(IsValidTest, TamperedAndSwapped) {
  SeededRandom rng(4);
  const World& w = World3();
  EXPECT_TRUE(ad::IsValid(2, w.upks.at(2), w.pp, rng));
  UserPublicKey tampered = w.upks.at(2);
  tampered.even.vk.begin()->second *= GroupContext::Get().g;
  EXPECT_FALSE(ad::IsValid(2, tampered, w.pp, rng));
  UserPublicKey swapped = w.upks.at(2);
  std::swap(swapped.even, swapped.odd);
  EXPECT_FALSE(ad::IsValid(2, swapped, w.pp, rng));
  EXPECT_FALSE(ad::IsValid(1, w.upks.at(2), w.pp, rng));
}

TEST(SlotSetsTest, PartitionAndParity) {
  SeededRandom rng(5);
  for (int n = 0; n < 50; ++n) {
    IndexSet s;
    for (Index j = 1; j <= 6; ++j) {
      if (rng.NextBit()) s.insert(j);
    }
    std::vector<bool> z(s.size());
    for (size_t k = 0; k < z.size(); ++k) z[k] = rng.NextBit();
    auto [s0, s1] = SlotSets(s, z);
    IndexSet all;
    for (Index j : s) {
      all.insert(2 * j);
      all.insert(2 * j - 1);
    }
    IndexSet unite = s0;
    unite.insert(s1.begin(), s1.end());
    EXPECT_EQ(unite, all);
    EXPECT_EQ(s0.size() + s1.size(), all.size());
    for (Index k : unite) {
      EXPECT_GE(k, 1u);
      EXPECT_LE(k, 12u);
      EXPECT_TRUE(s.contains((k + 1) / 2));
    }
  }
}

TEST(EncapsTest, RoundTripBothBranches) {
  SeededRandom rng(6);
  const World& w = World3();
  IndexSet s{1, 2};
  for (int n = 0; n < 3; ++n) {
    auto [ch, key] = *ad::Encaps(s, w.upks, w.pp, {}, rng);
    EXPECT_EQ(ch.cm.z.size(), 2u);
    EXPECT_NE(ch.cm.ct0, ch.cm.ct1);
    for (Index i : s) {
      for (int bit = 0; bit < 2; ++bit) {
        auto out =
            *ad::Decaps(s, ch, i, w.usks.at(i)[bit], w.upks, w.pp, {}, rng);
        ASSERT_TRUE(out.accepted()) << RejectionName(out.rejection());
        EXPECT_EQ(out.key(), key);
      }
    }
  }
}

TEST(EncapsTest, OuterAssociatedDataIsIgnored) {
  SeededRandom rng(7);
  const World& w = World3();
  auto [ch, key] = *ad::Encaps({3}, w.upks, w.pp, AsBytes("x"), rng);
  auto out = *ad::Decaps({3}, ch, 3, w.usks.at(3)[0], w.upks, w.pp, AsBytes("y"),
                     rng);
  EXPECT_TRUE(out.accepted());
}

TEST(EncapsTest, Errors) {
  SeededRandom rng(8);
  const World& w = World3();
  EXPECT_FALSE(ad::Encaps({}, w.upks, w.pp, {}, rng).ok());
  EXPECT_FALSE(ad::Encaps({4}, w.upks, w.pp, {}, rng).ok());
  PublicKeyMap partial{{1, w.upks.at(1)}};
  EXPECT_EQ(ErrorCodeOf(ad::Encaps({1, 2}, partial, w.pp, {}, rng).status()),
            ErrorCode::kMissingKey);
}

TEST(DecapsTest, NotInSetAndMalformedBitmap) {
  SeededRandom rng(9);
  const World& w = World3();
  auto [ch, key] = *ad::Encaps({1, 3}, w.upks, w.pp, {}, rng);
  auto out = *ad::Decaps({1, 3}, ch, 2, w.usks.at(2)[0], w.upks, w.pp, {}, rng);
  EXPECT_EQ(out.rejection(), Rejection::kNotInRecipientSet);
  Header shorter = ch;
  shorter.cm.z.pop_back();
  out = *ad::Decaps({1, 3}, shorter, 1, w.usks.at(1)[0], w.upks, w.pp, {}, rng);
  EXPECT_EQ(out.rejection(), Rejection::kMalformedHeader);
}

using Mutation = std::function<void(Header&, RandomSource&)>;

const std::vector<std::pair<std::string, Mutation>>& Mutations() {
  static const auto* m = new std::vector<std::pair<std::string, Mutation>>{
      {"ch0", [](Header& h, RandomSource&) {
         h.cm.ch0.c2 *= GroupContext::Get().g;
       }},
      {"ch1", [](Header& h, RandomSource&) {
         h.cm.ch1.c1_hat *= GroupContext::Get().g_hat;
       }},
      {"ct0", [](Header& h, RandomSource&) { h.cm.ct0[0] ^= 1; }},
      {"ct1", [](Header& h, RandomSource&) { h.cm.ct1[31] ^= 0x80; }},
      {"z", [](Header& h, RandomSource&) { h.cm.z[0] = !h.cm.z[0]; }},
      {"sigma", [](Header& h, RandomSource&) {
         h.sigma.sigma *= GroupContext::Get().g;
       }},
      {"vk", [](Header& h, RandomSource& rng) {
         h.vk.X = GroupContext::Get().g_hat.Pow(Scalar::RandomNonZero(rng));
       }},
  };
  return *m;
}

TEST(DecapsTest, SingleFieldMutationMatrix) {
  SeededRandom rng(10);
  const World& w = World3();
  for (int n = 0; n < 20; ++n) {
    IndexSet s{1, 2, 3};
    auto [ch, key] = *ad::Encaps(s, w.upks, w.pp, {}, rng);
    Index i = 1 + n % 3;
    for (const auto& [name, mutate] : Mutations()) {
      Header bad = ch;
      mutate(bad, rng);
      auto out = *ad::Decaps(s, bad, i, w.usks.at(i)[n % 2], w.upks, w.pp, {}, rng);
      EXPECT_FALSE(out.accepted()) << name;
      EXPECT_EQ(out.rejection(), Rejection::kBadSignature) << name;
    }
  }
}

TEST(DecapsTest, SwappedBranchHeaderRejected) {
  SeededRandom rng(11);
  const World& w = World3();
  auto a = *ad::Encaps({1, 2}, w.upks, w.pp, {}, rng);
  auto b = *ad::Encaps({1, 2}, w.upks, w.pp, {}, rng);
  Header mixed = a.first;
  mixed.cm.ch0 = b.first.cm.ch0;
  auto out = *ad::Decaps({1, 2}, mixed, 1, w.usks.at(1)[0], w.upks, w.pp, {}, rng);
  EXPECT_FALSE(out.accepted());
}

TEST(DecapsTest, ResignedHeaderFailsLabelBinding) {
  // An attacker who re-signs a modified CM under a fresh key changes the
  // label, so the semi-static validity check fails.
  SeededRandom rng(12);
  const World& w = World3();
  IndexSet s{1, 2};
  auto [ch, key] = *ad::Encaps(s, w.upks, w.pp, {}, rng);
  auto [sk, vk] = OtsGenKey(rng);
  Header forged = ch;
  forged.vk = vk;
  forged.sigma = *OtsSign(sk, codec::CmPreimage(forged.cm));
  for (int bit = 0; bit < 2; ++bit) {
    auto out = *ad::Decaps(s, forged, 1, w.usks.at(1)[bit], w.upks, w.pp, {}, rng);
    EXPECT_EQ(out.rejection(), Rejection::kInvalidHeader);
  }
}

TEST(DecapsTest, SemiStaticLabelMismatchRejected) {
  SeededRandom rng(13);
  const World& w = World3();
  IndexSet s{2};
  auto [ch, key] = *ad::Encaps(s, w.upks, w.pp, {}, rng);
  auto [s0, s1] = SlotSets(s, ch.cm.z);
  ss::PublicKeyMap slots{{3, w.upks.at(2).odd}, {4, w.upks.at(2).even}};
  const UserSecretKey& usk = w.usks.at(2)[*s0.begin() == 4 ? 0 : 1];
  auto honest = *ss::Decaps(s0, ch.cm.ch0, usk.slot_key.index, usk.slot_key,
                            slots, w.pp, Label(ch.vk), rng);
  EXPECT_TRUE(honest.accepted());
  auto [sk2, vk2] = OtsGenKey(rng);
  auto other = *ss::Decaps(s0, ch.cm.ch0, usk.slot_key.index, usk.slot_key,
                           slots, w.pp, Label(vk2), rng);
  EXPECT_EQ(other.rejection(), Rejection::kInvalidHeader);
}

TEST(CorrectnessTest, ExhaustiveTwoUsers) {
  SeededRandom rng(14);
  World w = MakeWorld(2, 300);
  for (uint32_t mask = 1; mask < 4; ++mask) {
    IndexSet s;
    for (Index i = 1; i <= 2; ++i) {
      if (mask & (1u << (i - 1))) s.insert(i);
    }
    auto [ch, key] = *ad::Encaps(s, w.upks, w.pp, {}, rng);
    for (Index i : s) {
      for (int bit = 0; bit < 2; ++bit) {
        auto out = *ad::Decaps(s, ch, i, w.usks.at(i)[bit], w.upks, w.pp, {}, rng);
        ASSERT_TRUE(out.accepted());
        EXPECT_EQ(out.key(), key);
      }
    }
  }
}

}  // namespace
}  // namespace dbe::ad
