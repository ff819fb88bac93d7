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

#include "dbe/game.h"

#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace dbe::game {
namespace {

using ::testing::HasSubstr;
using ::testing::Not;

HeaderSource Fresh(IndexSet s, std::string au = "") {
  HeaderSource h;
  h.kind = HeaderSource::Kind::kFresh;
  h.fresh_set = std::move(s);
  h.fresh_au = std::move(au);
  return h;
}

HeaderSource ChallengeHeader() {
  HeaderSource h;
  h.kind = HeaderSource::Kind::kChallenge;
  return h;
}

HeaderSource Mutated(HeaderMutation m) {
  HeaderSource h;
  h.kind = HeaderSource::Kind::kMutatedChallenge;
  h.mutation = m;
  return h;
}

Guess Probe(Index i) {
  Guess g;
  g.strategy = Guess::Strategy::kWiringProbe;
  g.probe = i;
  return g;
}

Script HonestSs() {
  return Script{{Commit{{1, 2, 3}}, KeyGenAll{},
                 Decrypt{{1, 2}, 1, Fresh({1, 2}, "x"), "x"},
                 Challenge{{1, 2, 3}},
                 Decrypt{{1, 2, 3}, 2, Mutated(HeaderMutation::kSsC2TimesG), ""},
                 Probe(3)}};
}

Script HonestAd() {
  return Script{{KeyGen{1}, KeyGen{2}, KeyGen{3}, Corrupt{3},
                 Decrypt{{1, 2}, 2, Fresh({1, 2}), ""}, Challenge{{1, 2}},
                 Decrypt{{1, 2}, 1, Mutated(HeaderMutation::kAdSigma), ""},
                 Probe(1)}};
}

TEST(GameSsTest, HonestRunCompletes) {
  SeededRandom rng(11);
  auto t = RunSsCcaGame(HonestSs(), 3, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_TRUE(t->completed()) << t->ToText();
  EXPECT_EQ(t->state.phase, Phase::kDone);
  ASSERT_EQ(t->decryption_rejected.size(), 2u);
  EXPECT_FALSE(t->decryption_rejected[0]);
  EXPECT_TRUE(t->decryption_rejected[1]);
  EXPECT_THAT(t->ToText(), HasSubstr("matches_fresh=1"));
}

TEST(GameSsTest, ProbeRecoversRealKeyWhenMuIsZero) {
  int seen_zero = 0, seen_one = 0;
  for (uint64_t seed = 0; seed < 12; ++seed) {
    SeededRandom rng(seed);
    auto t = RunSsCcaGame(HonestSs(), 3, rng);
    ASSERT_TRUE(t.ok()) << t.status();
    ASSERT_TRUE(t->completed());
    // The probe holds a recipient key, so it always guesses correctly.
    EXPECT_EQ(*t->mu_prime, *t->mu);
    if (*t->mu == 0) {
      ++seen_zero;
      EXPECT_TRUE(t->probe_recovered_real_key.value_or(false));
    } else {
      ++seen_one;
    }
  }
  EXPECT_GT(seen_zero, 0);
  EXPECT_GT(seen_one, 0);
}

TEST(GameSsTest, ChallengeHeaderInPhaseTwoIsViolation) {
  SeededRandom rng(1);
  Script s{{Commit{{1, 2}}, KeyGenAll{}, Challenge{{1, 2}},
            Decrypt{{1, 2}, 1, ChallengeHeader(), ""}}};
  auto t = RunSsCcaGame(s, 2, rng);
  ASSERT_TRUE(t.ok());
  ASSERT_TRUE(t->violation);
  EXPECT_EQ(t->violation->clause, Clause::kHeaderDiffers);
  EXPECT_EQ(t->violation->action_index, 3u);
  EXPECT_THAT(t->ToText(), HasSubstr("CH != CH*"));
}

TEST(GameSsTest, DecryptionSetOutsideCommitmentIsViolation) {
  SeededRandom rng(2);
  Script s{{Commit{{1, 2}}, KeyGenAll{},
            Decrypt{{1, 3}, 1, Fresh({1}), ""}}};
  auto t = RunSsCcaGame(s, 3, rng);
  ASSERT_TRUE(t.ok());
  ASSERT_TRUE(t->violation);
  EXPECT_EQ(t->violation->clause, Clause::kDecryptionSet);
}

TEST(GameSsTest, ChallengeOutsideCommitmentIsViolation) {
  SeededRandom rng(3);
  Script s{{Commit{{1, 2}}, KeyGenAll{}, Challenge{{2, 3}}}};
  auto t = RunSsCcaGame(s, 3, rng);
  ASSERT_TRUE(t.ok());
  ASSERT_TRUE(t->violation);
  EXPECT_EQ(t->violation->clause, Clause::kChallengeSet);
}

TEST(GameSsTest, PhaseOrderEnforced) {
  SeededRandom rng(4);
  {
    Script s{{KeyGenAll{}}};
    auto t = RunSsCcaGame(s, 2, rng);
    ASSERT_TRUE(t.ok());
    EXPECT_EQ(t->violation->clause, Clause::kPhaseOrder);
  }
  {
    Script s{{Commit{{1}}, Challenge{{1}}}};
    auto t = RunSsCcaGame(s, 2, rng);
    ASSERT_TRUE(t.ok());
    EXPECT_EQ(t->violation->clause, Clause::kPhaseOrder);
  }
  {
    Script s{{Commit{{1}}, KeyGenAll{}, Guess{}}};
    auto t = RunSsCcaGame(s, 2, rng);
    ASSERT_TRUE(t.ok());
    EXPECT_EQ(t->violation->clause, Clause::kPhaseOrder);
  }
  {
    Script s{{Commit{{1}}, KeyGen{1}}};
    auto t = RunSsCcaGame(s, 2, rng);
    ASSERT_TRUE(t.ok());
    EXPECT_EQ(t->violation->clause, Clause::kUnsupportedAction);
  }
}

TEST(GameSsTest, DecryptorMustBeInSet) {
  SeededRandom rng(5);
  Script s{{Commit{{1, 2}}, KeyGenAll{}, Decrypt{{1}, 2, Fresh({1}), ""}}};
  auto t = RunSsCcaGame(s, 2, rng);
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t->violation->clause, Clause::kDecryptionMember);
}

TEST(GameSsTest, EveryMutationAnsweredBottomAndGameContinues) {
  SeededRandom rng(6);
  Script s{{Commit{{1, 2}}, KeyGenAll{}, Challenge{{1, 2}}}};
  for (HeaderMutation m : SsMutations()) {
    s.actions.push_back(Decrypt{{1, 2}, 1, Mutated(m), ""});
  }
  s.actions.push_back(Guess{});
  auto t = RunSsCcaGame(s, 2, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_TRUE(t->completed());
  ASSERT_EQ(t->decryption_rejected.size(), SsMutations().size());
  for (bool r : t->decryption_rejected) EXPECT_TRUE(r);
}

TEST(GameAdTest, HonestRunCompletes) {
  SeededRandom rng(21);
  auto t = RunAdCcaGame(HonestAd(), 3, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_TRUE(t->completed()) << t->ToText();
  EXPECT_EQ(*t->mu_prime, *t->mu);
  EXPECT_EQ(t->state.cq, IndexSet({3}));
  EXPECT_EQ(t->state.dq, IndexSet({1, 2}));
}

TEST(GameAdTest, ChallengeIncludingCorruptedUserIsViolation) {
  SeededRandom rng(22);
  Script s{{KeyGen{1}, KeyGen{2}, Corrupt{2}, Challenge{{1, 2}}}};
  auto t = RunAdCcaGame(s, 2, rng);
  ASSERT_TRUE(t.ok());
  ASSERT_TRUE(t->violation);
  EXPECT_EQ(t->violation->clause, Clause::kChallengeSet);
  EXPECT_EQ(t->violation->action_index, 3u);
}

TEST(GameAdTest, CorruptionAfterDecryptionIsViolation) {
  SeededRandom rng(23);
  Script s{{KeyGen{1}, Decrypt{{1}, 1, Fresh({1}), ""}, Corrupt{1}}};
  auto t = RunAdCcaGame(s, 2, rng);
  ASSERT_TRUE(t.ok());
  ASSERT_TRUE(t->violation);
  EXPECT_EQ(t->violation->clause, Clause::kCorruption);
}

TEST(GameAdTest, KeyGenAndCorruptionPreconditions) {
  SeededRandom rng(24);
  {
    Script s{{KeyGen{1}, KeyGen{1}}};
    auto t = RunAdCcaGame(s, 2, rng);
    EXPECT_EQ(t->violation->clause, Clause::kKeyGen);
  }
  {
    Script s{{Corrupt{1}}};
    auto t = RunAdCcaGame(s, 2, rng);
    EXPECT_EQ(t->violation->clause, Clause::kCorruption);
  }
  {
    Script s{{KeyGen{3}}};
    auto t = RunAdCcaGame(s, 2, rng);
    EXPECT_EQ(t->violation->clause, Clause::kIndexRange);
  }
  {
    Script s{{KeyGen{1}, Challenge{{1}}, KeyGen{2}}};
    auto t = RunAdCcaGame(s, 2, rng);
    EXPECT_EQ(t->violation->clause, Clause::kPhaseOrder);
  }
  {
    Script s{{KeyGen{1}, Challenge{{}}}};
    auto t = RunAdCcaGame(s, 2, rng);
    EXPECT_EQ(t->violation->clause, Clause::kChallengeSet);
  }
}

TEST(GameAdTest, EveryMutationAnsweredBottom) {
  SeededRandom rng(25);
  Script s{{KeyGen{1}, KeyGen{2}, Challenge{{1, 2}}}};
  for (HeaderMutation m : AdMutations()) {
    s.actions.push_back(Decrypt{{1, 2}, 2, Mutated(m), ""});
  }
  s.actions.push_back(Guess{});
  auto t = RunAdCcaGame(s, 2, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_TRUE(t->completed()) << t->ToText();
  ASSERT_EQ(t->decryption_rejected.size(), AdMutations().size());
  for (bool r : t->decryption_rejected) EXPECT_TRUE(r);
}

TEST(GameAdTest, WrongMutationFamilyIsAnError) {
  SeededRandom rng(26);
  Script s{{KeyGen{1}, Challenge{{1}},
            Decrypt{{1}, 1, Mutated(HeaderMutation::kSsC2TimesG), ""}}};
  EXPECT_FALSE(RunAdCcaGame(s, 1, rng).ok());
}

TEST(GameAaTest, TamperedRegistrationsRejectedByIsValid) {
  SeededRandom rng(31);
  Script s{{KeyGen{1}, MaliciousRegister{2, KeyTamper::kNone},
            MaliciousRegister{3, KeyTamper::kScaleCrossTerm},
            MaliciousRegister{4, KeyTamper::kSwapSlots},
            MaliciousRegister{5, KeyTamper::kForeignVHat}}};
  auto t = RunAaCcaGame(s, 5, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_FALSE(t->violation);
  const std::string text = t->ToText();
  EXPECT_THAT(text, HasSubstr("malicious i=2 tamper=none isvalid=1"));
  EXPECT_THAT(text, HasSubstr("malicious i=3 tamper=scale-cross-term isvalid=0"));
  EXPECT_THAT(text, HasSubstr("malicious i=4 tamper=swap-slots isvalid=0"));
  EXPECT_THAT(text, HasSubstr("malicious i=5 tamper=foreign-v-hat isvalid=0"));
  EXPECT_EQ(t->state.mq, IndexSet({2, 3, 4, 5}));
}

TEST(GameAaTest, FreshHeadersMayTargetValidRegisteredKeys) {
  SeededRandom rng(35);
  Script s{{KeyGen{1}, MaliciousRegister{2},
            MaliciousRegister{3, KeyTamper::kSwapSlots},
            Decrypt{{1}, 1, Fresh({1, 2}), ""}}};
  auto t = RunAaCcaGame(s, 3, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_FALSE(t->violation);
  ASSERT_EQ(t->decryption_rejected.size(), 1u);
  // The header was made for {1, 2}, so decrypting it as {1} is refused.
  EXPECT_TRUE(t->decryption_rejected[0]);

  s.actions.back() = Decrypt{{1}, 1, Fresh({1, 3}), ""};
  t = RunAaCcaGame(s, 3, rng);
  ASSERT_TRUE(t.ok());
  ASSERT_TRUE(t->violation);
  EXPECT_EQ(t->violation->clause, Clause::kIndexRange);
}

TEST(GameAaTest, ChallengeIntersectingMaliciousIsViolation) {
  SeededRandom rng(32);
  Script s{{KeyGen{1}, MaliciousRegister{2}, Challenge{{1, 2}}}};
  auto t = RunAaCcaGame(s, 2, rng);
  ASSERT_TRUE(t.ok());
  ASSERT_TRUE(t->violation);
  EXPECT_EQ(t->violation->clause, Clause::kChallengeSet);
}

TEST(GameAaTest, MaliciousIndexCannotBeRegisteredTwice) {
  SeededRandom rng(33);
  {
    Script s{{KeyGen{1}, MaliciousRegister{1}}};
    auto t = RunAaCcaGame(s, 2, rng);
    EXPECT_EQ(t->violation->clause, Clause::kMaliciousCorruption);
  }
  {
    Script s{{MaliciousRegister{1}, KeyGen{1}}};
    auto t = RunAaCcaGame(s, 2, rng);
    EXPECT_EQ(t->violation->clause, Clause::kKeyGen);
  }
}

TEST(GameAaTest, CorruptionAfterDecryptionAllowed) {
  SeededRandom rng(34);
  Script s{{KeyGen{1}, KeyGen{2}, Decrypt{{1}, 1, Fresh({1}), ""}, Corrupt{1},
            Challenge{{2}}, Probe(2)}};
  auto t = RunAaCcaGame(s, 2, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_TRUE(t->completed()) << t->ToText();
  EXPECT_TRUE(t->state.dq.empty());
}

TEST(GameTest, TranscriptsAreDeterministicPerSeed) {
  for (uint64_t seed : {7u, 8u}) {
    SeededRandom a(seed), b(seed);
    auto ta = RunAdCcaGame(HonestAd(), 3, a);
    auto tb = RunAdCcaGame(HonestAd(), 3, b);
    ASSERT_TRUE(ta.ok() && tb.ok());
    EXPECT_EQ(ta->ToText(), tb->ToText());
  }
  SeededRandom a(7), b(8);
  EXPECT_NE(RunSsCcaGame(HonestSs(), 3, a)->ToText(),
            RunSsCcaGame(HonestSs(), 3, b)->ToText());
}

TEST(GameTest, TranscriptOnlyRevealsCorruptedSecrets) {
  SeededRandom rng(41);
  auto t = RunAdCcaGame(HonestAd(), 3, rng);
  ASSERT_TRUE(t.ok());
  int usk_lines = 0;
  for (const auto& line : t->lines) {
    if (line.find("usk=") != std::string::npos) {
      ++usk_lines;
      EXPECT_THAT(line, HasSubstr("corrupt i=3"));
    }
  }
  EXPECT_EQ(usk_lines, 1);
  EXPECT_THAT(t->ToText(), Not(HasSubstr("real=")));
}

TEST(GameTest, ClauseTextsNameTheGameRule) {
  EXPECT_EQ(ClauseText(GameType::kAdCca, Clause::kCorruption),
            "key corruption: i in KQ \\ (CQ u DQ)");
  EXPECT_EQ(ClauseText(GameType::kAaCca, Clause::kCorruption),
            "key corruption: i in KQ and i not in CQ");
  EXPECT_EQ(ClauseText(GameType::kSsCca, Clause::kDecryptionSet),
            "decryption: S subset of S~");
}

}  // namespace
}  // namespace dbe::game
