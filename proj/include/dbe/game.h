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

// Security-experiment bookkeeping driven by scripted adversaries.
//
// The harness plays the challenger of the semi-static, adaptive and
// active-adaptive CCA experiments. A script is a list of oracle calls; each
// call is checked against the experiment's side conditions before it reaches
// the scheme, and the first violation ends the run with the clause that was
// broken. Adversaries are deterministic scripts: the point is to exercise the
// oracle restrictions and the scheme under adversarial scheduling, not to
// attack it.
//
// Two restrictions differ between the adaptive and active-adaptive games and
// are kept as stated: adaptive corruption requires i in KQ \ (CQ u DQ) while
// active-adaptive corruption requires only i in KQ and i not in CQ, and only
// the adaptive game records decryption queries in DQ.

#ifndef DBE_GAME_H_
#define DBE_GAME_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "dbe/dbe_ad.h"
#include "dbe/dbe_ss.h"
#include "dbe/random.h"

namespace dbe::game {

enum class GameType { kSsCca, kAdCca, kAaCca };

enum class Phase { kSetup, kQuery1, kChallenged, kQuery2, kDone };

enum class Clause {
  kPhaseOrder,
  kUnsupportedAction,
  kIndexRange,
  kInitSet,
  kKeyGen,
  kCorruption,
  kMaliciousCorruption,
  kDecryptionSet,
  kDecryptionMember,
  kHeaderDiffers,
  kChallengeSet,
};

std::string_view GameName(GameType type);
std::string_view PhaseName(Phase phase);
// Human-readable statement of the side condition, specific to the game.
std::string_view ClauseText(GameType type, Clause clause);

// Single-field header mutations. The semi-static ones apply to semi-static
// headers, the rest to adaptive headers.
enum class HeaderMutation {
  kSsC2TimesG,
  kSsC1Replaced,
  kAdCh0,
  kAdCh1,
  kAdCt0,
  kAdCt1,
  kAdZ,
  kAdSigma,
  kAdVk,
};

std::string_view MutationName(HeaderMutation m);
const std::vector<HeaderMutation>& AdMutations();
const std::vector<HeaderMutation>& SsMutations();

// Ways an adversary may doctor a public key before registering it.
enum class KeyTamper { kNone, kScaleCrossTerm, kSwapSlots, kForeignVHat };

std::string_view TamperName(KeyTamper t);

// Every tamper except kNone.
const std::vector<KeyTamper>& KeyTampers();

// Applies one single-field mutation to an encoded header and re-encodes it.
// The mutation family must match the header kind.
absl::StatusOr<std::vector<uint8_t>> MutateHeader(
    std::span<const uint8_t> header, HeaderMutation m, RandomSource& rng);

// kScaleCrossTerm multiplies one Vk element of the even slot by g,
// kSwapSlots exchanges the two slot keys, kForeignVHat replaces the odd
// slot's V^ with an unrelated element.
void TamperKey(ad::UserPublicKey& upk, KeyTamper tamper, RandomSource& rng);

// Semi-static only: commit the initial set before setup.
struct Commit {
  IndexSet s_tilde;
};
// Semi-static only: keys for every committed index.
struct KeyGenAll {};
struct KeyGen {
  Index i = 0;
};
struct Corrupt {
  Index i = 0;
};
// Active-adaptive only.
struct MaliciousRegister {
  Index i = 0;
  KeyTamper tamper = KeyTamper::kNone;
};

struct HeaderSource {
  enum class Kind { kChallenge, kMutatedChallenge, kFresh };
  Kind kind = Kind::kFresh;
  HeaderMutation mutation = HeaderMutation::kSsC2TimesG;
  // Recipient set for kFresh, encapsulated by the adversary from public keys.
  IndexSet fresh_set;
  std::string fresh_au;
};

struct Decrypt {
  IndexSet s;
  Index i = 0;
  HeaderSource header;
  std::string au;
};

struct Challenge {
  IndexSet s_star;
};

struct Guess {
  enum class Strategy { kConstant, kWiringProbe };
  Strategy strategy = Strategy::kConstant;
  uint8_t constant = 0;
  // kWiringProbe: decapsulate CH* with this user's key and answer 0 iff the
  // result matches the key handed out. It uses a key the adversary does not
  // hold, so it checks that the challenge is wired up, not security.
  Index probe = 0;
};

using Action = std::variant<Commit, KeyGenAll, KeyGen, Corrupt,
                            MaliciousRegister, Decrypt, Challenge, Guess>;

struct Script {
  std::vector<Action> actions;
};

struct GameState {
  IndexSet s_tilde;
  IndexSet kq, cq, dq, mq;
  Phase phase = Phase::kSetup;
};

struct Violation {
  Clause clause;
  size_t action_index;
  std::string text;
};

struct Transcript {
  GameType type;
  Index capacity = 0;
  GameState state;
  std::optional<Violation> violation;
  std::optional<uint8_t> mu;
  std::optional<uint8_t> mu_prime;
  // Set by a wiring probe: whether the probe's decapsulation equalled CK_0*.
  std::optional<bool> probe_recovered_real_key;
  // Per decryption query, in order: true when the oracle answered bottom.
  std::vector<bool> decryption_rejected;
  std::vector<std::string> lines;

  bool completed() const { return !violation && state.phase == Phase::kDone; }
  std::string ToText() const;
};

absl::StatusOr<Transcript> RunSsCcaGame(const Script& script, Index users,
                                        RandomSource& rng);
absl::StatusOr<Transcript> RunAdCcaGame(const Script& script, Index users,
                                        RandomSource& rng);
absl::StatusOr<Transcript> RunAaCcaGame(const Script& script, Index users,
                                        RandomSource& rng);

}  // namespace dbe::game

#endif  // DBE_GAME_H_
