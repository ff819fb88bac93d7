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

// Semi-static CCA-secure distributed broadcast KEM.
//
// A trusted setup publishes power sequences A_k = g^{alpha^k} (k != L+2),
// A^_k = g^^{alpha^k}, B = g^beta, B_k = A_k^beta and Omega = e(A_{L+2}, g^).
// Users register V = g^gamma, V^ = g^^gamma and cross terms V_k = A_k^gamma;
// their secret is K_i = A_{L+2-i}^gamma. Headers are (C^_1, C_2) in G^ x G
// regardless of the recipient set.

#ifndef DBE_DBE_SS_H_
#define DBE_DBE_SS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dbe/groups.h"
#include "dbe/hashes.h"
#include "dbe/random.h"

namespace dbe {

using Index = uint32_t;
using IndexSet = std::set<Index>;

// Why a decapsulation returned bottom.
enum class Rejection : uint8_t {
  kNotInRecipientSet = 1,
  kInvalidHeader,
  kBadSignature,
  kMalformedHeader,
};

std::string_view RejectionName(Rejection r);

// Either a session key or the reason there is none.
class DecapsOutcome {
 public:
  static DecapsOutcome Accept(const SessionKey& key) {
    return DecapsOutcome(key, Rejection::kInvalidHeader);
  }
  static DecapsOutcome Reject(Rejection why) {
    return DecapsOutcome(std::nullopt, why);
  }

  bool accepted() const { return key_.has_value(); }
  const SessionKey& key() const { return *key_; }
  Rejection rejection() const { return why_; }

 private:
  DecapsOutcome(std::optional<SessionKey> key, Rejection why)
      : key_(key), why_(why) {}
  std::optional<SessionKey> key_;
  Rejection why_;
};

namespace ss {

// Bit length of the small exponents in batch key verification.
inline constexpr size_t kBatchExponentBits = 80;
inline constexpr Index kMaxCapacity = 1u << 16;

struct PublicParams {
  Index capacity = 0;                 // L
  std::map<Index, G1Element> a;       // k in [1, 2L+2] \ {L+2}
  std::map<Index, G2Element> a_hat;   // k in [1, L+1]
  G1Element b;
  std::map<Index, G1Element> bk;      // k in [2, L+1]
  GtElement omega;

  friend bool operator==(const PublicParams&, const PublicParams&) = default;

  // kIndexSet unless every map carries exactly its required index range.
  absl::Status CheckStructure() const;

  const G1Element& A(Index k) const { return a.at(k); }
  const G2Element& AHat(Index k) const { return a_hat.at(k); }
  const G1Element& Bk(Index k) const { return bk.at(k); }
};

struct UserSecretKey {
  Index capacity = 0;  // L of the parameters the key was made for
  Index index = 0;
  G1Element k;

  friend bool operator==(const UserSecretKey&, const UserSecretKey&) = default;
  void Wipe();
};

struct UserPublicKey {
  Index capacity = 0;
  Index index = 0;
  G1Element v;
  G2Element v_hat;
  std::map<Index, G1Element> vk;  // k in [2, L+1] \ {L+2-i}

  friend bool operator==(const UserPublicKey&, const UserPublicKey&) = default;
};

struct Header {
  G2Element c1_hat;
  G1Element c2;

  friend bool operator==(const Header&, const Header&) = default;
};

using PublicKeyMap = std::map<Index, UserPublicKey>;

// The index set a user's cross terms must cover: [2, L+1] \ {L+2-i}.
IndexSet RequiredVkIndices(Index capacity, Index i);

absl::StatusOr<PublicParams> Setup(Index capacity, RandomSource& rng);

absl::StatusOr<std::pair<UserSecretKey, UserPublicKey>> GenKey(
    Index i, const PublicParams& pp, RandomSource& rng);

// Small-exponent batch test: two pairings plus membership checks.
bool IsValid(Index j, const UserPublicKey& upk, const PublicParams& pp,
             RandomSource& rng);

// Per-element reference check: 2L pairings, deterministic.
bool IsValidNaive(Index j, const UserPublicKey& upk, const PublicParams& pp);

absl::StatusOr<std::pair<Header, SessionKey>> Encaps(
    const IndexSet& s, const PublicKeyMap& upks, const PublicParams& pp,
    std::span<const uint8_t> au, RandomSource& rng);

// Exactly four pairings: two for the validity check, two for the key.
absl::StatusOr<DecapsOutcome> Decaps(const IndexSet& s, const Header& ch,
                                     Index i, const UserSecretKey& usk,
                                     const PublicKeyMap& upks,
                                     const PublicParams& pp,
                                     std::span<const uint8_t> au,
                                     RandomSource& rng);

// Lower-level entry points with caller-chosen randomness. They exist so tests
// can check the decryption algebra against Omega^t directly.
namespace internal {

struct Encapsulation {
  Header header;
  SessionKey key;
  GtElement omega_t;
};

struct DecryptionComponents {
  G1Element d1;
  G2Element d2_hat;
  G1Element d3;
  G1Element d4;
};

absl::StatusOr<Encapsulation> EncapsWithExponent(const IndexSet& s,
                                                 const PublicKeyMap& upks,
                                                 const PublicParams& pp,
                                                 std::span<const uint8_t> au,
                                                 const Scalar& t);

absl::StatusOr<DecryptionComponents> Components(
    const IndexSet& s, const Header& ch, Index i, const UserSecretKey& usk,
    const PublicKeyMap& upks, const PublicParams& pp,
    std::span<const uint8_t> au, const Scalar& r);

// e(C_2, D^_2) * e(D_1 D_3 D_4, C^_1)^{-1}.
GtElement KeyElement(const Header& ch, const DecryptionComponents& d);

}  // namespace internal
}  // namespace ss
}  // namespace dbe

#endif  // DBE_DBE_SS_H_
