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

// Adaptive CCA-secure distributed broadcast KEM.
//
// Each user i owns two semi-static slots, 2i and 2i-1, publishes both public
// keys and keeps only the secret of slot 2i - u_i for a private bit u_i. A
// header carries two semi-static encapsulations, to S_0 = {2j - z_j} and
// S_1 = {2j - (1 - z_j)}, each wrapping the same session key under a one-time
// pad. A one-time signature binds everything, and its verification key is the
// semi-static label.
//
// The outer associated data `au` is accepted for interface symmetry but does
// not enter the construction: only the verification key is passed down as the
// semi-static label.

#ifndef DBE_DBE_AD_H_
#define DBE_DBE_AD_H_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dbe/dbe_ss.h"
#include "dbe/ots.h"
#include "dbe/random.h"
#include "dbe/ske.h"

namespace dbe::ad {

// Semi-static parameters with capacity 2L.
using PublicParams = ss::PublicParams;

struct UserSecretKey {
  Index index = 0;
  uint8_t kept_bit = 0;          // u_i
  ss::UserSecretKey slot_key;    // slot 2i - u_i

  friend bool operator==(const UserSecretKey&, const UserSecretKey&) = default;
  void Wipe();
};

struct UserPublicKey {
  Index index = 0;
  ss::UserPublicKey even;  // slot 2i
  ss::UserPublicKey odd;   // slot 2i - 1

  friend bool operator==(const UserPublicKey&, const UserPublicKey&) = default;
};

using PublicKeyMap = std::map<Index, UserPublicKey>;

// CM = (CH_0, CH_1, CT_0, CT_1, z); z[n] is the bit of the n-th smallest
// member of S.
struct CipherMessage {
  ss::Header ch0;
  ss::Header ch1;
  SkeBlock ct0{};
  SkeBlock ct1{};
  std::vector<bool> z;

  friend bool operator==(const CipherMessage&, const CipherMessage&) = default;
};

struct Header {
  CipherMessage cm;
  OtsSignature sigma;
  OtsVerificationKey vk;

  friend bool operator==(const Header&, const Header&) = default;
};

// Number of users L supported by parameters of semi-static capacity 2L.
Index UserCapacity(const PublicParams& pp);

Index EvenSlot(Index i);
Index OddSlot(Index i);

// Semi-static slot sets for a recipient set and bit vector z.
std::pair<IndexSet, IndexSet> SlotSets(const IndexSet& s,
                                       const std::vector<bool>& z);

// The semi-static label derived from a verification key.
std::vector<uint8_t> Label(const OtsVerificationKey& vk);

absl::StatusOr<PublicParams> Setup(Index users, RandomSource& rng);

absl::StatusOr<std::pair<UserSecretKey, UserPublicKey>> GenKey(
    Index i, const PublicParams& pp, RandomSource& rng);

// As GenKey with a caller-chosen kept bit; used to exercise both branches.
absl::StatusOr<std::pair<UserSecretKey, UserPublicKey>> GenKeyWithBit(
    Index i, uint8_t kept_bit, const PublicParams& pp, RandomSource& rng);

bool IsValid(Index j, const UserPublicKey& upk, const PublicParams& pp,
             RandomSource& rng);

absl::StatusOr<std::pair<Header, SessionKey>> Encaps(
    const IndexSet& s, const PublicKeyMap& upks, const PublicParams& pp,
    std::span<const uint8_t> au, RandomSource& rng);

absl::StatusOr<DecapsOutcome> Decaps(const IndexSet& s, const Header& ch,
                                     Index i, const UserSecretKey& usk,
                                     const PublicKeyMap& upks,
                                     const PublicParams& pp,
                                     std::span<const uint8_t> au,
                                     RandomSource& rng);

}  // namespace dbe::ad

#endif  // DBE_DBE_AD_H_
