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

#include <iterator>

#include "absl/strings/str_cat.h"
#include "dbe/codec.h"
#include "dbe/status.h"

namespace dbe::ad {

namespace {

// Signing fails with probability about 1/r per attempt.
constexpr int kMaxSignAttempts = 4;

absl::Status CheckParams(const PublicParams& pp) {
  if (pp.capacity < 2 || pp.capacity % 2 != 0) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "adaptive parameters need an even semi-static capacity");
  }
  return absl::OkStatus();
}

absl::StatusOr<ss::PublicKeyMap> SlotKeys(const IndexSet& s,
                                          const PublicKeyMap& upks) {
  ss::PublicKeyMap out;
  for (Index j : s) {
    auto it = upks.find(j);
    if (it == upks.end()) {
      return MakeError(ErrorCode::kMissingKey,
                       absl::StrCat("no public key for user ", j));
    }
    if (it->second.index != j) {
      return MakeError(ErrorCode::kInvalidKey,
                       absl::StrCat("public key stored under ", j,
                                    " belongs to user ", it->second.index));
    }
    out.emplace(EvenSlot(j), it->second.even);
    out.emplace(OddSlot(j), it->second.odd);
  }
  return out;
}

SessionKey Unwrap(const SkeBlock& ct, const SessionKey& slot_key) {
  SessionKey out;
  out.bytes = *SkeDecrypt(SymmetricKey{slot_key.bytes}, ct);
  return out;
}

}  // namespace

void UserSecretKey::Wipe() {
  slot_key.Wipe();
  kept_bit = 0;
  index = 0;
}

Index UserCapacity(const PublicParams& pp) { return pp.capacity / 2; }
Index EvenSlot(Index i) { return 2 * i; }
Index OddSlot(Index i) { return 2 * i - 1; }

std::pair<IndexSet, IndexSet> SlotSets(const IndexSet& s,
                                       const std::vector<bool>& z) {
  IndexSet s0, s1;
  size_t n = 0;
  for (Index j : s) {
    const Index zj = (n < z.size() && z[n]) ? 1 : 0;
    s0.insert(2 * j - zj);
    s1.insert(2 * j - (1 - zj));
    ++n;
  }
  return {s0, s1};
}

std::vector<uint8_t> Label(const OtsVerificationKey& vk) {
  auto bytes = vk.X.ToBytes();
  return {bytes.begin(), bytes.end()};
}

absl::StatusOr<PublicParams> Setup(Index users, RandomSource& rng) {
  if (users < 1 || users > ss::kMaxCapacity / 2) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("user count must be in [1, ",
                                  ss::kMaxCapacity / 2, "], got ", users));
  }
  return ss::Setup(2 * users, rng);
}

absl::StatusOr<std::pair<UserSecretKey, UserPublicKey>> GenKeyWithBit(
    Index i, uint8_t kept_bit, const PublicParams& pp, RandomSource& rng) {
  DBE_RETURN_IF_ERROR(CheckParams(pp));
  if (i < 1 || i > UserCapacity(pp)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("user index ", i, " outside [1, ",
                                  UserCapacity(pp), "]"));
  }
  if (kept_bit > 1) {
    return MakeError(ErrorCode::kInvalidArgument, "kept bit must be 0 or 1");
  }
  DBE_ASSIGN_OR_RETURN(auto even, ss::GenKey(EvenSlot(i), pp, rng));
  DBE_ASSIGN_OR_RETURN(auto odd, ss::GenKey(OddSlot(i), pp, rng));
  UserSecretKey usk{i, kept_bit, kept_bit == 0 ? even.first : odd.first};
  UserPublicKey upk{i, even.second, odd.second};
  even.first.Wipe();
  odd.first.Wipe();
  return std::make_pair(usk, upk);
}

absl::StatusOr<std::pair<UserSecretKey, UserPublicKey>> GenKey(
    Index i, const PublicParams& pp, RandomSource& rng) {
  return GenKeyWithBit(i, rng.NextBit() ? 1 : 0, pp, rng);
}

bool IsValid(Index j, const UserPublicKey& upk, const PublicParams& pp,
             RandomSource& rng) {
  if (!CheckParams(pp).ok() || upk.index != j) return false;
  return ss::IsValid(EvenSlot(j), upk.even, pp, rng) &&
         ss::IsValid(OddSlot(j), upk.odd, pp, rng);
}

absl::StatusOr<std::pair<Header, SessionKey>> Encaps(
    const IndexSet& s, const PublicKeyMap& upks, const PublicParams& pp,
    std::span<const uint8_t> /*au*/, RandomSource& rng) {
  DBE_RETURN_IF_ERROR(CheckParams(pp));
  if (s.empty()) {
    return MakeError(ErrorCode::kInvalidArgument, "recipient set is empty");
  }
  if (*s.begin() < 1 || *s.rbegin() > UserCapacity(pp)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "recipient set has an index outside [1, L]");
  }
  DBE_ASSIGN_OR_RETURN(ss::PublicKeyMap slot_keys, SlotKeys(s, upks));

  for (int attempt = 0; attempt < kMaxSignAttempts; ++attempt) {
    auto [sk, vk] = OtsGenKey(rng);
    const std::vector<uint8_t> label = Label(vk);

    Header ch;
    ch.vk = vk;
    ch.cm.z.resize(s.size());
    for (size_t n = 0; n < s.size(); ++n) ch.cm.z[n] = rng.NextBit();
    auto [s0, s1] = SlotSets(s, ch.cm.z);

    DBE_ASSIGN_OR_RETURN(auto enc0, ss::Encaps(s0, slot_keys, pp, label, rng));
    DBE_ASSIGN_OR_RETURN(auto enc1, ss::Encaps(s1, slot_keys, pp, label, rng));
    SymmetricKey ck = SkeGenKey(rng);
    ch.cm.ch0 = enc0.first;
    ch.cm.ch1 = enc1.first;
    ch.cm.ct0 = *SkeEncrypt(SymmetricKey{enc0.second.bytes}, ck.bytes);
    ch.cm.ct1 = *SkeEncrypt(SymmetricKey{enc1.second.bytes}, ck.bytes);

    auto sig = OtsSign(sk, codec::CmPreimage(ch.cm));
    sk.Wipe();
    if (!sig.ok()) {
      if (ErrorCodeOf(sig.status()) == ErrorCode::kUnsignableKey) continue;
      return sig.status();
    }
    ch.sigma = *sig;
    SessionKey key;
    key.bytes = ck.bytes;
    return std::make_pair(ch, key);
  }
  return MakeError(ErrorCode::kUnsignableKey,
                   "one-time signing failed repeatedly");
}

absl::StatusOr<DecapsOutcome> Decaps(const IndexSet& s, const Header& ch,
                                     Index i, const UserSecretKey& usk,
                                     const PublicKeyMap& upks,
                                     const PublicParams& pp,
                                     std::span<const uint8_t> /*au*/,
                                     RandomSource& rng) {
  DBE_RETURN_IF_ERROR(CheckParams(pp));
  if (s.empty() || *s.begin() < 1 || *s.rbegin() > UserCapacity(pp)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "recipient set must be a nonempty subset of [1, L]");
  }
  if (usk.index != i) {
    return MakeError(ErrorCode::kInvalidKey,
                     absl::StrCat("secret key belongs to user ", usk.index,
                                  ", not ", i));
  }
  auto pos = s.find(i);
  if (pos == s.end()) return DecapsOutcome::Reject(Rejection::kNotInRecipientSet);
  if (ch.cm.z.size() != s.size()) {
    return DecapsOutcome::Reject(Rejection::kMalformedHeader);
  }
  if (!OtsVerify(ch.vk, ch.sigma, codec::CmPreimage(ch.cm))) {
    return DecapsOutcome::Reject(Rejection::kBadSignature);
  }
  DBE_ASSIGN_OR_RETURN(ss::PublicKeyMap slot_keys, SlotKeys(s, upks));

  const bool zi = ch.cm.z[std::distance(s.begin(), pos)];
  const bool branch0 = (zi ? 1 : 0) == usk.kept_bit;
  auto [s0, s1] = SlotSets(s, ch.cm.z);
  const std::vector<uint8_t> label = Label(ch.vk);
  DBE_ASSIGN_OR_RETURN(
      DecapsOutcome inner,
      ss::Decaps(branch0 ? s0 : s1, branch0 ? ch.cm.ch0 : ch.cm.ch1,
                 usk.slot_key.index, usk.slot_key, slot_keys, pp, label, rng));
  if (!inner.accepted()) return inner;
  return DecapsOutcome::Accept(
      Unwrap(branch0 ? ch.cm.ct0 : ch.cm.ct1, inner.key()));
}

}  // namespace dbe::ad
