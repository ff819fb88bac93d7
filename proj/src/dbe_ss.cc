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

#include "dbe/dbe_ss.h"

#include <cassert>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "dbe/status.h"

namespace dbe {

std::string_view RejectionName(Rejection r) {
  switch (r) {
    case Rejection::kNotInRecipientSet: return "index not in recipient set";
    case Rejection::kInvalidHeader: return "header validity check failed";
    case Rejection::kBadSignature: return "header signature check failed";
    case Rejection::kMalformedHeader: return "malformed header";
  }
  return "rejected";
}

namespace ss {

namespace {

// Decaps and GenKey must never ask for the unpublished A_{L+2}.
const G1Element& SafeA(const PublicParams& pp, Index k) {
  assert(k != pp.capacity + 2);
  return pp.A(k);
}

absl::Status CheckCapacity(Index capacity) {
  if (capacity == 0 || capacity > kMaxCapacity) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("capacity must be in [1, ", kMaxCapacity,
                                  "], got ", capacity));
  }
  return absl::OkStatus();
}

absl::Status CheckUserIndex(Index i, const PublicParams& pp) {
  if (i < 1 || i > pp.capacity) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("user index ", i, " outside [1, ",
                                  pp.capacity, "]"));
  }
  return absl::OkStatus();
}

absl::Status CheckRecipientSet(const IndexSet& s, const PublicParams& pp) {
  if (s.empty()) {
    return MakeError(ErrorCode::kInvalidArgument, "recipient set is empty");
  }
  if (*s.begin() < 1 || *s.rbegin() > pp.capacity) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "recipient set has an index outside [1, L]");
  }
  return absl::OkStatus();
}

absl::StatusOr<const UserPublicKey*> LookupKey(const PublicKeyMap& upks,
                                               Index j) {
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
  return &it->second;
}

// A_{L+1}^omega * B * prod_{j in S} A_j V_j, raised to `t`.
absl::StatusOr<G1Element> RecipientTerm(const IndexSet& s,
                                        const PublicKeyMap& upks,
                                        const PublicParams& pp,
                                        const Scalar& omega, const Scalar& t) {
  std::vector<G1Element> bases;
  std::vector<Scalar> exps;
  bases.reserve(2 + 2 * s.size());
  exps.reserve(2 + 2 * s.size());
  bases.push_back(pp.A(pp.capacity + 1));
  exps.push_back(omega * t);
  bases.push_back(pp.b);
  exps.push_back(t);
  for (Index j : s) {
    DBE_ASSIGN_OR_RETURN(const UserPublicKey* upk, LookupKey(upks, j));
    bases.push_back(pp.A(j));
    exps.push_back(t);
    bases.push_back(upk->v);
    exps.push_back(t);
  }
  return MultiExp(bases, exps);
}

// Shared structural half of both verifiers.
bool StructurallyValid(Index j, const UserPublicKey& upk,
                       const PublicParams& pp) {
  if (j < 1 || j > pp.capacity || upk.index != j) return false;
  if (upk.capacity != pp.capacity) return false;
  if (upk.v.IsIdentity() || upk.v_hat.IsIdentity()) return false;
  IndexSet required = RequiredVkIndices(pp.capacity, j);
  if (upk.vk.size() != required.size()) return false;
  for (const auto& [k, _] : upk.vk) {
    if (!required.contains(k)) return false;
  }
  if (!upk.v.CheckMembership() || !upk.v_hat.CheckMembership()) return false;
  for (const auto& [_, e] : upk.vk) {
    if (!e.CheckMembership()) return false;
  }
  return true;
}

template <class Map>
bool HasExactly(const Map& m, Index lo, Index hi, Index skip) {
  Index expected = 0;
  for (Index k = lo; k <= hi; ++k) {
    if (k == skip) continue;
    if (!m.contains(k)) return false;
    ++expected;
  }
  return m.size() == expected;
}

}  // namespace

IndexSet RequiredVkIndices(Index capacity, Index i) {
  IndexSet out;
  for (Index k = 2; k <= capacity + 1; ++k) {
    if (k != capacity + 2 - i) out.insert(k);
  }
  return out;
}

absl::Status PublicParams::CheckStructure() const {
  DBE_RETURN_IF_ERROR(CheckCapacity(capacity));
  const Index l = capacity;
  if (!HasExactly(a, 1, 2 * l + 2, l + 2)) {
    return MakeError(ErrorCode::kIndexSet,
                     "A must cover exactly [1, 2L+2] without L+2");
  }
  if (!HasExactly(a_hat, 1, l + 1, 0)) {
    return MakeError(ErrorCode::kIndexSet, "A^ must cover exactly [1, L+1]");
  }
  if (!HasExactly(bk, 2, l + 1, 0)) {
    return MakeError(ErrorCode::kIndexSet, "B_k must cover exactly [2, L+1]");
  }
  return absl::OkStatus();
}

void UserSecretKey::Wipe() {
  k = G1Element::Identity();
  index = 0;
}

absl::StatusOr<PublicParams> Setup(Index capacity, RandomSource& rng) {
  DBE_RETURN_IF_ERROR(CheckCapacity(capacity));
  const GroupContext& ctx = GroupContext::Get();
  const Index l = capacity;
  Scalar alpha = Scalar::RandomNonZero(rng);
  Scalar beta = Scalar::RandomNonZero(rng);

  PublicParams pp;
  pp.capacity = l;
  pp.b = ctx.g.Pow(beta);
  Scalar power = Scalar::One();
  for (Index k = 1; k <= 2 * l + 2; ++k) {
    power = power * alpha;
    G1Element ak = ctx.g.Pow(power);
    if (k == l + 2) {
      pp.omega = Pairing(ak, ctx.g_hat);
      ak = G1Element::Identity();
      continue;
    }
    if (k <= l + 1) {
      pp.a_hat.emplace(k, ctx.g_hat.Pow(power));
      if (k >= 2) pp.bk.emplace(k, ak.Pow(beta));
    }
    pp.a.emplace(k, ak);
  }
  power.Wipe();
  alpha.Wipe();
  beta.Wipe();
  return pp;
}

absl::StatusOr<std::pair<UserSecretKey, UserPublicKey>> GenKey(
    Index i, const PublicParams& pp, RandomSource& rng) {
  DBE_RETURN_IF_ERROR(CheckUserIndex(i, pp));
  const GroupContext& ctx = GroupContext::Get();
  Scalar gamma = Scalar::RandomNonZero(rng);

  UserPublicKey upk;
  upk.capacity = pp.capacity;
  upk.index = i;
  upk.v = ctx.g.Pow(gamma);
  upk.v_hat = ctx.g_hat.Pow(gamma);
  for (Index k : RequiredVkIndices(pp.capacity, i)) {
    upk.vk.emplace(k, pp.A(k).Pow(gamma));
  }
  UserSecretKey usk{pp.capacity, i,
                    SafeA(pp, pp.capacity + 2 - i).Pow(gamma)};
  gamma.Wipe();
  return std::make_pair(usk, upk);
}

bool IsValid(Index j, const UserPublicKey& upk, const PublicParams& pp,
             RandomSource& rng) {
  if (!StructurallyValid(j, upk, pp)) return false;
  const GroupContext& ctx = GroupContext::Get();
  std::vector<G1Element> lhs_bases{upk.v};
  std::vector<G1Element> rhs_bases{ctx.g};
  std::vector<Scalar> deltas{Scalar::RandomBits(rng, kBatchExponentBits)};
  for (const auto& [k, vk] : upk.vk) {
    lhs_bases.push_back(vk);
    rhs_bases.push_back(pp.A(k));
    deltas.push_back(Scalar::RandomBits(rng, kBatchExponentBits));
  }
  G1Element lhs = *MultiExp(lhs_bases, deltas);
  G1Element rhs = *MultiExp(rhs_bases, deltas);
  return Pairing(lhs, ctx.g_hat) == Pairing(rhs, upk.v_hat);
}

bool IsValidNaive(Index j, const UserPublicKey& upk, const PublicParams& pp) {
  if (!StructurallyValid(j, upk, pp)) return false;
  const GroupContext& ctx = GroupContext::Get();
  bool ok = Pairing(upk.v, ctx.g_hat) == Pairing(ctx.g, upk.v_hat);
  for (const auto& [k, vk] : upk.vk) {
    ok = (Pairing(vk, ctx.g_hat) == Pairing(pp.A(k), upk.v_hat)) && ok;
  }
  return ok;
}

namespace internal {

absl::StatusOr<Encapsulation> EncapsWithExponent(const IndexSet& s,
                                                 const PublicKeyMap& upks,
                                                 const PublicParams& pp,
                                                 std::span<const uint8_t> au,
                                                 const Scalar& t) {
  DBE_RETURN_IF_ERROR(CheckRecipientSet(s, pp));
  if (t.IsZero()) {
    return MakeError(ErrorCode::kInvalidArgument, "encapsulation exponent is 0");
  }
  Encapsulation out;
  out.header.c1_hat = GroupContext::Get().g_hat.Pow(t);
  Scalar omega = H1(out.header.c1_hat, au);
  DBE_ASSIGN_OR_RETURN(out.header.c2, RecipientTerm(s, upks, pp, omega, t));
  out.omega_t = pp.omega.Pow(t);
  out.key = H2(out.omega_t);
  return out;
}

absl::StatusOr<DecryptionComponents> Components(
    const IndexSet& s, const Header& ch, Index i, const UserSecretKey& usk,
    const PublicKeyMap& upks, const PublicParams& pp,
    std::span<const uint8_t> au, const Scalar& r) {
  DBE_RETURN_IF_ERROR(CheckRecipientSet(s, pp));
  DBE_RETURN_IF_ERROR(CheckUserIndex(i, pp));
  if (usk.index != i || usk.capacity != pp.capacity) {
    return MakeError(ErrorCode::kInvalidKey,
                     absl::StrCat("secret key belongs to user ", usk.index,
                                  ", not ", i));
  }
  const Index l = pp.capacity;
  const Index pivot = l + 2 - i;
  Scalar omega = H1(ch.c1_hat, au);

  DecryptionComponents d;
  DBE_ASSIGN_OR_RETURN(G1Element x_r, RecipientTerm(s, upks, pp, omega, r));
  d.d1 = usk.k * x_r;
  d.d2_hat = pp.AHat(pivot) * GroupContext::Get().g_hat.Pow(r);
  d.d3 = SafeA(pp, 2 * l + 3 - i).Pow(omega) * pp.Bk(pivot);
  for (Index j : s) {
    if (j == i) continue;
    DBE_ASSIGN_OR_RETURN(const UserPublicKey* upk, LookupKey(upks, j));
    auto vk = upk->vk.find(pivot);
    if (vk == upk->vk.end()) {
      return MakeError(ErrorCode::kInvalidKey,
                       absl::StrCat("public key ", j, " lacks V_", pivot));
    }
    d.d4 *= SafeA(pp, pivot + j) * vk->second;
  }
  return d;
}

GtElement KeyElement(const Header& ch, const DecryptionComponents& d) {
  return Pairing(ch.c2, d.d2_hat) *
         Pairing(d.d1 * d.d3 * d.d4, ch.c1_hat).Inverse();
}

}  // namespace internal

absl::StatusOr<std::pair<Header, SessionKey>> Encaps(
    const IndexSet& s, const PublicKeyMap& upks, const PublicParams& pp,
    std::span<const uint8_t> au, RandomSource& rng) {
  Scalar t = Scalar::RandomNonZero(rng);
  auto enc = internal::EncapsWithExponent(s, upks, pp, au, t);
  t.Wipe();
  if (!enc.ok()) return enc.status();
  return std::make_pair(enc->header, enc->key);
}

absl::StatusOr<DecapsOutcome> Decaps(const IndexSet& s, const Header& ch,
                                     Index i, const UserSecretKey& usk,
                                     const PublicKeyMap& upks,
                                     const PublicParams& pp,
                                     std::span<const uint8_t> au,
                                     RandomSource& rng) {
  DBE_RETURN_IF_ERROR(CheckRecipientSet(s, pp));
  if (!s.contains(i)) return DecapsOutcome::Reject(Rejection::kNotInRecipientSet);
  if (ch.c1_hat.IsIdentity()) {
    return DecapsOutcome::Reject(Rejection::kMalformedHeader);
  }
  const GroupContext& ctx = GroupContext::Get();
  Scalar omega = H1(ch.c1_hat, au);
  DBE_ASSIGN_OR_RETURN(G1Element x,
                       RecipientTerm(s, upks, pp, omega, Scalar::One()));
  if (Pairing(ch.c2, ctx.g_hat) != Pairing(x, ch.c1_hat)) {
    return DecapsOutcome::Reject(Rejection::kInvalidHeader);
  }
  Scalar r = Scalar::Random(rng);
  auto d = internal::Components(s, ch, i, usk, upks, pp, au, r);
  r.Wipe();
  if (!d.ok()) return d.status();
  return DecapsOutcome::Accept(H2(internal::KeyElement(ch, *d)));
}

}  // namespace ss
}  // namespace dbe
