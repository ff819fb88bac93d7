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

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <utility>

#include "absl/strings/escaping.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/string_view.h"
#include "dbe/codec.h"
#include "dbe/dbe_ad.h"
#include "dbe/shake.h"
#include "dbe/status.h"

namespace dbe::game {

namespace {

using Bytes = std::vector<uint8_t>;

std::string HexOf(std::span<const uint8_t> b) {
  return absl::BytesToHexString(
      absl::string_view(reinterpret_cast<const char*>(b.data()), b.size()));
}

// Short fingerprint of a large public object for the transcript.
std::string Digest(std::span<const uint8_t> b) {
  std::array<uint8_t, 16> out;
  Shake256 xof;
  xof.Absorb(AsBytes("dbe/transcript-digest"));
  xof.Absorb(b);
  xof.Squeeze(out);
  return HexOf(out);
}

std::string SetText(const IndexSet& s) {
  return absl::StrCat("{", absl::StrJoin(s, ","), "}");
}

bool Subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet Minus(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

IndexSet Union(const IndexSet& a, const IndexSet& b) {
  IndexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}


// Uniform view of the two schemes for the challenger. Headers travel as their
// canonical encodings, which also defines CH != CH*.
class Scheme {
 public:
  virtual ~Scheme() = default;
  virtual absl::Status Setup(Index users, RandomSource& rng) = 0;
  virtual Bytes ParamsBytes() const = 0;
  virtual absl::Status GenKey(Index i, RandomSource& rng) = 0;
  virtual Bytes PublicKeyBytes(Index i) const = 0;
  virtual Bytes SecretKeyBytes(Index i) const = 0;
  virtual absl::StatusOr<std::pair<Bytes, SessionKey>> Encaps(
      const IndexSet& s, std::span<const uint8_t> au, RandomSource& rng) = 0;
  virtual absl::StatusOr<DecapsOutcome> Decaps(const IndexSet& s,
                                               const Bytes& header, Index i,
                                               std::span<const uint8_t> au,
                                               RandomSource& rng) = 0;
  virtual absl::StatusOr<Bytes> Mutate(const Bytes& header, HeaderMutation m,
                                       RandomSource& rng) = 0;
  // Returns the validity verdict; the key is stored only when valid.
  virtual absl::StatusOr<bool> RegisterMalicious(Index i, KeyTamper tamper,
                                                 RandomSource& rng) = 0;
};

class SsScheme final : public Scheme {
 public:
  absl::Status Setup(Index users, RandomSource& rng) override {
    DBE_ASSIGN_OR_RETURN(pp_, ss::Setup(users, rng));
    return absl::OkStatus();
  }
  Bytes ParamsBytes() const override { return codec::Encode(pp_); }
  absl::Status GenKey(Index i, RandomSource& rng) override {
    DBE_ASSIGN_OR_RETURN(auto kp, ss::GenKey(i, pp_, rng));
    usks_[i] = kp.first;
    upks_[i] = kp.second;
    return absl::OkStatus();
  }
  Bytes PublicKeyBytes(Index i) const override {
    return codec::Encode(upks_.at(i));
  }
  Bytes SecretKeyBytes(Index i) const override {
    return codec::Encode(usks_.at(i));
  }
  absl::StatusOr<std::pair<Bytes, SessionKey>> Encaps(
      const IndexSet& s, std::span<const uint8_t> au,
      RandomSource& rng) override {
    DBE_ASSIGN_OR_RETURN(auto enc, ss::Encaps(s, upks_, pp_, au, rng));
    return std::make_pair(codec::Encode(enc.first), enc.second);
  }
  absl::StatusOr<DecapsOutcome> Decaps(const IndexSet& s, const Bytes& header,
                                       Index i, std::span<const uint8_t> au,
                                       RandomSource& rng) override {
    auto ch = codec::DecodeSsHeader(header);
    if (!ch.ok()) return DecapsOutcome::Reject(Rejection::kMalformedHeader);
    return ss::Decaps(s, *ch, i, usks_.at(i), upks_, pp_, au, rng);
  }
  absl::StatusOr<Bytes> Mutate(const Bytes& header, HeaderMutation m,
                               RandomSource& rng) override {
    return MutateHeader(header, m, rng);
  }
  absl::StatusOr<bool> RegisterMalicious(Index, KeyTamper,
                                         RandomSource&) override {
    return MakeError(ErrorCode::kInvalidArgument,
                     "semi-static scheme has no malicious registration");
  }

 private:
  ss::PublicParams pp_;
  std::map<Index, ss::UserSecretKey> usks_;
  ss::PublicKeyMap upks_;
};

class AdScheme final : public Scheme {
 public:
  absl::Status Setup(Index users, RandomSource& rng) override {
    DBE_ASSIGN_OR_RETURN(pp_, ad::Setup(users, rng));
    return absl::OkStatus();
  }
  Bytes ParamsBytes() const override { return codec::Encode(pp_); }
  absl::Status GenKey(Index i, RandomSource& rng) override {
    DBE_ASSIGN_OR_RETURN(auto kp, ad::GenKey(i, pp_, rng));
    usks_[i] = kp.first;
    upks_[i] = kp.second;
    return absl::OkStatus();
  }
  Bytes PublicKeyBytes(Index i) const override {
    return codec::Encode(upks_.at(i));
  }
  Bytes SecretKeyBytes(Index i) const override {
    return codec::Encode(usks_.at(i));
  }
  absl::StatusOr<std::pair<Bytes, SessionKey>> Encaps(
      const IndexSet& s, std::span<const uint8_t> au,
      RandomSource& rng) override {
    DBE_ASSIGN_OR_RETURN(auto enc, ad::Encaps(s, upks_, pp_, au, rng));
    return std::make_pair(codec::Encode(enc.first), enc.second);
  }
  absl::StatusOr<DecapsOutcome> Decaps(const IndexSet& s, const Bytes& header,
                                       Index i, std::span<const uint8_t> au,
                                       RandomSource& rng) override {
    auto ch = codec::DecodeAdHeader(header);
    if (!ch.ok()) return DecapsOutcome::Reject(Rejection::kMalformedHeader);
    return ad::Decaps(s, *ch, i, usks_.at(i), upks_, pp_, au, rng);
  }
  absl::StatusOr<Bytes> Mutate(const Bytes& header, HeaderMutation m,
                               RandomSource& rng) override {
    return MutateHeader(header, m, rng);
  }
  absl::StatusOr<bool> RegisterMalicious(Index i, KeyTamper tamper,
                                         RandomSource& rng) override {
    // The adversary runs key generation itself and keeps the secret.
    DBE_ASSIGN_OR_RETURN(auto kp, ad::GenKey(i, pp_, rng));
    ad::UserPublicKey upk = kp.second;
    kp.first.Wipe();
    TamperKey(upk, tamper, rng);
    const bool valid = ad::IsValid(i, upk, pp_, rng);
    if (valid) upks_[i] = upk;
    return valid;
  }

 private:
  ad::PublicParams pp_;
  std::map<Index, ad::UserSecretKey> usks_;
  ad::PublicKeyMap upks_;
};

struct ChallengeRecord {
  IndexSet s_star;
  Bytes header;
  SessionKey real;
  SessionKey random;
  uint8_t mu = 0;
};

class Challenger {
 public:
  Challenger(GameType type, Index users, RandomSource& rng)
      : type_(type), users_(users), rng_(rng) {
    if (type == GameType::kSsCca) {
      scheme_ = std::make_unique<SsScheme>();
    } else {
      scheme_ = std::make_unique<AdScheme>();
    }
    t_.type = type;
    t_.capacity = users;
  }

  absl::StatusOr<Transcript> Run(const Script& script) {
    Log(absl::StrCat("game ", std::string(GameName(type_)), " L=", users_));
    if (type_ != GameType::kSsCca) DBE_RETURN_IF_ERROR(DoSetup());
    for (size_t n = 0; n < script.actions.size(); ++n) {
      step_ = n;
      const GameState before = t_.state;
      DBE_RETURN_IF_ERROR(
          std::visit([this](const auto& a) { return Apply(a); },
                     script.actions[n]));
      if (t_.violation) {
        Log(absl::StrCat("violation step=", n, " clause=\"",
                         t_.violation->text, "\""));
        return std::move(t_);
      }
      DBE_RETURN_IF_ERROR(CheckBookkeeping(before));
    }
    Log(absl::StrCat("end phase=", std::string(PhaseName(t_.state.phase))));
    return std::move(t_);
  }

 private:
  void Log(std::string line) { t_.lines.push_back(std::move(line)); }

  absl::Status Violate(Clause clause, std::string_view detail = {}) {
    std::string text(ClauseText(type_, clause));
    if (!detail.empty()) absl::StrAppend(&text, " (", std::string(detail), ")");
    t_.violation = Violation{clause, step_, std::move(text)};
    return absl::OkStatus();
  }

  bool Violated() const { return t_.violation.has_value(); }

  // Sets only grow, and CQ stays inside KQ.
  absl::Status CheckBookkeeping(const GameState& before) const {
    const GameState& now = t_.state;
    bool ok = Subset(before.kq, now.kq) && Subset(before.cq, now.cq) &&
              Subset(before.dq, now.dq) && Subset(before.mq, now.mq) &&
              Subset(now.cq, now.kq);
    if (type_ == GameType::kAaCca) {
      IndexSet both;
      std::set_intersection(now.kq.begin(), now.kq.end(), now.mq.begin(),
                            now.mq.end(), std::inserter(both, both.end()));
      ok = ok && both.empty();
    }
    if (!ok) {
      return MakeError(ErrorCode::kUnknown, "bookkeeping invariant broken");
    }
    return absl::OkStatus();
  }

  absl::Status DoSetup() {
    DBE_RETURN_IF_ERROR(scheme_->Setup(users_, rng_));
    Log(absl::StrCat("setup pp=", Digest(scheme_->ParamsBytes())));
    t_.state.phase = Phase::kQuery1;
    return absl::OkStatus();
  }

  bool InRange(Index i) const { return i >= 1 && i <= users_; }
  bool InRange(const IndexSet& s) const {
    return s.empty() || (*s.begin() >= 1 && *s.rbegin() <= users_);
  }

  absl::Status Apply(const Commit& a) {
    if (type_ != GameType::kSsCca) return Violate(Clause::kUnsupportedAction);
    if (t_.state.phase != Phase::kSetup) {
      return Violate(Clause::kPhaseOrder, "commit must come first");
    }
    if (!InRange(a.s_tilde)) return Violate(Clause::kInitSet);
    t_.state.s_tilde = a.s_tilde;
    Log(absl::StrCat("commit S~=", SetText(a.s_tilde)));
    return DoSetup();
  }

  absl::Status Apply(const KeyGenAll&) {
    if (type_ != GameType::kSsCca) return Violate(Clause::kUnsupportedAction);
    if (t_.state.phase != Phase::kQuery1 || keys_generated_) {
      return Violate(Clause::kPhaseOrder, "key generation runs once in phase 1");
    }
    for (Index j : t_.state.s_tilde) {
      DBE_RETURN_IF_ERROR(scheme_->GenKey(j, rng_));
      t_.state.kq.insert(j);
      Log(absl::StrCat("keygen i=", j,
                       " upk=", Digest(scheme_->PublicKeyBytes(j))));
    }
    keys_generated_ = true;
    return absl::OkStatus();
  }

  absl::Status Apply(const KeyGen& a) {
    if (type_ == GameType::kSsCca) return Violate(Clause::kUnsupportedAction);
    if (t_.state.phase != Phase::kQuery1) {
      return Violate(Clause::kPhaseOrder, "key generation only in phase 1");
    }
    if (!InRange(a.i)) return Violate(Clause::kIndexRange);
    if (t_.state.kq.contains(a.i) ||
        (type_ == GameType::kAaCca && t_.state.mq.contains(a.i))) {
      return Violate(Clause::kKeyGen);
    }
    DBE_RETURN_IF_ERROR(scheme_->GenKey(a.i, rng_));
    t_.state.kq.insert(a.i);
    Log(absl::StrCat("keygen i=", a.i,
                     " upk=", Digest(scheme_->PublicKeyBytes(a.i))));
    return absl::OkStatus();
  }

  absl::Status Apply(const Corrupt& a) {
    if (type_ == GameType::kSsCca) return Violate(Clause::kUnsupportedAction);
    if (t_.state.phase != Phase::kQuery1) {
      return Violate(Clause::kPhaseOrder, "corruption only in phase 1");
    }
    if (!InRange(a.i)) return Violate(Clause::kIndexRange);
    const GameState& st = t_.state;
    const bool allowed =
        type_ == GameType::kAdCca
            ? st.kq.contains(a.i) && !st.cq.contains(a.i) &&
                  !st.dq.contains(a.i)
            : st.kq.contains(a.i) && !st.cq.contains(a.i);
    if (!allowed) return Violate(Clause::kCorruption);
    t_.state.cq.insert(a.i);
    Log(absl::StrCat("corrupt i=", a.i,
                     " usk=", HexOf(scheme_->SecretKeyBytes(a.i))));
    return absl::OkStatus();
  }

  absl::Status Apply(const MaliciousRegister& a) {
    if (type_ != GameType::kAaCca) return Violate(Clause::kUnsupportedAction);
    if (t_.state.phase != Phase::kQuery1) {
      return Violate(Clause::kPhaseOrder, "registration only in phase 1");
    }
    if (!InRange(a.i)) return Violate(Clause::kIndexRange);
    if (t_.state.kq.contains(a.i) || t_.state.mq.contains(a.i)) {
      return Violate(Clause::kMaliciousCorruption);
    }
    DBE_ASSIGN_OR_RETURN(bool valid,
                         scheme_->RegisterMalicious(a.i, a.tamper, rng_));
    t_.state.mq.insert(a.i);
    if (valid) registered_.insert(a.i);
    Log(absl::StrCat("malicious i=", a.i,
                     " tamper=", std::string(TamperName(a.tamper)),
                     " isvalid=", valid ? 1 : 0));
    return absl::OkStatus();
  }

  // The set decryption and challenge sets must stay inside.
  IndexSet Honest() const {
    const GameState& st = t_.state;
    switch (type_) {
      case GameType::kSsCca:
        return st.s_tilde;
      case GameType::kAdCca:
        return Minus(st.kq, st.cq);
      case GameType::kAaCca:
        return Minus(st.kq, Union(st.cq, st.mq));
    }
    return {};
  }

  bool KeysReady() const {
    return type_ != GameType::kSsCca || keys_generated_;
  }

  absl::Status Apply(const Decrypt& a) {
    Phase& phase = t_.state.phase;
    if (phase != Phase::kQuery1 && phase != Phase::kChallenged &&
        phase != Phase::kQuery2) {
      return Violate(Clause::kPhaseOrder, "decryption outside query phases");
    }
    if (!KeysReady()) return Violate(Clause::kPhaseOrder, "keys not generated");
    if (!InRange(a.s) || !InRange(a.i)) return Violate(Clause::kIndexRange);
    if (!Subset(a.s, Honest())) return Violate(Clause::kDecryptionSet);
    if (!a.s.contains(a.i)) return Violate(Clause::kDecryptionMember);

    Bytes header;
    std::string source;
    std::optional<SessionKey> fresh_key;
    switch (a.header.kind) {
      case HeaderSource::Kind::kChallenge:
        if (!challenge_) {
          return Violate(Clause::kPhaseOrder, "no challenge header yet");
        }
        header = challenge_->header;
        source = "challenge";
        break;
      case HeaderSource::Kind::kMutatedChallenge: {
        if (!challenge_) {
          return Violate(Clause::kPhaseOrder, "no challenge header yet");
        }
        DBE_ASSIGN_OR_RETURN(header, scheme_->Mutate(challenge_->header,
                                                     a.header.mutation, rng_));
        source = absl::StrCat("mutated:",
                              std::string(MutationName(a.header.mutation)));
        break;
      }
      case HeaderSource::Kind::kFresh: {
        if (!Subset(a.header.fresh_set, Union(t_.state.kq, registered_)) ||
            a.header.fresh_set.empty()) {
          return Violate(Clause::kIndexRange,
                         "fresh header needs registered recipients");
        }
        DBE_ASSIGN_OR_RETURN(
            auto enc, scheme_->Encaps(a.header.fresh_set,
                                      AsBytes(a.header.fresh_au), rng_));
        header = std::move(enc.first);
        fresh_key = enc.second;
        source = absl::StrCat("fresh:", SetText(a.header.fresh_set));
        break;
      }
    }
    if (challenge_ && header == challenge_->header) {
      return Violate(Clause::kHeaderDiffers);
    }

    DBE_ASSIGN_OR_RETURN(DecapsOutcome out,
                         scheme_->Decaps(a.s, header, a.i, AsBytes(a.au), rng_));
    if (type_ == GameType::kAdCca) t_.state.dq.insert(a.i);
    if (phase == Phase::kChallenged) phase = Phase::kQuery2;
    std::string answer =
        out.accepted()
            ? absl::StrCat("key=", out.key().Hex())
            : absl::StrCat("bottom reason=\"",
                           std::string(RejectionName(out.rejection())), "\"");
    if (fresh_key && out.accepted()) {
      absl::StrAppend(&answer, " matches_fresh=",
                      out.key() == *fresh_key ? 1 : 0);
    }
    t_.decryption_rejected.push_back(!out.accepted());
    Log(absl::StrCat("decrypt phase=", challenge_ ? 2 : 1,
                     " S=", SetText(a.s), " i=", a.i, " header=", source,
                     " au=\"", absl::CEscape(a.au), "\" -> ", answer));
    return absl::OkStatus();
  }

  absl::Status Apply(const Challenge& a) {
    if (t_.state.phase != Phase::kQuery1) {
      return Violate(Clause::kPhaseOrder, "one challenge, after phase 1");
    }
    if (!KeysReady()) return Violate(Clause::kPhaseOrder, "keys not generated");
    if (!InRange(a.s_star)) return Violate(Clause::kIndexRange);
    if (a.s_star.empty() || !Subset(a.s_star, Honest())) {
      return Violate(Clause::kChallengeSet);
    }
    DBE_ASSIGN_OR_RETURN(auto enc, scheme_->Encaps(a.s_star, {}, rng_));
    ChallengeRecord c;
    c.s_star = a.s_star;
    c.header = std::move(enc.first);
    c.real = enc.second;
    rng_.Fill(c.random.bytes);
    c.mu = rng_.NextBit() ? 1 : 0;
    challenge_ = std::move(c);
    t_.mu = challenge_->mu;
    t_.state.phase = Phase::kChallenged;
    Log(absl::StrCat("challenge S*=", SetText(a.s_star),
                     " ch=", Digest(challenge_->header),
                     " given=", Given().Hex()));
    return absl::OkStatus();
  }

  const SessionKey& Given() const {
    return challenge_->mu == 0 ? challenge_->real : challenge_->random;
  }

  absl::Status Apply(const Guess& a) {
    Phase& phase = t_.state.phase;
    if (phase != Phase::kChallenged && phase != Phase::kQuery2) {
      return Violate(Clause::kPhaseOrder, "guess only after the challenge");
    }
    uint8_t guess = a.constant & 1;
    std::string how = "constant";
    if (a.strategy == Guess::Strategy::kWiringProbe) {
      if (!challenge_->s_star.contains(a.probe)) {
        return Violate(Clause::kIndexRange, "probe must be in S*");
      }
      DBE_ASSIGN_OR_RETURN(
          DecapsOutcome out,
          scheme_->Decaps(challenge_->s_star, challenge_->header, a.probe, {},
                          rng_));
      const bool matches = out.accepted() && out.key() == Given();
      guess = matches ? 0 : 1;
      if (challenge_->mu == 0) {
        t_.probe_recovered_real_key =
            out.accepted() && out.key() == challenge_->real;
      }
      how = absl::StrCat("probe i=", a.probe);
    }
    t_.mu_prime = guess;
    phase = Phase::kDone;
    Log(absl::StrCat("guess ", how, " mu'=", guess, " mu=", challenge_->mu,
                     " win=", guess == challenge_->mu ? 1 : 0));
    return absl::OkStatus();
  }

  GameType type_;
  Index users_;
  RandomSource& rng_;
  std::unique_ptr<Scheme> scheme_;
  Transcript t_;
  size_t step_ = 0;
  bool keys_generated_ = false;
  // Maliciously registered keys that passed validation and were stored.
  IndexSet registered_;
  std::optional<ChallengeRecord> challenge_;
};

absl::StatusOr<Transcript> Run(GameType type, const Script& script,
                               Index users, RandomSource& rng) {
  if (users < 1) {
    return MakeError(ErrorCode::kInvalidArgument, "games need L >= 1");
  }
  Challenger c(type, users, rng);
  return c.Run(script);
}

}  // namespace

std::string_view GameName(GameType type) {
  switch (type) {
    case GameType::kSsCca: return "ss-cca";
    case GameType::kAdCca: return "ad-cca";
    case GameType::kAaCca: return "aa-cca";
  }
  return "?";
}

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kSetup: return "setup";
    case Phase::kQuery1: return "query1";
    case Phase::kChallenged: return "challenged";
    case Phase::kQuery2: return "query2";
    case Phase::kDone: return "done";
  }
  return "?";
}

std::string_view ClauseText(GameType type, Clause clause) {
  const bool ss = type == GameType::kSsCca;
  const bool aa = type == GameType::kAaCca;
  switch (clause) {
    case Clause::kPhaseOrder:
      return "phase order";
    case Clause::kUnsupportedAction:
      return "action not offered by this experiment";
    case Clause::kIndexRange:
      return "index in [L]";
    case Clause::kInitSet:
      return "init: S~ subset of [L]";
    case Clause::kKeyGen:
      return aa ? "key generation: i not in KQ and i not in MQ"
                : "key generation: i not in KQ";
    case Clause::kCorruption:
      return aa ? "key corruption: i in KQ and i not in CQ"
                : "key corruption: i in KQ \\ (CQ u DQ)";
    case Clause::kMaliciousCorruption:
      return "malicious corruption: i not in KQ and i not in MQ";
    case Clause::kDecryptionSet:
      return ss ? "decryption: S subset of S~"
                : aa ? "decryption: S subset of KQ \\ (CQ u MQ)"
                     : "decryption: S subset of KQ \\ CQ";
    case Clause::kDecryptionMember:
      return "decryption: i in S";
    case Clause::kHeaderDiffers:
      return "decryption: CH != CH*";
    case Clause::kChallengeSet:
      return ss ? "challenge: S* subset of S~"
                : aa ? "challenge: S* subset of KQ \\ (CQ u MQ)"
                     : "challenge: S* subset of KQ \\ CQ";
  }
  return "?";
}

std::string_view MutationName(HeaderMutation m) {
  switch (m) {
    case HeaderMutation::kSsC2TimesG: return "c2*g";
    case HeaderMutation::kSsC1Replaced: return "c1-replaced";
    case HeaderMutation::kAdCh0: return "ch0";
    case HeaderMutation::kAdCh1: return "ch1";
    case HeaderMutation::kAdCt0: return "ct0";
    case HeaderMutation::kAdCt1: return "ct1";
    case HeaderMutation::kAdZ: return "z";
    case HeaderMutation::kAdSigma: return "sigma";
    case HeaderMutation::kAdVk: return "vk";
  }
  return "?";
}

const std::vector<HeaderMutation>& AdMutations() {
  static const auto* m = new std::vector<HeaderMutation>{
      HeaderMutation::kAdCh0, HeaderMutation::kAdCh1,   HeaderMutation::kAdCt0,
      HeaderMutation::kAdCt1, HeaderMutation::kAdZ,     HeaderMutation::kAdSigma,
      HeaderMutation::kAdVk};
  return *m;
}

const std::vector<HeaderMutation>& SsMutations() {
  static const auto* m = new std::vector<HeaderMutation>{
      HeaderMutation::kSsC2TimesG, HeaderMutation::kSsC1Replaced};
  return *m;
}

std::string_view TamperName(KeyTamper t) {
  switch (t) {
    case KeyTamper::kNone: return "none";
    case KeyTamper::kScaleCrossTerm: return "scale-cross-term";
    case KeyTamper::kSwapSlots: return "swap-slots";
    case KeyTamper::kForeignVHat: return "foreign-v-hat";
  }
  return "?";
}

absl::StatusOr<std::vector<uint8_t>> MutateHeader(
    std::span<const uint8_t> header, HeaderMutation m, RandomSource& rng) {
  const GroupContext& ctx = GroupContext::Get();
  const bool ss_family = m == HeaderMutation::kSsC2TimesG ||
                         m == HeaderMutation::kSsC1Replaced;
  DBE_ASSIGN_OR_RETURN(codec::Kind kind, codec::PeekKind(header));
  if (ss_family != (kind == codec::Kind::kSsHeader)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("mutation ", std::string(MutationName(m)),
                                  " does not apply to this header type"));
  }
  if (ss_family) {
    DBE_ASSIGN_OR_RETURN(ss::Header ch, codec::DecodeSsHeader(header));
    if (m == HeaderMutation::kSsC2TimesG) {
      ch.c2 *= ctx.g;
    } else {
      ch.c1_hat = ctx.g_hat.Pow(Scalar::RandomNonZero(rng));
    }
    return codec::Encode(ch);
  }
  DBE_ASSIGN_OR_RETURN(ad::Header ch, codec::DecodeAdHeader(header));
  switch (m) {
    case HeaderMutation::kAdCh0:
      ch.cm.ch0.c2 *= ctx.g;
      break;
    case HeaderMutation::kAdCh1:
      ch.cm.ch1.c1_hat *= ctx.g_hat;
      break;
    case HeaderMutation::kAdCt0:
      ch.cm.ct0[0] ^= 0x01;
      break;
    case HeaderMutation::kAdCt1:
      ch.cm.ct1[0] ^= 0x01;
      break;
    case HeaderMutation::kAdZ:
      ch.cm.z[0] = !ch.cm.z[0];
      break;
    case HeaderMutation::kAdSigma:
      ch.sigma.sigma *= ctx.g;
      break;
    case HeaderMutation::kAdVk:
      ch.vk.X = ctx.g_hat.Pow(Scalar::RandomNonZero(rng));
      break;
    default:
      break;
  }
  return codec::Encode(ch);
}

void TamperKey(ad::UserPublicKey& upk, KeyTamper tamper, RandomSource& rng) {
  const GroupContext& ctx = GroupContext::Get();
  switch (tamper) {
    case KeyTamper::kNone:
      break;
    case KeyTamper::kScaleCrossTerm:
      upk.even.vk.begin()->second *= ctx.g;
      break;
    case KeyTamper::kSwapSlots:
      std::swap(upk.even, upk.odd);
      break;
    case KeyTamper::kForeignVHat:
      upk.odd.v_hat = ctx.g_hat.Pow(Scalar::RandomNonZero(rng));
      break;
  }
}

const std::vector<KeyTamper>& KeyTampers() {
  static const auto* t = new std::vector<KeyTamper>{
      KeyTamper::kScaleCrossTerm, KeyTamper::kSwapSlots,
      KeyTamper::kForeignVHat};
  return *t;
}

std::string Transcript::ToText() const {
  std::string out;
  for (const auto& line : lines) absl::StrAppend(&out, line, "\n");
  return out;
}

absl::StatusOr<Transcript> RunSsCcaGame(const Script& script, Index users,
                                        RandomSource& rng) {
  return Run(GameType::kSsCca, script, users, rng);
}

absl::StatusOr<Transcript> RunAdCcaGame(const Script& script, Index users,
                                        RandomSource& rng) {
  return Run(GameType::kAdCca, script, users, rng);
}

absl::StatusOr<Transcript> RunAaCcaGame(const Script& script, Index users,
                                        RandomSource& rng) {
  return Run(GameType::kAaCca, script, users, rng);
}

}  // namespace dbe::game
