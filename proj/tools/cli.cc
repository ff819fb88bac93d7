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

#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "CLI11.hpp"
#include "absl/strings/ascii.h"
#include "absl/strings/escaping.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "dbe/codec.h"
#include "dbe/dbe_ad.h"
#include "dbe/game.h"
#include "dbe/groups.h"
#include "dbe/hashes.h"
#include "dbe/random.h"
#include "dbe/status.h"
#include "key_directory.h"

namespace dbe::cli {

namespace {

namespace fs = std::filesystem;

constexpr size_t kDefaultEncapsSet = 16;
constexpr size_t kTamperRecipients = 3;

struct Options {
  std::string dir;
  std::string seed_hex;
  Index users = 0;
  Index index = 0;
  bool force = false;
  std::string set;
  std::string au;
  std::string out_path;
  std::string key_out;
  std::string header_path;
  std::string sizes = "8,32,128";
  int reps = 3;
  size_t encaps_size = 0;
};

int Fail(std::ostream& err, const absl::Status& status) {
  err << "dbe: " << status.message() << "\n";
  return ExitCodeFor(status);
}

int Fail(std::ostream& err, int code, std::string_view message) {
  err << "dbe: " << message << "\n";
  return code;
}

absl::StatusOr<std::unique_ptr<RandomSource>> MakeRng(const Options& o,
                                                      std::string_view command,
                                                      Index index) {
  if (o.seed_hex.empty()) return std::make_unique<SystemRandom>();
  if (o.seed_hex.size() % 2 != 0 ||
      !std::all_of(o.seed_hex.begin(), o.seed_hex.end(),
                   [](char c) { return absl::ascii_isxdigit(c); })) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "--seed must be an even-length hex string");
  }
  const std::string raw = absl::HexStringToBytes(o.seed_hex);
  return std::make_unique<SeededRandom>(
      CommandSeed(AsBytes(raw), command, index));
}

absl::StatusOr<fs::path> DirectoryOf(const Options& o) {
  if (o.dir.empty()) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "no key directory: pass --dir or set DBE_DIR");
  }
  return fs::path(o.dir);
}

absl::StatusOr<KeyDirectory> OpenDirectory(const Options& o) {
  DBE_ASSIGN_OR_RETURN(fs::path root, DirectoryOf(o));
  return KeyDirectory::Open(root);
}

int CmdSetup(const Options& o, std::ostream& out, std::ostream& err) {
  auto root = DirectoryOf(o);
  if (!root.ok()) return Fail(err, root.status());
  if (o.users < 1 || o.users > ss::kMaxCapacity / 2) {
    return Fail(err, kExitBadArgument,
                absl::StrCat("--users must be in [1, ", ss::kMaxCapacity / 2,
                             "]"));
  }
  auto rng = MakeRng(o, "setup", 0);
  if (!rng.ok()) return Fail(err, rng.status());
  auto pp = ad::Setup(o.users, **rng);
  if (!pp.ok()) return Fail(err, pp.status());
  auto dir = KeyDirectory::Create(*root, *pp, o.force);
  if (!dir.ok()) return Fail(err, dir.status());
  out << "users " << o.users << "\n"
      << "slots " << pp->capacity << "\n"
      << "pp.dbe " << codec::Encode(*pp).size() << " bytes\n"
      << "element bytes G " << G1Element::kBytes << ", G^ " << G2Element::kBytes
      << ", GT " << GtElement::kBytes << "\n"
      << "elements A " << pp->a.size() << " (G), A^ " << pp->a_hat.size()
      << " (G^), B 1 (G), B_k " << pp->bk.size() << " (G), Omega 1 (GT)\n";
  return kExitOk;
}

int CmdKeyGen(const Options& o, std::ostream& out, std::ostream& err) {
  auto dir = OpenDirectory(o);
  if (!dir.ok()) return Fail(err, dir.status());
  auto rng = MakeRng(o, "keygen", o.index);
  if (!rng.ok()) return Fail(err, rng.status());
  auto kp = ad::GenKey(o.index, dir->params(), **rng);
  if (!kp.ok()) return Fail(err, kp.status());
  absl::Status st = dir->AddUser(kp->second, kp->first, o.force, **rng);
  kp->first.Wipe();
  if (!st.ok()) return Fail(err, st);
  out << "user " << o.index << ": wrote " << dir->PublicKeyPath(o.index).string()
      << " and " << dir->SecretKeyPath(o.index).string() << "\n";
  return kExitOk;
}

int CmdVerifyKey(const Options& o, std::ostream& out, std::ostream& err) {
  auto dir = OpenDirectory(o);
  if (!dir.ok()) return Fail(err, dir.status());
  auto rng = MakeRng(o, "verify-key", o.index);
  if (!rng.ok()) return Fail(err, rng.status());
  auto upk = dir->LoadPublicKey(o.index);
  if (!upk.ok()) {
    if (ErrorCodeOf(upk.status()) == ErrorCode::kMissingKey ||
        ErrorCodeOf(upk.status()) == ErrorCode::kInvalidArgument ||
        ErrorCodeOf(upk.status()) == ErrorCode::kIo) {
      return Fail(err, upk.status());
    }
    out << "0\n";
    err << "dbe: " << upk.status().message() << "\n";
    return kExitKeyInvalid;
  }
  const bool valid = ad::IsValid(o.index, *upk, dir->params(), **rng);
  out << (valid ? "1" : "0") << "\n";
  if (!valid) err << "dbe: public key fails the validity check\n";
  return valid ? kExitOk : kExitKeyInvalid;
}

int CmdEncaps(const Options& o, std::ostream& out, std::ostream& err) {
  auto dir = OpenDirectory(o);
  if (!dir.ok()) return Fail(err, dir.status());
  auto s = ParseIndexSet(o.set);
  if (!s.ok()) return Fail(err, s.status());
  auto upks = dir->LoadPublicKeys(*s);
  if (!upks.ok()) return Fail(err, upks.status());
  auto rng = MakeRng(o, "encaps", 0);
  if (!rng.ok()) return Fail(err, rng.status());
  auto enc = ad::Encaps(*s, *upks, dir->params(), AsBytes(o.au), **rng);
  if (!enc.ok()) return Fail(err, enc.status());
  const std::vector<uint8_t> header = codec::Encode(enc->first);
  absl::Status st = WriteFileAtomic(o.out_path, header, 0644);
  if (!st.ok()) return Fail(err, st);
  const std::string key = enc->second.Hex();
  if (o.key_out.empty()) {
    out << key << "\n";
  } else {
    const std::string line = key + "\n";
    st = WriteFileAtomic(o.key_out, AsBytes(line), 0600);
    if (!st.ok()) return Fail(err, st);
    out << "header " << header.size() << " bytes -> " << o.out_path << "\n";
  }
  return kExitOk;
}

int CmdDecaps(const Options& o, std::ostream& out, std::ostream& err) {
  auto dir = OpenDirectory(o);
  if (!dir.ok()) return Fail(err, dir.status());
  auto s = ParseIndexSet(o.set);
  if (!s.ok()) return Fail(err, s.status());
  auto bytes = ReadFile(o.header_path);
  if (!bytes.ok()) return Fail(err, bytes.status());
  auto ch = codec::DecodeAdHeader(*bytes);
  if (!ch.ok()) {
    return Fail(err, kExitMalformedHeader,
                absl::StrCat("malformed header: ", ch.status().message()));
  }
  auto upks = dir->LoadPublicKeys(*s);
  if (!upks.ok()) return Fail(err, upks.status());
  auto usk = dir->LoadSecretKey(o.index);
  if (!usk.ok()) return Fail(err, usk.status());
  auto rng = MakeRng(o, "decaps", o.index);
  if (!rng.ok()) return Fail(err, rng.status());
  auto outcome = ad::Decaps(*s, *ch, o.index, *usk, *upks, dir->params(),
                            AsBytes(o.au), **rng);
  usk->Wipe();
  if (!outcome.ok()) return Fail(err, outcome.status());
  if (!outcome->accepted()) {
    return Fail(err, ExitCodeFor(outcome->rejection()),
                RejectionName(outcome->rejection()));
  }
  out << outcome->key().Hex() << "\n";
  return kExitOk;
}

// Mean wall time of `reps` calls to `fn`, in milliseconds.
double TimeMs(int reps, const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 0; n < reps; ++n) fn();
  const std::chrono::duration<double, std::milli> d =
      std::chrono::steady_clock::now() - start;
  return d.count() / reps;
}

std::string Count(uint64_t v) {
  return kCountersEnabled ? absl::StrCat(v) : std::string("n/a");
}

std::string Ms(double v) { return absl::StrFormat("%.3f", v); }

absl::Status BenchSemiStatic(Index l, const Options& o, std::ostream& out) {
  DBE_ASSIGN_OR_RETURN(auto rng, MakeRng(o, "bench", l));
  RandomSource& r = *rng;
  const size_t m = o.encaps_size == 0 ? std::min<size_t>(l, kDefaultEncapsSet)
                                      : std::min<size_t>(l, o.encaps_size);
  std::optional<ss::PublicParams> pp;
  const double setup_ms = TimeMs(o.reps, [&] { pp = *ss::Setup(l, r); });

  std::map<Index, ss::UserSecretKey> usks;
  ss::PublicKeyMap upks;
  IndexSet s;
  const auto kg_start = std::chrono::steady_clock::now();
  for (Index i = 1; i <= m; ++i) {
    DBE_ASSIGN_OR_RETURN(auto kp, ss::GenKey(i, *pp, r));
    usks[i] = kp.first;
    upks[i] = kp.second;
    s.insert(i);
  }
  const double keygen_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - kg_start).count() / m;

  bool ok = true;
  ResetCounters();
  ok &= ss::IsValid(1, upks[1], *pp, r);
  const uint64_t batch_pairings = ReadCounters().pairings;
  ResetCounters();
  ok &= ss::IsValidNaive(1, upks[1], *pp);
  const uint64_t naive_pairings = ReadCounters().pairings;
  const double batch_ms =
      TimeMs(o.reps, [&] { ok &= ss::IsValid(1, upks[1], *pp, r); });
  const double naive_ms =
      TimeMs(o.reps, [&] { ok &= ss::IsValidNaive(1, upks[1], *pp); });
  if (!ok) return MakeError(ErrorCode::kUnknown, "honest key rejected");

  std::optional<std::pair<ss::Header, SessionKey>> enc;
  absl::Status st;
  const double encaps_ms = TimeMs(o.reps, [&] {
    auto e = ss::Encaps(s, upks, *pp, {}, r);
    if (!e.ok()) st = e.status(); else enc = *e;
  });
  DBE_RETURN_IF_ERROR(st);
  bool match = true;
  const double decaps_ms = TimeMs(o.reps, [&] {
    auto d = ss::Decaps(s, enc->first, 1, usks[1], upks, *pp, {}, r);
    match &= d.ok() && d->accepted() && d->key() == enc->second;
  });
  if (!match) return MakeError(ErrorCode::kUnknown, "decapsulation mismatch");

  out << "ss," << l << "," << Count(batch_pairings) << ","
      << Count(naive_pairings) << "," << Ms(setup_ms) << "," << Ms(keygen_ms)
      << "," << Ms(batch_ms) << "," << Ms(naive_ms) << ","
      << absl::StrFormat("%.2f", naive_ms / batch_ms) << "," << Ms(encaps_ms)
      << "," << Ms(decaps_ms) << "," << m << ","
      << codec::Encode(enc->first).size() << "\n";
  return absl::OkStatus();
}

// One row for the directory's own adaptive instance, using stored keys.
absl::Status BenchDirectory(const KeyDirectory& dir, const Options& o,
                            std::ostream& out) {
  const std::vector<Index> users = dir.ListUsers();
  std::optional<Index> decryptor;
  for (Index i : users) {
    if (dir.HasSecretKey(i)) {
      decryptor = i;
      break;
    }
  }
  if (!decryptor) {
    return MakeError(ErrorCode::kMissingKey,
                     "bench needs at least one user with both key files");
  }
  const size_t cap = o.encaps_size == 0 ? kDefaultEncapsSet : o.encaps_size;
  IndexSet s{*decryptor};
  for (Index i : users) {
    if (s.size() >= cap) break;
    s.insert(i);
  }
  DBE_ASSIGN_OR_RETURN(auto rng, MakeRng(o, "bench", 0));
  RandomSource& r = *rng;
  const ad::PublicParams& pp = dir.params();
  DBE_ASSIGN_OR_RETURN(ad::PublicKeyMap upks, dir.LoadPublicKeys(s));
  DBE_ASSIGN_OR_RETURN(ad::UserSecretKey usk, dir.LoadSecretKey(*decryptor));
  const ad::UserPublicKey& upk = upks.at(*decryptor);

  const double keygen_ms = TimeMs(o.reps, [&] {
    auto kp = ad::GenKey(*decryptor, pp, r);
    if (kp.ok()) kp->first.Wipe();
  });
  bool ok = true;
  ResetCounters();
  ok &= ad::IsValid(*decryptor, upk, pp, r);
  const uint64_t batch_pairings = ReadCounters().pairings;
  auto naive = [&] {
    return ss::IsValidNaive(ad::EvenSlot(*decryptor), upk.even, pp) &&
           ss::IsValidNaive(ad::OddSlot(*decryptor), upk.odd, pp);
  };
  ResetCounters();
  ok &= naive();
  const uint64_t naive_pairings = ReadCounters().pairings;
  const double batch_ms =
      TimeMs(o.reps, [&] { ok &= ad::IsValid(*decryptor, upk, pp, r); });
  const double naive_ms = TimeMs(o.reps, [&] { ok &= naive(); });
  if (!ok) return MakeError(ErrorCode::kInvalidKey, "stored key is invalid");

  std::optional<std::pair<ad::Header, SessionKey>> enc;
  absl::Status st;
  const double encaps_ms = TimeMs(o.reps, [&] {
    auto e = ad::Encaps(s, upks, pp, {}, r);
    if (!e.ok()) st = e.status(); else enc = *e;
  });
  DBE_RETURN_IF_ERROR(st);
  bool match = true;
  const double decaps_ms = TimeMs(o.reps, [&] {
    auto d = ad::Decaps(s, enc->first, *decryptor, usk, upks, pp, {}, r);
    match &= d.ok() && d->accepted() && d->key() == enc->second;
  });
  usk.Wipe();
  if (!match) return MakeError(ErrorCode::kUnknown, "decapsulation mismatch");

  out << "ad," << dir.users() << "," << Count(batch_pairings) << ","
      << Count(naive_pairings) << ",," << Ms(keygen_ms) << "," << Ms(batch_ms)
      << "," << Ms(naive_ms) << ","
      << absl::StrFormat("%.2f", naive_ms / batch_ms) << "," << Ms(encaps_ms)
      << "," << Ms(decaps_ms) << "," << s.size() << ","
      << codec::Encode(enc->first).size() << "\n";
  return absl::OkStatus();
}

int CmdBench(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.reps < 1) return Fail(err, kExitBadArgument, "--reps must be >= 1");
  auto sizes = ParseIndexSet(o.sizes);
  if (!sizes.ok()) return Fail(err, sizes.status());
  if (*sizes->rbegin() > ss::kMaxCapacity) {
    return Fail(err, kExitBadArgument, "bench size too large");
  }
  std::optional<KeyDirectory> dir;
  if (!o.dir.empty()) {
    auto opened = KeyDirectory::Open(o.dir);
    if (!opened.ok()) return Fail(err, opened.status());
    dir = std::move(*opened);
  }
  out << "scheme,L,batch_pairings,naive_pairings,setup_ms,keygen_ms,"
         "isvalid_ms,isvalid_naive_ms,speedup,encaps_ms,decaps_ms,"
         "encaps_set,header_bytes\n";
  for (Index l : *sizes) {
    absl::Status st = BenchSemiStatic(l, o, out);
    if (!st.ok()) return Fail(err, st);
  }
  if (dir) {
    absl::Status st = BenchDirectory(*dir, o, out);
    if (!st.ok()) return Fail(err, st);
  }
  return kExitOk;
}

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

CaseResult VerifyStoredKeys(const KeyDirectory& dir,
                            const std::vector<Index>& users, RandomSource& r) {
  CaseResult c{"verify-key", true, ""};
  if (users.empty()) return {"verify-key", false, "no stored public keys"};
  for (Index i : users) {
    auto upk = dir.LoadPublicKey(i);
    if (!upk.ok()) {
      c.pass = false;
      absl::StrAppend(&c.detail, " user ", i, ": ", upk.status().message(), ";");
    } else if (!ad::IsValid(i, *upk, dir.params(), r)) {
      c.pass = false;
      absl::StrAppend(&c.detail, " user ", i, ": validity check failed;");
    }
  }
  if (c.pass) c.detail = absl::StrCat(users.size(), " keys valid");
  return c;
}

std::vector<CaseResult> HeaderCases(const KeyDirectory& dir,
                                    const std::vector<Index>& users,
                                    RandomSource& r) {
  std::vector<CaseResult> cases;
  auto fail_all = [&](std::string why) {
    for (game::HeaderMutation m : game::AdMutations()) {
      cases.push_back({absl::StrCat("header-", std::string(game::MutationName(m))), false,
                       why});
    }
    return cases;
  };
  std::optional<Index> decryptor;
  for (Index i : users) {
    if (dir.HasSecretKey(i)) {
      decryptor = i;
      break;
    }
  }
  if (!decryptor) return fail_all("no user with a private key");
  IndexSet s{*decryptor};
  for (Index i : users) {
    if (s.size() >= kTamperRecipients) break;
    s.insert(i);
  }
  auto upks = dir.LoadPublicKeys(s);
  if (!upks.ok()) return fail_all(std::string(upks.status().message()));
  auto usk = dir.LoadSecretKey(*decryptor);
  if (!usk.ok()) return fail_all(std::string(usk.status().message()));
  const std::string au = "tamper-suite";
  auto enc = ad::Encaps(s, *upks, dir.params(), AsBytes(au), r);
  if (!enc.ok()) return fail_all(std::string(enc.status().message()));
  auto base = ad::Decaps(s, enc->first, *decryptor, *usk, *upks, dir.params(),
                         AsBytes(au), r);
  if (!base.ok() || !base->accepted() || base->key() != enc->second) {
    usk->Wipe();
    return fail_all("unmodified header does not decapsulate");
  }
  const std::vector<uint8_t> encoded = codec::Encode(enc->first);
  for (game::HeaderMutation m : game::AdMutations()) {
    CaseResult c{absl::StrCat("header-", std::string(game::MutationName(m))), false, ""};
    auto mutated = game::MutateHeader(encoded, m, r);
    if (!mutated.ok()) {
      c.detail = std::string(mutated.status().message());
      cases.push_back(c);
      continue;
    }
    auto ch = codec::DecodeAdHeader(*mutated);
    if (!ch.ok()) {
      c.pass = true;
      c.detail = "rejected at decoding";
      cases.push_back(c);
      continue;
    }
    auto out = ad::Decaps(s, *ch, *decryptor, *usk, *upks, dir.params(),
                          AsBytes(au), r);
    if (!out.ok()) {
      c.detail = std::string(out.status().message());
    } else if (out->accepted()) {
      c.detail = "mutated header accepted";
    } else {
      c.pass = true;
      c.detail = absl::StrCat("bottom: ", std::string(RejectionName(out->rejection())));
    }
    cases.push_back(c);
  }
  usk->Wipe();
  return cases;
}

std::vector<CaseResult> KeyCases(const KeyDirectory& dir,
                                 const std::vector<Index>& users,
                                 RandomSource& r) {
  std::vector<CaseResult> cases;
  std::optional<ad::UserPublicKey> upk;
  std::string why = "no stored public keys";
  if (!users.empty()) {
    auto loaded = dir.LoadPublicKey(users.front());
    if (loaded.ok()) {
      upk = *loaded;
    } else {
      why = std::string(loaded.status().message());
    }
  }
  for (game::KeyTamper t : game::KeyTampers()) {
    CaseResult c{absl::StrCat("key-", std::string(game::TamperName(t))), false, why};
    if (upk) {
      ad::UserPublicKey tampered = *upk;
      game::TamperKey(tampered, t, r);
      c.pass = !ad::IsValid(tampered.index, tampered, dir.params(), r);
      c.detail = c.pass ? "rejected by validity check" : "tampered key accepted";
    }
    cases.push_back(c);
  }
  return cases;
}

int CmdTamperSuite(const Options& o, std::ostream& out, std::ostream& err) {
  auto dir = OpenDirectory(o);
  if (!dir.ok()) return Fail(err, dir.status());
  auto rng = MakeRng(o, "tamper-suite", 0);
  if (!rng.ok()) return Fail(err, rng.status());
  const std::vector<Index> users = dir->ListUsers();
  std::vector<CaseResult> cases;
  cases.push_back(VerifyStoredKeys(*dir, users, **rng));
  for (auto& c : HeaderCases(*dir, users, **rng)) cases.push_back(c);
  for (auto& c : KeyCases(*dir, users, **rng)) cases.push_back(c);
  size_t passed = 0;
  for (const auto& c : cases) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    passed += c.pass;
  }
  out << passed << "/" << cases.size() << " cases passed\n";
  return passed == cases.size() ? kExitOk : kExitTamperFailed;
}

}  // namespace

std::string ExitCodeTable() {
  return "Exit codes:\n"
         "   0  success\n"
         "   1  verify-key: public key is invalid\n"
         "   2  usage error\n"
         "   3  file system error\n"
         "   4  target already exists (use --force)\n"
         "   5  file does not decode\n"
         "   6  bad argument (index or set out of range)\n"
         "   7  missing key directory, key file or header file\n"
         "   8  stored key does not match its slot or fails validation\n"
         "  10  decaps: index not in recipient set\n"
         "  11  decaps: header validity check failed\n"
         "  12  decaps: header signature check failed\n"
         "  13  decaps: malformed header\n"
         "  14  tamper-suite: at least one case failed\n"
         "  70  internal error\n"
         "Environment: DBE_DIR is the default for --dir / --out.";
}

int ExitCodeFor(const absl::Status& status) {
  switch (ErrorCodeOf(status)) {
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kAlreadyExists:
      return kExitExists;
    case ErrorCode::kTruncated:
    case ErrorCode::kBadMagic:
    case ErrorCode::kUnknownKind:
    case ErrorCode::kUnsupportedVersion:
    case ErrorCode::kWrongKind:
    case ErrorCode::kIndexSet:
    case ErrorCode::kBadEncoding:
    case ErrorCode::kNotOnCurve:
    case ErrorCode::kNotInSubgroup:
    case ErrorCode::kTrailingBytes:
    case ErrorCode::kLengthMismatch:
      return kExitDecode;
    case ErrorCode::kInvalidArgument:
      return kExitBadArgument;
    case ErrorCode::kMissingKey:
      return kExitMissing;
    case ErrorCode::kInvalidKey:
      return kExitStoredKeyInvalid;
    default:
      return kExitInternal;
  }
}

int ExitCodeFor(Rejection rejection) {
  switch (rejection) {
    case Rejection::kNotInRecipientSet: return kExitNotInSet;
    case Rejection::kInvalidHeader: return kExitInvalidHeader;
    case Rejection::kBadSignature: return kExitBadSignature;
    case Rejection::kMalformedHeader: return kExitMalformedHeader;
  }
  return kExitInternal;
}

absl::StatusOr<IndexSet> ParseIndexSet(std::string_view text) {
  IndexSet out;
  for (absl::string_view part : absl::StrSplit(absl::string_view(text.data(), text.size()), ',')) {
    uint32_t v = 0;
    if (!absl::SimpleAtoi(part, &v) || v == 0) {
      return MakeError(ErrorCode::kInvalidArgument,
                       absl::StrCat("bad index \"", std::string(part),
                                    "\" in set \"", std::string(text), "\""));
    }
    if (!out.insert(v).second) {
      return MakeError(ErrorCode::kInvalidArgument,
                       absl::StrCat("duplicate index ", v, " in set"));
    }
  }
  return out;
}

std::vector<uint8_t> CommandSeed(std::span<const uint8_t> seed,
                                 std::string_view command, Index index) {
  const std::string label = absl::StrCat("dbe/cli/", std::string(command));
  std::vector<uint8_t> out;
  const uint64_t len = label.size();
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<uint8_t>(len >> (8 * i)));
  out.insert(out.end(), label.begin(), label.end());
  for (int i = 3; i >= 0; --i) out.push_back(static_cast<uint8_t>(index >> (8 * i)));
  out.insert(out.end(), seed.begin(), seed.end());
  return out;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("DBE_DIR")) o.dir = env;

  CLI::App app{"Distributed broadcast encryption: key directory management "
               "and adaptive-CCA key encapsulation.",
               "dbe"};
  app.footer(ExitCodeTable());
  app.require_subcommand(1);

  auto add_dir = [&](CLI::App* c) {
    c->add_option("--dir", o.dir, "Key directory (default: $DBE_DIR)");
  };
  auto add_seed = [&](CLI::App* c) {
#ifdef DBE_SEEDED_RNG
    c->add_option("--seed", o.seed_hex,
                  "Hex seed for reproducible output (test builds only)");
#else
    (void)c;
#endif
  };

  CLI::App* setup = app.add_subcommand("setup", "Create public parameters");
  setup->add_option("--users", o.users, "Number of users L")->required();
  setup->add_option("--out", o.dir, "Directory to initialize (default: $DBE_DIR)");
  setup->add_flag("--force", o.force, "Replace existing parameters and keys");
  add_seed(setup);

  CLI::App* keygen = app.add_subcommand("keygen", "Generate and store user keys");
  add_dir(keygen);
  keygen->add_option("--index", o.index, "User index")->required();
  keygen->add_flag("--force", o.force, "Replace existing keys for this index");
  add_seed(keygen);

  CLI::App* verify = app.add_subcommand(
      "verify-key", "Check a stored public key; prints 1 or 0");
  add_dir(verify);
  verify->add_option("--index", o.index, "User index")->required();
  add_seed(verify);

  CLI::App* encaps = app.add_subcommand("encaps", "Encapsulate a session key");
  add_dir(encaps);
  encaps->add_option("--set", o.set, "Recipient set, e.g. 1,3,4")->required();
  encaps->add_option("--au", o.au, "Associated data (UTF-8)");
  encaps->add_option("--out", o.out_path, "Header output file")->required();
  encaps->add_option("--key-out", o.key_out,
                     "Session key output file (hex); default: standard output");
  add_seed(encaps);

  CLI::App* decaps = app.add_subcommand(
      "decaps", "Decapsulate a header; prints the session key in hex");
  add_dir(decaps);
  decaps->add_option("--index", o.index, "Decrypting user")->required();
  decaps->add_option("--set", o.set, "Recipient set the header was made for")
      ->required();
  decaps->add_option("--header", o.header_path, "Header file")->required();
  decaps->add_option("--au", o.au, "Associated data (UTF-8)");
  add_seed(decaps);

  CLI::App* bench = app.add_subcommand(
      "bench", "Benchmark; CSV on standard output");
  add_dir(bench);
  bench->add_option("--sizes", o.sizes, "Semi-static capacities L")
      ->capture_default_str();
  bench->add_option("--reps", o.reps, "Repetitions per timing")
      ->capture_default_str();
  bench->add_option("--encaps-size", o.encaps_size,
                    "Recipient set size (default: min(L, 16))");
  add_seed(bench);

  CLI::App* tamper = app.add_subcommand(
      "tamper-suite", "Run the tamper matrix against a key directory");
  add_dir(tamper);
  add_seed(tamper);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("dbe");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (*setup) return CmdSetup(o, out, err);
  if (*keygen) return CmdKeyGen(o, out, err);
  if (*verify) return CmdVerifyKey(o, out, err);
  if (*encaps) return CmdEncaps(o, out, err);
  if (*decaps) return CmdDecaps(o, out, err);
  if (*bench) return CmdBench(o, out, err);
  if (*tamper) return CmdTamperSuite(o, out, err);
  return kExitUsage;
}

}  // namespace dbe::cli
