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
#include <map>
#include <string>

#include "absl/strings/str_cat.h"
#include "dbe/status.h"

namespace dbe::codec {

namespace {

class Writer {
 public:
  explicit Writer(Kind kind) {
    out_.insert(out_.end(), kMagic.begin(), kMagic.end());
    out_.push_back(static_cast<uint8_t>(kind));
    out_.push_back(kVersion);
  }
  Writer() = default;

  void U8(uint8_t v) { out_.push_back(v); }
  void U32(uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out_.push_back(static_cast<uint8_t>(v >> s));
  }
  void Bytes(std::span<const uint8_t> b) {
    out_.insert(out_.end(), b.begin(), b.end());
  }
  template <class E>
  void Element(const E& e) {
    Bytes(e.ToBytes());
  }
  template <class E>
  void Map(const std::map<Index, E>& m) {
    U32(static_cast<uint32_t>(m.size()));
    for (const auto& [k, e] : m) {
      U32(k);
      Element(e);
    }
  }

  std::vector<uint8_t> Take() { return std::move(out_); }

 private:
  std::vector<uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const uint8_t> in) : in_(in) {}

  absl::Status Envelope(Kind expected) {
    DBE_ASSIGN_OR_RETURN(Kind kind, PeekKind(in_));
    if (kind != expected) {
      return MakeError(ErrorCode::kWrongKind,
                       absl::StrCat("expected ", std::string(KindName(expected)),
                                    ", found ",
                                    std::string(KindName(kind))));
    }
    pos_ = kEnvelopeBytes;
    return absl::OkStatus();
  }

  absl::StatusOr<std::span<const uint8_t>> Take(size_t n) {
    if (in_.size() - pos_ < n) {
      return MakeError(ErrorCode::kTruncated,
                       absl::StrCat("need ", n, " bytes at offset ", pos_,
                                    ", have ", in_.size() - pos_));
    }
    auto out = in_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  absl::StatusOr<uint8_t> U8() {
    DBE_ASSIGN_OR_RETURN(auto b, Take(1));
    return b[0];
  }

  absl::StatusOr<uint32_t> U32() {
    DBE_ASSIGN_OR_RETURN(auto b, Take(4));
    return (uint32_t{b[0]} << 24) | (uint32_t{b[1]} << 16) |
           (uint32_t{b[2]} << 8) | uint32_t{b[3]};
  }

  template <class E>
  absl::StatusOr<E> Element() {
    DBE_ASSIGN_OR_RETURN(auto b, Take(E::kBytes));
    return E::FromBytes(b);
  }

  template <class E>
  absl::StatusOr<std::map<Index, E>> Map() {
    DBE_ASSIGN_OR_RETURN(uint32_t count, U32());
    if (count > Remaining() / (4 + E::kBytes)) {
      return MakeError(ErrorCode::kTruncated,
                       absl::StrCat("map of ", count, " entries exceeds input"));
    }
    std::map<Index, E> out;
    Index prev = 0;
    for (uint32_t n = 0; n < count; ++n) {
      DBE_ASSIGN_OR_RETURN(uint32_t k, U32());
      if (n > 0 && k <= prev) {
        return MakeError(ErrorCode::kBadEncoding,
                         "map indices not strictly ascending");
      }
      prev = k;
      DBE_ASSIGN_OR_RETURN(E e, Element<E>());
      out.emplace_hint(out.end(), k, e);
    }
    return out;
  }

  absl::Status Finish() const {
    if (pos_ != in_.size()) {
      return MakeError(ErrorCode::kTrailingBytes,
                       absl::StrCat(in_.size() - pos_, " trailing bytes"));
    }
    return absl::OkStatus();
  }

  size_t Remaining() const { return in_.size() - pos_; }

 private:
  std::span<const uint8_t> in_;
  size_t pos_ = 0;
};

absl::Status IndexError(std::string_view what) {
  return MakeError(ErrorCode::kIndexSet, what);
}

absl::Status CheckCapacityAndIndex(Index capacity, Index i) {
  if (capacity < 1 || capacity > ss::kMaxCapacity) {
    return IndexError(absl::StrCat("capacity ", capacity, " out of range"));
  }
  if (i < 1 || i > capacity) {
    return IndexError(absl::StrCat("user index ", i, " outside [1, ",
                                   capacity, "]"));
  }
  return absl::OkStatus();
}

void WriteSsPublicKeyBody(Writer& w, const ss::UserPublicKey& upk) {
  w.U32(upk.capacity);
  w.U32(upk.index);
  w.Element(upk.v);
  w.Element(upk.v_hat);
  w.Map(upk.vk);
}

absl::StatusOr<ss::UserPublicKey> ReadSsPublicKeyBody(Reader& r) {
  ss::UserPublicKey upk;
  DBE_ASSIGN_OR_RETURN(upk.capacity, r.U32());
  DBE_ASSIGN_OR_RETURN(upk.index, r.U32());
  DBE_RETURN_IF_ERROR(CheckCapacityAndIndex(upk.capacity, upk.index));
  DBE_ASSIGN_OR_RETURN(upk.v, r.Element<G1Element>());
  DBE_ASSIGN_OR_RETURN(upk.v_hat, r.Element<G2Element>());
  DBE_ASSIGN_OR_RETURN(upk.vk, r.Map<G1Element>());
  IndexSet required = ss::RequiredVkIndices(upk.capacity, upk.index);
  if (upk.vk.size() != required.size() ||
      !std::equal(required.begin(), required.end(), upk.vk.begin(),
                  [](Index k, const auto& kv) { return k == kv.first; })) {
    return IndexError("V_k must cover exactly [2, L+1] without L+2-i");
  }
  return upk;
}

void WriteSsSecretKeyBody(Writer& w, const ss::UserSecretKey& usk) {
  w.U32(usk.capacity);
  w.U32(usk.index);
  w.Element(usk.k);
}

absl::StatusOr<ss::UserSecretKey> ReadSsSecretKeyBody(Reader& r) {
  ss::UserSecretKey usk;
  DBE_ASSIGN_OR_RETURN(usk.capacity, r.U32());
  DBE_ASSIGN_OR_RETURN(usk.index, r.U32());
  DBE_RETURN_IF_ERROR(CheckCapacityAndIndex(usk.capacity, usk.index));
  DBE_ASSIGN_OR_RETURN(usk.k, r.Element<G1Element>());
  return usk;
}

void WriteSsHeaderBody(Writer& w, const ss::Header& ch) {
  w.Element(ch.c1_hat);
  w.Element(ch.c2);
}

absl::StatusOr<ss::Header> ReadSsHeaderBody(Reader& r) {
  ss::Header ch;
  DBE_ASSIGN_OR_RETURN(ch.c1_hat, r.Element<G2Element>());
  DBE_ASSIGN_OR_RETURN(ch.c2, r.Element<G1Element>());
  return ch;
}

void WriteCmBody(Writer& w, const ad::CipherMessage& cm) {
  WriteSsHeaderBody(w, cm.ch0);
  WriteSsHeaderBody(w, cm.ch1);
  w.Bytes(cm.ct0);
  w.Bytes(cm.ct1);
  w.U32(static_cast<uint32_t>(cm.z.size()));
  std::vector<uint8_t> packed((cm.z.size() + 7) / 8, 0);
  for (size_t n = 0; n < cm.z.size(); ++n) {
    if (cm.z[n]) packed[n / 8] |= static_cast<uint8_t>(0x80 >> (n % 8));
  }
  w.Bytes(packed);
}

absl::StatusOr<ad::CipherMessage> ReadCmBody(Reader& r) {
  ad::CipherMessage cm;
  DBE_ASSIGN_OR_RETURN(cm.ch0, ReadSsHeaderBody(r));
  DBE_ASSIGN_OR_RETURN(cm.ch1, ReadSsHeaderBody(r));
  DBE_ASSIGN_OR_RETURN(auto ct0, r.Take(cm.ct0.size()));
  std::copy(ct0.begin(), ct0.end(), cm.ct0.begin());
  DBE_ASSIGN_OR_RETURN(auto ct1, r.Take(cm.ct1.size()));
  std::copy(ct1.begin(), ct1.end(), cm.ct1.begin());
  DBE_ASSIGN_OR_RETURN(uint32_t bits, r.U32());
  if (bits > ss::kMaxCapacity) {
    return MakeError(ErrorCode::kBadEncoding,
                     absl::StrCat("bitmap length ", bits, " out of range"));
  }
  DBE_ASSIGN_OR_RETURN(auto packed, r.Take((size_t{bits} + 7) / 8));
  cm.z.resize(bits);
  for (size_t n = 0; n < bits; ++n) {
    cm.z[n] = (packed[n / 8] >> (7 - n % 8)) & 1;
  }
  if (bits % 8 != 0 && (packed.back() & (0xff >> (bits % 8))) != 0) {
    return MakeError(ErrorCode::kBadEncoding, "nonzero bitmap padding");
  }
  return cm;
}

}  // namespace

std::string_view KindName(Kind kind) {
  switch (kind) {
    case Kind::kPublicParams: return "public-params";
    case Kind::kSsPublicKey: return "ss-public-key";
    case Kind::kSsSecretKey: return "ss-secret-key";
    case Kind::kSsHeader: return "ss-header";
    case Kind::kAdPublicKey: return "ad-public-key";
    case Kind::kAdSecretKey: return "ad-secret-key";
    case Kind::kAdHeader: return "ad-header";
    case Kind::kOtsVerificationKey: return "ots-verification-key";
  }
  return "unknown";
}

bool IsSecretKind(Kind kind) {
  return kind == Kind::kSsSecretKey || kind == Kind::kAdSecretKey;
}

absl::StatusOr<Kind> PeekKind(std::span<const uint8_t> bytes) {
  if (bytes.size() < kEnvelopeBytes) {
    return MakeError(ErrorCode::kTruncated, "input shorter than envelope");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    return MakeError(ErrorCode::kBadMagic, "missing DBE1 magic");
  }
  const uint8_t kind = bytes[4];
  if (kind < 0x01 || kind > 0x08) {
    return MakeError(ErrorCode::kUnknownKind,
                     absl::StrCat("unknown object kind ", kind));
  }
  if (bytes[5] != kVersion) {
    return MakeError(ErrorCode::kUnsupportedVersion,
                     absl::StrCat("unsupported format version ", bytes[5]));
  }
  return static_cast<Kind>(kind);
}

std::vector<uint8_t> Encode(const ss::PublicParams& pp) {
  Writer w(Kind::kPublicParams);
  w.U32(pp.capacity);
  w.Map(pp.a);
  w.Map(pp.a_hat);
  w.Element(pp.b);
  w.Map(pp.bk);
  w.Element(pp.omega);
  return w.Take();
}

std::vector<uint8_t> Encode(const ss::UserPublicKey& upk) {
  Writer w(Kind::kSsPublicKey);
  WriteSsPublicKeyBody(w, upk);
  return w.Take();
}

std::vector<uint8_t> Encode(const ss::UserSecretKey& usk) {
  Writer w(Kind::kSsSecretKey);
  WriteSsSecretKeyBody(w, usk);
  return w.Take();
}

std::vector<uint8_t> Encode(const ss::Header& ch) {
  Writer w(Kind::kSsHeader);
  WriteSsHeaderBody(w, ch);
  return w.Take();
}

std::vector<uint8_t> Encode(const ad::UserPublicKey& upk) {
  Writer w(Kind::kAdPublicKey);
  w.U32(upk.even.capacity / 2);
  w.U32(upk.index);
  WriteSsPublicKeyBody(w, upk.even);
  WriteSsPublicKeyBody(w, upk.odd);
  return w.Take();
}

std::vector<uint8_t> Encode(const ad::UserSecretKey& usk) {
  Writer w(Kind::kAdSecretKey);
  w.U32(usk.slot_key.capacity / 2);
  w.U32(usk.index);
  w.U8(usk.kept_bit);
  WriteSsSecretKeyBody(w, usk.slot_key);
  return w.Take();
}

std::vector<uint8_t> Encode(const ad::Header& ch) {
  Writer w(Kind::kAdHeader);
  WriteCmBody(w, ch.cm);
  w.Element(ch.sigma.sigma);
  w.Element(ch.vk.X);
  return w.Take();
}

std::vector<uint8_t> Encode(const OtsVerificationKey& vk) {
  Writer w(Kind::kOtsVerificationKey);
  w.Element(vk.X);
  return w.Take();
}

std::vector<uint8_t> CmPreimage(const ad::CipherMessage& cm) {
  Writer w;
  w.Bytes(AsBytes(kCmDomain));
  w.U8(kVersion);
  WriteCmBody(w, cm);
  return w.Take();
}

absl::StatusOr<ss::PublicParams> DecodePublicParams(
    std::span<const uint8_t> bytes) {
  Reader r(bytes);
  DBE_RETURN_IF_ERROR(r.Envelope(Kind::kPublicParams));
  ss::PublicParams pp;
  DBE_ASSIGN_OR_RETURN(pp.capacity, r.U32());
  if (pp.capacity < 1 || pp.capacity > ss::kMaxCapacity) {
    return IndexError(absl::StrCat("capacity ", pp.capacity, " out of range"));
  }
  DBE_ASSIGN_OR_RETURN(pp.a, r.Map<G1Element>());
  if (pp.a.contains(pp.capacity + 2)) {
    return IndexError("A must not contain index L+2");
  }
  DBE_ASSIGN_OR_RETURN(pp.a_hat, r.Map<G2Element>());
  DBE_ASSIGN_OR_RETURN(pp.b, r.Element<G1Element>());
  DBE_ASSIGN_OR_RETURN(pp.bk, r.Map<G1Element>());
  DBE_ASSIGN_OR_RETURN(pp.omega, r.Element<GtElement>());
  DBE_RETURN_IF_ERROR(r.Finish());
  DBE_RETURN_IF_ERROR(pp.CheckStructure());
  return pp;
}

absl::StatusOr<ss::UserPublicKey> DecodeSsPublicKey(
    std::span<const uint8_t> bytes) {
  Reader r(bytes);
  DBE_RETURN_IF_ERROR(r.Envelope(Kind::kSsPublicKey));
  DBE_ASSIGN_OR_RETURN(ss::UserPublicKey upk, ReadSsPublicKeyBody(r));
  DBE_RETURN_IF_ERROR(r.Finish());
  return upk;
}

absl::StatusOr<ss::UserSecretKey> DecodeSsSecretKey(
    std::span<const uint8_t> bytes) {
  Reader r(bytes);
  DBE_RETURN_IF_ERROR(r.Envelope(Kind::kSsSecretKey));
  DBE_ASSIGN_OR_RETURN(ss::UserSecretKey usk, ReadSsSecretKeyBody(r));
  DBE_RETURN_IF_ERROR(r.Finish());
  return usk;
}

absl::StatusOr<ss::Header> DecodeSsHeader(std::span<const uint8_t> bytes) {
  Reader r(bytes);
  DBE_RETURN_IF_ERROR(r.Envelope(Kind::kSsHeader));
  DBE_ASSIGN_OR_RETURN(ss::Header ch, ReadSsHeaderBody(r));
  DBE_RETURN_IF_ERROR(r.Finish());
  return ch;
}

absl::StatusOr<ad::UserPublicKey> DecodeAdPublicKey(
    std::span<const uint8_t> bytes) {
  Reader r(bytes);
  DBE_RETURN_IF_ERROR(r.Envelope(Kind::kAdPublicKey));
  ad::UserPublicKey upk;
  DBE_ASSIGN_OR_RETURN(uint32_t users, r.U32());
  DBE_ASSIGN_OR_RETURN(upk.index, r.U32());
  DBE_RETURN_IF_ERROR(CheckCapacityAndIndex(users, upk.index));
  DBE_ASSIGN_OR_RETURN(upk.even, ReadSsPublicKeyBody(r));
  DBE_ASSIGN_OR_RETURN(upk.odd, ReadSsPublicKeyBody(r));
  DBE_RETURN_IF_ERROR(r.Finish());
  if (upk.even.capacity != 2 * users || upk.odd.capacity != 2 * users ||
      upk.even.index != ad::EvenSlot(upk.index) ||
      upk.odd.index != ad::OddSlot(upk.index)) {
    return IndexError("slot keys must sit at 2i and 2i-1 with capacity 2L");
  }
  return upk;
}

absl::StatusOr<ad::UserSecretKey> DecodeAdSecretKey(
    std::span<const uint8_t> bytes) {
  Reader r(bytes);
  DBE_RETURN_IF_ERROR(r.Envelope(Kind::kAdSecretKey));
  ad::UserSecretKey usk;
  DBE_ASSIGN_OR_RETURN(uint32_t users, r.U32());
  DBE_ASSIGN_OR_RETURN(usk.index, r.U32());
  DBE_RETURN_IF_ERROR(CheckCapacityAndIndex(users, usk.index));
  DBE_ASSIGN_OR_RETURN(usk.kept_bit, r.U8());
  if (usk.kept_bit > 1) {
    return MakeError(ErrorCode::kBadEncoding, "kept bit must be 0 or 1");
  }
  DBE_ASSIGN_OR_RETURN(usk.slot_key, ReadSsSecretKeyBody(r));
  DBE_RETURN_IF_ERROR(r.Finish());
  if (usk.slot_key.capacity != 2 * users ||
      usk.slot_key.index != 2 * usk.index - usk.kept_bit) {
    return IndexError("slot key must sit at 2i - u with capacity 2L");
  }
  return usk;
}

absl::StatusOr<ad::Header> DecodeAdHeader(std::span<const uint8_t> bytes) {
  Reader r(bytes);
  DBE_RETURN_IF_ERROR(r.Envelope(Kind::kAdHeader));
  ad::Header ch;
  DBE_ASSIGN_OR_RETURN(ch.cm, ReadCmBody(r));
  DBE_ASSIGN_OR_RETURN(ch.sigma.sigma, r.Element<G1Element>());
  DBE_ASSIGN_OR_RETURN(ch.vk.X, r.Element<G2Element>());
  DBE_RETURN_IF_ERROR(r.Finish());
  return ch;
}

absl::StatusOr<OtsVerificationKey> DecodeOtsVerificationKey(
    std::span<const uint8_t> bytes) {
  Reader r(bytes);
  DBE_RETURN_IF_ERROR(r.Envelope(Kind::kOtsVerificationKey));
  OtsVerificationKey vk;
  DBE_ASSIGN_OR_RETURN(vk.X, r.Element<G2Element>());
  DBE_RETURN_IF_ERROR(r.Finish());
  return vk;
}

}  // namespace dbe::codec
