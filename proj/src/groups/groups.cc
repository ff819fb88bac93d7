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

#include "dbe/groups.h"

#include <openssl/crypto.h>

#include <algorithm>
#include <bit>

#include "dbe/groups/pairing.h"
#include "dbe/status.h"

namespace dbe {

using bls12::Fp;
using bls12::Fp12;
using bls12::Fp2;
using bls12::Fr;
using bls12::G1Point;
using bls12::G2Point;
using bls12::Limbs;

namespace {

thread_local OperationCounters tls_counters;

inline void CountPairing() {
#ifdef DBE_OP_COUNTERS
  ++tls_counters.pairings;
#endif
}

inline void CountMembership() {
#ifdef DBE_OP_COUNTERS
  ++tls_counters.membership_checks;
#endif
}

constexpr uint8_t kFlagCompressed = 0x80;
constexpr uint8_t kFlagInfinity = 0x40;
constexpr uint8_t kFlagSign = 0x20;
constexpr uint8_t kFlagMask = 0xe0;

// Returns false unless `bytes` is the canonical identity encoding.
bool IsCanonicalInfinity(std::span<const uint8_t> bytes) {
  if (bytes[0] != (kFlagCompressed | kFlagInfinity)) return false;
  return std::all_of(bytes.begin() + 1, bytes.end(),
                     [](uint8_t b) { return b == 0; });
}

// Bucket-method multi-exponentiation over any group given identity, the
// group operation and squaring/doubling.
template <class T, class Op, class Dbl>
T BucketMultiExp(std::span<const T> bases, std::span<const Scalar> exps,
                 const T& identity, Op op, Dbl dbl) {
  const size_t n = bases.size();
  std::vector<Limbs<4>> bits(n);
  size_t max_bits = 0;
  for (size_t i = 0; i < n; ++i) {
    bits[i] = exps[i].Bits();
    max_bits = std::max(max_bits, bls12::LimbsBitLength(bits[i]));
  }
  if (max_bits == 0) return identity;

  size_t window = n < 4 ? 1 : static_cast<size_t>(std::bit_width(n)) - 2;
  window = std::clamp<size_t>(window, 1, 12);
  const size_t num_windows = (max_bits + window - 1) / window;
  std::vector<T> buckets((size_t{1} << window) - 1, identity);

  auto digit = [&](size_t i, size_t w) {
    unsigned d = 0;
    for (size_t b = window; b-- > 0;) {
      size_t pos = w * window + b;
      d = (d << 1) | (pos < 256 && bls12::LimbsBit(bits[i], pos) ? 1u : 0u);
    }
    return d;
  };

  T acc = identity;
  for (size_t w = num_windows; w-- > 0;) {
    for (size_t k = 0; k < window; ++k) acc = dbl(acc);
    std::fill(buckets.begin(), buckets.end(), identity);
    for (size_t i = 0; i < n; ++i) {
      unsigned d = digit(i, w);
      if (d != 0) buckets[d - 1] = op(buckets[d - 1], bases[i]);
    }
    // sum_d d * bucket[d] via running suffix sums.
    T running = identity;
    T window_sum = identity;
    for (size_t d = buckets.size(); d-- > 0;) {
      running = op(running, buckets[d]);
      window_sum = op(window_sum, running);
    }
    acc = op(acc, window_sum);
  }
  return acc;
}

absl::Status CheckLengths(size_t bases, size_t exps) {
  if (bases != exps) {
    return MakeError(ErrorCode::kLengthMismatch,
                     "multi-exponentiation: bases and exponents differ in "
                     "length");
  }
  return absl::OkStatus();
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar Scalar::Random(RandomSource& rng) {
  // r has 255 bits: clear the top bit of a 256-bit draw and reject >= r.
  for (;;) {
    std::array<uint8_t, kBytes> buf;
    rng.Fill(buf);
    buf[0] &= 0x7f;
    Limbs<4> v;
    bls12::LimbsFromBigEndian<4>(buf, v);
    if (bls12::LimbsCompare(v, Fr::kModulus) < 0) {
      OPENSSL_cleanse(buf.data(), buf.size());
      return Scalar(Fr::FromCanonical(v));
    }
  }
}

Scalar Scalar::RandomNonZero(RandomSource& rng) {
  for (;;) {
    Scalar s = Random(rng);
    if (!s.IsZero()) return s;
  }
}

Scalar Scalar::RandomBits(RandomSource& rng, size_t bits) {
  bits = std::min<size_t>(bits, 254);
  std::array<uint8_t, kBytes> buf{};
  const size_t nbytes = (bits + 7) / 8;
  rng.Fill(std::span(buf).last(nbytes));
  if (bits % 8 != 0) {
    buf[kBytes - nbytes] &= static_cast<uint8_t>((1u << (bits % 8)) - 1);
  }
  Limbs<4> v;
  bls12::LimbsFromBigEndian<4>(buf, v);
  return Scalar(Fr::FromCanonical(v));
}

absl::StatusOr<Scalar> Scalar::FromBytes(std::span<const uint8_t> bytes) {
  if (bytes.size() != kBytes) {
    return MakeError(ErrorCode::kBadEncoding, "scalar: expected 32 bytes");
  }
  auto v = Fr::FromBytes(bytes);
  if (!v) return MakeError(ErrorCode::kBadEncoding, "scalar: not below r");
  return Scalar(*v);
}

std::array<uint8_t, Scalar::kBytes> Scalar::ToBytes() const {
  std::array<uint8_t, kBytes> out;
  v_.ToBytes(out);
  return out;
}

void Scalar::Wipe() { OPENSSL_cleanse(&v_, sizeof(v_)); }

// ---------------------------------------------------------------- G1

const G1Element& G1Element::Generator() {
  static const G1Element g(G1Point::Generator());
  return g;
}

G1Element G1Element::Pow(const Scalar& s) const {
  return G1Element(p_.MulWindowed(s.Bits()));
}

std::array<uint8_t, G1Element::kBytes> G1Element::ToBytes() const {
  std::array<uint8_t, kBytes> out{};
  if (p_.IsIdentity()) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return out;
  }
  auto a = p_.ToAffine();
  a.x.ToBytes(out);
  out[0] |= kFlagCompressed;
  if (a.y.IsLexLargest()) out[0] |= kFlagSign;
  return out;
}

absl::StatusOr<G1Element> G1Element::FromBytes(std::span<const uint8_t> bytes) {
  if (bytes.size() != kBytes) {
    return MakeError(ErrorCode::kBadEncoding, "G1: expected 48 bytes");
  }
  const uint8_t flags = bytes[0] & kFlagMask;
  if ((flags & kFlagCompressed) == 0) {
    return MakeError(ErrorCode::kBadEncoding, "G1: compression flag not set");
  }
  if ((flags & kFlagInfinity) != 0) {
    if (!IsCanonicalInfinity(bytes)) {
      return MakeError(ErrorCode::kBadEncoding,
                       "G1: non-canonical identity encoding");
    }
    return G1Element();
  }
  std::array<uint8_t, kBytes> xb;
  std::copy(bytes.begin(), bytes.end(), xb.begin());
  xb[0] &= static_cast<uint8_t>(~kFlagMask);
  auto x = Fp::FromBytes(xb);
  if (!x) return MakeError(ErrorCode::kBadEncoding, "G1: x not below p");
  auto y = (x->Square() * *x + bls12::E1Curve::B()).Sqrt();
  if (!y) return MakeError(ErrorCode::kNotOnCurve, "G1: x not on curve");
  if (y->IsLexLargest() != ((flags & kFlagSign) != 0)) *y = -*y;
  G1Element e(G1Point::FromAffineUnchecked(*x, *y));
  if (!e.CheckMembership()) {
    return MakeError(ErrorCode::kNotInSubgroup,
                     "G1: point outside the prime-order subgroup");
  }
  return e;
}

bool G1Element::CheckMembership() const {
  CountMembership();
  return p_.IsOnCurve() && bls12::G1InSubgroup(p_);
}

// ---------------------------------------------------------------- G2

const G2Element& G2Element::Generator() {
  static const G2Element g(G2Point::Generator());
  return g;
}

G2Element G2Element::Pow(const Scalar& s) const {
  return G2Element(p_.MulWindowed(s.Bits()));
}

std::array<uint8_t, G2Element::kBytes> G2Element::ToBytes() const {
  std::array<uint8_t, kBytes> out{};
  if (p_.IsIdentity()) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return out;
  }
  auto a = p_.ToAffine();
  a.x.c1.ToBytes(std::span(out).first(48));
  a.x.c0.ToBytes(std::span(out).last(48));
  out[0] |= kFlagCompressed;
  if (a.y.IsLexLargest()) out[0] |= kFlagSign;
  return out;
}

absl::StatusOr<G2Element> G2Element::FromBytes(std::span<const uint8_t> bytes) {
  if (bytes.size() != kBytes) {
    return MakeError(ErrorCode::kBadEncoding, "G2: expected 96 bytes");
  }
  const uint8_t flags = bytes[0] & kFlagMask;
  if ((flags & kFlagCompressed) == 0) {
    return MakeError(ErrorCode::kBadEncoding, "G2: compression flag not set");
  }
  if ((flags & kFlagInfinity) != 0) {
    if (!IsCanonicalInfinity(bytes)) {
      return MakeError(ErrorCode::kBadEncoding,
                       "G2: non-canonical identity encoding");
    }
    return G2Element();
  }
  std::array<uint8_t, 48> c1b;
  std::copy(bytes.begin(), bytes.begin() + 48, c1b.begin());
  c1b[0] &= static_cast<uint8_t>(~kFlagMask);
  auto c1 = Fp::FromBytes(c1b);
  auto c0 = Fp::FromBytes(bytes.subspan(48));
  if (!c0 || !c1) return MakeError(ErrorCode::kBadEncoding, "G2: x not below p");
  Fp2 x{*c0, *c1};
  auto y = (x.Square() * x + bls12::E2Curve::B()).Sqrt();
  if (!y) return MakeError(ErrorCode::kNotOnCurve, "G2: x not on curve");
  if (y->IsLexLargest() != ((flags & kFlagSign) != 0)) *y = -*y;
  G2Element e(G2Point::FromAffineUnchecked(x, *y));
  if (!e.CheckMembership()) {
    return MakeError(ErrorCode::kNotInSubgroup,
                     "G2: point outside the prime-order subgroup");
  }
  return e;
}

bool G2Element::CheckMembership() const {
  CountMembership();
  return p_.IsOnCurve() && bls12::G2InSubgroup(p_);
}

// ---------------------------------------------------------------- GT

GtElement GtElement::Pow(const Scalar& s) const {
  return GtElement(v_.Pow(s.Bits()));
}

std::array<uint8_t, GtElement::kBytes> GtElement::ToBytes() const {
  std::array<uint8_t, kBytes> out{};
  const Fp2* coeffs[6] = {&v_.c0.c0, &v_.c0.c1, &v_.c0.c2,
                          &v_.c1.c0, &v_.c1.c1, &v_.c1.c2};
  std::span<uint8_t> dst(out);
  for (int k = 0; k < 6; ++k) {
    coeffs[k]->c0.ToBytes(dst.subspan(static_cast<size_t>(96 * k), 48));
    coeffs[k]->c1.ToBytes(dst.subspan(static_cast<size_t>(96 * k + 48), 48));
  }
  return out;
}

absl::StatusOr<GtElement> GtElement::FromBytes(std::span<const uint8_t> bytes) {
  if (bytes.size() != kBytes) {
    return MakeError(ErrorCode::kBadEncoding, "GT: expected 576 bytes");
  }
  Fp parts[12];
  for (size_t k = 0; k < 12; ++k) {
    auto f = Fp::FromBytes(bytes.subspan(48 * k, 48));
    if (!f) return MakeError(ErrorCode::kBadEncoding, "GT: coefficient >= p");
    parts[k] = *f;
  }
  Fp12 v{bls12::Fp6{Fp2{parts[0], parts[1]}, Fp2{parts[2], parts[3]},
                    Fp2{parts[4], parts[5]}},
         bls12::Fp6{Fp2{parts[6], parts[7]}, Fp2{parts[8], parts[9]},
                    Fp2{parts[10], parts[11]}}};
  CountMembership();
  if (v.IsZero() || !v.Pow(Fr::kModulus).IsOne()) {
    return MakeError(ErrorCode::kNotInSubgroup,
                     "GT: element outside the order-r subgroup");
  }
  return GtElement(v);
}

GtElement Pairing(const G1Element& a, const G2Element& b) {
  CountPairing();
  return GtElement(bls12::Pair(a.point(), b.point()));
}

// ---------------------------------------------------------------- multi-exp

absl::StatusOr<G1Element> MultiExp(std::span<const G1Element> bases,
                                   std::span<const Scalar> exps) {
  DBE_RETURN_IF_ERROR(CheckLengths(bases.size(), exps.size()));
  return BucketMultiExp<G1Element>(
      bases, exps, G1Element::Identity(),
      [](const G1Element& a, const G1Element& b) { return a * b; },
      [](const G1Element& a) {
        return G1Element::FromPointUnchecked(a.point().Double());
      });
}

absl::StatusOr<G2Element> MultiExp(std::span<const G2Element> bases,
                                   std::span<const Scalar> exps) {
  DBE_RETURN_IF_ERROR(CheckLengths(bases.size(), exps.size()));
  return BucketMultiExp<G2Element>(
      bases, exps, G2Element::Identity(),
      [](const G2Element& a, const G2Element& b) { return a * b; },
      [](const G2Element& a) {
        return G2Element::FromPointUnchecked(a.point().Double());
      });
}

absl::StatusOr<GtElement> MultiExp(std::span<const GtElement> bases,
                                   std::span<const Scalar> exps) {
  DBE_RETURN_IF_ERROR(CheckLengths(bases.size(), exps.size()));
  return BucketMultiExp<GtElement>(
      bases, exps, GtElement::Identity(),
      [](const GtElement& a, const GtElement& b) { return a * b; },
      [](const GtElement& a) { return a * a; });
}

// ---------------------------------------------------------------- context

const GroupContext& GroupContext::Get() {
  static const GroupContext ctx = [] {
    GroupContext c;
    c.order = Fr::kModulus;
    c.g = G1Element::Generator();
    c.g_hat = G2Element::Generator();
    c.gt_generator = GtElement(bls12::Pair(c.g.point(), c.g_hat.point()));
    return c;
  }();
  return ctx;
}

OperationCounters ReadCounters() { return tls_counters; }

void ResetCounters() { tls_counters = OperationCounters{}; }

}  // namespace dbe
