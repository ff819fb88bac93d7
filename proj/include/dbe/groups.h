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

// Asymmetric bilinear group e : G x G^ -> GT of prime order r, instantiated
// with BLS12-381 (G = E1 over Fp, G^ = the twist E2 over Fp2).
//
// All element types use multiplicative notation: `a * b` is the group
// operation and `a.Pow(s)` exponentiation. G1Element and G2Element are
// distinct types with no conversion between them.
//
// Every element obtained from this API (arithmetic, decoding) lies in the
// prime-order subgroup. Decoding enforces membership; arithmetic preserves it.

#ifndef DBE_GROUPS_H_
#define DBE_GROUPS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "dbe/groups/curve.h"
#include "dbe/groups/field.h"
#include "dbe/groups/tower.h"
#include "dbe/random.h"

namespace dbe {

// Integer modulo the group order r.
class Scalar {
 public:
  static constexpr size_t kBytes = 32;

  Scalar() = default;

  static Scalar Zero() { return Scalar(); }
  static Scalar One() { return Scalar(bls12::Fr::One()); }
  static Scalar FromU64(uint64_t v) { return Scalar(bls12::Fr::FromU64(v)); }

  // Uniform in [0, r) by rejection sampling.
  static Scalar Random(RandomSource& rng);
  // Uniform in [1, r).
  static Scalar RandomNonZero(RandomSource& rng);
  // Uniform in [0, 2^bits), bits <= 254.
  static Scalar RandomBits(RandomSource& rng, size_t bits);

  // Reduces an arbitrary-length big-endian integer modulo r.
  static Scalar FromBytesWide(std::span<const uint8_t> bytes) {
    return Scalar(bls12::Fr::FromBytesWide(bytes));
  }
  // Canonical 32-byte big-endian decoding; rejects values >= r.
  static absl::StatusOr<Scalar> FromBytes(std::span<const uint8_t> bytes);
  std::array<uint8_t, kBytes> ToBytes() const;

  // Canonical integer value in [0, r).
  bls12::Limbs<4> Bits() const { return v_.ToCanonical(); }

  bool IsZero() const { return v_.IsZero(); }
  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.v_ + b.v_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.v_ - b.v_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.v_ * b.v_);
  }
  Scalar operator-() const { return Scalar(-v_); }
  // Inverse(0) = 0.
  Scalar Inverse() const { return Scalar(v_.Inverse()); }

  // Best-effort erasure of secret exponents.
  void Wipe();

 private:
  explicit Scalar(const bls12::Fr& v) : v_(v) {}
  bls12::Fr v_;
};

class G1Element {
 public:
  static constexpr size_t kBytes = 48;

  G1Element() = default;  // identity
  static G1Element Identity() { return G1Element(); }
  static const G1Element& Generator();

  G1Element Pow(const Scalar& s) const;
  G1Element Inverse() const { return G1Element(-p_); }
  bool IsIdentity() const { return p_.IsIdentity(); }

  friend G1Element operator*(const G1Element& a, const G1Element& b) {
    return G1Element(a.p_ + b.p_);
  }
  G1Element& operator*=(const G1Element& b) {
    p_ += b.p_;
    return *this;
  }
  friend bool operator==(const G1Element& a, const G1Element& b) {
    return a.p_ == b.p_;
  }

  // Compressed encoding: big-endian x with flag bits in the top three bits of
  // the first byte (0x80 compressed, 0x40 identity, 0x20 y lexicographically
  // largest).
  std::array<uint8_t, kBytes> ToBytes() const;
  static absl::StatusOr<G1Element> FromBytes(std::span<const uint8_t> bytes);

  // Re-runs the subgroup membership test (counted).
  bool CheckMembership() const;

  const bls12::G1Point& point() const { return p_; }
  // No membership check; for tests that need points outside the subgroup.
  static G1Element FromPointUnchecked(const bls12::G1Point& p) {
    return G1Element(p);
  }

 private:
  explicit G1Element(const bls12::G1Point& p) : p_(p) {}
  bls12::G1Point p_;
};

class G2Element {
 public:
  static constexpr size_t kBytes = 96;

  G2Element() = default;  // identity
  static G2Element Identity() { return G2Element(); }
  static const G2Element& Generator();

  G2Element Pow(const Scalar& s) const;
  G2Element Inverse() const { return G2Element(-p_); }
  bool IsIdentity() const { return p_.IsIdentity(); }

  friend G2Element operator*(const G2Element& a, const G2Element& b) {
    return G2Element(a.p_ + b.p_);
  }
  G2Element& operator*=(const G2Element& b) {
    p_ += b.p_;
    return *this;
  }
  friend bool operator==(const G2Element& a, const G2Element& b) {
    return a.p_ == b.p_;
  }

  // Compressed encoding x.c1 || x.c0, flags as for G1 in the first byte.
  std::array<uint8_t, kBytes> ToBytes() const;
  static absl::StatusOr<G2Element> FromBytes(std::span<const uint8_t> bytes);

  bool CheckMembership() const;

  const bls12::G2Point& point() const { return p_; }
  static G2Element FromPointUnchecked(const bls12::G2Point& p) {
    return G2Element(p);
  }

 private:
  explicit G2Element(const bls12::G2Point& p) : p_(p) {}
  bls12::G2Point p_;
};

class GtElement {
 public:
  // 12 base-field elements, 48 bytes each.
  static constexpr size_t kBytes = 576;

  GtElement() : v_(bls12::Fp12::One()) {}
  static GtElement Identity() { return GtElement(); }

  GtElement Pow(const Scalar& s) const;
  // Elements of GT lie in the cyclotomic subgroup, where inversion is
  // conjugation.
  GtElement Inverse() const { return GtElement(v_.Conjugate()); }
  bool IsIdentity() const { return v_.IsOne(); }

  friend GtElement operator*(const GtElement& a, const GtElement& b) {
    return GtElement(a.v_ * b.v_);
  }
  GtElement& operator*=(const GtElement& b) {
    v_ *= b.v_;
    return *this;
  }
  friend bool operator==(const GtElement& a, const GtElement& b) {
    return a.v_ == b.v_;
  }

  // Coefficients in the order c0.c0, c0.c1, c0.c2, c1.c0, c1.c1, c1.c2 (each
  // an Fp2 written c0 || c1), every base-field element big-endian.
  std::array<uint8_t, kBytes> ToBytes() const;
  static absl::StatusOr<GtElement> FromBytes(std::span<const uint8_t> bytes);

  const bls12::Fp12& value() const { return v_; }

 private:
  friend GtElement Pairing(const G1Element& a, const G2Element& b);
  friend struct GroupContext;
  explicit GtElement(const bls12::Fp12& v) : v_(v) {}
  bls12::Fp12 v_;
};

// e(a, b). Counted.
GtElement Pairing(const G1Element& a, const G2Element& b);

// prod bases[i]^exps[i]; identity for empty input. Bucket method for larger
// inputs.
absl::StatusOr<G1Element> MultiExp(std::span<const G1Element> bases,
                                   std::span<const Scalar> exps);
absl::StatusOr<G2Element> MultiExp(std::span<const G2Element> bases,
                                   std::span<const Scalar> exps);
absl::StatusOr<GtElement> MultiExp(std::span<const GtElement> bases,
                                   std::span<const Scalar> exps);

// The fixed group every scheme object lives in.
struct GroupContext {
  // Group order r.
  bls12::Limbs<4> order;
  G1Element g;
  G2Element g_hat;
  // e(g, g^), cached for verification equations.
  GtElement gt_generator;

  static const GroupContext& Get();
};

// Instrumentation for benchmarks and acceptance checks. Counters are
// per-thread. When the library is built without DBE_OP_COUNTERS they stay
// at zero and kCountersEnabled is false.
struct OperationCounters {
  uint64_t pairings = 0;
  uint64_t membership_checks = 0;
};

#ifdef DBE_OP_COUNTERS
inline constexpr bool kCountersEnabled = true;
#else
inline constexpr bool kCountersEnabled = false;
#endif

OperationCounters ReadCounters();
void ResetCounters();

}  // namespace dbe

#endif  // DBE_GROUPS_H_
