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

// Prime fields in Montgomery representation, parameterized by modulus.

#ifndef DBE_GROUPS_FIELD_H_
#define DBE_GROUPS_FIELD_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "dbe/groups/limbs.h"

namespace dbe::bls12 {

namespace field_internal {

template <size_t N>
constexpr Limbs<N> DoubleMod(const Limbs<N>& x, const Limbs<N>& m) {
  Limbs<N> out = x;
  uint64_t carry = LimbsAddInPlace(out, x);
  if (carry != 0 || LimbsCompare(out, m) >= 0) LimbsSubInPlace(out, m);
  return out;
}

// 2^(64*N*times) mod m.
template <size_t N>
constexpr Limbs<N> PowerOfTwoMod(const Limbs<N>& m, size_t bits) {
  Limbs<N> x{};
  x[0] = 1;
  for (size_t i = 0; i < bits; ++i) x = DoubleMod(x, m);
  return x;
}

constexpr uint64_t NegInverse64(uint64_t m0) {
  uint64_t inv = 1;
  for (int i = 0; i < 7; ++i) inv *= 2 - m0 * inv;
  return ~inv + 1;
}

}  // namespace field_internal

// `Params` provides `kLimbs` and `kModulus` (odd, top bit of the top limb
// clear).
template <class Params>
class MontField {
 public:
  static constexpr size_t kLimbs = Params::kLimbs;
  using Repr = Limbs<kLimbs>;
  static constexpr Repr kModulus = Params::kModulus;
  static constexpr uint64_t kInv = field_internal::NegInverse64(kModulus[0]);
  static constexpr Repr kR =
      field_internal::PowerOfTwoMod(kModulus, 64 * kLimbs);
  static constexpr Repr kR2 =
      field_internal::PowerOfTwoMod(kModulus, 2 * 64 * kLimbs);
  static constexpr size_t kBits = LimbsBitLength(kModulus);
  static constexpr size_t kBytes = (kBits + 7) / 8;

  constexpr MontField() : v_{} {}

  static constexpr MontField Zero() { return MontField(); }
  static constexpr MontField One() { return FromMontgomery(kR); }

  static constexpr MontField FromMontgomery(const Repr& mont) {
    MontField out;
    out.v_ = mont;
    return out;
  }

  // Requires value < modulus.
  static constexpr MontField FromCanonical(const Repr& value) {
    return FromMontgomery(MontMul(value, kR2));
  }

  static constexpr MontField FromU64(uint64_t value) {
    Repr r{};
    r[0] = value;
    return FromCanonical(r);
  }

  static constexpr MontField FromHex(std::string_view hex) {
    return FromCanonical(LimbsFromHex<kLimbs>(hex));
  }

  // Fixed-width big-endian decoding; nullopt unless value < modulus.
  static std::optional<MontField> FromBytes(std::span<const uint8_t> bytes) {
    Repr value{};
    if (!LimbsFromBigEndian(bytes, value)) return std::nullopt;
    if (LimbsCompare(value, kModulus) >= 0) return std::nullopt;
    return FromCanonical(value);
  }

  // Interprets arbitrary-length big-endian bytes as an integer and reduces it.
  static MontField FromBytesWide(std::span<const uint8_t> bytes) {
    MontField acc;
    const MontField base = FromCanonical(Repr{0, 1});  // 2^64
    size_t head = bytes.size() % 8;
    size_t pos = 0;
    auto take = [&](size_t len) {
      uint64_t word = 0;
      for (size_t i = 0; i < len; ++i) word = (word << 8) | bytes[pos + i];
      pos += len;
      return word;
    };
    if (head != 0) acc = FromU64(take(head));
    while (pos < bytes.size()) acc = acc * base + FromU64(take(8));
    return acc;
  }

  constexpr Repr ToCanonical() const {
    Repr one{};
    one[0] = 1;
    return MontMul(v_, one);
  }
  constexpr const Repr& Montgomery() const { return v_; }

  void ToBytes(std::span<uint8_t> out) const {
    LimbsToBigEndian(ToCanonical(), out);
  }

  constexpr bool IsZero() const { return LimbsIsZero(v_); }
  constexpr bool IsOne() const { return v_ == kR; }

  friend constexpr bool operator==(const MontField& a, const MontField& b) {
    return a.v_ == b.v_;
  }

  friend constexpr MontField operator+(const MontField& a,
                                       const MontField& b) {
    MontField out = a;
    uint64_t carry = LimbsAddInPlace(out.v_, b.v_);
    if (carry != 0 || LimbsCompare(out.v_, kModulus) >= 0) {
      LimbsSubInPlace(out.v_, kModulus);
    }
    return out;
  }

  friend constexpr MontField operator-(const MontField& a,
                                       const MontField& b) {
    MontField out = a;
    if (LimbsSubInPlace(out.v_, b.v_) != 0) LimbsAddInPlace(out.v_, kModulus);
    return out;
  }

  constexpr MontField operator-() const {
    if (IsZero()) return *this;
    MontField out = FromMontgomery(kModulus);
    LimbsSubInPlace(out.v_, v_);
    return out;
  }

  friend constexpr MontField operator*(const MontField& a,
                                       const MontField& b) {
    return FromMontgomery(MontMul(a.v_, b.v_));
  }

  MontField& operator+=(const MontField& b) { return *this = *this + b; }
  MontField& operator-=(const MontField& b) { return *this = *this - b; }
  MontField& operator*=(const MontField& b) { return *this = *this * b; }

  constexpr MontField Square() const { return *this * *this; }
  constexpr MontField Double() const { return *this + *this; }

  template <size_t M>
  constexpr MontField Pow(const Limbs<M>& exponent) const {
    MontField acc = One();
    for (size_t i = LimbsBitLength(exponent); i-- > 0;) {
      acc = acc.Square();
      if (LimbsBit(exponent, i)) acc = acc * *this;
    }
    return acc;
  }

  // Fermat inversion; Inverse(0) = 0.
  constexpr MontField Inverse() const {
    Repr e = kModulus;
    Repr two{};
    two[0] = 2;
    LimbsSubInPlace(e, two);
    return Pow(e);
  }

  // Euler's criterion: true for zero and non-zero squares.
  bool IsSquare() const {
    if (IsZero()) return true;
    Repr e = kModulus;
    Repr one{};
    one[0] = 1;
    LimbsSubInPlace(e, one);
    e = LimbsShiftRight1(e);
    return Pow(e).IsOne();
  }

  // Only valid for moduli congruent to 3 mod 4.
  std::optional<MontField> Sqrt() const {
    static_assert(kModulus[0] % 4 == 3 || kModulus[0] % 4 == 1);
    if constexpr (kModulus[0] % 4 == 3) {
      Repr e = kModulus;
      Repr one{};
      one[0] = 1;
      LimbsAddInPlace(e, one);
      e = LimbsShiftRight1(LimbsShiftRight1(e));
      MontField root = Pow(e);
      if (root.Square() == *this) return root;
      return std::nullopt;
    } else {
      return std::nullopt;
    }
  }

  // True iff the canonical value exceeds (modulus - 1) / 2.
  bool IsLexLargest() const {
    Repr half = LimbsShiftRight1(kModulus);
    return LimbsCompare(ToCanonical(), half) > 0;
  }

 private:
  // CIOS Montgomery multiplication a * b * 2^(-64N) mod m, in the variant
  // that needs no extra carry word (top limb of m below 2^63 - 1).
  static constexpr Repr MontMul(const Repr& a, const Repr& b) {
    static_assert(kModulus[kLimbs - 1] < (~uint64_t{0} >> 1) - 1);
    constexpr size_t N = kLimbs;
    Repr t{};
#pragma GCC unroll 8
    for (size_t i = 0; i < N; ++i) {
      u128 s = static_cast<u128>(a[0]) * b[i] + t[0];
      uint64_t hi = static_cast<uint64_t>(s >> 64);
      const uint64_t t0 = static_cast<uint64_t>(s);
      const uint64_t m = t0 * kInv;
      u128 c = static_cast<u128>(m) * kModulus[0] + t0;
      uint64_t carry = static_cast<uint64_t>(c >> 64);
#pragma GCC unroll 8
      for (size_t j = 1; j < N; ++j) {
        s = static_cast<u128>(a[j]) * b[i] + t[j] + hi;
        hi = static_cast<uint64_t>(s >> 64);
        c = static_cast<u128>(m) * kModulus[j] + static_cast<uint64_t>(s) +
            carry;
        t[j - 1] = static_cast<uint64_t>(c);
        carry = static_cast<uint64_t>(c >> 64);
      }
      t[N - 1] = carry + hi;
    }
    if (LimbsCompare(t, kModulus) >= 0) LimbsSubInPlace(t, kModulus);
    return t;
  }

  Repr v_;
};

struct FpParams {
  static constexpr size_t kLimbs = 6;
  static constexpr Limbs<6> kModulus = LimbsFromHex<6>(
      "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabfffe"
      "b153ffffb9feffffffffaaab");
};

struct FrParams {
  static constexpr size_t kLimbs = 4;
  static constexpr Limbs<4> kModulus = LimbsFromHex<4>(
      "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
};

// Base field of BLS12-381.
using Fp = MontField<FpParams>;
// Scalar field (prime group order r).
using Fr = MontField<FrParams>;

// |z| for the curve parameter z = -0xd201000000010000.
inline constexpr uint64_t kCurveParamAbs = 0xd201000000010000ULL;

}  // namespace dbe::bls12

#endif  // DBE_GROUPS_FIELD_H_
