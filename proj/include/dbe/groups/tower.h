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

// Extension tower for BLS12-381:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = u + 1
//   Fp12 = Fp6[w] / (w^2 - v)
// so w^6 = xi.

#ifndef DBE_GROUPS_TOWER_H_
#define DBE_GROUPS_TOWER_H_

#include <array>
#include <optional>

#include "dbe/groups/field.h"

namespace dbe::bls12 {

struct Fp2 {
  Fp c0, c1;

  static constexpr Fp2 Zero() { return {Fp::Zero(), Fp::Zero()}; }
  static constexpr Fp2 One() { return {Fp::One(), Fp::Zero()}; }

  bool IsZero() const { return c0.IsZero() && c1.IsZero(); }
  bool IsOne() const { return c0.IsOne() && c1.IsZero(); }
  friend bool operator==(const Fp2&, const Fp2&) = default;

  friend Fp2 operator+(const Fp2& a, const Fp2& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  Fp2 operator-() const { return {-c0, -c1}; }
  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    Fp t0 = a.c0 * b.c0;
    Fp t1 = a.c1 * b.c1;
    return {t0 - t1, (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }
  friend Fp2 operator*(const Fp2& a, const Fp& s) {
    return {a.c0 * s, a.c1 * s};
  }
  Fp2& operator+=(const Fp2& b) { return *this = *this + b; }
  Fp2& operator-=(const Fp2& b) { return *this = *this - b; }
  Fp2& operator*=(const Fp2& b) { return *this = *this * b; }

  Fp2 Square() const {
    Fp a = c0 + c1;
    Fp b = c0 - c1;
    Fp c = c0 * c1;
    return {a * b, c + c};
  }
  Fp2 Double() const { return {c0.Double(), c1.Double()}; }
  Fp2 Conjugate() const { return {c0, -c1}; }
  // Multiplication by xi = u + 1.
  Fp2 MulByNonResidue() const { return {c0 - c1, c0 + c1}; }
  Fp Norm() const { return c0.Square() + c1.Square(); }
  Fp2 Inverse() const {
    Fp inv = Norm().Inverse();
    return {c0 * inv, -(c1 * inv)};
  }

  template <size_t M>
  Fp2 Pow(const Limbs<M>& exponent) const {
    Fp2 acc = One();
    for (size_t i = LimbsBitLength(exponent); i-- > 0;) {
      acc = acc.Square();
      if (LimbsBit(exponent, i)) acc = acc * *this;
    }
    return acc;
  }

  std::optional<Fp2> Sqrt() const;

  // Ordering used by compressed point encodings: compare c1 first, then c0.
  bool IsLexLargest() const {
    if (!c1.IsZero()) return c1.IsLexLargest();
    return c0.IsLexLargest();
  }
};

struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 Zero() { return {Fp2::Zero(), Fp2::Zero(), Fp2::Zero()}; }
  static Fp6 One() { return {Fp2::One(), Fp2::Zero(), Fp2::Zero()}; }

  bool IsZero() const { return c0.IsZero() && c1.IsZero() && c2.IsZero(); }
  friend bool operator==(const Fp6&, const Fp6&) = default;

  friend Fp6 operator+(const Fp6& a, const Fp6& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend Fp6 operator-(const Fp6& a, const Fp6& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }
  friend Fp6 operator*(const Fp6& a, const Fp6& b) {
    Fp2 t0 = a.c0 * b.c0;
    Fp2 t1 = a.c1 * b.c1;
    Fp2 t2 = a.c2 * b.c2;
    Fp2 r0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - t1 - t2).MulByNonResidue() + t0;
    Fp2 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1 + t2.MulByNonResidue();
    Fp2 r2 = (a.c0 + a.c2) * (b.c0 + b.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }
  Fp6 Square() const { return *this * *this; }
  // Multiplication by v.
  Fp6 MulByNonResidue() const { return {c2.MulByNonResidue(), c0, c1}; }

  // Product with b0 + b1 v.
  Fp6 MulBy01(const Fp2& b0, const Fp2& b1) const {
    Fp2 t0 = c0 * b0;
    Fp2 t1 = c1 * b1;
    Fp2 r0 = ((c1 + c2) * b1 - t1).MulByNonResidue() + t0;
    Fp2 r1 = (c0 + c1) * (b0 + b1) - t0 - t1;
    Fp2 r2 = (c0 + c2) * b0 - t0 + t1;
    return {r0, r1, r2};
  }
  // Product with b1 v.
  Fp6 MulBy1(const Fp2& b1) const {
    return {(c2 * b1).MulByNonResidue(), c0 * b1, c1 * b1};
  }

  Fp6 Inverse() const {
    Fp2 a = c0.Square() - (c1 * c2).MulByNonResidue();
    Fp2 b = c2.Square().MulByNonResidue() - c0 * c1;
    Fp2 c = c1.Square() - c0 * c2;
    Fp2 f = c0 * a + ((c2 * b) + (c1 * c)).MulByNonResidue();
    Fp2 finv = f.Inverse();
    return {a * finv, b * finv, c * finv};
  }
};

struct Fp12 {
  Fp6 c0, c1;

  static Fp12 Zero() { return {Fp6::Zero(), Fp6::Zero()}; }
  static Fp12 One() { return {Fp6::One(), Fp6::Zero()}; }

  bool IsZero() const { return c0.IsZero() && c1.IsZero(); }
  bool IsOne() const { return *this == One(); }
  friend bool operator==(const Fp12&, const Fp12&) = default;

  friend Fp12 operator*(const Fp12& a, const Fp12& b) {
    Fp6 t0 = a.c0 * b.c0;
    Fp6 t1 = a.c1 * b.c1;
    return {t0 + t1.MulByNonResidue(), (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }
  Fp12& operator*=(const Fp12& b) { return *this = *this * b; }

  Fp12 Square() const {
    Fp6 ab = c0 * c1;
    Fp6 t = (c0 + c1) * (c0 + c1.MulByNonResidue());
    return {t - ab - ab.MulByNonResidue(), ab + ab};
  }

  // Product with the sparse element l0 + l1 w^2 + l4 w^3, the shape of every
  // Miller-loop line.
  Fp12 MulByLine(const Fp2& l0, const Fp2& l1, const Fp2& l4) const {
    Fp6 aa = c0.MulBy01(l0, l1);
    Fp6 bb = c1.MulBy1(l4);
    Fp6 r1 = (c0 + c1).MulBy01(l0, l1 + l4) - aa - bb;
    return {bb.MulByNonResidue() + aa, r1};
  }

  // x^(p^6); equals the inverse in the cyclotomic subgroup.
  Fp12 Conjugate() const { return {c0, -c1}; }

  Fp12 Inverse() const {
    Fp6 t = (c0.Square() - c1.Square().MulByNonResidue()).Inverse();
    return {c0 * t, -(c1 * t)};
  }

  // x^p.
  Fp12 Frobenius() const;

  template <size_t M>
  Fp12 Pow(const Limbs<M>& exponent) const {
    Fp12 acc = One();
    for (size_t i = LimbsBitLength(exponent); i-- > 0;) {
      acc = acc.Square();
      if (LimbsBit(exponent, i)) acc = acc * *this;
    }
    return acc;
  }
};

}  // namespace dbe::bls12

#endif  // DBE_GROUPS_TOWER_H_
