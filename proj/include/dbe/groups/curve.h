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

// Short Weierstrass curves y^2 = x^3 + b in Jacobian coordinates
// (x = X/Z^2, y = Y/Z^3).
//   E1 / Fp  : b = 4          (source group G1)
//   E2 / Fp2 : b = 4 (u + 1)  (M-type sextic twist, source group G2)

#ifndef DBE_GROUPS_CURVE_H_
#define DBE_GROUPS_CURVE_H_

#include <cstdint>
#include <optional>

#include "dbe/groups/field.h"
#include "dbe/groups/tower.h"

namespace dbe::bls12 {

template <class F>
struct AffinePoint {
  F x, y;
  bool infinity = false;
};

template <class F, class Curve>
class JacobianPoint {
 public:
  using Field = F;
  using Affine = AffinePoint<F>;

  JacobianPoint() : x_(F::One()), y_(F::One()), z_(F::Zero()) {}

  static JacobianPoint Identity() { return JacobianPoint(); }
  static JacobianPoint Generator() {
    return FromAffineUnchecked(Curve::GeneratorX(), Curve::GeneratorY());
  }
  static JacobianPoint FromAffineUnchecked(const F& x, const F& y) {
    JacobianPoint p;
    p.x_ = x;
    p.y_ = y;
    p.z_ = F::One();
    return p;
  }
  static JacobianPoint FromAffine(const Affine& a) {
    return a.infinity ? Identity() : FromAffineUnchecked(a.x, a.y);
  }
  static JacobianPoint FromJacobian(const F& x, const F& y, const F& z) {
    JacobianPoint p;
    p.x_ = x;
    p.y_ = y;
    p.z_ = z;
    return p;
  }

  static bool AffineOnCurve(const F& x, const F& y) {
    return y.Square() == x.Square() * x + Curve::B();
  }

  bool IsIdentity() const { return z_.IsZero(); }

  bool IsOnCurve() const {
    if (IsIdentity()) return true;
    // Y^2 = X^3 + b Z^6
    F z2 = z_.Square();
    F z6 = z2.Square() * z2;
    return y_.Square() == x_.Square() * x_ + Curve::B() * z6;
  }

  Affine ToAffine() const {
    if (IsIdentity()) return Affine{F::Zero(), F::Zero(), true};
    F zinv = z_.Inverse();
    F zinv2 = zinv.Square();
    return Affine{x_ * zinv2, y_ * zinv2 * zinv, false};
  }

  friend bool operator==(const JacobianPoint& a, const JacobianPoint& b) {
    if (a.IsIdentity() || b.IsIdentity()) {
      return a.IsIdentity() && b.IsIdentity();
    }
    F az2 = a.z_.Square();
    F bz2 = b.z_.Square();
    if (!(a.x_ * bz2 == b.x_ * az2)) return false;
    return a.y_ * bz2 * b.z_ == b.y_ * az2 * a.z_;
  }

  JacobianPoint operator-() const {
    JacobianPoint p = *this;
    p.y_ = -p.y_;
    return p;
  }

  // dbl-2009-l (a = 0).
  JacobianPoint Double() const {
    if (IsIdentity()) return *this;
    F a = x_.Square();
    F b = y_.Square();
    F c = b.Square();
    F d = ((x_ + b).Square() - a - c).Double();
    F e = a.Double() + a;
    F f = e.Square();
    JacobianPoint out;
    out.x_ = f - d.Double();
    F c8 = c.Double().Double().Double();
    out.y_ = e * (d - out.x_) - c8;
    out.z_ = (y_ * z_).Double();
    return out;
  }

  // add-2007-bl with the exceptional cases handled.
  friend JacobianPoint operator+(const JacobianPoint& p,
                                 const JacobianPoint& q) {
    if (p.IsIdentity()) return q;
    if (q.IsIdentity()) return p;
    F z1z1 = p.z_.Square();
    F z2z2 = q.z_.Square();
    F u1 = p.x_ * z2z2;
    F u2 = q.x_ * z1z1;
    F s1 = p.y_ * q.z_ * z2z2;
    F s2 = q.y_ * p.z_ * z1z1;
    F h = u2 - u1;
    F rr = (s2 - s1).Double();
    if (h.IsZero()) {
      if (rr.IsZero()) return p.Double();
      return Identity();
    }
    F i = h.Double().Square();
    F j = h * i;
    F v = u1 * i;
    JacobianPoint out;
    out.x_ = rr.Square() - j - v.Double();
    out.y_ = rr * (v - out.x_) - (s1 * j).Double();
    out.z_ = ((p.z_ + q.z_).Square() - z1z1 - z2z2) * h;
    return out;
  }
  friend JacobianPoint operator-(const JacobianPoint& p,
                                 const JacobianPoint& q) {
    return p + (-q);
  }
  JacobianPoint& operator+=(const JacobianPoint& q) { return *this = *this + q; }

  // Variable-time double-and-add over the bits of `k`.
  template <size_t N>
  JacobianPoint MulBits(const Limbs<N>& k) const {
    JacobianPoint acc;
    for (size_t i = LimbsBitLength(k); i-- > 0;) {
      acc = acc.Double();
      if (LimbsBit(k, i)) acc += *this;
    }
    return acc;
  }

  // 4-bit fixed-window multiplication.
  template <size_t N>
  JacobianPoint MulWindowed(const Limbs<N>& k) const {
    constexpr int kWindow = 4;
    JacobianPoint table[1 << kWindow];
    table[0] = Identity();
    for (int i = 1; i < (1 << kWindow); ++i) table[i] = table[i - 1] + *this;
    size_t bits = LimbsBitLength(k);
    size_t windows = (bits + kWindow - 1) / kWindow;
    JacobianPoint acc;
    for (size_t w = windows; w-- > 0;) {
      for (int d = 0; d < kWindow; ++d) acc = acc.Double();
      unsigned digit = 0;
      for (int b = kWindow - 1; b >= 0; --b) {
        digit = (digit << 1) |
                (LimbsBit(k, w * kWindow + static_cast<size_t>(b)) ? 1u : 0u);
      }
      if (digit != 0) acc += table[digit];
    }
    return acc;
  }

  // Multiplication by |z| = 0xd201000000010000.
  JacobianPoint MulByCurveParamAbs() const {
    return MulBits(Limbs<1>{kCurveParamAbs});
  }

  const F& X() const { return x_; }
  const F& Y() const { return y_; }
  const F& Z() const { return z_; }

 private:
  F x_, y_, z_;
};

struct E1Curve {
  static const Fp& B() {
    static const Fp b = Fp::FromU64(4);
    return b;
  }
  static Fp GeneratorX() {
    return Fp::FromHex(
        "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55"
        "e83ff97a1aeffb3af00adb22c6bb");
  }
  static Fp GeneratorY() {
    return Fp::FromHex(
        "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03c"
        "c744a2888ae40caa232946c5e7e1");
  }
};

struct E2Curve {
  static const Fp2& B() {
    static const Fp2 b{Fp::FromU64(4), Fp::FromU64(4)};
    return b;
  }
  static Fp2 GeneratorX() {
    return Fp2{
        Fp::FromHex("024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647a"
                    "e3d1770bac0326a805bbefd48056c8c121bdb8"),
        Fp::FromHex("13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc"
                    "7f5049334cf11213945d57e5ac7d055d042b7e")};
  }
  static Fp2 GeneratorY() {
    return Fp2{
        Fp::FromHex("0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a6951"
                    "60d12c923ac9cc3baca289e193548608b82801"),
        Fp::FromHex("0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab57"
                    "2e99ab3f370d275cec1da1aaa9075ff05f79be")};
  }
};

using G1Point = JacobianPoint<Fp, E1Curve>;
using G2Point = JacobianPoint<Fp2, E2Curve>;

// Endomorphism-based subgroup checks. Both assume the point is on its curve.
//   G1: sigma(x, y) = (beta x, y) acts as multiplication by -z^2.
//   G2: psi (untwist-Frobenius-twist) acts as multiplication by z.
bool G1InSubgroup(const G1Point& p);
bool G2InSubgroup(const G2Point& q);

// Reference checks [r] P == O, kept for equivalence testing.
bool G1InSubgroupNaive(const G1Point& p);
bool G2InSubgroupNaive(const G2Point& q);

G1Point G1Endomorphism(const G1Point& p);
G2Point G2Psi(const G2Point& q);

}  // namespace dbe::bls12

#endif  // DBE_GROUPS_CURVE_H_
