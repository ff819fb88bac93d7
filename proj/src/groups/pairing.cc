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

#include "dbe/groups/pairing.h"

namespace dbe::bls12 {

namespace {

struct LineCoeffs {
  Fp2 l0, l1, l4;
};

struct HomogeneousPoint {
  Fp2 x, y, z;
};

// Tangent at T (scaled by 2 Y Z^2), then T <- 2T.
LineCoeffs DoublingStep(HomogeneousPoint& t, const Fp& xp, const Fp& yp) {
  Fp2 xx = t.x.Square();
  Fp2 w = xx.Double() + xx;  // 3 X^2
  Fp2 s = t.y * t.z;
  LineCoeffs line{w * t.x - (s * t.y).Double(), -(w * t.z) * xp,
                  (s * t.z).Double() * yp};

  Fp2 b = t.x * t.y * s;
  Fp2 b4 = b.Double().Double();
  Fp2 h = w.Square() - b4.Double();
  Fp2 ss = s.Square();
  Fp2 y2s2 = t.y.Square() * ss;
  t.x = (h * s).Double();
  t.y = w * (b4 - h) - y2s2.Double().Double().Double();
  t.z = (ss * s).Double().Double().Double();
  return line;
}

// Chord through T and Q (scaled by xQ Z - X), then T <- T + Q.
LineCoeffs AdditionStep(HomogeneousPoint& t, const AffinePoint<Fp2>& q,
                        const Fp& xp, const Fp& yp) {
  Fp2 theta = q.y * t.z - t.y;
  Fp2 lambda = q.x * t.z - t.x;
  LineCoeffs line{theta * q.x - lambda * q.y, -theta * xp, lambda * yp};

  Fp2 l2 = lambda.Square();
  Fp2 l3 = l2 * lambda;
  Fp2 l2x = l2 * t.x;
  Fp2 a = theta.Square() * t.z - l3 - l2x.Double();
  t.x = lambda * a;
  t.y = theta * (l2x - a) - l3 * t.y;
  t.z = l3 * t.z;
  return line;
}

Fp12 LineToFp12(const Fp2& l0, const Fp2& l1, const Fp2& l4) {
  return Fp12{Fp6{l0, l1, Fp2::Zero()}, Fp6{Fp2::Zero(), l4, Fp2::Zero()}};
}

// Index of the most significant set bit of |z|.
constexpr int kCurveParamTopBit = 63;

}  // namespace

Fp12 MillerLoop(const AffinePoint<Fp>& p, const AffinePoint<Fp2>& q) {
  if (p.infinity || q.infinity) return Fp12::One();
  HomogeneousPoint t{q.x, q.y, Fp2::One()};
  Fp12 f = Fp12::One();
  for (int i = kCurveParamTopBit - 1; i >= 0; --i) {
    LineCoeffs d = DoublingStep(t, p.x, p.y);
    f = f.Square().MulByLine(d.l0, d.l1, d.l4);
    if ((kCurveParamAbs >> i) & 1) {
      LineCoeffs a = AdditionStep(t, q, p.x, p.y);
      f = f.MulByLine(a.l0, a.l1, a.l4);
    }
  }
  return f.Conjugate();
}

Fp12 MillerLoopAffine(const AffinePoint<Fp>& p, const AffinePoint<Fp2>& q) {
  if (p.infinity || q.infinity) return Fp12::One();
  Fp2 tx = q.x;
  Fp2 ty = q.y;
  Fp12 f = Fp12::One();
  for (int i = kCurveParamTopBit - 1; i >= 0; --i) {
    Fp2 tx2 = tx.Square();
    Fp2 slope = (tx2.Double() + tx2) * ty.Double().Inverse();
    f = f * f * LineToFp12(slope * tx - ty, -(slope * p.x), Fp2{p.y, Fp::Zero()});
    Fp2 nx = slope.Square() - tx.Double();
    ty = slope * (tx - nx) - ty;
    tx = nx;
    if ((kCurveParamAbs >> i) & 1) {
      Fp2 chord = (q.y - ty) * (q.x - tx).Inverse();
      f = f * LineToFp12(chord * q.x - q.y, -(chord * p.x),
                         Fp2{p.y, Fp::Zero()});
      Fp2 ax = chord.Square() - tx - q.x;
      ty = chord * (tx - ax) - ty;
      tx = ax;
    }
  }
  return f.Conjugate();
}

Fp12 CyclotomicExpByCurveParam(const Fp12& f) {
  Fp12 acc = f;
  for (int i = kCurveParamTopBit - 1; i >= 0; --i) {
    acc = acc.Square();
    if ((kCurveParamAbs >> i) & 1) acc = acc * f;
  }
  return acc.Conjugate();
}

Fp12 FinalExponentiation(const Fp12& f) {
  // Easy part: f^((p^6 - 1)(p^2 + 1)).
  Fp12 t = f.Conjugate() * f.Inverse();
  t = t.Frobenius().Frobenius() * t;

  // Hard part, everything below lives in the cyclotomic subgroup.
  Fp12 a = CyclotomicExpByCurveParam(t) * t.Conjugate();
  a = CyclotomicExpByCurveParam(a) * a.Conjugate();
  Fp12 b = CyclotomicExpByCurveParam(a) * a.Frobenius();
  Fp12 c = CyclotomicExpByCurveParam(CyclotomicExpByCurveParam(b)) *
           b.Frobenius().Frobenius() * b.Conjugate();
  return c * t.Square() * t;
}

Fp12 Pair(const G1Point& p, const G2Point& q) {
  return FinalExponentiation(MillerLoop(p.ToAffine(), q.ToAffine()));
}

}  // namespace dbe::bls12
