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

#include "dbe/groups/curve.h"

#include <cstdlib>

namespace dbe::bls12 {

namespace {

// A primitive cube root of unity in Fp whose sigma acts as [-z^2] on G1.
const Fp& G1Beta() {
  static const Fp beta = [] {
    Limbs<6> e = LimbsDivSmall(
        [] {
          Limbs<6> m = Fp::kModulus;
          m[0] -= 1;
          return m;
        }(),
        3);
    Fp root;
    for (uint64_t c = 2;; ++c) {
      root = Fp::FromU64(c).Pow(e);
      if (!root.IsOne()) break;
    }
    const G1Point g = G1Point::Generator();
    const G1Point target = -g.MulByCurveParamAbs().MulByCurveParamAbs();
    auto sigma = [&](const Fp& b) {
      return G1Point::FromJacobian(g.X() * b, g.Y(), g.Z());
    };
    if (sigma(root) == target) return root;
    Fp other = root.Square();
    if (sigma(other) == target) return other;
    std::abort();  // unreachable for the BLS12-381 constants
  }();
  return beta;
}

struct PsiCoefficients {
  Fp2 cx;  // xi^(-(p-1)/3)
  Fp2 cy;  // xi^(-(p-1)/2)
};

const PsiCoefficients& G2PsiCoefficients() {
  static const PsiCoefficients coeffs = [] {
    Limbs<6> pm1 = Fp::kModulus;
    pm1[0] -= 1;
    const Fp2 xi{Fp::One(), Fp::One()};
    PsiCoefficients out;
    out.cx = xi.Pow(LimbsDivSmall(pm1, 3)).Inverse();
    out.cy = xi.Pow(LimbsDivSmall(pm1, 2)).Inverse();
    return out;
  }();
  return coeffs;
}

}  // namespace

G1Point G1Endomorphism(const G1Point& p) {
  return G1Point::FromJacobian(p.X() * G1Beta(), p.Y(), p.Z());
}

G2Point G2Psi(const G2Point& q) {
  const auto& c = G2PsiCoefficients();
  return G2Point::FromJacobian(q.X().Conjugate() * c.cx,
                               q.Y().Conjugate() * c.cy, q.Z().Conjugate());
}

bool G1InSubgroup(const G1Point& p) {
  if (p.IsIdentity()) return true;
  // sigma(P) == [-z^2] P
  G1Point z2p = p.MulByCurveParamAbs().MulByCurveParamAbs();
  return G1Endomorphism(p) == -z2p;
}

bool G2InSubgroup(const G2Point& q) {
  if (q.IsIdentity()) return true;
  // psi(Q) == [z] Q, z negative.
  return G2Psi(q) == -q.MulByCurveParamAbs();
}

bool G1InSubgroupNaive(const G1Point& p) {
  return p.MulBits(Fr::kModulus).IsIdentity();
}

bool G2InSubgroupNaive(const G2Point& q) {
  return q.MulBits(Fr::kModulus).IsIdentity();
}

}  // namespace dbe::bls12
