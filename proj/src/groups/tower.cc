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

#include "dbe/groups/tower.h"

#include <array>

namespace dbe::bls12 {

namespace {

// gamma[k] = xi^(k (p - 1) / 6), so that (w^k)^p = gamma[k] w^k.
const std::array<Fp2, 6>& FrobeniusCoefficients() {
  static const std::array<Fp2, 6> coeffs = [] {
    Limbs<6> e = Fp::kModulus;
    e[0] -= 1;
    e = LimbsDivSmall(e, 6);
    const Fp2 xi{Fp::One(), Fp::One()};
    std::array<Fp2, 6> out;
    out[0] = Fp2::One();
    out[1] = xi.Pow(e);
    for (size_t k = 2; k < 6; ++k) out[k] = out[k - 1] * out[1];
    return out;
  }();
  return coeffs;
}

}  // namespace

std::optional<Fp2> Fp2::Sqrt() const {
  if (IsZero()) return Zero();
  std::optional<Fp2> candidate;
  if (c1.IsZero()) {
    if (auto r = c0.Sqrt()) {
      candidate = Fp2{*r, Fp::Zero()};
    } else if (auto r2 = (-c0).Sqrt()) {
      candidate = Fp2{Fp::Zero(), *r2};
    }
  } else {
    auto alpha = Norm().Sqrt();
    if (!alpha) return std::nullopt;
    const Fp half = Fp::FromU64(2).Inverse();
    Fp delta = (c0 + *alpha) * half;
    auto x0 = delta.Sqrt();
    if (!x0) {
      delta = (c0 - *alpha) * half;
      x0 = delta.Sqrt();
    }
    if (x0 && !x0->IsZero()) {
      Fp x1 = c1 * (x0->Double()).Inverse();
      candidate = Fp2{*x0, x1};
    }
  }
  if (candidate && candidate->Square() == *this) return candidate;
  return std::nullopt;
}

Fp12 Fp12::Frobenius() const {
  const auto& g = FrobeniusCoefficients();
  // c0 holds w^0, w^2, w^4; c1 holds w^1, w^3, w^5.
  return Fp12{
      Fp6{c0.c0.Conjugate(), c0.c1.Conjugate() * g[2],
          c0.c2.Conjugate() * g[4]},
      Fp6{c1.c0.Conjugate() * g[1], c1.c1.Conjugate() * g[3],
          c1.c2.Conjugate() * g[5]},
  };
}

}  // namespace dbe::bls12
