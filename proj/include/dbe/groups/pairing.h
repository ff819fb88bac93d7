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

// Optimal ate pairing on BLS12-381.
//
// Points on the twist E2 are mapped into E1(Fp12) by (x, y) -> (x / w^2,
// y / w^3). After scaling by w^3 every line becomes l0 + l1 w^2 + l4 w^3 with
// l0, l1, l4 in Fp2; the Fp2 and w^3 scale factors are removed by the final
// exponentiation.

#ifndef DBE_GROUPS_PAIRING_H_
#define DBE_GROUPS_PAIRING_H_

#include "dbe/groups/curve.h"
#include "dbe/groups/tower.h"

namespace dbe::bls12 {

// f_{|z|,Q}(P), conjugated for the negative curve parameter. Homogeneous
// projective coordinates for the running point, sparse line products.
Fp12 MillerLoop(const AffinePoint<Fp>& p, const AffinePoint<Fp2>& q);

// Same Miller function with affine coordinates and dense Fp12 products; an
// inversion per step. Agrees with MillerLoop after FinalExponentiation.
Fp12 MillerLoopAffine(const AffinePoint<Fp>& p, const AffinePoint<Fp2>& q);

// f^(3 (p^12 - 1) / r), via the easy part (p^6 - 1)(p^2 + 1) and the hard
// part 3 (p^4 - p^2 + 1) / r = (z - 1)^2 (z + p)(z^2 + p^2 - 1) + 3.
Fp12 FinalExponentiation(const Fp12& f);

// f^z for f in the cyclotomic subgroup.
Fp12 CyclotomicExpByCurveParam(const Fp12& f);

Fp12 Pair(const G1Point& p, const G2Point& q);

}  // namespace dbe::bls12

#endif  // DBE_GROUPS_PAIRING_H_
