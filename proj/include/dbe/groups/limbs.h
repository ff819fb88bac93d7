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

#ifndef DBE_GROUPS_LIMBS_H_
#define DBE_GROUPS_LIMBS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dbe::bls12 {

// Little-endian array of 64-bit words.
template <size_t N>
using Limbs = std::array<uint64_t, N>;

using u128 = unsigned __int128;

template <size_t N>
constexpr Limbs<N> LimbsFromHex(std::string_view hex) {
  Limbs<N> out{};
  if (hex.starts_with("0x")) hex.remove_prefix(2);
  size_t bit = 0;
  for (size_t k = hex.size(); k-- > 0;) {
    char c = hex[k];
    uint64_t nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<uint64_t>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<uint64_t>(c - 'A' + 10);
    }
    out[bit / 64] |= nibble << (bit % 64);
    bit += 4;
  }
  return out;
}

template <size_t N>
constexpr bool LimbsIsZero(const Limbs<N>& a) {
  uint64_t acc = 0;
  for (uint64_t w : a) acc |= w;
  return acc == 0;
}

// Returns -1, 0, 1.
template <size_t N>
constexpr int LimbsCompare(const Limbs<N>& a, const Limbs<N>& b) {
  for (size_t i = N; i-- > 0;) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

// a += b, returns carry.
template <size_t N>
constexpr uint64_t LimbsAddInPlace(Limbs<N>& a, const Limbs<N>& b) {
  uint64_t carry = 0;
  for (size_t i = 0; i < N; ++i) {
    u128 s = static_cast<u128>(a[i]) + b[i] + carry;
    a[i] = static_cast<uint64_t>(s);
    carry = static_cast<uint64_t>(s >> 64);
  }
  return carry;
}

// a -= b, returns borrow.
template <size_t N>
constexpr uint64_t LimbsSubInPlace(Limbs<N>& a, const Limbs<N>& b) {
  uint64_t borrow = 0;
  for (size_t i = 0; i < N; ++i) {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    a[i] = static_cast<uint64_t>(d);
    borrow = static_cast<uint64_t>(d >> 64) & 1;
  }
  return borrow;
}

template <size_t N>
constexpr bool LimbsBit(const Limbs<N>& a, size_t i) {
  return ((a[i / 64] >> (i % 64)) & 1) != 0;
}

template <size_t N>
constexpr size_t LimbsBitLength(const Limbs<N>& a) {
  for (size_t i = N; i-- > 0;) {
    if (a[i] != 0) return i * 64 + 64 - static_cast<size_t>(__builtin_clzll(a[i]));
  }
  return 0;
}

template <size_t N>
constexpr Limbs<N> LimbsShiftRight1(const Limbs<N>& a) {
  Limbs<N> out{};
  for (size_t i = 0; i < N; ++i) {
    out[i] = a[i] >> 1;
    if (i + 1 < N) out[i] |= a[i + 1] << 63;
  }
  return out;
}

// Quotient by a small divisor; remainder discarded.
template <size_t N>
constexpr Limbs<N> LimbsDivSmall(const Limbs<N>& a, uint64_t divisor) {
  Limbs<N> out{};
  u128 rem = 0;
  for (size_t i = N; i-- > 0;) {
    u128 cur = (rem << 64) | a[i];
    out[i] = static_cast<uint64_t>(cur / divisor);
    rem = cur % divisor;
  }
  return out;
}

// Big-endian byte encoding of the low `out.size()` bytes.
template <size_t N>
void LimbsToBigEndian(const Limbs<N>& a, std::span<uint8_t> out) {
  const size_t n = out.size();
  for (size_t k = 0; k < n; ++k) {
    size_t byte_index = n - 1 - k;  // k-th least significant byte
    out[byte_index] =
        k / 8 < N ? static_cast<uint8_t>(a[k / 8] >> (8 * (k % 8))) : 0;
  }
}

// Returns false when the input does not fit in N limbs.
template <size_t N>
bool LimbsFromBigEndian(std::span<const uint8_t> in, Limbs<N>& out) {
  out = {};
  const size_t n = in.size();
  for (size_t k = 0; k < n; ++k) {
    uint8_t byte = in[n - 1 - k];
    if (k / 8 >= N) {
      if (byte != 0) return false;
      continue;
    }
    out[k / 8] |= static_cast<uint64_t>(byte) << (8 * (k % 8));
  }
  return true;
}

}  // namespace dbe::bls12

#endif  // DBE_GROUPS_LIMBS_H_
