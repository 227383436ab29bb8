// Copyright 2026 The dpsa-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPSA_FIELD_HPP_
#define DPSA_FIELD_HPP_

// Exact arithmetic in a prime field F_q with NTT support.
//
// Elements are canonical 64-bit residues in [0, q); products go through
// 128-bit intermediates, so any odd prime q < 2^63 works. The moduli used
// by the aggregation protocol are all below 2^27, which keeps plain
// Barrett-free reduction cheap; no Montgomery form is used.
//
// NOTE: none of this is constant-time. The library is a protocol simulator
// and measurement harness, not a hardened cryptographic implementation.

#include <cstdint>
#include <string>
#include <vector>

#include "dpsa/errors.hpp"
#include "dpsa/wire.hpp"

namespace dpsa {

namespace detail {

using u128 = unsigned __int128;

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % q);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t q) {
  uint64_t acc = 1 % q;
  base %= q;
  while (exp != 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, q);
    base = mulmod_u64(base, base, q);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin. The listed bases decide primality exactly for
// every 64-bit input.
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// splitmix64; used only for the deterministic root-of-unity search.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

// A single field element. Carries its modulus so that cross-field operations
// are caught instead of silently producing garbage.
struct FieldElement {
  uint64_t value = 0;
  uint64_t modulus = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

inline void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus != b.modulus) {
    throw ContextMismatchError("field elements from different moduli: " +
                               std::to_string(a.modulus) + " vs " +
                               std::to_string(b.modulus));
  }
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  uint64_t s = a.value + b.value;
  if (s >= a.modulus) s -= a.modulus;
  return {s, a.modulus};
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  uint64_t s = a.value >= b.value ? a.value - b.value
                                  : a.value + a.modulus - b.value;
  return {s, a.modulus};
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return {detail::mulmod_u64(a.value, b.value, a.modulus), a.modulus};
}

inline FieldElement neg(const FieldElement& a) {
  return {a.value == 0 ? 0 : a.modulus - a.value, a.modulus};
}

inline FieldElement pow(const FieldElement& a, uint64_t e) {
  return {detail::powmod_u64(a.value, e, a.modulus), a.modulus};
}

// Multiplicative inverse by Fermat: a^(q-2). Tests cross-check this against
// an extended-Euclid oracle.
inline FieldElement inv(const FieldElement& a) {
  if (a.value == 0) {
    throw DivisionByZeroError("inverse of zero in F_" +
                              std::to_string(a.modulus));
  }
  return pow(a, a.modulus - 2);
}

// Wire encoding: fixed 4-byte little-endian value.
inline void fe_to_bytes(std::vector<uint8_t>& out, const FieldElement& a) {
  if (a.modulus > 0xffffffffull) {
    throw ShapeError("4-byte wire format requires q < 2^32");
  }
  wire::put_u32(out, static_cast<uint32_t>(a.value));
}

// The prime field context: modulus, two-adicity, and a generator of the
// maximal power-of-two subgroup (for the number-theoretic transform).
class PrimeFieldCtx {
 public:
  explicit PrimeFieldCtx(uint64_t q) : q_(q) {
    if (q < 3 || (q & 1) == 0 || !detail::is_prime_u64(q)) {
      throw ConfigError("modulus " + std::to_string(q) +
                        " is not an odd prime");
    }
    uint64_t m = q - 1;
    while ((m & 1) == 0) {
      m >>= 1;
      ++two_adicity_;
    }
    odd_part_ = m;
    root_of_unity_ = find_root_of_unity();
  }

  uint64_t modulus() const { return q_; }
  unsigned two_adicity() const { return two_adicity_; }
  uint64_t root_of_unity() const { return root_of_unity_; }

  bool operator==(const PrimeFieldCtx& other) const { return q_ == other.q_; }

  FieldElement elem(uint64_t v) const { return {v % q_, q_}; }
  FieldElement zero() const { return {0, q_}; }
  FieldElement one() const { return {1 % q_, q_}; }

  // Signed embedding: negative integers map to q - |v|.
  FieldElement from_signed(int64_t v) const {
    if (v >= 0) return elem(static_cast<uint64_t>(v));
    uint64_t mag = static_cast<uint64_t>(-(v + 1)) + 1;  // |v| without UB
    return {q_ - (mag % q_) == q_ ? 0 : q_ - (mag % q_), q_};
  }

  // Centered representative in (-q/2, q/2].
  int64_t to_centered(uint64_t v) const {
    v %= q_;
    if (v * 2 > q_) return static_cast<int64_t>(v) - static_cast<int64_t>(q_);
    return static_cast<int64_t>(v);
  }

  // Raw-residue helpers used by the bulk paths (vectors of uint64_t residues
  // avoid carrying a modulus per element through hot loops).
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return detail::mulmod_u64(a, b, q_);
  }
  uint64_t neg_raw(uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  uint64_t pow_raw(uint64_t a, uint64_t e) const {
    return detail::powmod_u64(a, e, q_);
  }
  uint64_t inv_raw(uint64_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    return detail::powmod_u64(a, q_ - 2, q_);
  }

  // Batch inversion (Montgomery trick): one exponentiation for n elements.
  void inv_batch(std::vector<uint64_t>& vals) const {
    const std::size_t n = vals.size();
    if (n == 0) return;
    std::vector<uint64_t> prefix(n);
    uint64_t acc = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (vals[i] == 0) throw DivisionByZeroError("inverse of zero in batch");
      prefix[i] = acc;
      acc = mul(acc, vals[i]);
    }
    uint64_t inv_acc = inv_raw(acc);
    for (std::size_t i = n; i-- > 0;) {
      uint64_t v = vals[i];
      vals[i] = mul(inv_acc, prefix[i]);
      inv_acc = mul(inv_acc, v);
    }
  }

  // Forward/inverse number-theoretic transform, in place. Length must be a
  // power of two not exceeding 2^two_adicity.
  void ntt(std::vector<uint64_t>& values, bool inverse) const {
    const std::size_t n = values.size();
    if (n == 0 || (n & (n - 1)) != 0) {
      throw ShapeError("NTT length must be a power of two, got " +
                       std::to_string(n));
    }
    unsigned log_n = 0;
    while ((1ull << log_n) < n) ++log_n;
    if (log_n > two_adicity_) {
      throw CapacityError("NTT length " + std::to_string(n) +
                          " exceeds 2^" + std::to_string(two_adicity_) +
                          " supported by q=" + std::to_string(q_));
    }
    if (n == 1) return;

    // Root of order n.
    uint64_t w = pow_raw(root_of_unity_, 1ull << (two_adicity_ - log_n));
    if (inverse) w = inv_raw(w);

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(values[i], values[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
      uint64_t wlen = pow_raw(w, n / len);
      for (std::size_t i = 0; i < n; i += len) {
        uint64_t acc = 1;
        for (std::size_t j = 0; j < len / 2; ++j) {
          uint64_t u = values[i + j];
          uint64_t v = mul(values[i + j + len / 2], acc);
          values[i + j] = add(u, v);
          values[i + j + len / 2] = sub(u, v);
          acc = mul(acc, wlen);
        }
      }
    }

    if (inverse) {
      uint64_t n_inv = inv_raw(n % q_);
      for (auto& v : values) v = mul(v, n_inv);
    }
  }

  std::vector<FieldElement> ntt(const std::vector<FieldElement>& values,
                                bool inverse) const {
    std::vector<uint64_t> raw(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i].modulus != q_) {
        throw ContextMismatchError("NTT input from a different field");
      }
      raw[i] = values[i].value;
    }
    ntt(raw, inverse);
    std::vector<FieldElement> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = {raw[i], q_};
    return out;
  }

  FieldElement fe_from_bytes(wire::Reader& r) const {
    uint64_t v = r.u32();
    if (v >= q_) {
      throw FileFormatError("field element " + std::to_string(v) +
                                " out of range for q=" + std::to_string(q_),
                            r.offset() - 4);
    }
    return {v, q_};
  }

 private:
  uint64_t find_root_of_unity() const {
    if (two_adicity_ == 0) return 1;  // unreachable: q odd => q-1 even
    uint64_t state = q_ ^ 0xd1b54a32d192ed03ull;  // fixed seed per modulus
    for (;;) {
      uint64_t x = detail::splitmix64(state) % (q_ - 1) + 1;
      uint64_t g = pow_raw(x, odd_part_);
      // g has order dividing 2^s; order is exactly 2^s iff g^(2^(s-1)) = -1.
      if (pow_raw(g, 1ull << (two_adicity_ - 1)) == q_ - 1) return g;
    }
  }

  uint64_t q_;
  unsigned two_adicity_ = 0;
  uint64_t odd_part_ = 0;
  uint64_t root_of_unity_ = 1;
};

}  // namespace dpsa

#endif  // DPSA_FIELD_HPP_
