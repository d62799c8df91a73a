/*
 * Copyright 2026 The commfibre Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace commfibre {

/// An element of F_q. The code packs the power-basis coordinates
/// (c_0, ..., c_{k-1}) as sum c_i p^{k-1-i}, so numeric order of codes is
/// lexicographic order of coordinate lists with the constant term first.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

using Vec = std::vector<FieldElement>;

namespace detail {
struct FieldTables;
}

/// The finite field F_q, q = p^k, p an odd prime, presented as
/// F_p[X] / (modulus). Cheap to copy; the arithmetic tables are shared.
class Field {
 public:
  /// Builds F_{p^k}. Without a modulus and k > 1 the lexicographically
  /// smallest monic irreducible polynomial (constant coefficient most
  /// significant) is chosen. For k = 1 the modulus is X.
  static Field make(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const noexcept;
  int k() const noexcept;
  std::uint32_t q() const noexcept;
  /// Coefficients constant-first, length k + 1, leading coefficient 1.
  const std::vector<int>& modulus() const noexcept;

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept;

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  /// Image of an integer in the prime subfield.
  FieldElement from_int(long long n) const noexcept;
  /// Throws bad-param unless coords has k entries in [0, p).
  FieldElement from_coords(std::span<const int> coords) const;
  FieldElement from_code(std::uint32_t code) const;
  std::vector<int> coords(FieldElement a) const;
  /// "c" for prime fields, "[c0,...,c_{k-1}]" otherwise.
  std::string to_string(FieldElement a) const;

  bool contains(FieldElement a) const noexcept { return a.code < q_; }

  friend bool operator==(const Field& lhs, const Field& rhs) noexcept;

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t);

  std::shared_ptr<const detail::FieldTables> t_;
  std::uint32_t q_ = 0;
  int p_ = 0;
  int k_ = 0;
  const std::uint32_t* add_ = nullptr;
  const std::uint32_t* neg_ = nullptr;
  const std::uint32_t* exp_ = nullptr;
  const std::uint32_t* log_ = nullptr;
};

/// Free-function spelling of Field::make.
inline Field make_field(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt) {
  return Field::make(p, k, std::move(modulus));
}

bool is_prime(long long n) noexcept;

/// Rabin's test for a monic polynomial over F_p (coefficients constant-first).
bool is_irreducible(int p, std::span<const int> poly);

// Vectors over F_q.

/// Number of vectors in F_q^b; throws budget-exceeded if it does not fit in 64 bits.
std::uint64_t vector_count(const Field& f, std::size_t b);

/// The index-th vector of F_q^b in enumeration order (lexicographic on the
/// concatenated coordinate lists, zero vector first).
Vec vector_at(const Field& f, std::size_t b, std::uint64_t index);
std::uint64_t vector_index(const Field& f, std::span<const FieldElement> v);

/// Advances v to its successor in enumeration order. Returns false (and
/// leaves v as the zero vector) after the last vector.
bool next_vector(const Field& f, Vec& v) noexcept;

/// All q^b vectors, in enumeration order. Intended for small b.
std::vector<Vec> enumerate_vectors(const Field& f, std::size_t b);

FieldElement dot(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y);

/// Scales v so its first nonzero entry is one. Zero vectors are left alone.
void normalize_projective(const Field& f, Vec& v);

bool is_zero(std::span<const FieldElement> v) noexcept;

// Inline hot paths.

inline FieldElement Field::add(FieldElement a, FieldElement b) const noexcept {
  if (k_ == 1) {
    std::uint32_t s = a.code + b.code;
    return {s >= q_ ? s - q_ : s};
  }
  if (add_) return {add_[a.code * q_ + b.code]};
  std::uint32_t out = 0, scale = 1;
  std::uint32_t x = a.code, y = b.code;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= static_cast<std::uint32_t>(p_)) d -= p_;
    out += d * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return {out};
}

inline FieldElement Field::neg(FieldElement a) const noexcept {
  if (k_ == 1) return {a.code == 0 ? 0 : q_ - a.code};
  return {neg_[a.code]};
}

inline FieldElement Field::sub(FieldElement a, FieldElement b) const noexcept {
  return add(a, neg(b));
}

inline FieldElement Field::mul(FieldElement a, FieldElement b) const noexcept {
  if (a.code == 0 || b.code == 0) return {0};
  if (k_ == 1) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % q_)};
  return {exp_[log_[a.code] + log_[b.code]]};
}

}  // namespace commfibre
