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

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "commfibre/algebra.hpp"
#include "commfibre/field.hpp"

namespace commfibre {

/// The skew-symmetric a x a matrix of linear forms B(Y)_ij = sum_m lambda_ij^m Y_m.
struct CommutatorMatrix {
  Field field;
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<FieldElement> entries;  // [(i * a + j) * b + m]

  std::span<const FieldElement> entry(std::size_t i, std::size_t j) const {
    return {entries.data() + (i * a + j) * b, b};
  }
  /// B(y) as a row-major a x a matrix.
  Vec evaluate(std::span<const FieldElement> y) const;
  void evaluate_into(std::span<const FieldElement> y, Vec& out) const;
};

CommutatorMatrix build_matrix(const LiePresentation& pres);

/// Rank of a skew-symmetric a x a matrix (row-major). Throws not-skew.
std::size_t rank_skew(const Field& f, std::span<const FieldElement> m, std::size_t a);

struct EnumerationOptions {
  /// Largest q^b the enumerators will walk.
  std::uint64_t budget = 100'000'000;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// R[i] = #{y in F_q^b : rk B(y) = 2i}, i = 0 .. floor(a/2).
struct RankProfile {
  std::vector<std::uint64_t> R;

  std::uint64_t total() const noexcept;
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

RankProfile rank_profile(const LiePresentation& pres, const EnumerationOptions& opts = {});

/// Per-stratum counts of y with g.y = 0 (K) and g.y != 0 (V).
struct KVVectors {
  Vec g;
  std::vector<std::uint64_t> K;
  std::vector<std::uint64_t> V;

  friend bool operator==(const KVVectors&, const KVVectors&) = default;
};

/// One pass over F_q^b producing the rank profile and the K/V vectors of
/// every requested g.
struct StratumScan {
  RankProfile profile;
  std::vector<KVVectors> kv;
};

StratumScan scan_strata(const LiePresentation& pres, const std::vector<Vec>& gs, const EnumerationOptions& opts = {});

KVVectors kv_vectors(const LiePresentation& pres, std::span<const FieldElement> g,
                     const EnumerationOptions& opts = {});

/// Nonzero g with identical K/V vectors. The representative is the
/// lexicographically smallest member.
struct KVClass {
  Vec representative;
  std::vector<std::uint64_t> K;
  std::vector<std::uint64_t> V;
  std::uint64_t multiplicity = 0;
};

struct Classification {
  RankProfile profile;
  std::vector<KVClass> classes;  // ordered by representative

  /// The class containing nonzero g.
  const KVClass& class_of(const Field& f, std::span<const FieldElement> g) const;
  /// vector_index of the normalized line through g -> position in classes.
  std::unordered_map<std::uint64_t, std::size_t> class_by_line;
};

Classification classify_elements(const LiePresentation& pres, const EnumerationOptions& opts = {});

}  // namespace commfibre
