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

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "commfibre/algebra.hpp"
#include "commfibre/field.hpp"

namespace commfibre {

/// The group exp(g) of a nilpotent Lie algebra of class at most 3 (and
/// below p), realised on coordinate vectors with the truncated
/// Baker-Campbell-Hausdorff product. Identity is 0 and u^{-1} = -u.
class LazardGroup {
 public:
  /// Throws class-unsupported unless class <= 3 and class < p, plus the
  /// usual validation errors.
  explicit LazardGroup(FullLieAlgebra alg);

  const FullLieAlgebra& algebra() const noexcept { return alg_; }
  const Field& field() const noexcept { return alg_.field(); }
  std::size_t dim() const noexcept { return alg_.dim(); }
  int nilpotency_class() const noexcept { return class_; }
  std::uint64_t order() const;

  Vec bracket(std::span<const FieldElement> u, std::span<const FieldElement> v) const;
  Vec multiply(std::span<const FieldElement> u, std::span<const FieldElement> v) const;
  Vec inverse(std::span<const FieldElement> u) const;
  Vec power(std::span<const FieldElement> u, std::uint64_t e) const;
  /// h u h^{-1}
  Vec conjugate(std::span<const FieldElement> h, std::span<const FieldElement> u) const;
  /// u^{-1} v^{-1} u v through BCH products.
  Vec commutator_bch(std::span<const FieldElement> u, std::span<const FieldElement> v) const;
  /// Same value; for class 2 this is the Lie bracket [u, v].
  Vec commutator(std::span<const FieldElement> u, std::span<const FieldElement> v) const;

 private:
  struct Term {
    std::uint32_t i, j, m;
    FieldElement c;
  };
  void bracket_into(std::span<const FieldElement> u, std::span<const FieldElement> v, Vec& out) const;

  FullLieAlgebra alg_;
  int class_ = 0;
  std::vector<Term> terms_;  // nonzero [e_i, e_j]_m, i != j
  FieldElement half_{};
  FieldElement twelfth_{};
};

Vec bch_multiply(const FullLieAlgebra& alg, std::span<const FieldElement> u, std::span<const FieldElement> v);
Vec group_commutator(const FullLieAlgebra& alg, std::span<const FieldElement> u, std::span<const FieldElement> v);

struct OracleOptions {
  /// Largest number of pair evaluations (|G|^2) allowed.
  std::uint64_t budget = 1'000'000'000;
  unsigned threads = 0;
  /// Use the bilinear commutator for class-2 groups.
  bool class2_fast_path = true;
};

/// N_t over the derived subgroup, keyed by vector_index of the full
/// coordinate vector. Elements outside the support have count 0.
struct FibreTable {
  unsigned t = 1;
  std::map<std::uint64_t, mpz_class> counts;

  mpz_class at(const Field& f, std::span<const FieldElement> element) const;
  mpz_class total() const;
};

/// Brute-force N_1 by enumerating G x G, then N_t by convolution over the
/// subgroup generated by the commutator values. Returns t = 1 .. t_max.
std::vector<FibreTable> brute_fibres(const LazardGroup& group, unsigned t_max, const OracleOptions& opts = {});
FibreTable brute_fibres(const FullLieAlgebra& alg, unsigned t, const OracleOptions& opts = {});

/// Full coordinate vectors of the subgroup generated by the commutator
/// values, sorted by index.
std::vector<Vec> oracle_derived_subgroup(const LazardGroup& group, const FibreTable& first);

/// Number of conjugacy classes by an orbit sweep.
std::uint64_t conjugacy_count(const LazardGroup& group, const OracleOptions& opts = {});
std::uint64_t conjugacy_count(const FullLieAlgebra& alg, const OracleOptions& opts = {});

struct ComparisonEntry {
  Vec g;  // coordinates in the f-basis of g'
  unsigned t = 1;
  mpz_class theorem;
  mpz_class oracle;
};

struct ComparisonReport {
  unsigned t_max = 1;
  std::vector<ComparisonEntry> entries;     // identity and each KV-class representative
  std::vector<ComparisonEntry> mismatches;  // over every g in G'
  mpz_class theorem_class_number;
  std::uint64_t oracle_class_number = 0;
  std::uint64_t theorem_derived_order = 0;
  std::uint64_t oracle_derived_order = 0;
  bool support_in_derived = true;
  bool mass_ok = true;

  bool ok() const noexcept {
    return mismatches.empty() && theorem_class_number == oracle_class_number &&
           theorem_derived_order == oracle_derived_order && support_in_derived && mass_ok;
  }
};

ComparisonReport compare(const FullLieAlgebra& alg, unsigned t_max, const OracleOptions& opts = {});

}  // namespace commfibre
