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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commfibre/field.hpp"

namespace commfibre {

/// A finite-dimensional Lie algebra over F_q given by its structure
/// constants on a named basis. Brackets are stored antisymmetrically, so
/// setting [e_i, e_j] also fixes [e_j, e_i].
class FullLieAlgebra {
 public:
  FullLieAlgebra(Field field, std::vector<std::string> names);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Sets [e_i, e_j] = image (and [e_j, e_i] = -image). Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, const Vec& image);
  std::span<const FieldElement> basis_bracket(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the basis brackets.
  Vec bracket(std::span<const FieldElement> u, std::span<const FieldElement> v) const;

  bool operator==(const FullLieAlgebra& other) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<FieldElement> table_;  // [(i * n + j) * n + m]
};

struct ValidationReport {
  bool jacobi_ok = true;
  std::optional<std::array<std::size_t, 3>> jacobi_violation;
  bool nilpotent = true;
  /// Nilpotency class; 0 for the zero algebra, meaningless when !nilpotent.
  int nilpotency_class = 0;
  /// Dimensions of gamma_1 = g, gamma_2 = g', ... down to 0 (or the
  /// stabilised dimension when not nilpotent).
  std::vector<std::size_t> lower_central_dims;
  std::vector<Vec> center_basis;   // reduced echelon
  std::vector<Vec> derived_basis;  // reduced echelon
  int characteristic = 0;

  bool class_below_p() const noexcept { return nilpotent && nilpotency_class < characteristic; }
  bool ok() const noexcept { return jacobi_ok && nilpotent && class_below_p(); }
  /// Throws the first applicable of jacobi-violation, not-nilpotent,
  /// class-too-large.
  void ensure() const;
};

ValidationReport validate(const FullLieAlgebra& alg);

/// The commutator data of a nilpotent Lie algebra: bases e of g/z and f of
/// g', and structure constants lambda with [e_i, e_j] = sum_m lambda_ij^m f_m.
struct LiePresentation {
  Field field;
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  int nilpotency_class = 0;
  std::vector<FieldElement> lambda;  // [(i * a + j) * b + m], antisymmetric in (i, j)
  std::vector<Vec> e_basis;          // coset representatives, vectors in F_q^n
  std::vector<Vec> f_basis;          // basis of g', vectors in F_q^n
  std::vector<std::string> names;

  FieldElement structure_constant(std::size_t i, std::size_t j, std::size_t m) const {
    return lambda[(i * a + j) * b + m];
  }
  /// The element sum_m g_m f_m of g', in full coordinates.
  Vec derived_element(std::span<const FieldElement> g) const;
};

/// Validates, then reduces to the commutator data. Pivots prefer the
/// earliest input basis vectors, so the result is deterministic.
LiePresentation reduce(const FullLieAlgebra& alg);

/// The class-2 algebra spanned by e_1..e_a, f_1..f_b with the presentation's
/// brackets and f central.
FullLieAlgebra implied_algebra(const LiePresentation& pres);

struct BuiltinInfo {
  std::string name;
  std::string description;
  std::string params;
};

const std::vector<BuiltinInfo>& builtin_catalog();

/// One of heisenberg, quadric7, quadric8, elliptic9. elliptic9 needs a
/// prime field and a nonzero alpha.
FullLieAlgebra builtin(const std::string& name, const Field& field, std::optional<long long> alpha = std::nullopt);

/// The direct sum A + B; generator names of B get a trailing apostrophe
/// when they collide with names of A.
FullLieAlgebra direct_sum(const FullLieAlgebra& lhs, const FullLieAlgebra& rhs);

/// Reinterprets an algebra defined over F_p over an extension field of the
/// same characteristic. Requires lhs to be over a prime field.
FullLieAlgebra extend_scalars(const FullLieAlgebra& alg, const Field& target);

}  // namespace commfibre
