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

#include "commfibre/algebra.hpp"

#include <algorithm>
#include <set>

#include "commfibre/error.hpp"
#include "commfibre/linalg.hpp"

namespace commfibre {

FullLieAlgebra::FullLieAlgebra(Field field, std::vector<std::string> names)
    : field_(std::move(field)), names_(std::move(names)) {
  const std::size_t n = names_.size();
  table_.assign(n * n * n, field_.zero());
}

void FullLieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& image) {
  const std::size_t n = dim();
  if (i >= n || j >= n || i == j) throw Error(ErrorCode::BadParam, "bracket indices out of range or equal");
  if (image.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket image has wrong length");
  for (std::size_t m = 0; m < n; ++m) {
    table_[(i * n + j) * n + m] = image[m];
    table_[(j * n + i) * n + m] = field_.neg(image[m]);
  }
}

std::span<const FieldElement> FullLieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  return {table_.data() + (i * n + j) * n, n};
}

Vec FullLieAlgebra::bracket(std::span<const FieldElement> u, std::span<const FieldElement> v) const {
  const std::size_t n = dim();
  Vec out(n, field_.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].code == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || v[j].code == 0) continue;
      const FieldElement c = field_.mul(u[i], v[j]);
      auto img = basis_bracket(i, j);
      for (std::size_t m = 0; m < n; ++m)
        if (img[m].code != 0) out[m] = field_.add(out[m], field_.mul(c, img[m]));
    }
  }
  return out;
}

bool FullLieAlgebra::operator==(const FullLieAlgebra& other) const {
  return field_ == other.field_ && names_ == other.names_ && table_ == other.table_;
}

namespace {

Vec unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v[i] = f.one();
  return v;
}

Vec add_vec(const Field& f, Vec x, std::span<const FieldElement> y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.add(x[i], y[i]);
  return x;
}

}  // namespace

void ValidationReport::ensure() const {
  if (!jacobi_ok) {
    const auto& t = *jacobi_violation;
    throw Error(ErrorCode::JacobiViolation, "Jacobi identity fails on basis triple (" + std::to_string(t[0] + 1) +
                                                "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")");
  }
  if (!nilpotent) throw Error(ErrorCode::NotNilpotent, "lower central series does not reach zero");
  if (!class_below_p())
    throw Error(ErrorCode::ClassTooLarge, "nilpotency class " + std::to_string(nilpotency_class) +
                                              " is not below p = " + std::to_string(characteristic));
}

ValidationReport validate(const FullLieAlgebra& alg) {
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  ValidationReport report;
  report.characteristic = f.p();

  for (std::size_t i = 0; i < n && report.jacobi_ok; ++i) {
    for (std::size_t j = i + 1; j < n && report.jacobi_ok; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ei = unit(f, n, i), ej = unit(f, n, j), ek = unit(f, n, k);
        Vec sum = alg.bracket(ei, alg.bracket(ej, ek));
        sum = add_vec(f, std::move(sum), alg.bracket(ej, alg.bracket(ek, ei)));
        sum = add_vec(f, std::move(sum), alg.bracket(ek, alg.bracket(ei, ej)));
        if (!is_zero(sum)) {
          report.jacobi_ok = false;
          report.jacobi_violation = std::array<std::size_t, 3>{i, j, k};
          break;
        }
      }
    }
  }

  // lower central series
  std::vector<Vec> gamma;
  for (std::size_t i = 0; i < n; ++i) gamma.push_back(unit(f, n, i));
  report.lower_central_dims.push_back(n);
  int steps = 0;
  while (!gamma.empty()) {
    std::vector<Vec> images;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec ei = unit(f, n, i);
      for (const auto& w : gamma) images.push_back(alg.bracket(ei, w));
    }
    auto next = linalg::rref(f, std::move(images));
    ++steps;
    if (steps == 1) report.derived_basis = next.rows;
    if (next.rows.size() == gamma.size()) {
      report.nilpotent = false;
      break;
    }
    report.lower_central_dims.push_back(next.rows.size());
    gamma = std::move(next.rows);
  }
  report.nilpotency_class = report.nilpotent ? steps : 0;
  if (n == 0) report.nilpotency_class = 0;

  // centre: u with [u, e_j] = 0 for all j
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < n; ++m) {
      Vec row(n, f.zero());
      for (std::size_t i = 0; i < n; ++i)
        if (i != j) row[i] = alg.basis_bracket(i, j)[m];
      rows.push_back(std::move(row));
    }
  }
  report.center_basis = linalg::nullspace(f, rows, n);
  return report;
}

Vec LiePresentation::derived_element(std::span<const FieldElement> g) const {
  if (g.size() != b) throw Error(ErrorCode::DimensionMismatch, "expected a vector of length b");
  Vec out(n, field.zero());
  for (std::size_t m = 0; m < b; ++m) {
    if (g[m].code == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] = field.add(out[i], field.mul(g[m], f_basis[m][i]));
  }
  return out;
}

LiePresentation reduce(const FullLieAlgebra& alg) {
  const ValidationReport report = validate(alg);
  report.ensure();
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  if (report.derived_basis.empty()) throw Error(ErrorCode::Abelian, "derived subalgebra is zero");

  LiePresentation pres{f, 0, 0, 0, 0, {}, {}, {}, {}};
  pres.n = n;
  pres.nilpotency_class = report.nilpotency_class;
  pres.names = alg.names();
  pres.f_basis = report.derived_basis;
  pres.b = pres.f_basis.size();

  std::vector<Vec> span_rows = report.center_basis;
  std::size_t current = linalg::rank(f, span_rows);
  for (std::size_t i = 0; i < n; ++i) {
    span_rows.push_back(unit(f, n, i));
    const std::size_t r = linalg::rank(f, span_rows);
    if (r > current) {
      pres.e_basis.push_back(unit(f, n, i));
      current = r;
    } else {
      span_rows.pop_back();
    }
  }
  pres.a = pres.e_basis.size();

  linalg::Echelon fe{pres.f_basis, {}};
  for (const auto& row : pres.f_basis)
    fe.pivots.push_back(static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](FieldElement x) { return x.code != 0; }) - row.begin()));

  const std::size_t a = pres.a, b = pres.b;
  pres.lambda.assign(a * a * b, f.zero());
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = i + 1; j < a; ++j) {
      const Vec br = alg.bracket(pres.e_basis[i], pres.e_basis[j]);
      auto c = linalg::coordinates(f, fe, br);
      if (!c) throw Error(ErrorCode::InconsistentBracket, "bracket image outside the derived subalgebra");
      for (std::size_t m = 0; m < b; ++m) {
        pres.lambda[(i * a + j) * b + m] = (*c)[m];
        pres.lambda[(j * a + i) * b + m] = f.neg((*c)[m]);
      }
    }
  }
  return pres;
}

FullLieAlgebra implied_algebra(const LiePresentation& pres) {
  const Field& f = pres.field;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pres.a; ++i) names.push_back("e" + std::to_string(i + 1));
  for (std::size_t m = 0; m < pres.b; ++m) names.push_back("f" + std::to_string(m + 1));
  FullLieAlgebra alg(f, names);
  const std::size_t dim = pres.a + pres.b;
  for (std::size_t i = 0; i < pres.a; ++i) {
    for (std::size_t j = i + 1; j < pres.a; ++j) {
      Vec img(dim, f.zero());
      for (std::size_t m = 0; m < pres.b; ++m) img[pres.a + m] = pres.structure_constant(i, j, m);
      alg.set_bracket(i, j, img);
    }
  }
  return alg;
}

const std::vector<BuiltinInfo>& builtin_catalog() {
  static const std::vector<BuiltinInfo> catalog = {
      {"heisenberg", "Heisenberg algebra: n=3, [x1,x2]=y1", "any F_q"},
      {"quadric7", "7-dim class-2 algebra; Pfaffian locus is the conic Y1^2 = Y2*Y3", "any F_q"},
      {"quadric8", "8-dim class-2 algebra; Pfaffian locus is the quadric Y1*Y4 = Y2*Y3", "any F_q"},
      {"elliptic9", "9-dim class-2 algebra; Pfaffian locus is a plane cubic E_alpha", "prime field F_p, alpha in F_p^*"},
  };
  return catalog;
}

namespace {

struct Relation {
  int lhs;
  int rhs;
  int target;
  long long coeff;
};

FullLieAlgebra from_relations(const Field& f, std::vector<std::string> names, const std::vector<Relation>& rels) {
  FullLieAlgebra alg(f, std::move(names));
  const std::size_t n = alg.dim();
  for (const auto& r : rels) {
    Vec img(n, f.zero());
    img[r.target] = f.from_int(r.coeff);
    alg.set_bracket(r.lhs, r.rhs, img);
  }
  return alg;
}

}  // namespace

FullLieAlgebra builtin(const std::string& name, const Field& field, std::optional<long long> alpha) {
  if (name == "heisenberg") return from_relations(field, {"x1", "x2", "y1"}, {{0, 1, 2, 1}});
  if (name == "quadric7") {
    // x1..x4 = 0..3, y1..y3 = 4..6
    return from_relations(field, {"x1", "x2", "x3", "x4", "y1", "y2", "y3"},
                          {{0, 2, 4, 1}, {0, 3, 5, 1}, {1, 2, 6, 1}, {1, 3, 4, 1}});
  }
  if (name == "quadric8") {
    return from_relations(field, {"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"},
                          {{0, 2, 4, 1}, {0, 3, 5, 1}, {1, 2, 6, 1}, {1, 3, 7, 1}});
  }
  if (name == "elliptic9") {
    if (field.k() != 1) throw Error(ErrorCode::BadParam, "elliptic9 is defined over prime fields only");
    if (!alpha) throw Error(ErrorCode::BadParam, "elliptic9 requires alpha");
    if (field.from_int(*alpha).code == 0) throw Error(ErrorCode::BadParam, "alpha must be nonzero mod p");
    // x1..x6 = 0..5, y1..y3 = 6..8
    return from_relations(field, {"x1", "x2", "x3", "x4", "x5", "x6", "y1", "y2", "y3"},
                          {{0, 3, 6, 1},
                           {0, 4, 7, 1},
                           {0, 5, 8, *alpha},
                           {1, 3, 8, 1},
                           {1, 4, 6, 1},
                           {1, 5, 7, 1},
                           {2, 3, 8, 1},
                           {2, 5, 6, 1}});
  }
  throw Error(ErrorCode::UnknownName, "no builtin algebra named '" + name + "'");
}

FullLieAlgebra direct_sum(const FullLieAlgebra& lhs, const FullLieAlgebra& rhs) {
  if (!(lhs.field() == rhs.field())) throw Error(ErrorCode::FieldMismatch, "direct sum over different fields");
  const Field& f = lhs.field();
  const std::size_t n1 = lhs.dim(), n2 = rhs.dim(), n = n1 + n2;
  std::vector<std::string> names = lhs.names();
  std::set<std::string> used(names.begin(), names.end());
  for (auto name : rhs.names()) {
    while (used.count(name)) name += "'";
    used.insert(name);
    names.push_back(name);
  }
  FullLieAlgebra out(f, names);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j) {
      Vec img(n, f.zero());
      auto src = lhs.basis_bracket(i, j);
      std::copy(src.begin(), src.end(), img.begin());
      out.set_bracket(i, j, img);
    }
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = i + 1; j < n2; ++j) {
      Vec img(n, f.zero());
      auto src = rhs.basis_bracket(i, j);
      std::copy(src.begin(), src.end(), img.begin() + n1);
      out.set_bracket(n1 + i, n1 + j, img);
    }
  return out;
}

FullLieAlgebra extend_scalars(const FullLieAlgebra& alg, const Field& target) {
  const Field& src = alg.field();
  if (src.k() != 1 || src.p() != target.p())
    throw Error(ErrorCode::FieldMismatch, "base extension needs a prime-field algebra of the same characteristic");
  const std::size_t n = alg.dim();
  FullLieAlgebra out(target, alg.names());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto img = alg.basis_bracket(i, j);
      Vec mapped(n);
      for (std::size_t m = 0; m < n; ++m) mapped[m] = target.from_int(img[m].code);
      out.set_bracket(i, j, mapped);
    }
  return out;
}

}  // namespace commfibre
