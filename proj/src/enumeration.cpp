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

#include "commfibre/enumeration.hpp"

#include <map>
#include <string>

#include "commfibre/error.hpp"
#include "parallel.hpp"

namespace commfibre {

namespace {

std::size_t rank_in_place(const Field& f, Vec& m, std::size_t a) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a && rank < a; ++c) {
    std::size_t piv = rank;
    while (piv < a && m[piv * a + c].code == 0) ++piv;
    if (piv == a) continue;
    if (piv != rank)
      for (std::size_t j = c; j < a; ++j) std::swap(m[piv * a + j], m[rank * a + j]);
    const FieldElement s = f.inv(m[rank * a + c]);
    for (std::size_t i = rank + 1; i < a; ++i) {
      const FieldElement x = m[i * a + c];
      if (x.code == 0) continue;
      const FieldElement factor = f.mul(x, s);
      for (std::size_t j = c; j < a; ++j) m[i * a + j] = f.sub(m[i * a + j], f.mul(factor, m[rank * a + j]));
    }
    ++rank;
  }
  return rank;
}

void check_budget(std::uint64_t points, std::uint64_t budget, const char* what) {
  if (points > budget)
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + ": " + std::to_string(points) +
                                               " points exceeds budget " + std::to_string(budget));
}

}  // namespace

void CommutatorMatrix::evaluate_into(std::span<const FieldElement> y, Vec& out) const {
  out.assign(a * a, field.zero());
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = i + 1; j < a; ++j) {
      auto coeffs = entry(i, j);
      FieldElement s = field.zero();
      for (std::size_t m = 0; m < b; ++m)
        if (coeffs[m].code != 0 && y[m].code != 0) s = field.add(s, field.mul(coeffs[m], y[m]));
      out[i * a + j] = s;
      out[j * a + i] = field.neg(s);
    }
  }
}

Vec CommutatorMatrix::evaluate(std::span<const FieldElement> y) const {
  if (y.size() != b) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  Vec out;
  evaluate_into(y, out);
  return out;
}

CommutatorMatrix build_matrix(const LiePresentation& pres) {
  CommutatorMatrix m{pres.field, pres.a, pres.b, {}};
  m.entries.assign(pres.a * pres.a * pres.b, pres.field.zero());
  for (std::size_t i = 0; i < pres.a; ++i)
    for (std::size_t j = 0; j < pres.a; ++j)
      for (std::size_t k = 0; k < pres.b; ++k)
        m.entries[(i * pres.a + j) * pres.b + k] = i < j ? pres.structure_constant(i, j, k)
                                                 : i > j ? pres.field.neg(pres.structure_constant(j, i, k))
                                                         : pres.field.zero();
  return m;
}

std::size_t rank_skew(const Field& f, std::span<const FieldElement> m, std::size_t a) {
  if (m.size() != a * a) throw Error(ErrorCode::DimensionMismatch, "matrix is not a x a");
  for (std::size_t i = 0; i < a; ++i) {
    if (m[i * a + i].code != 0) throw Error(ErrorCode::NotSkew, "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < a; ++j)
      if (m[i * a + j] != f.neg(m[j * a + i])) throw Error(ErrorCode::NotSkew, "matrix is not skew-symmetric");
  }
  Vec work(m.begin(), m.end());
  return rank_in_place(f, work, a);
}

std::uint64_t RankProfile::total() const noexcept {
  std::uint64_t s = 0;
  for (auto r : R) s += r;
  return s;
}

StratumScan scan_strata(const LiePresentation& pres, const std::vector<Vec>& gs, const EnumerationOptions& opts) {
  const Field& f = pres.field;
  for (const auto& g : gs)
    if (g.size() != pres.b) throw Error(ErrorCode::DimensionMismatch, "g must have length b");
  const std::uint64_t total = vector_count(f, pres.b);
  check_budget(total, opts.budget, "rank enumeration");

  const CommutatorMatrix B = build_matrix(pres);
  const std::size_t strata = pres.a / 2 + 1;
  const std::uint64_t workers = detail::worker_count(total, opts.threads);
  // per worker: R followed by K for each g
  std::vector<std::vector<std::uint64_t>> acc(workers, std::vector<std::uint64_t>(strata * (1 + gs.size()), 0));

  detail::parallel_chunks(total, static_cast<unsigned>(workers), [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    auto& local = acc[w];
    Vec y = vector_at(f, pres.b, begin);
    Vec mat;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      B.evaluate_into(y, mat);
      const std::size_t i = rank_in_place(f, mat, pres.a) / 2;
      ++local[i];
      for (std::size_t t = 0; t < gs.size(); ++t)
        if (dot(f, gs[t], y).code == 0) ++local[strata * (1 + t) + i];
      next_vector(f, y);
    }
  });

  std::vector<std::uint64_t> merged(strata * (1 + gs.size()), 0);
  for (const auto& local : acc)
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += local[i];

  StratumScan out;
  out.profile.R.assign(merged.begin(), merged.begin() + strata);
  for (std::size_t t = 0; t < gs.size(); ++t) {
    KVVectors kv{gs[t], {}, {}};
    kv.K.assign(merged.begin() + strata * (1 + t), merged.begin() + strata * (2 + t));
    kv.V.resize(strata);
    for (std::size_t i = 0; i < strata; ++i) kv.V[i] = out.profile.R[i] - kv.K[i];
    out.kv.push_back(std::move(kv));
  }
  return out;
}

RankProfile rank_profile(const LiePresentation& pres, const EnumerationOptions& opts) {
  return scan_strata(pres, {}, opts).profile;
}

KVVectors kv_vectors(const LiePresentation& pres, std::span<const FieldElement> g, const EnumerationOptions& opts) {
  if (g.size() != pres.b) throw Error(ErrorCode::DimensionMismatch, "g must have length b");
  return scan_strata(pres, {Vec(g.begin(), g.end())}, opts).kv.front();
}

const KVClass& Classification::class_of(const Field& f, std::span<const FieldElement> g) const {
  Vec line(g.begin(), g.end());
  if (is_zero(line)) throw Error(ErrorCode::BadParam, "the zero element has no KV class");
  normalize_projective(f, line);
  return classes.at(class_by_line.at(vector_index(f, line)));
}

Classification classify_elements(const LiePresentation& pres, const EnumerationOptions& opts) {
  const Field& f = pres.field;
  const std::uint64_t total = vector_count(f, pres.b);
  check_budget(total, opts.budget, "classification");

  const CommutatorMatrix B = build_matrix(pres);
  const std::size_t strata = pres.a / 2 + 1;
  const std::uint64_t scale = f.q() - 1;

  // projective representatives: first nonzero coordinate equal to one
  std::vector<Vec> lines;
  std::vector<std::uint8_t> line_stratum;
  {
    Vec y(pres.b, f.zero());
    Vec mat;
    while (next_vector(f, y)) {
      auto first = std::find_if(y.begin(), y.end(), [](FieldElement x) { return x.code != 0; });
      if (*first != f.one()) continue;
      B.evaluate_into(y, mat);
      lines.push_back(y);
      line_stratum.push_back(static_cast<std::uint8_t>(rank_in_place(f, mat, pres.a) / 2));
    }
  }

  Classification out;
  out.profile.R.assign(strata, 0);
  out.profile.R[0] = 1;
  for (auto s : line_stratum) out.profile.R[s] += scale;

  const std::uint64_t nlines = lines.size();
  std::vector<std::vector<std::uint64_t>> line_k(nlines);
  detail::parallel_chunks(nlines, opts.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t gi = begin; gi < end; ++gi) {
      std::vector<std::uint64_t> K(strata, 0);
      for (std::uint64_t yi = 0; yi < nlines; ++yi)
        if (dot(f, lines[gi], lines[yi]).code == 0) ++K[line_stratum[yi]];
      for (auto& k : K) k *= scale;
      K[0] = 1;
      line_k[gi] = std::move(K);
    }
  });

  // lexicographically smallest point on each line has first nonzero entry of code 1
  const FieldElement smallest{1};
  std::map<std::vector<std::uint64_t>, std::size_t> by_k;
  std::vector<std::pair<std::uint64_t, std::size_t>> order;  // (rep index, class slot)
  for (std::uint64_t gi = 0; gi < nlines; ++gi) {
    auto [it, inserted] = by_k.emplace(line_k[gi], out.classes.size());
    Vec rep = lines[gi];
    for (auto& x : rep) x = f.mul(x, smallest);
    if (inserted) {
      KVClass c;
      c.representative = rep;
      c.K = line_k[gi];
      c.V.resize(strata);
      for (std::size_t i = 0; i < strata; ++i) c.V[i] = out.profile.R[i] - c.K[i];
      out.classes.push_back(std::move(c));
    } else if (vector_index(f, rep) < vector_index(f, out.classes[it->second].representative)) {
      out.classes[it->second].representative = rep;
    }
    out.classes[it->second].multiplicity += scale;
    out.class_by_line[vector_index(f, lines[gi])] = it->second;
  }

  // order classes by representative
  std::vector<std::size_t> perm(out.classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return vector_index(f, out.classes[x].representative) < vector_index(f, out.classes[y].representative);
  });
  std::vector<std::size_t> inverse(perm.size());
  std::vector<KVClass> sorted;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    inverse[perm[i]] = i;
    sorted.push_back(std::move(out.classes[perm[i]]));
  }
  out.classes = std::move(sorted);
  for (auto& [line, slot] : out.class_by_line) slot = inverse[slot];
  return out;
}

}  // namespace commfibre
