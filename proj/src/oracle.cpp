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

#include "commfibre/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "commfibre/enumeration.hpp"
#include "commfibre/error.hpp"
#include "commfibre/linalg.hpp"
#include "commfibre/zeta.hpp"
#include "parallel.hpp"

namespace commfibre {

namespace {

void check_pairs(std::uint64_t order, std::uint64_t budget, const char* what) {
  if (order > 0 && order > budget / order)
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + ": |G|^2 = " + std::to_string(order) + "^2 exceeds budget " +
                                               std::to_string(budget));
}

void axpy(const Field& f, FieldElement c, std::span<const FieldElement> x, Vec& y) {
  if (c.code == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i].code != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
}

}  // namespace

LazardGroup::LazardGroup(FullLieAlgebra alg) : alg_(std::move(alg)) {
  const ValidationReport report = validate(alg_);
  if (!report.jacobi_ok || !report.nilpotent) report.ensure();
  class_ = report.nilpotency_class;
  const Field& f = alg_.field();
  if (class_ > 3 || class_ >= f.p())
    throw Error(ErrorCode::ClassUnsupported, "BCH product implemented for class <= 3 and class < p; class is " +
                                                 std::to_string(class_) + ", p = " + std::to_string(f.p()));
  const std::size_t n = alg_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto img = alg_.basis_bracket(i, j);
      for (std::size_t m = 0; m < n; ++m)
        if (img[m].code != 0)
          terms_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(m), img[m]});
    }
  half_ = f.inv(f.from_int(2));
  if (class_ >= 3) twelfth_ = f.inv(f.from_int(12));
}

std::uint64_t LazardGroup::order() const { return vector_count(field(), dim()); }

void LazardGroup::bracket_into(std::span<const FieldElement> u, std::span<const FieldElement> v, Vec& out) const {
  const Field& f = field();
  out.assign(dim(), f.zero());
  for (const auto& t : terms_) {
    const FieldElement a = u[t.i], b = v[t.j];
    if (a.code == 0 || b.code == 0) continue;
    out[t.m] = f.add(out[t.m], f.mul(f.mul(a, b), t.c));
  }
}

Vec LazardGroup::bracket(std::span<const FieldElement> u, std::span<const FieldElement> v) const {
  Vec out;
  bracket_into(u, v, out);
  return out;
}

Vec LazardGroup::multiply(std::span<const FieldElement> u, std::span<const FieldElement> v) const {
  const Field& f = field();
  const std::size_t n = dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.add(u[i], v[i]);
  if (class_ < 2) return out;
  Vec uv;
  bracket_into(u, v, uv);
  axpy(f, half_, uv, out);
  if (class_ >= 3) {
    // (1/12)([u,[u,v]] + [v,[v,u]]) = (1/12)([u,[u,v]] - [v,[u,v]])
    Vec t1, t2;
    bracket_into(u, uv, t1);
    bracket_into(v, uv, t2);
    for (std::size_t i = 0; i < n; ++i) t1[i] = f.sub(t1[i], t2[i]);
    axpy(f, twelfth_, t1, out);
  }
  return out;
}

Vec LazardGroup::inverse(std::span<const FieldElement> u) const {
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = field().neg(u[i]);
  return out;
}

Vec LazardGroup::power(std::span<const FieldElement> u, std::uint64_t e) const {
  Vec out(dim(), field().zero());
  for (std::uint64_t i = 0; i < e; ++i) out = multiply(out, u);
  return out;
}

Vec LazardGroup::conjugate(std::span<const FieldElement> h, std::span<const FieldElement> u) const {
  return multiply(multiply(h, u), inverse(h));
}

Vec LazardGroup::commutator_bch(std::span<const FieldElement> u, std::span<const FieldElement> v) const {
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

Vec LazardGroup::commutator(std::span<const FieldElement> u, std::span<const FieldElement> v) const {
  if (class_ == 2) return bracket(u, v);
  return commutator_bch(u, v);
}

Vec bch_multiply(const FullLieAlgebra& alg, std::span<const FieldElement> u, std::span<const FieldElement> v) {
  return LazardGroup(alg).multiply(u, v);
}

Vec group_commutator(const FullLieAlgebra& alg, std::span<const FieldElement> u, std::span<const FieldElement> v) {
  return LazardGroup(alg).commutator(u, v);
}

mpz_class FibreTable::at(const Field& f, std::span<const FieldElement> element) const {
  auto it = counts.find(vector_index(f, element));
  return it == counts.end() ? mpz_class(0) : it->second;
}

mpz_class FibreTable::total() const {
  mpz_class s = 0;
  for (const auto& [k, v] : counts) s += v;
  return s;
}

namespace {

constexpr std::uint64_t kDenseTallyLimit = 1u << 24;

// Commutator values lie in the span of the bracket images, so only these
// coordinates can be nonzero.
std::vector<std::size_t> active_coordinates(const FullLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        auto img = alg.basis_bracket(i, j);
        for (std::size_t m = 0; m < n; ++m)
          if (img[m].code != 0) used[m] = true;
      }
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < n; ++m)
    if (used[m]) out.push_back(m);
  return out;
}

FibreTable first_fibres(const LazardGroup& group, const OracleOptions& opts) {
  const Field& f = group.field();
  const std::size_t n = group.dim();
  const std::uint64_t order = group.order();
  check_pairs(order, opts.budget, "brute-force fibres");
  const auto active = active_coordinates(group.algebra());
  const std::size_t na = active.size();
  const std::uint64_t keys = vector_count(f, na);
  if (keys > kDenseTallyLimit) throw Error(ErrorCode::BudgetExceeded, "commutator value space too large to tally");

  const std::uint64_t workers = detail::worker_count(order, opts.threads);
  std::vector<std::vector<std::uint64_t>> tallies(workers, std::vector<std::uint64_t>(keys, 0));
  const bool fast = opts.class2_fast_path && group.nilpotency_class() == 2;
  const std::uint32_t q = f.q();

  detail::parallel_chunks(order, static_cast<unsigned>(workers), [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    auto& tally = tallies[w];
    Vec u = vector_at(f, n, begin);
    if (fast) {
      // v -> [u, v] is linear: tabulate x * [u, e_j] on the active coordinates
      std::vector<Vec> table(n * q, Vec(na));
      std::vector<Vec> partial(n + 1, Vec(na, f.zero()));
      std::vector<std::uint32_t> digit(n);
      Vec ej(n, f.zero());
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        for (std::size_t j = 0; j < n; ++j) {
          ej.assign(n, f.zero());
          ej[j] = f.one();
          const Vec col = group.bracket(u, ej);
          for (std::uint32_t x = 0; x < q; ++x)
            for (std::size_t a = 0; a < na; ++a) table[j * q + x][a] = f.mul({x}, col[active[a]]);
        }
        std::fill(digit.begin(), digit.end(), 0);
        for (std::size_t j = 0; j < n; ++j) partial[j + 1] = partial[j];
        while (true) {
          std::uint64_t key = 0;
          for (std::size_t a = 0; a < na; ++a) key = key * q + partial[n][a].code;
          ++tally[key];
          std::size_t j = n;
          while (j > 0) {
            if (++digit[j - 1] < q) break;
            digit[j - 1] = 0;
            --j;
          }
          if (j == 0) break;
          for (std::size_t jj = j - 1; jj < n; ++jj) {
            const Vec& add = table[jj * q + digit[jj]];
            for (std::size_t a = 0; a < na; ++a) partial[jj + 1][a] = f.add(partial[jj][a], add[a]);
          }
        }
        next_vector(f, u);
      }
    } else {
      Vec v(n);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::fill(v.begin(), v.end(), f.zero());
        do {
          const Vec c = group.commutator_bch(u, v);
          std::uint64_t key = 0;
          for (std::size_t a = 0; a < na; ++a) key = key * q + c[active[a]].code;
          ++tally[key];
        } while (next_vector(f, v));
        next_vector(f, u);
      }
    }
  });

  FibreTable table;
  table.t = 1;
  for (std::uint64_t key = 0; key < keys; ++key) {
    std::uint64_t total = 0;
    for (const auto& t : tallies) total += t[key];
    if (total == 0) continue;
    Vec full(n, f.zero());
    const Vec compact = vector_at(f, na, key);
    for (std::size_t a = 0; a < na; ++a) full[active[a]] = compact[a];
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(total), 0, 0, &total);
    table.counts[vector_index(f, full)] = z;
  }
  return table;
}

}  // namespace

std::vector<Vec> oracle_derived_subgroup(const LazardGroup& group, const FibreTable& first) {
  const Field& f = group.field();
  const std::size_t n = group.dim();
  std::vector<Vec> gens;
  for (const auto& [key, count] : first.counts) gens.push_back(vector_at(f, n, key));
  std::unordered_map<std::uint64_t, bool> seen;
  std::deque<Vec> queue;
  std::vector<Vec> out;
  const Vec identity(n, f.zero());
  seen[vector_index(f, identity)] = true;
  queue.push_back(identity);
  while (!queue.empty()) {
    Vec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Vec y = group.multiply(x, s);
      if (seen.emplace(vector_index(f, y), true).second) queue.push_back(y);
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(),
            [&](const Vec& lhs, const Vec& rhs) { return vector_index(f, lhs) < vector_index(f, rhs); });
  return out;
}

std::vector<FibreTable> brute_fibres(const LazardGroup& group, unsigned t_max, const OracleOptions& opts) {
  if (t_max == 0) throw Error(ErrorCode::BadParam, "t must be a positive integer");
  const Field& f = group.field();
  std::vector<FibreTable> out;
  out.push_back(first_fibres(group, opts));
  if (t_max == 1) return out;

  const std::vector<Vec> H = oracle_derived_subgroup(group, out.front());
  const std::size_t h = H.size();
  std::unordered_map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < h; ++i) pos[vector_index(f, H[i])] = i;
  // quotient[x * h + y] = position of x^{-1} y
  std::vector<std::size_t> quotient(h * h);
  for (std::size_t x = 0; x < h; ++x) {
    const Vec xinv = group.inverse(H[x]);
    for (std::size_t y = 0; y < h; ++y) quotient[x * h + y] = pos.at(vector_index(f, group.multiply(xinv, H[y])));
  }
  std::vector<mpz_class> first(h, 0);
  for (std::size_t i = 0; i < h; ++i) first[i] = out.front().at(f, H[i]);

  std::vector<mpz_class> prev = first;
  for (unsigned t = 2; t <= t_max; ++t) {
    std::vector<mpz_class> next(h, 0);
    for (std::size_t g = 0; g < h; ++g)
      for (std::size_t x = 0; x < h; ++x)
        if (prev[x] != 0) next[g] += prev[x] * first[quotient[x * h + g]];
    FibreTable table;
    table.t = t;
    for (std::size_t g = 0; g < h; ++g)
      if (next[g] != 0) table.counts[vector_index(f, H[g])] = next[g];
    out.push_back(std::move(table));
    prev = std::move(next);
  }
  return out;
}

FibreTable brute_fibres(const FullLieAlgebra& alg, unsigned t, const OracleOptions& opts) {
  return brute_fibres(LazardGroup(alg), t, opts).back();
}

std::uint64_t conjugacy_count(const LazardGroup& group, const OracleOptions& opts) {
  const Field& f = group.field();
  const std::size_t n = group.dim();
  const std::uint64_t order = group.order();
  check_pairs(order, opts.budget, "conjugacy count");
  std::vector<bool> visited(order, false);
  std::uint64_t classes = 0;
  Vec u(n, f.zero());
  for (std::uint64_t idx = 0; idx < order; ++idx, next_vector(f, u)) {
    if (visited[idx]) continue;
    ++classes;
    Vec h(n, f.zero());
    do {
      visited[vector_index(f, group.conjugate(h, u))] = true;
    } while (next_vector(f, h));
  }
  return classes;
}

std::uint64_t conjugacy_count(const FullLieAlgebra& alg, const OracleOptions& opts) {
  return conjugacy_count(LazardGroup(alg), opts);
}

ComparisonReport compare(const FullLieAlgebra& alg, unsigned t_max, const OracleOptions& opts) {
  const LiePresentation pres = reduce(alg);
  const Field& f = pres.field;
  EnumerationOptions eopts;
  eopts.threads = opts.threads;
  const Classification cls = classify_elements(pres, eopts);

  const LazardGroup group(alg);
  const auto tables = brute_fibres(group, t_max, opts);

  ComparisonReport report;
  report.t_max = t_max;
  report.theorem_class_number = class_number(pres, cls.profile);
  report.oracle_class_number = conjugacy_count(group, opts);
  report.theorem_derived_order = vector_count(f, pres.b);
  report.oracle_derived_order = oracle_derived_subgroup(group, tables.front()).size();

  linalg::Echelon derived = linalg::rref(f, pres.f_basis);
  for (const auto& [key, count] : tables.front().counts)
    if (!linalg::in_span(f, derived, vector_at(f, pres.n, key))) report.support_in_derived = false;

  const KVVectors identity{Vec(pres.b, f.zero()), cls.profile.R, std::vector<std::uint64_t>(cls.profile.R.size(), 0)};
  for (unsigned t = 1; t <= t_max; ++t) {
    const FibreTable& table = tables[t - 1];
    if (table.total() != power(f.q(), 2ull * t * pres.n)) report.mass_ok = false;

    const mpz_class n_identity = fibre_count(pres, identity, t);
    std::vector<mpz_class> n_class;
    for (const auto& c : cls.classes) n_class.push_back(fibre_count(pres, KVVectors{c.representative, c.K, c.V}, t));

    report.entries.push_back({identity.g, t, n_identity, table.at(f, pres.derived_element(identity.g))});
    for (std::size_t c = 0; c < cls.classes.size(); ++c) {
      const Vec& rep = cls.classes[c].representative;
      report.entries.push_back({rep, t, n_class[c], table.at(f, pres.derived_element(rep))});
    }

    Vec g(pres.b, f.zero());
    do {
      mpz_class theorem;
      if (is_zero(g)) {
        theorem = n_identity;
      } else {
        Vec line = g;
        normalize_projective(f, line);
        theorem = n_class[cls.class_by_line.at(vector_index(f, line))];
      }
      const mpz_class oracle = table.at(f, pres.derived_element(g));
      if (theorem != oracle) report.mismatches.push_back({g, t, theorem, oracle});
    } while (next_vector(f, g));
  }
  return report;
}

}  // namespace commfibre
