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

// Acceptance suite: one PASS/FAIL line per criterion, sub-checks indented.
// Usage: commfibre_acceptance [criterion ...]   (default: all)

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commfibre/algebra.hpp"
#include "commfibre/enumeration.hpp"
#include "commfibre/error.hpp"
#include "commfibre/oracle.hpp"
#include "commfibre/zeta.hpp"

namespace {

using namespace commfibre;
using Counts = std::vector<std::uint64_t>;

// Wall-clock limits per criterion, in seconds.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 1.0;
constexpr double kLimit3 = 10.0;
constexpr double kLimit4 = 120.0;
constexpr double kLimit6 = 5.0;

class Checker {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      std::cout << "    FAIL  " << what << '\n';
    } else if (verbose_) {
      std::cout << "    ok    " << what << '\n';
    }
  }
  void info(const std::string& what) { std::cout << "    info  " << what << '\n'; }
  void set_verbose(bool v) { verbose_ = v; }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
  bool verbose_ = true;
};

std::string show(const Counts& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Rational rpow(std::uint64_t q, long long e) {
  const Rational m(power(q, static_cast<std::uint64_t>(e < 0 ? -e : e)));
  return e < 0 ? Rational(1) / m : m;
}

struct ClassRow {
  Counts K, V;
  std::uint64_t mult;
  auto operator<=>(const ClassRow&) const = default;
};

std::multiset<ClassRow> class_rows(const Classification& cls) {
  std::multiset<ClassRow> out;
  for (const auto& c : cls.classes) out.insert({c.K, c.V, c.multiplicity});
  return out;
}

std::string show(const std::multiset<ClassRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) os << " [K=" << show(r.K) << " V=" << show(r.V) << " x" << r.mult << ']';
  return os.str();
}

// ---- criterion 1 ----------------------------------------------------------

void heisenberg_closed_forms(Checker& c) {
  for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
    const Field f = make_field(p, k);
    const auto pres = reduce(builtin("heisenberg", f));
    const std::uint64_t q = f.q();
    c.set_verbose(false);
    for (unsigned t = 1; t <= 3; ++t) {
      const Rational expect0 = rpow(q, 2) + rpow(q, 1 - static_cast<long long>(t)) * Rational(q - 1);
      const Rational expect1 = rpow(q, 2) - rpow(q, 1 - static_cast<long long>(t));
      c.check(zeta_total(pres, Vec{f.zero()}, t).total == expect0,
              "q=" + std::to_string(q) + " t=" + std::to_string(t) + " zeta(t,0)");
      for (std::uint32_t g = 1; g < q; ++g)
        c.check(zeta_total(pres, Vec{FieldElement{g}}, t).total == expect1,
                "q=" + std::to_string(q) + " t=" + std::to_string(t) + " zeta(t,g) g=" + f.to_string(FieldElement{g}));
    }
    c.set_verbose(true);
    c.check(true, "q=" + std::to_string(q) + ": zeta(t,0) = q^2 + q^{1-t}(q-1), zeta(t,g!=0) = q^2 - q^{1-t}, t=1..3");
  }
}

// ---- criterion 2 ----------------------------------------------------------

void quadric_examples(Checker& c) {
  for (std::uint64_t q : {3, 5, 7}) {
    const Field f = make_field(static_cast<int>(q), 1);
    const std::string tag = " (q=" + std::to_string(q) + ")";

    // P^2 conic.
    {
      const auto pres = reduce(builtin("quadric7", f));
      const auto cls = classify_elements(pres);
      const Counts R{1, (q + 1) * (q - 1), q * q * (q - 1)};
      c.check(cls.profile.R == R, "quadric7 R = " + show(cls.profile.R) + " expected " + show(R) + tag);
      const Integer k_expected = Integer(q * q * q * q + q * q * (q + 1) * (q - 1) + q * q * (q - 1));
      const Integer k = class_number(pres, cls.profile);
      c.check(k == k_expected, "quadric7 k(G) = " + k.get_str() + " expected " + k_expected.get_str() + tag);

      const ClassRow tangent{{1, q - 1, q * (q - 1)}, {0, q * (q - 1), (q * q - q) * (q - 1)}, (q + 1) * (q - 1)};
      const ClassRow secant{{1, 2 * (q - 1), (q - 1) * (q - 1)}, {0, (q - 1) * (q - 1), (q * q - q + 1) * (q - 1)},
                            q * q * (q - 1)};
      const auto got = class_rows(cls);
      c.check(got.count(tangent) == 1, "quadric7 tangent class K=" + show(tangent.K) + " x" +
                                           std::to_string(tangent.mult) + tag);
      bool secant_kv = false;
      for (const auto& r : got) secant_kv |= (r.K == secant.K && r.V == secant.V);
      c.check(secant_kv, "quadric7 secant K=" + show(secant.K) + " V=" + show(secant.V) + " present" + tag);
      const std::multiset<ClassRow> stated{tangent, secant};
      c.check(got == stated, "quadric7 classes and multiplicities as stated:" + show(stated) + "; enumerated:" +
                                 show(got) + tag);

      // The full line census of a conic: tangent, secant, passant.
      const ClassRow secant_true{secant.K, secant.V, q * (q + 1) / 2 * (q - 1)};
      const ClassRow passant{{1, 0, (q + 1) * (q - 1)}, {0, (q + 1) * (q - 1), (q * q - q - 1) * (q - 1)},
                             q * (q - 1) / 2 * (q - 1)};
      const std::multiset<ClassRow> census{tangent, secant_true, passant};
      c.info(std::string("quadric7 enumeration matches the tangent/secant/passant line census: ") +
             (got == census ? "yes" : "no") + tag);
    }

    // P^3 quadric.
    {
      const auto pres = reduce(builtin("quadric8", f));
      const auto cls = classify_elements(pres);
      const Counts R{1, (q + 1) * (q + 1) * (q - 1), (q * q * q - q) * (q - 1)};
      c.check(cls.profile.R == R, "quadric8 R = " + show(cls.profile.R) + " expected " + show(R) + tag);
      const Integer k_expected =
          Integer(q * q * q * q + q * q * (q + 1) * (q + 1) * (q - 1) + q * q * q * q - 1 - (q + 1) * (q + 1) * (q - 1));
      const Integer k = class_number(pres, cls.profile);
      c.check(k == k_expected, "quadric8 k(G) = " + k.get_str() + " expected " + k_expected.get_str() + tag);
      const ClassRow tangent{{1, (2 * q + 1) * (q - 1), (q * q - q) * (q - 1)},
                             {0, q * q * (q - 1), (q * q * q - q * q) * (q - 1)},
                             (q + 1) * (q + 1) * (q - 1)};
      const ClassRow plane{{1, (q + 1) * (q - 1), q * q * (q - 1)},
                           {0, q * (q + 1) * (q - 1), (q * q * q - q * q - q) * (q - 1)},
                           (q * q * q - q) * (q - 1)};
      const std::multiset<ClassRow> stated{tangent, plane};
      const auto got = class_rows(cls);
      c.check(got == stated, "quadric8 classes and multiplicities:" + show(got) + tag);
    }
  }
}

// ---- criterion 3 ----------------------------------------------------------

// det U(y) for U = [[y1, y2, a y3], [y3, y1, y2], [y3, 0, y1]], computed on
// plain integers mod p so that it does not share code with the library.
long long elliptic_det(long long y1, long long y2, long long y3, long long a, long long p) {
  const long long m[3][3] = {{y1, y2, a * y3}, {y3, y1, y2}, {y3, 0, y1}};
  long long d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return ((d % p) + p) % p;
}

void elliptic_example(Checker& c) {
  for (long long p : {5, 7}) {
    for (long long alpha : {1, 2}) {
      const std::string tag = " (p=" + std::to_string(p) + ", alpha=" + std::to_string(alpha) + ")";
      const std::uint64_t P = static_cast<std::uint64_t>(p);

      // Rational points of the curve, one normalized representative each.
      std::vector<std::array<long long, 3>> points;
      for (long long y1 = 0; y1 < p; ++y1)
        for (long long y2 = 0; y2 < p; ++y2)
          for (long long y3 = 0; y3 < p; ++y3) {
            const long long lead = y1 ? y1 : (y2 ? y2 : y3);
            if (lead != 1) continue;  // zero vector or not normalized
            if (elliptic_det(y1, y2, y3, alpha, p) == 0) points.push_back({y1, y2, y3});
          }
      const std::uint64_t n = points.size();

      const Field f = make_field(static_cast<int>(p), 1);
      const auto pres = reduce(builtin("elliptic9", f, alpha));
      const auto cls = classify_elements(pres);
      // Half-rank strata 0..3; rank 2 never occurs for y != 0.
      const Counts R{1, 0, n * (P - 1), (P * P + P + 1 - n) * (P - 1)};
      c.check(cls.profile.R == R, "R = " + show(cls.profile.R) + " expected " + show(R) + ", n_alpha = " +
                                      std::to_string(n) + tag);

      const Integer k_expected = Integer(ipow(P, 6) + P * P * n * (P - 1) + (P * P + P + 1 - n) * (P - 1));
      c.check(class_number(pres, cls.profile) == k_expected, "k(G) = " + k_expected.get_str() + tag);

      std::uint64_t total = 0;
      std::map<std::uint64_t, std::size_t> classes_by_m;
      bool kv_ok = true;
      for (const auto& cl : cls.classes) {
        total += cl.multiplicity;
        std::uint64_t m = 0;
        for (const auto& y : points) {
          long long s = 0;
          for (int j = 0; j < 3; ++j) s += static_cast<long long>(cl.representative[j].code) * y[j];
          if (s % p == 0) ++m;
        }
        ++classes_by_m[m];
        const Counts K{1, 0, m * (P - 1), (P + 1 - m) * (P - 1)};
        const Counts V{0, 0, (n - m) * (P - 1), (P * P + m - n) * (P - 1)};
        if (m > 3 || cl.K != K || cl.V != V) {
          kv_ok = false;
          c.info("class m=" + std::to_string(m) + " K=" + show(cl.K) + " V=" + show(cl.V) + " expected K=" + show(K) +
                 " V=" + show(V));
        }
      }
      bool partition = classes_by_m.size() == cls.classes.size();
      std::ostringstream mults;
      for (const auto& cl : cls.classes) mults << ' ' << cl.multiplicity;
      c.check(kv_ok, "K = (1, 0, m(p-1), (p+1-m)(p-1)) per intersection count m" + tag);
      c.check(partition, "one KV class per intersection count m (" + std::to_string(cls.classes.size()) +
                             " classes, multiplicities" + mults.str() + ")" + tag);
      c.check(total == P * P * P - 1, "multiplicities sum to p^3 - 1 = " + std::to_string(P * P * P - 1) + tag);
    }
  }
}

// ---- criterion 4 ----------------------------------------------------------

void oracle_equivalence(Checker& c) {
  struct Case {
    const char* name;
    int p, k;
  };
  for (const Case& cs : {Case{"heisenberg", 3, 1}, Case{"heisenberg", 5, 1}, Case{"heisenberg", 3, 2},
                         Case{"quadric7", 3, 1}, Case{"quadric8", 3, 1}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cmp = compare(builtin(cs.name, make_field(cs.p, cs.k)), 2);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string tag = std::string(cs.name) + " F_" + std::to_string(static_cast<int>(ipow(cs.p, cs.k)));
    c.check(cmp.mismatches.empty(), tag + ": " + std::to_string(cmp.mismatches.size()) + " mismatches over " +
                                        std::to_string(cmp.theorem_derived_order) + " elements, t=1,2");
    c.check(cmp.theorem_class_number == cmp.oracle_class_number,
            tag + ": k(G) theorem " + cmp.theorem_class_number.get_str() + ", oracle " +
                std::to_string(cmp.oracle_class_number));
    c.check(cmp.ok(), tag + ": derived order, support and total mass agree (" + std::to_string(dt) + " s)");
  }
}

// ---- criterion 5 ----------------------------------------------------------

void global_identities(Checker& c) {
  const Field f = make_field(3, 1);
  for (const char* name : {"heisenberg", "quadric7", "quadric8", "elliptic9"}) {
    const auto alg = std::string(name) == "elliptic9" ? builtin(name, f, 1) : builtin(name, f);
    const auto pres = reduce(alg);
    const std::uint64_t q = f.q();
    const auto all = enumerate_vectors(f, pres.b);
    const auto scan = scan_strata(pres, all);
    const auto degrees = degree_counts(pres, scan.profile);
    const Integer order = power(q, pres.n);
    const Rational uniform(1, power(q, pres.b));
    const std::string tag = std::string(" [") + name + "]";

    bool sum_k = true, scalar = true;
    for (std::size_t idx = 1; idx < all.size(); ++idx) {
      std::uint64_t s = 0;
      for (auto x : scan.kv[idx].K) s += x;
      sum_k &= s == ipow(q, static_cast<unsigned>(pres.b - 1));
      for (std::uint32_t m = 2; m < q; ++m) {
        Vec g = all[idx];
        for (auto& e : g) e = f.mul(e, FieldElement{m});
        const auto& other = scan.kv[vector_index(f, g)];
        scalar &= other.K == scan.kv[idx].K && other.V == scan.kv[idx].V;
      }
    }
    c.check(sum_k, "sum_i K^i(g) = q^{b-1} for all g != 0" + tag);
    c.check(scalar, "KV vectors invariant under nonzero scalars" + tag);

    for (unsigned t = 1; t <= 3; ++t) {
      const std::string tt = " t=" + std::to_string(t) + tag;
      Integer mass = 0;
      bool counts_ok = true;
      Rational l1 = 0, moment = 0, literal_moment = 0;
      for (std::size_t idx = 0; idx < all.size(); ++idx) {
        Integer n;
        try {
          n = fibre_count(pres, scan.kv[idx], t);
        } catch (const Error&) {
          counts_ok = false;
          continue;
        }
        counts_ok &= n >= 0;
        mass += n;
        const Rational pt = fibre_prob(pres, scan.kv[idx], t);
        l1 += abs(pt - uniform);
        moment += pt * pt;
        const Rational lit = zeta_value(pres, scan.kv[idx], t).total / Rational(order);
        literal_moment += lit * lit;
      }
      c.check(counts_ok, "all N_t are non-negative integers" + tt);
      c.check(mass == power(q, 2 * t * pres.n), "sum N_t = |G|^{2t}" + tt);
      const Rational expected = second_moment_from_degrees(pres, degrees, t);
      c.check(moment == expected, "sum P_t^2 = 1/|G'| + (1/|G|) sum chi(1)^{-2(2t-1)} = " + format_rational(expected) + tt);
      Rational literal = uniform;
      for (std::size_t i = 1; i < degrees.size(); ++i)
        literal += Rational(degrees[i]) * rpow(q, -2 * static_cast<long long>(t * i)) / Rational(order);
      if (t > 1)
        c.info("exponent -2t form of the moment (" + format_rational(literal) + ") " +
               (literal == moment ? "matches" : "differs from") + " the c_t distribution (" + format_rational(moment) +
               ") and " + (literal == literal_moment ? "matches" : "differs from") + " sum (zeta(t,g)/|G|)^2" + tt);
      const Rational bound = uniformity_bound_squared(pres, degrees, t);
      c.check(l1 * l1 <= bound, "L1^2 = " + format_rational(l1 * l1) + " <= bound^2 = " + format_rational(bound) + tt);

      const Rational p_identity = fibre_prob(pres, scan.kv[0], t);
      if (p_identity < Rational(1) / Rational(order)) c.info("P_t(1) < 1/|G|" + tt);
    }
  }
}

// ---- criterion 6 ----------------------------------------------------------

void multiplicativity(Checker& c) {
  const Field f = make_field(3, 1);
  const auto h = builtin("heisenberg", f);
  const auto hh_alg = direct_sum(h, h);
  const auto hp = reduce(h);
  const auto hh = reduce(hh_alg);
  c.check(hh.n == 6 && hh.a == 4 && hh.b == 2, "H(F_3) + H(F_3) reduces to n=6, a=4, b=2");

  // Express (g1, g2) in the f-basis of the sum.
  std::vector<Vec> fs;
  for (std::uint32_t g1 = 0; g1 < 3; ++g1)
    for (std::uint32_t g2 = 0; g2 < 3; ++g2) fs.push_back({FieldElement{g1}, FieldElement{g2}});

  bool zeta_ok = true, count_ok = true, image_ok = true;
  for (const auto& g : fs) {
    const Vec full = hh.derived_element(g);
    // The f-basis is (y1, y1') so full coordinates 2 and 5 carry g1, g2.
    image_ok &= full[2] == g[0] && full[5] == g[1];
    const auto kv = kv_vectors(hh, g);
    const auto kv1 = kv_vectors(hp, Vec{g[0]});
    const auto kv2 = kv_vectors(hp, Vec{g[1]});
    for (unsigned t = 1; t <= 2; ++t) {
      zeta_ok &= zeta_value(hh, kv, t).total == direct_product(zeta_value(hp, kv1, t), zeta_value(hp, kv2, t));
      count_ok &= fibre_count(hh, kv, t) == fibre_count(hp, kv1, t) * fibre_count(hp, kv2, t);
    }
  }
  c.check(image_ok, "f-basis of the sum is (y1, y1')");
  c.check(zeta_ok, "zeta(t,(g1,g2)) = zeta(t,g1) zeta(t,g2) for all 9 pairs, t=1,2");
  c.check(count_ok, "N_t(g1,g2) = N_t(g1) N_t(g2) for all 9 pairs, t=1,2");
  const auto cmp = compare(hh_alg, 2);
  c.check(cmp.ok(), "oracle agrees on the direct sum, t=1,2 (k(G) = " + std::to_string(cmp.oracle_class_number) + ")");
  c.check(cmp.oracle_class_number == 121, "k(G1 x G2) = k(G1) k(G2) = 121");
}

struct Criterion {
  int id;
  const char* title;
  double limit;  // seconds, 0 = none
  std::function<void(Checker&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "Heisenberg closed forms, q in {3,5,7,9,25}, t in {1,2,3}", kLimit1, heisenberg_closed_forms},
      {2, "quadric examples, q in {3,5,7}", kLimit2, quadric_examples},
      {3, "elliptic example, p in {5,7}, alpha in {1,2}", kLimit3, elliptic_example},
      {4, "oracle equivalence, t in {1,2}", kLimit4, oracle_equivalence},
      {5, "global identities on every builtin, q=3, t in {1,2,3}", 0, global_identities},
      {6, "multiplicativity on H(F_3) + H(F_3), t in {1,2}", kLimit6, multiplicativity},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& cr : all) {
    if (!wanted.empty() && !wanted.count(cr.id)) continue;
    Checker c;
    std::cout << "criterion " << cr.id << ": " << cr.title << '\n';
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream timing;
    timing << "runtime " << dt << " s";
    if (cr.limit > 0) {
      timing << " (limit " << cr.limit << " s)";
      c.check(dt < cr.limit, timing.str());
    }
    const bool ok = c.failures() == 0;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " [" << timing.str() << "]\n";
  }
  return failed == 0 ? 0 : 1;
}
