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

#include "commfibre/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "commfibre/error.hpp"

namespace commfibre {

namespace detail {

struct FieldTables {
  int p = 0;
  int k = 0;
  std::uint32_t q = 0;
  std::vector<int> modulus;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> exp;  // length 2(q-1), wraps once
  std::vector<std::uint32_t> log;
};

}  // namespace detail

namespace {

constexpr std::uint32_t kMaxFieldOrder = 1u << 20;
constexpr std::uint32_t kMaxAddTableOrder = 1024;

using Poly = std::vector<long long>;  // constant-first over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long long inv_mod(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    long long quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  return ((t % p) + p) % p;
}

Poly poly_mod(Poly a, const Poly& m, long long p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const long long lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    long long c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, long long p) {
  Poly result{1};
  result = poly_mod(result, m, p);
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly code_to_poly(std::uint32_t code, int p, int k) {
  Poly out(k, 0);
  for (int i = k - 1; i >= 0; --i) {
    out[i] = code % p;
    code /= p;
  }
  trim(out);
  return out;
}

std::uint32_t poly_to_code(const Poly& poly, int p, int k) {
  std::uint32_t code = 0;
  for (int i = 0; i < k; ++i) {
    long long c = i < static_cast<int>(poly.size()) ? poly[i] : 0;
    code = code * p + static_cast<std::uint32_t>(c);
  }
  return code;
}

}  // namespace

bool is_prime(long long n) noexcept {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(int p, std::span<const int> poly) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c = ((c % p) + p) % p;
  trim(f);
  if (f.size() < 2) return false;
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  // X^{p^j} mod f for j = 0..k
  std::vector<Poly> frob(k + 1);
  frob[0] = poly_mod(Poly{0, 1}, f, p);
  for (int j = 1; j <= k; ++j) frob[j] = poly_powmod(frob[j - 1], static_cast<std::uint64_t>(p), f, p);
  if (frob[k] != frob[0]) return false;
  for (long long r : prime_factors(k)) {
    Poly g = frob[k / r];
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    trim(g);
    Poly d = poly_gcd(g, f, p);
    if (d.size() != 1) return false;
  }
  return true;
}

Field::Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {
  q_ = t_->q;
  p_ = t_->p;
  k_ = t_->k;
  add_ = t_->add.empty() ? nullptr : t_->add.data();
  neg_ = t_->neg.empty() ? nullptr : t_->neg.data();
  exp_ = t_->exp.empty() ? nullptr : t_->exp.data();
  log_ = t_->log.empty() ? nullptr : t_->log.data();
}

Field Field::make(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::EvenPrime, "characteristic 2 is not supported");
  if (k < 1) throw Error(ErrorCode::BadParam, "extension degree must be at least 1");
  long double order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  if (order > kMaxFieldOrder)
    throw Error(ErrorCode::FieldTooLarge, "q = " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^20");

  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->k = k;
  t->q = 1;
  for (int i = 0; i < k; ++i) t->q *= static_cast<std::uint32_t>(p);

  if (modulus) {
    auto& m = *modulus;
    if (static_cast<int>(m.size()) != k + 1 || m.back() != 1)
      throw Error(ErrorCode::BadModulus, "modulus must be monic of degree " + std::to_string(k));
    for (int c : m)
      if (c < 0 || c >= p) throw Error(ErrorCode::BadModulus, "modulus coefficient out of range");
    if (k > 1 && !is_irreducible(p, m)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
    t->modulus = m;
  } else if (k == 1) {
    t->modulus = {0, 1};
  } else {
    // lex-smallest monic irreducible, constant coefficient most significant
    std::vector<int> m(k + 1, 0);
    m[k] = 1;
    std::uint32_t count = t->q;
    bool found = false;
    for (std::uint32_t idx = 0; idx < count && !found; ++idx) {
      std::uint32_t x = idx;
      for (int i = k - 1; i >= 0; --i) {
        m[i] = static_cast<int>(x % p);
        x /= p;
      }
      found = is_irreducible(p, m);
    }
    t->modulus = m;
  }

  if (k > 1) {
    const std::uint32_t q = t->q;
    const Poly mod(t->modulus.begin(), t->modulus.end());
    t->neg.resize(q);
    for (std::uint32_t c = 0; c < q; ++c) {
      Poly a = code_to_poly(c, p, k);
      for (auto& x : a) x = (p - x) % p;
      t->neg[c] = poly_to_code(a, p, k);
    }
    // primitive element, then exp/log tables
    const auto factors = prime_factors(q - 1);
    std::uint32_t gen = 0;
    for (std::uint32_t c = 1; c < q && gen == 0; ++c) {
      Poly g = code_to_poly(c, p, k);
      bool primitive = true;
      for (long long r : factors) {
        Poly v = poly_powmod(g, (q - 1) / r, mod, p);
        if (v.size() == 1 && v[0] == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) gen = c;
    }
    t->exp.resize(2 * (q - 1));
    t->log.assign(q, 0);
    Poly cur{1};
    const Poly g = code_to_poly(gen, p, k);
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      std::uint32_t code = poly_to_code(cur, p, k);
      t->exp[i] = code;
      t->exp[i + q - 1] = code;
      t->log[code] = i;
      cur = poly_mulmod(cur, g, mod, p);
    }
  }
  Field out(t);
  if (k > 1 && t->q <= kMaxAddTableOrder) {
    auto tables = std::const_pointer_cast<detail::FieldTables>(t);
    tables->add.resize(static_cast<std::size_t>(t->q) * t->q);
    for (std::uint32_t a = 0; a < t->q; ++a)
      for (std::uint32_t b = 0; b < t->q; ++b) tables->add[a * t->q + b] = out.add({a}, {b}).code;
    out = Field(t);
  }
  return out;
}

int Field::p() const noexcept { return p_; }
int Field::k() const noexcept { return k_; }
std::uint32_t Field::q() const noexcept { return q_; }
const std::vector<int>& Field::modulus() const noexcept { return t_->modulus; }

FieldElement Field::one() const noexcept {
  std::uint32_t code = 1;
  for (int i = 1; i < k_; ++i) code *= p_;
  return {code};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (k_ == 1) return {static_cast<std::uint32_t>(inv_mod(a.code, p_))};
  std::uint32_t l = log_[a.code];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement Field::from_int(long long n) const noexcept {
  long long r = ((n % p_) + p_) % p_;
  return {static_cast<std::uint32_t>(r) * one().code};
}

FieldElement Field::from_coords(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != k_)
    throw Error(ErrorCode::BadParam, "expected " + std::to_string(k_) + " coordinates");
  std::uint32_t code = 0;
  for (int c : coords) {
    if (c < 0 || c >= p_) throw Error(ErrorCode::BadParam, "coordinate out of range");
    code = code * p_ + static_cast<std::uint32_t>(c);
  }
  return {code};
}

FieldElement Field::from_code(std::uint32_t code) const {
  if (code >= q_) throw Error(ErrorCode::BadParam, "field element code out of range");
  return {code};
}

std::vector<int> Field::coords(FieldElement a) const {
  std::vector<int> out(k_, 0);
  std::uint32_t x = a.code;
  for (int i = k_ - 1; i >= 0; --i) {
    out[i] = static_cast<int>(x % p_);
    x /= p_;
  }
  return out;
}

std::string Field::to_string(FieldElement a) const {
  if (k_ == 1) return std::to_string(a.code);
  std::ostringstream os;
  os << '[';
  auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

bool operator==(const Field& lhs, const Field& rhs) noexcept {
  if (lhs.t_ == rhs.t_) return true;
  return lhs.p_ == rhs.p_ && lhs.k_ == rhs.k_ && lhs.modulus() == rhs.modulus();
}

std::uint64_t vector_count(const Field& f, std::size_t b) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < b; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / f.q())
      throw Error(ErrorCode::BudgetExceeded, "q^b does not fit in 64 bits");
    n *= f.q();
  }
  return n;
}

Vec vector_at(const Field& f, std::size_t b, std::uint64_t index) {
  Vec v(b);
  for (std::size_t i = b; i-- > 0;) {
    v[i] = {static_cast<std::uint32_t>(index % f.q())};
    index /= f.q();
  }
  return v;
}

std::uint64_t vector_index(const Field& f, std::span<const FieldElement> v) {
  std::uint64_t index = 0;
  for (auto x : v) index = index * f.q() + x.code;
  return index;
}

bool next_vector(const Field& f, Vec& v) noexcept {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i].code < f.q()) return true;
    v[i].code = 0;
  }
  return false;
}

std::vector<Vec> enumerate_vectors(const Field& f, std::size_t b) {
  std::vector<Vec> out;
  out.reserve(vector_count(f, b));
  Vec v(b);
  do {
    out.push_back(v);
  } while (next_vector(f, v));
  return out;
}

FieldElement dot(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  FieldElement s = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
  return s;
}

void normalize_projective(const Field& f, Vec& v) {
  auto it = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.code != 0; });
  if (it == v.end()) return;
  const FieldElement s = f.inv(*it);
  for (auto& x : v) x = f.mul(x, s);
}

bool is_zero(std::span<const FieldElement> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x.code == 0; });
}

}  // namespace commfibre
