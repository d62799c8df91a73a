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

#include "commfibre/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "commfibre/error.hpp"

namespace commfibre {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; });
}

long long parse_int(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(ErrorCode::ParseError, line, std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
  if (s.size() > 12) fail(ErrorCode::ParseError, line, std::string(what) + " is too large");
  return std::stoll(s);
}

FieldElement parse_coefficient(const Field& f, const std::string& s, std::size_t line) {
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') fail(ErrorCode::ParseError, line, "unterminated coefficient '" + s + "'");
    auto parts = split(s.substr(1, s.size() - 2), ',');
    if (static_cast<int>(parts.size()) != f.k())
      fail(ErrorCode::ParseError, line, "coefficient needs " + std::to_string(f.k()) + " coordinates");
    std::vector<int> coords;
    for (const auto& p : parts) {
      long long c = parse_int(p, line, "coordinate");
      if (c >= f.p()) fail(ErrorCode::CoefficientOutOfRange, line, "coordinate " + p + " not in [0, p)");
      coords.push_back(static_cast<int>(c));
    }
    return f.from_coords(coords);
  }
  long long c = parse_int(s, line, "coefficient");
  if (c >= f.p()) fail(ErrorCode::CoefficientOutOfRange, line, "coefficient " + s + " not in [0, p)");
  return f.from_int(c);
}

}  // namespace

FullLieAlgebra parse_algebra_file(std::string_view text) {
  enum class Stage { Field, Gens, Brackets } stage = Stage::Field;
  std::optional<Field> field;
  std::optional<FullLieAlgebra> alg;
  std::map<std::string, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::size_t line_no = 0;
  std::istringstream is{std::string(text)};
  for (std::string raw; std::getline(is, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto head = split_ws(line);
    const std::string& keyword = head.front();

    if (keyword == "field") {
      if (stage != Stage::Field) fail(ErrorCode::ParseError, line_no, "duplicate or misplaced field declaration");
      std::optional<long long> p, k;
      std::optional<std::vector<int>> poly;
      for (std::size_t i = 1; i < head.size(); ++i) {
        const auto eq = head[i].find('=');
        if (eq == std::string::npos) fail(ErrorCode::ParseError, line_no, "expected key=value, got '" + head[i] + "'");
        const std::string key = head[i].substr(0, eq), value = head[i].substr(eq + 1);
        if (key == "p" && !p) {
          p = parse_int(value, line_no, "p");
        } else if (key == "k" && !k) {
          k = parse_int(value, line_no, "k");
        } else if (key == "poly" && !poly) {
          poly.emplace();
          for (const auto& c : split(value, ',')) poly->push_back(static_cast<int>(parse_int(c, line_no, "poly")));
        } else {
          fail(ErrorCode::ParseError, line_no, "unexpected field attribute '" + key + "'");
        }
      }
      if (!p || !k) fail(ErrorCode::ParseError, line_no, "field needs p=<int> and k=<int>");
      try {
        field = Field::make(static_cast<int>(*p), static_cast<int>(*k), poly);
      } catch (const Error& e) {
        fail(e.code(), line_no, e.what());
      }
      stage = Stage::Gens;
    } else if (keyword == "gens") {
      if (stage != Stage::Gens) fail(ErrorCode::ParseError, line_no, "gens must follow the field declaration");
      std::vector<std::string> names(head.begin() + 1, head.end());
      if (names.empty()) fail(ErrorCode::ParseError, line_no, "gens needs at least one name");
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_identifier(names[i])) fail(ErrorCode::ParseError, line_no, "invalid generator name '" + names[i] + "'");
        if (!index.emplace(names[i], i).second)
          fail(ErrorCode::ParseError, line_no, "duplicate generator '" + names[i] + "'");
      }
      alg.emplace(*field, names);
      stage = Stage::Brackets;
    } else if (keyword == "bracket") {
      if (stage != Stage::Brackets) fail(ErrorCode::ParseError, line_no, "bracket before gens");
      const auto colon = line.find(':');
      if (colon == std::string::npos) fail(ErrorCode::ParseError, line_no, "bracket needs ':'");
      const auto lhs = split_ws(line.substr(0, colon));
      if (lhs.size() != 3) fail(ErrorCode::ParseError, line_no, "expected 'bracket <name> <name> :'");
      auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) fail(ErrorCode::UnknownGenerator, line_no, "unknown generator '" + name + "'");
        return it->second;
      };
      const std::size_t i = lookup(lhs[1]), j = lookup(lhs[2]);
      if (i == j) fail(ErrorCode::ParseError, line_no, "self-bracket [" + lhs[1] + "," + lhs[1] + "] is zero");
      if (!seen.emplace(std::min(i, j), std::max(i, j)).second)
        fail(ErrorCode::DuplicateBracket, line_no, "bracket [" + lhs[1] + "," + lhs[2] + "] already given");
      const std::string rhs = trim(line.substr(colon + 1));
      if (rhs.empty()) fail(ErrorCode::ParseError, line_no, "bracket has no terms");
      Vec image(alg->dim(), field->zero());
      for (const auto& term : split(rhs, '+')) {
        if (term.empty()) fail(ErrorCode::ParseError, line_no, "empty term");
        const auto star = term.find('*');
        FieldElement c = field->one();
        std::string name = term;
        if (star != std::string::npos) {
          c = parse_coefficient(*field, trim(term.substr(0, star)), line_no);
          name = trim(term.substr(star + 1));
        }
        if (!is_identifier(name)) fail(ErrorCode::ParseError, line_no, "malformed term '" + term + "'");
        const std::size_t m = lookup(name);
        image[m] = field->add(image[m], c);
      }
      alg->set_bracket(i, j, image);
    } else {
      fail(ErrorCode::ParseError, line_no, "unknown declaration '" + keyword + "'");
    }
  }
  if (!alg) fail(ErrorCode::ParseError, line_no, stage == Stage::Field ? "missing field declaration" : "missing gens");
  return *alg;
}

std::string format_algebra_file(const FullLieAlgebra& alg) {
  const Field& f = alg.field();
  std::ostringstream os;
  os << "field p=" << f.p() << " k=" << f.k();
  if (f.k() > 1) {
    os << " poly=";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
  }
  os << "\ngens";
  for (const auto& n : alg.names()) os << ' ' << n;
  os << '\n';
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto img = alg.basis_bracket(i, j);
      if (is_zero(img)) continue;
      os << "bracket " << alg.names()[i] << ' ' << alg.names()[j] << " :";
      bool first = true;
      for (std::size_t m = 0; m < n; ++m) {
        if (img[m].code == 0) continue;
        os << (first ? " " : " + ");
        first = false;
        if (img[m] != f.one()) os << f.to_string(img[m]) << '*';
        os << alg.names()[m];
      }
      os << '\n';
    }
  }
  return os.str();
}

Json element_json(const Field& f, FieldElement x) {
  if (f.k() == 1) return x.code;
  return f.coords(x);
}

Json vector_json(const Field& f, std::span<const FieldElement> v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(element_json(f, x));
  return out;
}

namespace {

Json counts_json(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

Json comparison_json(const Field& f, const ComparisonReport& cmp) {
  Json v;
  v["t_max"] = cmp.t_max;
  v["ok"] = cmp.ok();
  v["class_number_theorem"] = cmp.theorem_class_number.get_str();
  v["class_number_oracle"] = std::to_string(cmp.oracle_class_number);
  v["derived_order_theorem"] = std::to_string(cmp.theorem_derived_order);
  v["derived_order_oracle"] = std::to_string(cmp.oracle_derived_order);
  v["support_in_derived"] = cmp.support_in_derived;
  v["mass_ok"] = cmp.mass_ok;
  auto entries = [&](const std::vector<ComparisonEntry>& list) {
    Json out = Json::array();
    for (const auto& e : list) {
      Json row;
      row["g"] = vector_json(f, e.g);
      row["t"] = e.t;
      row["theorem"] = e.theorem.get_str();
      row["oracle"] = e.oracle.get_str();
      out.push_back(std::move(row));
    }
    return out;
  };
  v["entries"] = entries(cmp.entries);
  v["mismatches"] = entries(cmp.mismatches);
  return v;
}

Json build_report(const std::string& source, const LiePresentation& pres, const FibreReport& report,
                  const std::optional<ComparisonReport>& comparison) {
  const Field& f = pres.field;
  Json doc;
  doc["version"] = std::string(kVersion);

  Json input;
  input["source"] = source;
  input["field"] = {{"p", f.p()}, {"k", f.k()}, {"q", f.q()}, {"modulus", f.modulus()}};
  input["generators"] = pres.names;
  input["n"] = pres.n;
  input["a"] = pres.a;
  input["b"] = pres.b;
  input["class"] = pres.nilpotency_class;
  Json e = Json::array(), fb = Json::array();
  for (const auto& v : pres.e_basis) e.push_back(vector_json(f, v));
  for (const auto& v : pres.f_basis) fb.push_back(vector_json(f, v));
  input["e_basis"] = e;
  input["f_basis"] = fb;
  Json lambda = Json::array();
  for (std::size_t i = 0; i < pres.a; ++i)
    for (std::size_t j = i + 1; j < pres.a; ++j) {
      Vec c(pres.b);
      for (std::size_t m = 0; m < pres.b; ++m) c[m] = pres.structure_constant(i, j, m);
      if (is_zero(c)) continue;
      lambda.push_back({{"i", i + 1}, {"j", j + 1}, {"coefficients", vector_json(f, c)}});
    }
  input["lambda"] = lambda;
  doc["input"] = input;

  doc["group"] = {{"order", report.group_order.get_str()},
                  {"abelianization_order", report.abelianization_order.get_str()},
                  {"derived_order", report.derived_order.get_str()}};
  doc["rank_profile"] = counts_json(report.profile.R);
  doc["class_number"] = report.class_number.get_str();
  doc["degree_counts"] = integers_json(report.degrees);

  Json classes = Json::array();
  classes.push_back({{"representative", vector_json(f, Vec(pres.b, f.zero()))},
                     {"identity", true},
                     {"multiplicity", 1},
                     {"K", counts_json(report.profile.R)},
                     {"V", counts_json(std::vector<std::uint64_t>(report.profile.R.size(), 0))}});
  for (const auto& c : report.classes.classes)
    classes.push_back({{"representative", vector_json(f, c.representative)},
                       {"identity", false},
                       {"multiplicity", c.multiplicity},
                       {"K", counts_json(c.K)},
                       {"V", counts_json(c.V)}});
  doc["kv_classes"] = classes;

  Json fibres = Json::array();
  for (const auto& sec : report.sections) {
    Json s;
    s["t"] = sec.t;
    Json rows = Json::array();
    for (const auto& row : sec.rows) {
      Json r;
      r["g"] = vector_json(f, row.g);
      r["identity"] = row.identity;
      r["multiplicity"] = row.multiplicity;
      Json strata = Json::array();
      for (const auto& z : row.zeta.strata) strata.push_back(format_rational(z));
      r["zeta_strata"] = strata;
      r["zeta"] = format_rational(row.zeta.total);
      r["word_zeta"] = format_rational(row.word_zeta.total);
      r["count"] = row.count.get_str();
      r["probability"] = format_rational(row.probability);
      rows.push_back(std::move(r));
    }
    s["rows"] = rows;
    s["total_mass"] = sec.total_mass.get_str();
    s["bound_squared"] = format_rational(sec.bound_squared);
    s["sharp_bound_squared"] = format_rational(sec.sharp_bound_squared);
    s["l1_distance"] = format_rational(sec.l1);
    s["bound_holds"] = sec.bound_holds;
    s["second_moment"] = format_rational(sec.second_moment);
    s["second_moment_expected"] = format_rational(sec.second_moment_expected);
    fibres.push_back(std::move(s));
  }
  doc["fibres"] = fibres;
  if (comparison) doc["verification"] = comparison_json(f, *comparison);
  return doc;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  r.canonicalize();
  return r;
}

namespace {

std::string compact(const Json& v) { return v.dump(); }

std::string exact_and_decimal(const std::string& exact) {
  return exact + "  (" + format_decimal(parse_rational(exact)) + ")";
}

}  // namespace

std::string render_table(const Json& doc) {
  std::ostringstream os;
  os << doc["version"].get<std::string>() << '\n';
  const Json& in = doc["input"];
  os << "source:        " << in["source"].get<std::string>() << '\n';
  os << "field:         F_" << in["field"]["q"] << " (p=" << in["field"]["p"] << ", k=" << in["field"]["k"]
     << ", modulus " << compact(in["field"]["modulus"]) << ")\n";
  os << "dimensions:    n=" << in["n"] << " a=" << in["a"] << " b=" << in["b"] << " class=" << in["class"] << '\n';
  os << "|G|=" << doc["group"]["order"].get<std::string>()
     << "  |G/G'|=" << doc["group"]["abelianization_order"].get<std::string>()
     << "  |G'|=" << doc["group"]["derived_order"].get<std::string>() << '\n';
  os << "rank profile R: " << compact(doc["rank_profile"]) << '\n';
  os << "degree counts D: " << compact(doc["degree_counts"]) << '\n';
  os << "class number k(G) = " << doc["class_number"].get<std::string>() << '\n';

  os << "\nKV classes (" << doc["kv_classes"].size() << "):\n";
  for (const auto& c : doc["kv_classes"])
    os << "  g=" << (c["identity"].get<bool>() ? std::string("1") : compact(c["representative"])) << "  mult=" << c["multiplicity"] << "  K=" << compact(c["K"])
       << "  V=" << compact(c["V"]) << '\n';

  for (const auto& s : doc["fibres"]) {
    os << "\nt = " << s["t"] << '\n';
    for (const auto& r : s["rows"]) {
      os << "  " << (r["identity"].get<bool>() ? "g=1" : "g=" + compact(r["g"])) << "  x" << r["multiplicity"] << '\n';
      os << "    zeta(t)    = " << exact_and_decimal(r["zeta"].get<std::string>()) << '\n';
      os << "    zeta(2t-1) = " << exact_and_decimal(r["word_zeta"].get<std::string>()) << '\n';
      os << "    N_t        = " << r["count"].get<std::string>() << '\n';
      os << "    P_t        = " << exact_and_decimal(r["probability"].get<std::string>()) << '\n';
    }
    os << "  sum N_t over G' = " << s["total_mass"].get<std::string>() << '\n';
    os << "  L1 distance     = " << exact_and_decimal(s["l1_distance"].get<std::string>()) << '\n';
    const std::string bsq = s["bound_squared"].get<std::string>();
    os << "  bound^2         = " << exact_and_decimal(bsq) << "  bound = " << format_sqrt_decimal(parse_rational(bsq))
       << '\n';
    const std::string sharp = s["sharp_bound_squared"].get<std::string>();
    os << "  sharp bound^2   = " << exact_and_decimal(sharp) << '\n';
    os << "  bound holds     = " << (s["bound_holds"].get<bool>() ? "yes" : "NO") << '\n';
    os << "  sum P_t^2       = " << exact_and_decimal(s["second_moment"].get<std::string>()) << '\n';
    os << "  expected        = " << exact_and_decimal(s["second_moment_expected"].get<std::string>()) << '\n';
  }

  if (doc.contains("verification")) {
    const Json& v = doc["verification"];
    os << "\nverification (t <= " << v["t_max"] << "): " << (v["ok"].get<bool>() ? "OK" : "MISMATCH") << '\n';
    os << "  class number theorem=" << v["class_number_theorem"].get<std::string>()
       << " oracle=" << v["class_number_oracle"].get<std::string>() << '\n';
    os << "  |G'| theorem=" << v["derived_order_theorem"].get<std::string>()
       << " oracle=" << v["derived_order_oracle"].get<std::string>() << '\n';
    for (const auto& e : v["entries"])
      os << "  t=" << e["t"] << " g=" << compact(e["g"]) << "  theorem=" << e["theorem"].get<std::string>()
         << " oracle=" << e["oracle"].get<std::string>() << '\n';
    os << "  mismatches: " << v["mismatches"].size() << '\n';
    for (const auto& e : v["mismatches"])
      os << "    t=" << e["t"] << " g=" << compact(e["g"]) << "  theorem=" << e["theorem"].get<std::string>()
         << " oracle=" << e["oracle"].get<std::string>() << '\n';
  }
  return os.str();
}

}  // namespace commfibre
