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

// Command-line front end: analyze, verify, bound, examples.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commfibre/algebra.hpp"
#include "commfibre/enumeration.hpp"
#include "commfibre/error.hpp"
#include "commfibre/io.hpp"
#include "commfibre/oracle.hpp"
#include "commfibre/zeta.hpp"

namespace {

using namespace commfibre;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Source {
  std::string file;
  std::string builtin;
  std::string q_override;
  long long alpha = 1;
  unsigned threads = 0;
  std::optional<std::uint64_t> budget;
};

void add_source_options(CLI::App* cmd, Source& src) {
  cmd->add_option("file", src.file, "algebra file");
  cmd->add_option("--builtin", src.builtin, "builtin algebra (see `examples`)");
  cmd->add_option("--q-override", src.q_override, "run over F_{p^k}, given as p,k");
  cmd->add_option("--alpha", src.alpha, "alpha parameter of elliptic9")->capture_default_str();
  cmd->add_option("--threads", src.threads, "worker threads (0 = all cores)");
  cmd->add_option("--budget", src.budget, "enumeration budget (points for analyze, pairs for verify)");
}

std::pair<int, int> parse_q(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "--q-override expects p,k");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "--q-override expects p,k");
  }
}

std::optional<std::uint64_t> env_budget() {
  if (const char* env = std::getenv("COMMFIBRE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "COMMFIBRE_BUDGET is not an integer");
    }
  }
  return std::nullopt;
}

std::pair<FullLieAlgebra, std::string> load(const Source& src) {
  if (src.file.empty() == src.builtin.empty())
    throw Error(ErrorCode::ParseError, "give exactly one of an algebra file or --builtin");
  std::optional<std::pair<int, int>> q;
  if (!src.q_override.empty()) q = parse_q(src.q_override);

  if (!src.builtin.empty()) {
    const Field f = q ? Field::make(q->first, q->second) : Field::make(3, 1);
    std::optional<long long> alpha;
    if (src.builtin == "elliptic9") alpha = src.alpha;
    return {builtin(src.builtin, f, alpha), "builtin:" + src.builtin};
  }
  std::ifstream in(src.file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + src.file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  FullLieAlgebra alg = parse_algebra_file(ss.str());
  if (q && !(q->first == alg.field().p() && q->second == alg.field().k()))
    alg = extend_scalars(alg, Field::make(q->first, q->second));
  return {std::move(alg), src.file};
}

std::vector<unsigned> parse_ts(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      const long v = std::stol(item);
      if (v < 1) throw Error(ErrorCode::BadParam, "t values must be positive");
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "--t expects a comma-separated list of positive integers");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "--t is empty");
  return out;
}

EnumerationOptions enum_options(const Source& src) {
  EnumerationOptions opts;
  if (auto b = src.budget ? src.budget : env_budget()) opts.budget = *b;
  opts.threads = src.threads;
  return opts;
}

OracleOptions oracle_options(const Source& src) {
  OracleOptions opts;
  if (auto b = src.budget ? src.budget : env_budget()) opts.budget = *b;
  opts.threads = src.threads;
  return opts;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::BudgetExceeded: return kExitBudget;
      case ErrorCode::NonIntegralClassNumber:
      case ErrorCode::NonIntegralDegreeCount:
      case ErrorCode::NegativeOrFractionalCount:
      case ErrorCode::InconsistentBracket: return kExitMismatch;
      default: return kExitInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibres of commutator word maps over finite p-groups"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Source analyze_src;
  std::string ts_text = "1";
  std::string format = "table";
  auto* analyze = app.add_subcommand("analyze", "rank strata, KV classes, zeta values and fibre counts");
  add_source_options(analyze, analyze_src);
  analyze->add_option("--t", ts_text, "comma-separated word lengths t")->capture_default_str();
  analyze->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  Source verify_src;
  unsigned t_max = 2;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "compare against a brute-force group computation");
  add_source_options(verify, verify_src);
  verify->add_option("--t-max", t_max, "largest t to compare")->capture_default_str();
  verify->add_option("--format", verify_format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  Source bound_src;
  unsigned bound_t = 1;
  auto* bound = app.add_subcommand("bound", "L1 distance to uniform against its upper bound");
  add_source_options(bound, bound_src);
  bound->add_option("--t", bound_t, "word length t")->required();

  auto* examples = app.add_subcommand("examples", "list builtin algebras");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (examples->parsed()) {
    for (const auto& info : builtin_catalog())
      std::cout << info.name << "\t" << info.description << "\t[" << info.params << "]\n";
    return kExitOk;
  }

  if (analyze->parsed()) {
    return run_guarded([&] {
      auto [alg, source] = load(analyze_src);
      const auto ts = parse_ts(ts_text);
      const LiePresentation pres = reduce(alg);
      const FibreReport report = commfibre::analyze(pres, ts, enum_options(analyze_src));
      const Json doc = build_report(source, pres, report);
      if (format == "json")
        std::cout << doc.dump(2) << '\n';
      else
        std::cout << render_table(doc);
      return kExitOk;
    });
  }

  if (verify->parsed()) {
    return run_guarded([&] {
      auto [alg, source] = load(verify_src);
      if (t_max < 1) throw Error(ErrorCode::BadParam, "--t-max must be positive");
      const LiePresentation pres = reduce(alg);
      const ComparisonReport cmp = compare(alg, t_max, oracle_options(verify_src));
      const Json v = comparison_json(pres.field, cmp);
      if (verify_format == "json") {
        Json doc;
        doc["version"] = std::string(kVersion);
        doc["source"] = source;
        doc["verification"] = v;
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << kVersion << '\n' << "source: " << source << '\n';
        std::cout << "class number: theorem " << v["class_number_theorem"].get<std::string>() << ", oracle "
                  << v["class_number_oracle"].get<std::string>() << '\n';
        std::cout << "|G'|: theorem " << v["derived_order_theorem"].get<std::string>() << ", oracle "
                  << v["derived_order_oracle"].get<std::string>() << '\n';
        for (const auto& e : v["entries"])
          std::cout << "t=" << e["t"] << " g=" << e["g"].dump() << "  theorem=" << e["theorem"].get<std::string>()
                    << " oracle=" << e["oracle"].get<std::string>() << '\n';
        std::cout << "mismatches: " << cmp.mismatches.size() << '\n';
        for (const auto& e : v["mismatches"])
          std::cout << "  t=" << e["t"] << " g=" << e["g"].dump() << "  theorem=" << e["theorem"].get<std::string>()
                    << " oracle=" << e["oracle"].get<std::string>() << '\n';
        std::cout << (cmp.ok() ? "VERIFIED" : "MISMATCH") << '\n';
      }
      return cmp.ok() ? kExitOk : kExitMismatch;
    });
  }

  if (bound->parsed()) {
    return run_guarded([&] {
      auto [alg, source] = load(bound_src);
      if (bound_t < 1) throw Error(ErrorCode::BadParam, "--t must be positive");
      const LiePresentation pres = reduce(alg);
      const auto opts = enum_options(bound_src);
      const Classification cls = classify_elements(pres, opts);
      const auto degrees = degree_counts(pres, cls.profile);
      const Rational bsq = uniformity_bound_squared(pres, degrees, bound_t);
      const Rational l1 = l1_distance(pres, cls, bound_t);
      const bool holds = l1 * l1 <= bsq;
      std::cout << kVersion << '\n';
      std::cout << "source: " << source << "\nt: " << bound_t << '\n';
      std::cout << "bound^2: " << format_rational(bsq) << '\n';
      std::cout << "bound: " << format_sqrt_decimal(bsq) << '\n';
      const Rational sharp = sharp_bound_squared(pres, degrees, bound_t);
      std::cout << "sharp bound^2: " << format_rational(sharp) << "  (" << format_decimal(sharp) << ")\n";
      std::cout << "l1_distance: " << format_rational(l1) << "  (" << format_decimal(l1) << ")\n";
      std::cout << "inequality: " << (holds ? "PASS" : "FAIL") << '\n';
      return holds ? kExitOk : kExitMismatch;
    });
  }
  return kExitInput;
}
