// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: `verify <suite>` runs verification suites, `eval <kind>`
// prints one exact value. Exit codes: 0 success, 1 failed check, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "superindex/genera.hpp"
#include "superindex/hochschild.hpp"
#include "superindex/local_index.hpp"
#include "superindex/verify.hpp"

namespace {

using namespace superindex;

constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string suite;
  std::string kind;
  std::string type;
  std::optional<int> n;
  std::uint64_t seed = 42;
  bool json = false;
  std::string out;
  std::string chain;
  std::string method = "graph";
  std::string series_name;
  std::vector<std::string> variables;
  int order = 8;
};

std::vector<std::string> split_slots(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    out.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + opt.out);
  f << text;
}

int run_verify(const Options& opt) {
  RunConfig cfg;
  if (!opt.type.empty()) cfg.type = parse_type(opt.type);
  cfg.n = opt.n;
  cfg.seed = opt.seed;
  const auto reports = run_suites(opt.suite, cfg);
  emit(opt, opt.json ? report_json(reports, opt.suite, cfg) : report_text(reports));
  for (const auto& r : reports)
    if (!r.passed()) return kFailed;
  return 0;
}

std::string eval_value(const Options& opt) {
  if (opt.kind == "tau") {
    const SuperType t = opt.type.empty() ? SuperType{} : parse_type(opt.type);
    const AlgebraContext ctx(t.n, t.a, t.b);
    std::vector<SuperPolynomial> slots;
    for (const auto& s : split_slots(opt.chain)) slots.push_back(parse_super_polynomial(ctx, s));
    if (static_cast<int>(slots.size()) != 2 * t.n + 1)
      throw std::invalid_argument("tau in type (2n|a,b) takes 2n + 1 slots");
    return tau(ctx, slots).to_string({"hbar"});
  }
  if (opt.kind == "pn") {
    SuperType t;
    if (!opt.type.empty()) {
      t = parse_type(opt.type);
      if (opt.n && *opt.n != t.n) throw std::invalid_argument("--n disagrees with the type's 2n");
    } else {
      t.n = opt.n.value_or(0);
      t.validate();
    }
    const auto names = index_variables(t);
    if (opt.method == "direct") return pn_direct(t).to_string(names);
    if (opt.method == "graph") return pn_graphsum(t).to_string(names);
    if (opt.method == "closed") return closed_form(t).to_string(names);
    if (opt.method == "average") return average(t, pn_graphsum(t)).to_string(names);
    if (opt.method == "ahat-cosh-cos") return ahat_cosh_cos_form(t).to_string(names);
    throw std::invalid_argument("unknown method: " + opt.method);
  }
  if (opt.kind == "series") {
    std::vector<std::string> vars = opt.variables;
    if (vars.empty()) vars = opt.series_name == "BChat" ? std::vector<std::string>{"s", "r"} : std::vector<std::string>{"t"};
    return series(opt.series_name, vars, opt.order).to_string();
  }
  if (opt.kind == "rhs") {
    const SuperType t = opt.type.empty() ? SuperType{} : parse_type(opt.type);
    const CurvatureData d{t.n, t.a, t.b};
    return rhs_index(d).to_string(d.symbols());
  }
  throw std::invalid_argument("unknown eval kind: " + opt.kind);
}

int run_eval(const Options& opt) {
  const std::string value = eval_value(opt);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["kind"] = opt.kind;
    j["value"] = value;
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, value + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the superalgebraic local index formula"};
  app.require_subcommand(1);
  Options opt;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", opt.suite, "bernoulli, algebra, trace, cocycle, local-index, genera or all")->required();
  verify->add_option("--type", opt.type, "Type as 2n,a,b");
  verify->add_option("--n", opt.n, "Degree of the local index polynomial");
  verify->add_option("--seed", opt.seed, "Random seed");
  verify->add_flag("--json", opt.json, "JSON report");
  verify->add_option("--out", opt.out, "Write the report to a file");

  auto* eval = app.add_subcommand("eval", "Evaluate one exact quantity");
  eval->add_option("kind", opt.kind, "tau, pn, series or rhs")->required();
  eval->add_option("name", opt.series_name, "Series name for `eval series`");
  eval->add_option("--type", opt.type, "Type as 2n,a,b");
  eval->add_option("--n", opt.n, "Degree for `eval pn`");
  eval->add_option("--chain", opt.chain, "Slots separated by ';', e.g. \"1; p1; q1\"");
  eval->add_option("--method", opt.method, "pn method: direct, graph, closed, average, ahat-cosh-cos");
  eval->add_option("--order", opt.order, "Series truncation order");
  eval->add_option("--var", opt.variables, "Series variable names");
  eval->add_flag("--json", opt.json, "JSON output");
  eval->add_option("--out", opt.out, "Write the value to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(opt);
    return run_eval(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
