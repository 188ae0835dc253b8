/*
 * Copyright 2026 The subnorm-forge Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subnorm/subnorm.hpp"

namespace subnorm::cli {

enum class Command { eval, classify, decompose, oracle, grid, construct_subnorm };
enum class Format { text, csv, structured };

struct RunConfig {
  Command command = Command::eval;
  std::string fn_path;
  std::string tnorm = "product";
  int grid_n = 12;
  std::string output;  // empty: standard output
  Format format = Format::text;
  std::string x, y;
  std::string gen = "one-minus-log";
  std::string lambda;
  std::string fn_out;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNo = 2;
inline constexpr int kUnknown = 3;

inline PiecewiseMonotoneFn load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open function file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return PiecewiseMonotoneFn::parse(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline int cmd_eval(const RunConfig& c, std::ostream& out) {
  auto f = load_function(c.fn_path);
  GeneratedOp op(f, TNorm::parse(c.tnorm));
  Value v = op(Rational::parse(c.x), Rational::parse(c.y));
  out << v.str() << " (" << v.decimal(12) << ")\n";
  return kOk;
}

inline int cmd_decompose(const RunConfig& c, std::ostream& out) {
  auto d = decompose(load_function(c.fn_path));
  if (c.format == Format::structured) out << to_json(d).dump(2) << "\n";
  else out << render_text(d);
  return kOk;
}

inline int cmd_classify(const RunConfig& c, std::ostream& out) {
  auto f = load_function(c.fn_path);
  auto r = classify(f, TNorm::parse(c.tnorm));
  if (c.format == Format::structured) out << to_json(r).dump(2) << "\n";
  else out << render_text(r);
  switch (r.status(Property::conditionally_cancellative)) {
    case Status::yes: return kOk;
    case Status::no: return kNo;
    case Status::unknown: return kUnknown;
  }
  return kUnknown;
}

inline int cmd_oracle(const RunConfig& c, std::ostream& out) {
  auto f = load_function(c.fn_path);
  auto h = consistency_harness(f, TNorm::parse(c.tnorm), c.grid_n);
  if (c.format == Format::structured) out << to_json(h).dump(2) << "\n";
  else out << render_text(h);
  return h.hard_failures() == 0 ? kOk : kError;
}

inline int cmd_grid(const RunConfig& c, std::ostream& out) {
  if (c.grid_n < 1) throw DomainError("grid resolution must be at least 1");
  auto f = load_function(c.fn_path);
  GeneratedOp op(f, TNorm::parse(c.tnorm));
  const bool exact = op.exact();
  out << "x,y,F" << (exact ? ",F_exact" : "") << "\n";
  for (int i = 0; i <= c.grid_n; ++i)
    for (int j = 0; j <= c.grid_n; ++j) {
      Rational x(i, c.grid_n), y(j, c.grid_n);
      Value v = op(x, y);
      out << x.decimal(12) << "," << y.decimal(12) << "," << v.decimal(12);
      if (exact) out << "," << v.str();
      out << "\n";
    }
  return kOk;
}

inline int cmd_construct_subnorm(const RunConfig& c, std::ostream& out, std::ostream& err) {
  GeneratorSpec g = GeneratorSpec::parse(c.gen);
  Rational lambda = Rational::parse(c.lambda);
  auto [f, t] = lambda_decompose(g, lambda);
  std::string fn_text = f.render();
  if (!c.fn_out.empty()) {
    std::ofstream fo(c.fn_out);
    if (!fo) throw DomainError("cannot write " + c.fn_out);
    fo << fn_text;
    out << "function file: " << c.fn_out << "\n";
  } else {
    out << fn_text;
  }
  out << "tnorm: " << t.name() << "\n";
  GeneratedOp op(f, t);
  Value f11 = op(1, 1);
  out << "F(1,1) = " << f11.str() << "\n";
  Rational dev = lambda_roundtrip_deviation(g, lambda, 50);
  out << "round-trip deviation (51x51): " << dev.decimal(20) << " (" << dev.to_double() << ")\n";
  if (g.at_one().is_zero()) {
    err << "warning: g(1) = 0, so the generated operation is a t-norm; F(1,1) < 1 fails and the result is not "
           "proper\n";
  } else if (lt(f11, Value(1)) != Truth::yes) {
    err << "warning: F(1,1) < 1 not confirmed\n";
  }
  return dev <= Rational(1, 1000000000000L) ? kOk : kError;
}

/// Parses argv-style arguments (without the program name) and runs the
/// command.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"subnorm-forge: generated operations F(x,y) = f^(-1)(T(f(x),f(y)))"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "text";
  const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"structured", Format::structured}};

  auto common = [&](CLI::App* sub, bool with_t) {
    sub->add_option("-f,--fn", c.fn_path, "function file")->required();
    if (with_t) sub->add_option("-t,--tnorm", c.tnorm, "product | min | hamacher2 | halfprod | gen:<g> | lambda:<g>:<p/q>");
    sub->add_option("-o,--out,--output", c.output, "output file");
  };
  auto* eval = app.add_subcommand("eval", "evaluate F(x,y)");
  common(eval, true);
  eval->add_option("x,--x", c.x, "p/q")->required();
  eval->add_option("y,--y", c.y, "p/q")->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify F");
  common(classify_cmd, true);
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "range decomposition of f");
  common(decompose_cmd, false);
  decompose_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* oracle = app.add_subcommand("oracle", "brute-force law checks and agreement with the classifier");
  common(oracle, true);
  oracle->add_option("-n,--grid-n", c.grid_n, "grid resolution")->check(CLI::PositiveNumber);
  oracle->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* grid_cmd = app.add_subcommand("grid", "CSV of F over an (n+1)x(n+1) grid");
  common(grid_cmd, true);
  grid_cmd->add_option("-n,--grid-n", c.grid_n, "grid resolution")->check(CLI::PositiveNumber);
  grid_cmd->add_option("--format", format)->check(CLI::IsMember({"csv"}));

  auto* construct = app.add_subcommand("construct-subnorm", "f(x) = lambda x with the generator t-norm");
  construct->add_option("-g,--gen", c.gen, "neglog | one-minus-log");
  construct->add_option("-l,--lambda", c.lambda, "lambda in (0,1)")->required();
  construct->add_option("--fn-out", c.fn_out, "write the function file here");
  construct->add_option("-o,--out,--output", c.output, "output file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  c.format = formats.at(format);
  const std::vector<std::pair<CLI::App*, Command>> commands{
      {eval, Command::eval},     {classify_cmd, Command::classify}, {decompose_cmd, Command::decompose},
      {oracle, Command::oracle}, {grid_cmd, Command::grid},         {construct, Command::construct_subnorm}};
  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) c.command = cmd;
  if (c.command == Command::grid) c.format = Format::csv;

  std::ofstream file;
  if (!c.output.empty()) {
    file.open(c.output);
    if (!file) {
      err << "error: cannot write " << c.output << "\n";
      return kError;
    }
  }
  std::ostream& o = c.output.empty() ? out : file;
  try {
    switch (c.command) {
      case Command::eval: return cmd_eval(c, o);
      case Command::classify: return cmd_classify(c, o);
      case Command::decompose: return cmd_decompose(c, o);
      case Command::oracle: return cmd_oracle(c, o);
      case Command::grid: return cmd_grid(c, o);
      case Command::construct_subnorm: return cmd_construct_subnorm(c, o, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace subnorm::cli
