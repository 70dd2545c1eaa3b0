// Copyright 2026 The dill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// dill: command line front end.
//
// Exit codes: 0 ok, 1 check failed, 2 usage or parse error, 3 fuel or
// search budget exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dill/corpus.hpp"
#include "dill/interpret.hpp"
#include "dill/laws.hpp"
#include "dill/logic.hpp"
#include "dill/resource.hpp"
#include "dill/rewrite.hpp"
#include "dill/typing.hpp"
#include "dill/wrel.hpp"

using namespace dill;

namespace {

struct Input {
  std::string in;
  std::string expr;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string text_of(const Input& i) {
  if (!i.expr.empty()) return i.expr;
  if (i.in.empty()) throw UsageError("one of --in or --expr is required");
  return read_file(i.in);
}

void add_input(CLI::App* c, Input& i) {
  c->add_option("--in", i.in, "input file");
  c->add_option("--expr", i.expr, "input text");
}

std::size_t default_fuel() {
  if (const char* s = std::getenv("DILL_FUEL_DEFAULT")) {
    try {
      std::size_t n = std::stoul(s);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("DILL_FUEL_DEFAULT must be a positive integer, got ") + s);
  }
  return 10000;
}

// "A, B, C" with commas inside parentheses kept.
std::vector<std::optional<LType>> parse_types(const std::string& text, std::size_t width) {
  std::vector<std::optional<LType>> out;
  if (text.empty()) return std::vector<std::optional<LType>>(width);
  int depth = 0;
  std::string cur;
  auto flush = [&]() {
    if (cur.find_first_not_of(" \t") == std::string::npos) throw UsageError("empty type in --types");
    out.push_back(parse_type(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      flush();
      continue;
    }
    cur += ch;
  }
  flush();
  if (out.size() != width)
    throw UsageError("--types lists " + std::to_string(out.size()) + " types for a net with " +
                     std::to_string(width) + " conclusions");
  return out;
}

std::string type_list(const std::vector<LType>& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + print_type(g[i]);
  return s;
}

Semiring semiring_of(const std::string& m) { return Semiring{parse_mode(m)}; }

struct ReduceConfig {
  std::string kind = "net";
  std::size_t fuel = 0;
  std::string strategy = "leftmost";
  std::uint64_t seed = 0;
  bool inside_boxes = false;
  bool trace = false;
  std::string mode = "rat";
};

Strategy net_strategy(const ReduceConfig& c) {
  Strategy s;
  if (c.strategy == "random") s = Strategy::random(c.seed);
  else if (c.strategy != "leftmost") throw UsageError("unknown strategy " + c.strategy);
  s.inside_boxes = c.inside_boxes;
  return s;
}

TermStrategy term_strategy(const ReduceConfig& c) {
  if (c.strategy == "random") return {TermStrategy::Kind::Random, c.seed};
  if (c.strategy == "leftmost") return {TermStrategy::Kind::LeftmostOutermost, 0};
  if (c.strategy == "innermost") return {TermStrategy::Kind::LeftmostInnermost, 0};
  throw UsageError("unknown strategy " + c.strategy);
}

int cmd_parse(const Input& in, const std::string& kind) {
  std::string t = text_of(in);
  if (kind == "net") std::cout << print_net(parse_net(t)) << "\n";
  else if (kind == "dterm") std::cout << print_dcomb(parse_dterm(t)) << "\n";
  else if (kind == "rterm") std::cout << print_rcomb(parse_rterm(t)) << "\n";
  else if (kind == "type") std::cout << print_type(parse_type(t)) << "\n";
  else if (kind == "derivation") std::cout << print_derivation(parse_derivation(t)) << "\n";
  else throw UsageError("unknown kind " + kind);
  return 0;
}

int cmd_typecheck(const Input& in, const std::string& types) {
  Net n = parse_net(text_of(in));
  try {
    NetInference inf = infer_net(n, parse_types(types, n.width()), {});
    std::cout << "ok: " << type_list(inf.gamma) << "\n";
    return 0;
  } catch (const TypeError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}

int cmd_derive(const Input& in, const std::string& types, std::size_t budget) {
  Net n = parse_net(text_of(in));
  try {
    SequentializedNet s = sequentialize_net(n, parse_types(types, n.width()), budget);
    std::cout << "# conclusions: " << type_list(s.gamma) << "\n";
    for (std::size_t i = 0; i < s.derivations.size(); ++i)
      std::cout << s.coeffs[i].str() << " " << print_derivation(s.derivations[i]) << "\n";
    return 0;
  } catch (const NotDerivable& e) {
    std::cout << "NOT-FOUND\n";
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const TypeError& e) {
    std::cout << "NOT-FOUND\n";
    std::cerr << e.what() << "\n";
    return 1;
  }
}

int cmd_reduce(const Input& in, const ReduceConfig& c) {
  std::size_t fuel = c.fuel ? c.fuel : default_fuel();
  std::string t = text_of(in);
  if (c.strategy == "random") std::cout << "# seed " << c.seed << "\n";
  if (c.kind == "net") {
    NormalizeResult r = normalize(parse_net(t), fuel, net_strategy(c), semiring_of(c.mode));
    if (c.trace)
      for (const auto& line : r.trace) std::cout << line << "\n";
    std::cout << print_net(r.net) << "\n";
    return 0;
  }
  if (c.kind == "dterm") {
    DNormalizeResult r = normalize_dterm(parse_dterm(t), fuel, term_strategy(c));
    if (c.trace) std::cout << "# steps " << r.steps << "\n";
    std::cout << print_dcomb(r.term) << "\n";
    return 0;
  }
  if (c.kind == "rterm") {
    RNormalizeResult r = normalize_resource(parse_rterm(t), fuel, term_strategy(c));
    if (c.trace) std::cout << "# steps " << r.steps << "\n";
    std::cout << print_rcomb(r.term) << "\n";
    return 0;
  }
  throw UsageError("unknown kind " + c.kind);
}

Valuation load_valuation(const std::string& path) {
  if (path.empty()) {
    Valuation v;
    v.atoms["o"] = {"p"};
    return v;
  }
  return Valuation::parse_json(read_file(path));
}

int cmd_eval(const Input& in, const std::string& model, const std::string& valuation,
             std::size_t degree, const std::string& types) {
  Net n = parse_net(text_of(in));
  Valuation v = load_valuation(valuation);
  SequentializedNet s = sequentialize_net(n, parse_types(types, n.width()));
  PointSpace sp;
  std::cout << "# conclusions: " << type_list(s.gamma) << "\n";
  std::cout << "# degree " << degree << "\n";
  bool stable;
  if (model == "rel") {
    NetValue<bool> r = interpret_net<bool>(s, v, degree, sp);
    std::cout << value_json(r.value, sp) << "\n";
    stable = r.info.stable;
  } else if (model == "wrel") {
    NetValue<Scalar> r = interpret_net<Scalar>(s, v, degree, sp);
    std::cout << value_json(r.value, sp) << "\n";
    stable = r.info.stable;
  } else {
    throw UsageError("unknown model " + model);
  }
  if (!stable) {
    std::cerr << "truncation at degree " << degree << " is not stable\n";
    return 1;
  }
  return 0;
}

int cmd_taylor(const Input& in, std::size_t p) {
  std::cout << print_rcomb(taylor_expand(parse_dterm(text_of(in)), p)) << "\n";
  return 0;
}

int cmd_antiderive(const Input& in, const std::string& model, const std::string& x,
                   const std::string& h, std::size_t web, std::size_t degree) {
  if (model == "resource") {
    RComb u = parse_rterm(text_of(in));
    AntiderivativeCheck r = antiderivative_check(u, x, h);
    std::cout << print_rcomb(r.v) << "\n";
    if (!r.ok) {
      std::cerr << "d/d" << x << " . " << h << " of the result is " << print_rcomb(r.derivative)
                << "\n";
      return 1;
    }
    return 0;
  }
  if (model == "wrel") {
    Obj o = web_object("X", web);
    Env e{std::make_shared<PointSpace>(), degree};
    std::cout << dump_json(I(o, e), degree) << "\n";
    return 0;
  }
  throw UsageError("unknown model " + model);
}

struct InvarianceConfig {
  std::string valuation;
  std::size_t degree_rel = 4;
  std::size_t degree_wrel = 3;
  std::size_t fuel = 0;
  bool steps = false;
};

int cmd_check_invariance(const Input& in, const InvarianceConfig& c) {
  std::vector<Net> nets = parse_net_corpus(text_of(in));
  Valuation v = load_valuation(c.valuation);
  std::size_t fuel = c.fuel ? c.fuel : default_fuel();
  std::size_t failed = 0;
  for (std::size_t k = 0; k < nets.size(); ++k) {
    const Net& n = nets[k];
    SequentializedNet src = sequentialize_net(n);
    std::vector<std::optional<LType>> g(src.gamma.begin(), src.gamma.end());
    std::vector<Net> targets;
    if (c.steps) {
      for (const auto& r : find_redexes(n)) {
        FreshNames f;
        targets.push_back(step(n, r, f));
      }
    } else {
      targets.push_back(normalize(n, fuel).net);
    }
    PointSpace sp;
    NetValue<bool> rs = interpret_net<bool>(src, v, c.degree_rel, sp);
    NetValue<Scalar> ws = interpret_net<Scalar>(src, v, c.degree_wrel, sp);
    std::string verdict = "ok";
    for (const auto& t : targets) {
      SequentializedNet tgt = sequentialize_net(t, g);
      NetValue<bool> rt = interpret_net<bool>(tgt, v, c.degree_rel, sp);
      NetValue<Scalar> wt = interpret_net<Scalar>(tgt, v, c.degree_wrel, sp);
      if (!rs.info.stable || !rt.info.stable || !ws.info.stable || !wt.info.stable) {
        verdict = "unstable";
      } else if (auto d = value_difference(rs.value, rt.value, sp)) {
        verdict = "rel differs at " + print_tuple(*d, sp);
      } else if (auto d2 = value_difference(ws.value, wt.value, sp)) {
        verdict = "wrel differs at " + print_tuple(*d2, sp);
      }
      if (verdict != "ok") {
        std::cerr << "net " << k << ": " << print_net(n) << "\n  target " << print_net(t) << "\n  "
                  << verdict << "\n";
        break;
      }
    }
    if (verdict != "ok") ++failed;
    std::cout << k << " " << (verdict == "ok" ? "ok" : "FAIL") << "\n";
  }
  std::cout << nets.size() - failed << "/" << nets.size() << " nets invariant\n";
  return failed ? 1 : 0;
}

int cmd_check_laws(const LawConfig& c) {
  std::cout << "# suite " << c.suite << " model " << c.model << " web " << c.web << " degree "
            << c.degree << " seed " << c.seed << "\n";
  std::size_t failed = 0;
  for (const auto& r : run_law_suite(c)) {
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << "\n";
    if (!r.ok) {
      std::cerr << r.name << ": " << r.detail << "\n";
      ++failed;
    }
  }
  return failed ? 1 : 0;
}

int exit_code(const Error& e) {
  const std::string& k = e.kind();
  if (k == "ParseError" || k == "UsageError") return 2;
  if (k == "FuelExhausted" || k == "BudgetExceeded") return 3;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential linear logic workbench"};
  app.require_subcommand(1);

  Input in;
  std::string kind = "net", types, model, valuation, x = "x", h = "h";
  std::size_t degree = 2, budget = 200000, multiplicity = 2, web = 1;
  ReduceConfig rc;
  InvarianceConfig ic;
  LawConfig lc;

  auto* parse = app.add_subcommand("parse", "print the canonical form");
  add_input(parse, in);
  parse->add_option("--kind", kind, "net, dterm, rterm, type or derivation");

  auto* typecheck = app.add_subcommand("typecheck", "infer or validate conclusion types");
  add_input(typecheck, in);
  typecheck->add_option("--types", types, "comma separated conclusion types");

  auto* derive = app.add_subcommand("derive", "search for a derivation");
  add_input(derive, in);
  derive->add_option("--types", types, "comma separated conclusion types");
  derive->add_option("--budget", budget, "explored goals");

  auto* reduce = app.add_subcommand("reduce", "normalize a net or a term");
  add_input(reduce, in);
  reduce->add_option("--kind", rc.kind, "net, dterm or rterm");
  reduce->add_option("--fuel", rc.fuel, "maximum steps");
  reduce->add_option("--strategy", rc.strategy, "leftmost, innermost (terms) or random");
  reduce->add_option("--seed", rc.seed, "seed of the random strategy");
  reduce->add_flag("--inside-boxes", rc.inside_boxes, "also reduce inside box contents");
  reduce->add_option("--mode", rc.mode, "coefficient semiring: rat, nat or bool");
  reduce->add_flag("--trace", rc.trace, "print every step");

  auto* eval = app.add_subcommand("eval", "interpret a net");
  add_input(eval, in);
  eval->add_option("--model", model, "rel or wrel")->required();
  eval->add_option("--valuation", valuation, "JSON valuation of the atoms");
  eval->add_option("--degree", degree, "degree bound");
  eval->add_option("--types", types, "comma separated conclusion types");

  auto* taylor = app.add_subcommand("taylor", "Taylor expansion of a differential term");
  add_input(taylor, in);
  taylor->add_option("--multiplicity", multiplicity, "bunch size bound at every application");

  auto* anti = app.add_subcommand("antiderive", "antiderivative of a resource combination");
  add_input(anti, in);
  std::string amodel = "resource";
  anti->add_option("--model", amodel, "resource or wrel");
  anti->add_option("--var", x, "variable of integration");
  anti->add_option("--dir", h, "linear direction variable");
  anti->add_option("--web", web, "wrel: web size");
  anti->add_option("--degree", degree, "wrel: degree bound");

  auto* inv = app.add_subcommand("check-invariance", "compare interpretations before and after reduction");
  add_input(inv, in);
  inv->add_option("--valuation", ic.valuation, "JSON valuation of the atoms");
  inv->add_option("--degree-rel", ic.degree_rel, "degree bound in the relational model");
  inv->add_option("--degree-wrel", ic.degree_wrel, "degree bound in the weighted model");
  inv->add_option("--fuel", ic.fuel, "maximum steps");
  inv->add_flag("--steps", ic.steps, "check every single step instead of the normal form");

  auto* laws = app.add_subcommand("check-laws", "run a law suite");
  laws->add_option("--suite", lc.suite, "suite name")->required();
  laws->add_option("--model", lc.model, "rel, wrel or both");
  laws->add_option("--web", lc.web, "web size");
  laws->add_option("--degree", lc.degree, "degree bound");
  laws->add_option("--seed", lc.seed, "seed of the random samples");
  laws->add_option("--samples", lc.samples, "random samples");

  auto* gen = app.add_subcommand("gen-corpus", "print the seeded net corpus");
  NetCorpusOptions go;
  gen->add_option("--seed", go.seed, "generator seed");
  gen->add_option("--count", go.count, "number of nets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) return cmd_parse(in, kind);
    if (*typecheck) return cmd_typecheck(in, types);
    if (*derive) return cmd_derive(in, types, budget);
    if (*reduce) return cmd_reduce(in, rc);
    if (*eval) return cmd_eval(in, model, valuation, degree, types);
    if (*taylor) return cmd_taylor(in, multiplicity);
    if (*anti) return cmd_antiderive(in, amodel, x, h, web, degree);
    if (*inv) return cmd_check_invariance(in, ic);
    if (*laws) return cmd_check_laws(lc);
    if (*gen) {
      std::cout << "# seed " << go.seed << "\n" << print_net_corpus(generate_net_corpus(go));
      return 0;
    }
  } catch (const FuelExhausted& e) {
    std::cerr << e.what() << "\n";
    for (const auto& line : e.trace()) std::cerr << line << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
