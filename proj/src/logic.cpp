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

#include "dill/logic.hpp"

#include <algorithm>
#include <cctype>

#include "dill/error.hpp"

namespace dill {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::Perm: return "perm";
    case Rule::Cut: return "cut";
    case Rule::ParR: return "par";
    case Rule::TensR: return "tens";
    case Rule::Mix: return "mix";
    case Rule::Mix0: return "mix0";
    case Rule::Weak: return "weak";
    case Rule::Coweak: return "coweak";
    case Rule::Der: return "der";
    case Rule::Coder: return "coder";
    case Rule::Contr: return "contr";
    case Rule::Cocontr: return "cocontr";
    case Rule::Sum: return "sum";
    case Rule::Prom: return "prom";
  }
  return "?";
}

std::size_t Derivation::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p->size();
  return n;
}

namespace deriv {

namespace {
std::shared_ptr<Derivation> node(Rule r, std::vector<Deriv> premises = {}) {
  auto d = std::make_shared<Derivation>();
  d->rule = r;
  d->premises = std::move(premises);
  return d;
}
}  // namespace

Deriv ax(Var x, LType a) {
  auto d = node(Rule::Ax);
  d->var = std::move(x);
  d->type = std::move(a);
  return d;
}

Deriv perm(std::vector<std::size_t> sigma, Deriv p) {
  auto d = node(Rule::Perm, {std::move(p)});
  d->perm = std::move(sigma);
  return d;
}

Deriv cut(Deriv l, Deriv r) { return node(Rule::Cut, {std::move(l), std::move(r)}); }
Deriv par(Deriv p) { return node(Rule::ParR, {std::move(p)}); }
Deriv tens(Deriv l, Deriv r) { return node(Rule::TensR, {std::move(l), std::move(r)}); }
Deriv mix(Deriv l, Deriv r) { return node(Rule::Mix, {std::move(l), std::move(r)}); }
Deriv mix0() { return node(Rule::Mix0); }

Deriv weak(LType a, Deriv p, bool annotate) {
  auto d = node(Rule::Weak, {std::move(p)});
  d->type = std::move(a);
  d->annotate = annotate;
  return d;
}

Deriv coweak(LType a, bool annotate) {
  auto d = node(Rule::Coweak);
  d->type = std::move(a);
  d->annotate = annotate;
  return d;
}

Deriv der(Deriv p) { return node(Rule::Der, {std::move(p)}); }
Deriv coder(Deriv p) { return node(Rule::Coder, {std::move(p)}); }
Deriv contr(Deriv p) { return node(Rule::Contr, {std::move(p)}); }
Deriv cocontr(Deriv l, Deriv r) { return node(Rule::Cocontr, {std::move(l), std::move(r)}); }

Deriv sum(std::vector<LType> gamma, std::vector<Scalar> coeffs, std::vector<Deriv> ds) {
  auto d = node(Rule::Sum, std::move(ds));
  d->gamma = std::move(gamma);
  d->coeffs = std::move(coeffs);
  return d;
}

Deriv prom(Deriv content, std::vector<Deriv> args) {
  std::vector<Deriv> ps{std::move(content)};
  for (auto& a : args) ps.push_back(std::move(a));
  return node(Rule::Prom, std::move(ps));
}

}  // namespace deriv

namespace {

[[noreturn]] void violation(const std::string& at, const std::string& why) {
  throw RuleViolation("at " + at + ": " + why);
}

std::string type_list(const std::vector<LType>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + print_type(g[i]);
  return s + ")";
}

void merge_phi(Context& into, const Context& from, const std::string& at) {
  for (const auto& [v, a] : from) {
    auto [it, fresh] = into.emplace(v, a);
    if (!fresh && it->second != a)
      violation(at, "variable " + v.str() + " is typed both " + print_type(it->second) + " and " +
                        print_type(a));
  }
}

struct Simple {
  SimpleNet net;
  std::vector<LType> gamma;
  Context phi;
};

Judgment check(const Deriv& d, const std::string& at);

Simple simple_premise(const Deriv& d, const std::string& at) {
  Judgment j = check(d, at);
  if (!j.net.is_simple()) violation(at, "premise is not a simple net");
  return {j.net.only(), std::move(j.gamma), std::move(j.phi)};
}

SimpleNet build(std::vector<Tree> trees, std::vector<Cut> cuts, const std::string& at) {
  try {
    return SimpleNet(std::move(trees), std::move(cuts));
  } catch (const MalformedNet& e) {
    violation(at, std::string("premises are not disjoint: ") + e.what());
  }
}

Judgment make(SimpleNet p, std::vector<LType> gamma, Context phi) {
  return {Net::of(p), std::move(gamma), std::move(phi)};
}

struct Split {
  std::vector<Tree> trees;
  Tree last;
  std::vector<LType> gamma;
  LType last_type;
};

Split split_last(const Simple& s, const std::string& at, std::size_t need = 1) {
  if (s.net.width() < need) violation(at, "premise has too few conclusions");
  Split r;
  r.trees.assign(s.net.trees().begin(), s.net.trees().end() - 1);
  r.last = s.net.trees().back();
  r.gamma.assign(s.gamma.begin(), s.gamma.end() - 1);
  r.last_type = s.gamma.back();
  return r;
}

std::vector<Cut> concat(const std::vector<Cut>& a, const std::vector<Cut>& b) {
  std::vector<Cut> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

template <class T>
std::vector<T> concat(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Judgment check(const Deriv& d, const std::string& at) {
  auto sub = [&](std::size_t i) { return at + "." + std::to_string(i); };
  auto arity = [&](std::size_t n) {
    if (d->premises.size() != n)
      violation(at, std::string(rule_name(d->rule)) + " expects " + std::to_string(n) +
                        " premises");
  };
  switch (d->rule) {
    case Rule::Ax: {
      arity(0);
      Var x = d->var;
      SimpleNet p({tree::var(x), tree::var(x.dual())}, {});
      Context phi{{x, d->type}, {x.dual(), dual(d->type)}};
      return make(p, {d->type, dual(d->type)}, phi);
    }
    case Rule::Perm: {
      arity(1);
      Simple s = simple_premise(d->premises[0], sub(0));
      std::vector<std::size_t> seen = d->perm;
      std::sort(seen.begin(), seen.end());
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != i) violation(at, "not a permutation");
      if (seen.size() != s.net.width()) violation(at, "permutation of the wrong size");
      std::vector<Tree> trees;
      std::vector<LType> gamma;
      for (std::size_t i : d->perm) {
        trees.push_back(s.net.trees()[i]);
        gamma.push_back(s.gamma[i]);
      }
      return make(build(trees, s.net.cuts(), at), gamma, s.phi);
    }
    case Rule::Cut:
    case Rule::TensR:
    case Rule::Cocontr: {
      arity(2);
      Simple l = simple_premise(d->premises[0], sub(0));
      Simple r = simple_premise(d->premises[1], sub(1));
      Split a = split_last(l, sub(0));
      Split b = split_last(r, sub(1));
      Context phi = l.phi;
      merge_phi(phi, r.phi, at);
      std::vector<Tree> trees = concat(a.trees, b.trees);
      std::vector<LType> gamma = concat(a.gamma, b.gamma);
      std::vector<Cut> cuts = concat(l.net.cuts(), r.net.cuts());
      if (d->rule == Rule::Cut) {
        if (b.last_type != dual(a.last_type))
          violation(at, "cut formulas " + print_type(a.last_type) + " and " +
                            print_type(b.last_type) + " are not dual");
        cuts.push_back({a.last, b.last});
      } else if (d->rule == Rule::TensR) {
        trees.push_back(tree::tens(a.last, b.last));
        gamma.push_back(LType::tens(a.last_type, b.last_type));
      } else {
        if (a.last_type.kind != LType::Kind::Excl || a.last_type != b.last_type)
          violation(at, "cocontraction needs two equal !-formulas, got " +
                            print_type(a.last_type) + " and " + print_type(b.last_type));
        trees.push_back(tree::cocontr(a.last, b.last));
        gamma.push_back(a.last_type);
      }
      return make(build(trees, cuts, at), gamma, phi);
    }
    case Rule::Mix: {
      arity(2);
      Simple l = simple_premise(d->premises[0], sub(0));
      Simple r = simple_premise(d->premises[1], sub(1));
      Context phi = l.phi;
      merge_phi(phi, r.phi, at);
      return make(build(concat(l.net.trees(), r.net.trees()), concat(l.net.cuts(), r.net.cuts()), at),
                  concat(l.gamma, r.gamma), phi);
    }
    case Rule::Mix0:
      arity(0);
      return make(SimpleNet(), {}, {});
    case Rule::ParR:
    case Rule::Contr: {
      arity(1);
      Simple s = simple_premise(d->premises[0], sub(0));
      if (s.net.width() < 2) violation(at, "premise has too few conclusions");
      std::size_t n = s.net.width();
      std::vector<Tree> trees(s.net.trees().begin(), s.net.trees().end() - 2);
      std::vector<LType> gamma(s.gamma.begin(), s.gamma.end() - 2);
      const LType& a = s.gamma[n - 2];
      const LType& b = s.gamma[n - 1];
      if (d->rule == Rule::ParR) {
        trees.push_back(tree::par(s.net.trees()[n - 2], s.net.trees()[n - 1]));
        gamma.push_back(LType::par(a, b));
      } else {
        if (a.kind != LType::Kind::Int || a != b)
          violation(at, "contraction needs two equal ?-formulas, got " + print_type(a) + " and " +
                            print_type(b));
        trees.push_back(tree::contr(s.net.trees()[n - 2], s.net.trees()[n - 1]));
        gamma.push_back(a);
      }
      return make(build(trees, s.net.cuts(), at), gamma, s.phi);
    }
    case Rule::Weak: {
      arity(1);
      if (d->type.kind != LType::Kind::Int) violation(at, "weakening formula must be a ?-formula");
      Simple s = simple_premise(d->premises[0], sub(0));
      std::vector<Tree> trees = s.net.trees();
      trees.push_back(tree::weak(d->annotate ? std::optional<LType>(d->type) : std::nullopt));
      std::vector<LType> gamma = s.gamma;
      gamma.push_back(d->type);
      return make(build(trees, s.net.cuts(), at), gamma, s.phi);
    }
    case Rule::Coweak: {
      arity(0);
      if (d->type.kind != LType::Kind::Excl)
        violation(at, "coweakening formula must be a !-formula");
      Tree t = tree::coweak(d->annotate ? std::optional<LType>(d->type) : std::nullopt);
      return make(SimpleNet({t}, {}), {d->type}, {});
    }
    case Rule::Der:
    case Rule::Coder: {
      arity(1);
      Simple s = simple_premise(d->premises[0], sub(0));
      Split a = split_last(s, sub(0));
      bool der = d->rule == Rule::Der;
      a.trees.push_back(der ? tree::der(a.last) : tree::coder(a.last));
      a.gamma.push_back(der ? LType::intn(a.last_type) : LType::excl(a.last_type));
      return make(build(a.trees, s.net.cuts(), at), a.gamma, s.phi);
    }
    case Rule::Sum: {
      if (d->coeffs.size() != d->premises.size()) violation(at, "one coefficient per premise");
      Net n(d->gamma.size());
      Context phi;
      for (std::size_t i = 0; i < d->premises.size(); ++i) {
        Judgment j = check(d->premises[i], sub(i));
        if (j.gamma != d->gamma)
          violation(sub(i), "premise proves " + type_list(j.gamma) + " instead of " +
                                type_list(d->gamma));
        merge_phi(phi, j.phi, at);
        n.add(j.net.scaled(d->coeffs[i]));
      }
      return {n, d->gamma, phi};
    }
    case Rule::Prom: {
      if (d->premises.empty()) violation(at, "promotion needs a content derivation");
      std::size_t n = d->premises.size() - 1;
      Judgment content = check(d->premises[0], sub(0));
      if (content.gamma.size() != n + 1)
        violation(sub(0), "content proves " + type_list(content.gamma) + " but the box has " +
                              std::to_string(n) + " arguments");
      std::vector<Tree> trees, args;
      std::vector<Cut> cuts;
      std::vector<LType> gamma;
      Context phi;
      for (std::size_t i = 0; i < n; ++i) {
        Simple s = simple_premise(d->premises[i + 1], sub(i + 1));
        Split a = split_last(s, sub(i + 1));
        if (a.last_type.kind != LType::Kind::Excl ||
            content.gamma[i] != LType::intn(dual(a.last_type.body())))
          violation(sub(i + 1), "argument of type " + print_type(a.last_type) +
                                    " does not match content port " +
                                    print_type(content.gamma[i]));
        trees.insert(trees.end(), a.trees.begin(), a.trees.end());
        gamma.insert(gamma.end(), a.gamma.begin(), a.gamma.end());
        cuts.insert(cuts.end(), s.net.cuts().begin(), s.net.cuts().end());
        args.push_back(a.last);
        merge_phi(phi, s.phi, at);
      }
      trees.push_back(tree::box(content.net, args));
      gamma.push_back(LType::excl(content.gamma[n]));
      return make(build(trees, cuts, at), gamma, phi);
    }
  }
  violation(at, "unknown rule");
}

// s-expressions

void print_into(const Deriv& d, std::string& out) {
  out += "(";
  out += rule_name(d->rule);
  switch (d->rule) {
    case Rule::Ax:
      out += " " + d->var.str() + " \"" + print_type(d->type) + "\"";
      break;
    case Rule::Perm:
      out += " (";
      for (std::size_t i = 0; i < d->perm.size(); ++i)
        out += (i ? " " : "") + std::to_string(d->perm[i]);
      out += ")";
      break;
    case Rule::Weak:
    case Rule::Coweak:
      if (d->annotate) out += "!";
      out += " \"" + print_type(d->type) + "\"";
      break;
    case Rule::Sum:
      out += " (";
      for (std::size_t i = 0; i < d->gamma.size(); ++i)
        out += (i ? " \"" : "\"") + print_type(d->gamma[i]) + "\"";
      out += ")";
      for (std::size_t i = 0; i < d->premises.size(); ++i) {
        out += " (\"" + d->coeffs[i].str() + "\" ";
        print_into(d->premises[i], out);
        out += ")";
      }
      out += ")";
      return;
    default:
      break;
  }
  for (const auto& p : d->premises) {
    out += " ";
    print_into(p, out);
  }
  out += ")";
}

struct SexprReader {
  const std::string& s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(1, static_cast<int>(i) + 1, why);
  }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i;
  }
  std::string atom() {
    ws();
    std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' &&
           s[i] != ')' && s[i] != '"')
      ++i;
    if (b == i) fail("expected a symbol");
    return s.substr(b, i - b);
  }
  std::string str() {
    expect('"');
    std::size_t b = i;
    while (i < s.size() && s[i] != '"') ++i;
    if (i == s.size()) fail("unterminated string");
    return s.substr(b, i++ - b);
  }
  LType type() {
    std::size_t at = i;
    try {
      return parse_type(str());
    } catch (const ParseError& e) {
      i = at;
      fail(e.what());
    }
  }

  Deriv read() {
    expect('(');
    std::string head = atom();
    bool annotate = false;
    if (!head.empty() && head.back() == '!') {
      annotate = true;
      head.pop_back();
    }
    auto premises = [&] {
      std::vector<Deriv> ps;
      while (!peek(')')) ps.push_back(read());
      return ps;
    };
    auto need = [&](const std::vector<Deriv>& ps, std::size_t n) {
      if (ps.size() != n) fail(head + " expects " + std::to_string(n) + " premises");
    };
    Deriv d;
    if (head == "ax") {
      std::string v = atom();
      Var x{v, false};
      if (!v.empty() && v[0] == '~') x = Var{v.substr(1), true};
      d = deriv::ax(x, type());
    } else if (head == "perm") {
      expect('(');
      std::vector<std::size_t> sigma;
      while (!peek(')')) {
        std::string a = atom();
        if (!std::all_of(a.begin(), a.end(), ::isdigit)) fail("expected an index");
        sigma.push_back(std::stoul(a));
      }
      expect(')');
      auto ps = premises();
      need(ps, 1);
      d = deriv::perm(sigma, ps[0]);
    } else if (head == "weak") {
      LType a = type();
      auto ps = premises();
      need(ps, 1);
      d = deriv::weak(a, ps[0], annotate);
    } else if (head == "coweak") {
      d = deriv::coweak(type(), annotate);
    } else if (head == "sum") {
      expect('(');
      std::vector<LType> gamma;
      while (!peek(')')) gamma.push_back(type());
      expect(')');
      std::vector<Scalar> cs;
      std::vector<Deriv> ps;
      while (!peek(')')) {
        expect('(');
        std::string c = str();
        try {
          cs.push_back(Scalar::parse(c));
        } catch (const Error& e) {
          fail(e.what());
        }
        ps.push_back(read());
        expect(')');
      }
      d = deriv::sum(gamma, cs, ps);
    } else {
      auto ps = premises();
      if (head == "cut") { need(ps, 2); d = deriv::cut(ps[0], ps[1]); }
      else if (head == "par") { need(ps, 1); d = deriv::par(ps[0]); }
      else if (head == "tens") { need(ps, 2); d = deriv::tens(ps[0], ps[1]); }
      else if (head == "mix") { need(ps, 2); d = deriv::mix(ps[0], ps[1]); }
      else if (head == "mix0") { need(ps, 0); d = deriv::mix0(); }
      else if (head == "der") { need(ps, 1); d = deriv::der(ps[0]); }
      else if (head == "coder") { need(ps, 1); d = deriv::coder(ps[0]); }
      else if (head == "contr") { need(ps, 1); d = deriv::contr(ps[0]); }
      else if (head == "cocontr") { need(ps, 2); d = deriv::cocontr(ps[0], ps[1]); }
      else if (head == "prom") {
        if (ps.empty()) fail("prom expects a content derivation");
        d = deriv::prom(ps[0], std::vector<Deriv>(ps.begin() + 1, ps.end()));
      } else {
        fail("unknown rule '" + head + "'");
      }
    }
    expect(')');
    return d;
  }
};

}  // namespace

Judgment check_derivation(const Deriv& d) { return check(d, "root"); }

std::string print_derivation(const Deriv& d) {
  std::string out;
  print_into(d, out);
  return out;
}

Deriv parse_derivation(const std::string& text) {
  SexprReader r{text};
  Deriv d = r.read();
  r.ws();
  if (r.i != text.size()) r.fail("trailing input after derivation");
  return d;
}

}  // namespace dill
