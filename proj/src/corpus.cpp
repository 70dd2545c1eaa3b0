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


#include "dill/corpus.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "dill/rewrite.hpp"

namespace dill {

namespace {

LType o() { return LType::atom_of("o"); }

class NetGen {
public:
  explicit NetGen(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  // Types without nested exponentials.
  LType linear_type() {
    switch (pick(6)) {
      case 0: case 1: return o();
      case 2: return dual(o());
      case 3: return LType::tens(o(), dual(o()));
      case 4: return LType::par(o(), o());
      default: return LType::tens(o(), o());
    }
  }

  LType top_type() {
    LType a = pick(2) ? o() : linear_type();
    switch (pick(5)) {
      case 0: return LType::excl(a);
      case 1: return LType::intn(a);
      case 2: return LType::excl(dual(a));
      default: return a;
    }
  }

  // With root_ax false the last rule is not an axiom unless t is atomic.
  Deriv gen(const LType& t, int budget, bool box, bool root_ax = true) {
    if (budget <= 0 && root_ax) return base(t);
    if (budget <= 0) budget = 1;
    if (!root_ax && t.kind != LType::Kind::Atom && t.kind != LType::Kind::CoAtom) {
      for (int k = 0; k < 8; ++k) {
        Deriv d = gen(t, budget, box);
        if (d->rule != Rule::Ax) return d;
      }
    }
    switch (t.kind) {
      case LType::Kind::Tens:
        if (coin(0.2)) return ax(t);
        return deriv::tens(gen(t.left(), (budget - 1) / 2, box), gen(t.right(), (budget - 1) / 2, box));
      case LType::Kind::Par: {
        if (coin(0.2)) return ax(t);
        Deriv l = gen(t.left(), (budget - 1) / 2, box);
        Deriv r = gen(t.right(), (budget - 1) / 2, box);
        std::size_t wl = width(l), wr = width(r), n = wl + wr;
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < n; ++i)
          if (i != wl - 1 && i != n - 1) order.push_back(i);
        order.push_back(wl - 1);
        order.push_back(n - 1);
        return deriv::par(deriv::perm(order, deriv::mix(l, r)));
      }
      case LType::Kind::Excl:
        switch (pick(box && budget >= 2 ? 6 : 4)) {
          case 0: return deriv::coder(gen(t.body(), budget - 1, box));
          case 1: return deriv::coweak(t);
          case 2: return deriv::cocontr(gen(t, (budget - 1) / 2, box), gen(t, (budget - 1) / 2, box));
          case 3: return ax(t);
          default: return prom(t.body(), budget - 1);
        }
      case LType::Kind::Int:
        switch (pick(4)) {
          case 0: return deriv::der(gen(t.body(), budget - 1, box));
          case 1:
            return deriv::weak(t, coin(0.5) ? deriv::mix0() : gen(linear_type(), budget - 1, box));
          case 2: {
            Deriv l = gen(t, (budget - 1) / 2, box);
            Deriv r = gen(t, (budget - 1) / 2, box);
            std::size_t wl = width(l), n = wl + width(r);
            std::vector<std::size_t> order;
            for (std::size_t i = 0; i < n; ++i)
              if (i != wl - 1 && i != n - 1) order.push_back(i);
            order.push_back(wl - 1);
            order.push_back(n - 1);
            return deriv::contr(deriv::perm(order, deriv::mix(l, r)));
          }
          default: return ax(t);
        }
      default:
        return ax(t);
    }
  }

  // Cuts a random conclusion of d against a fresh derivation of its dual.
  Deriv cut_into(Deriv d, int budget) {
    std::vector<LType> g = check_derivation(d).gamma;
    if (g.empty()) return d;
    std::vector<std::size_t> compound;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k].kind != LType::Kind::Atom && g[k].kind != LType::Kind::CoAtom) compound.push_back(k);
    std::size_t i = !compound.empty() && coin(0.85) ? compound[pick(compound.size())] : pick(g.size());
    Deriv l = gen(dual(g[i]), budget, true, false);
    return deriv::cut(l, move_last(d, i, g.size()));
  }

private:
  Deriv ax(const LType& t) { return deriv::ax(fresh(), dual(t)); }

  Deriv base(const LType& t) {
    if (t.kind == LType::Kind::Excl && coin(0.5)) return deriv::coweak(t);
    if (t.kind == LType::Kind::Int && coin(0.5)) return deriv::weak(t, deriv::mix0());
    return ax(t);
  }

  Var fresh() { return Var{"x" + std::to_string(next_++), false}; }

  static std::size_t width(const Deriv& d) { return check_derivation(d).gamma.size(); }

  static Deriv move_last(Deriv d, std::size_t i, std::size_t n) {
    if (i + 1 == n) return d;
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) order.push_back(k);
    order.push_back(i);
    return deriv::perm(order, d);
  }

  static Deriv swap_last(Deriv d) {
    std::size_t n = width(d);
    if (n < 2) return d;
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k + 2 < n; ++k) order.push_back(k);
    order.push_back(n - 1);
    order.push_back(n - 2);
    return deriv::perm(order, d);
  }

  // Turns every conclusion but the last into a ?-formula.
  Deriv questionize(Deriv d) {
    while (true) {
      std::vector<LType> g = check_derivation(d).gamma;
      std::size_t i = 0;
      while (i + 1 < g.size() && g[i].kind == LType::Kind::Int) ++i;
      if (i + 1 >= g.size()) break;
      d = swap_last(deriv::der(move_last(d, i, g.size())));
    }
    if (coin(0.25)) d = swap_last(deriv::weak(LType::intn(linear_type()), d));
    return d;
  }

  Deriv content(const LType& a, int budget) {
    return questionize(gen(a, budget, false));
  }

  Deriv prom(const LType& a, int budget) {
    Deriv c = content(a, budget / 2);
    std::vector<LType> g = check_derivation(c).gamma;
    if (coin(0.35)) {
      for (int k = 0; k < 6; ++k) {
        Deriv c2 = content(a, budget / 2);
        if (check_derivation(c2).gamma != g) continue;
        static const std::vector<std::pair<long, long>> weights{{1, 1}, {1, 2}, {2, 1}, {1, 3}};
        auto [p, q] = weights[pick(weights.size())];
        c = deriv::sum(g, {Scalar(p), Scalar(q)}, {c, c2});
        break;
      }
    }
    std::vector<Deriv> args;
    int each = g.size() > 1 ? (budget / 2) / static_cast<int>(g.size() - 1) : 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
      args.push_back(gen(LType::excl(dual(g[i].body())), each, true));
    return deriv::prom(c, args);
  }

  std::mt19937_64 rng_;
  std::size_t next_ = 0;
};

bool has_rule(const std::vector<Redex>& rs, RuleId r) {
  for (const auto& x : rs)
    if (x.rule == r) return true;
  return false;
}

}  // namespace

std::vector<CorpusNet> generate_net_corpus(const NetCorpusOptions& opt) {
  NetGen g(opt.seed);
  std::vector<CorpusNet> out;
  std::set<std::string> seen;
  std::size_t chain = 0, boxes = 0;
  for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
    if (out.size() >= opt.count && chain >= opt.chain_rule && boxes >= opt.box_box) break;
    int budget = 2 + static_cast<int>(g.pick(8));
    Deriv d = g.gen(g.top_type(), budget, true);
    std::size_t cuts = 1 + g.pick(2);
    for (std::size_t k = 0; k < cuts; ++k) d = g.cut_into(d, 1 + static_cast<int>(g.pick(4)));
    Judgment j = check_derivation(d);
    if (j.net.constructors() > opt.max_constructors) continue;
    std::vector<Redex> rs = find_redexes(j.net);
    if (rs.empty()) continue;
    bool is_chain = has_rule(rs, RuleId::ComCd);
    bool is_box = has_rule(rs, RuleId::ComBox);
    if (out.size() >= opt.count && !(is_chain && chain < opt.chain_rule) &&
        !(is_box && boxes < opt.box_box))
      continue;
    if (!seen.insert(print_net(j.net.canonical())).second) continue;
    chain += is_chain;
    boxes += is_box;
    out.push_back({j.net, j.gamma, d});
  }
  return out;
}

std::string print_net_corpus(const std::vector<CorpusNet>& c) {
  std::string out;
  for (const auto& n : c) out += print_net(n.net) + "\n";
  return out;
}

std::vector<Net> parse_net_corpus(const std::string& text) {
  std::vector<Net> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t k = line.find_first_not_of(" \t\r");
    if (k == std::string::npos || line[k] == '#') continue;
    out.push_back(parse_net(line));
  }
  return out;
}

// ---- differential terms ----

namespace {

struct Ty {
  bool arrow = false;
  std::vector<Ty> kids;  // from, to
  bool operator==(const Ty& o) const { return arrow == o.arrow && kids == o.kids; }
};

Ty base_ty() { return {}; }
Ty arrow_ty(Ty a, Ty b) { return {true, {std::move(a), std::move(b)}}; }

class DGen {
public:
  explicit DGen(std::uint64_t seed) : rng_(seed) {
    ctx_ = {{"a", base_ty()},
            {"b", base_ty()},
            {"f", arrow_ty(base_ty(), base_ty())},
            {"g", arrow_ty(arrow_ty(base_ty(), base_ty()), base_ty())}};
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  Ty small_ty() { return pick(3) ? base_ty() : arrow_ty(base_ty(), base_ty()); }

  DComb gen(const Ty& t, int size) {
    if (size <= 1) return leaf(t);
    static const std::vector<int> base_moves{0, 1, 1, 2, 2, 5, 5};
    static const std::vector<int> arrow_moves{0, 1, 1, 2, 3, 3, 4, 4, 6};
    const auto& moves = t.arrow ? arrow_moves : base_moves;
    switch (moves[pick(moves.size())]) {
      case 0:
        return leaf(t);
      case 1: {
        // A beta redex.
        Ty a = small_ty();
        std::string x = bind(a);
        DComb body = gen(t, size / 2);
        unbind();
        DComb arg = gen(a, size / 2);
        if (coin(0.3)) arg.add(gen(a, size / 3).scaled(Scalar(coin(0.5) ? 1 : 2)));
        return dterm::app(dterm::lam(x, body), arg);
      }
      case 2: {
        Ty a = small_ty();
        return dterm::app(gen(arrow_ty(a, t), size / 2), gen(a, size / 2));
      }
      case 3: {
        std::string x = bind(t.kids[0]);
        DComb body = gen(t.kids[1], size - 1);
        unbind();
        return dterm::lam(x, body);
      }
      case 4:
        return dterm::diff(gen(t, size / 2), gen(t.kids[0], size / 2));
      case 5: {
        // (D (\x. M) . N) R
        Ty a = small_ty();
        std::string x = bind(a);
        DComb body = gen(t, size / 2);
        unbind();
        DComb d = dterm::diff(dterm::lam(x, body), gen(a, size / 4));
        return dterm::app(d, gen(a, size / 4));
      }
      default: {
        std::string x = bind(t.kids[0]);
        DComb body = gen(t.kids[1], size / 2);
        unbind();
        return dterm::diff(dterm::lam(x, body), gen(t.kids[0], size / 2));
      }
    }
  }

private:
  DComb leaf(const Ty& t) {
    // Bound variables are three times as likely as the free ones.
    std::vector<std::string> hits;
    for (const auto& [x, a] : ctx_)
      if (a == t)
        for (int k = 0; k < (x[0] == 'v' ? 3 : 1); ++k) hits.push_back(x);
    if (!hits.empty()) return dterm::var(hits[pick(hits.size())]);
    std::string x = bind(t.arrow ? t.kids[0] : base_ty());
    DComb body = leaf(t.arrow ? t.kids[1] : t);
    unbind();
    return dterm::lam(x, body);
  }

  std::string bind(const Ty& a) {
    std::string x = "v" + std::to_string(next_++);
    ctx_.push_back({x, a});
    return x;
  }
  void unbind() { ctx_.pop_back(); }

  std::mt19937_64 rng_;
  std::vector<std::pair<std::string, Ty>> ctx_;
  std::size_t next_ = 0;
};

std::size_t comb_size(const DComb& c) {
  std::size_t n = 0;
  for (const auto& [t, k] : c) n += t.size();
  return n;
}

}  // namespace

std::vector<DComb> generate_dterm_corpus(std::uint64_t seed, std::size_t count,
                                         std::size_t max_size) {
  DGen g(seed);
  std::vector<DComb> out;
  std::set<DComb> seen;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100000; ++attempt) {
    Ty t = g.pick(2) ? base_ty() : arrow_ty(base_ty(), base_ty());
    DComb m = g.gen(t, 4 + static_cast<int>(g.pick(max_size - 3)));
    if (m.is_zero() || comb_size(m) > max_size || find_redexes(m).size() < 2) continue;
    if (!seen.insert(m).second) continue;
    out.push_back(m);
  }
  return out;
}

// ---- resource terms ----

namespace {

class RGen {
public:
  RGen(std::uint64_t seed, std::size_t max_bunch) : rng_(seed), max_bunch_(max_bunch) {}

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  RTerm gen(int depth) {
    if (depth <= 0) return leaf();
    switch (pick(5)) {
      case 0:
        return leaf();
      case 1: {
        std::string x = bind();
        RTerm body = gen(depth - 1);
        unbind();
        return RTerm::abs(x, close_term(body, x));
      }
      case 2: {
        std::vector<RTerm> items;
        std::size_t n = pick(std::min<std::size_t>(max_bunch_, 3) + 1);
        for (std::size_t i = 0; i < n; ++i) items.push_back(gen(depth - 2));
        return RTerm::bapp(gen(depth - 1), Multiset<RTerm>(items));
      }
      default:
        return redex(depth);
    }
  }

  RTerm redex(int depth) {
    std::string x = bind();
    RTerm body = gen(depth - 1);
    unbind();
    std::size_t n = deg(body, x);
    if (n > max_bunch_ || coin(0.15)) n = pick(max_bunch_ + 1);
    std::vector<RTerm> items;
    for (std::size_t i = 0; i < n; ++i) items.push_back(gen(depth - 2));
    return RTerm::bapp(RTerm::abs(x, close_term(body, x)), Multiset<RTerm>(items));
  }

private:
  RTerm leaf() {
    if (!scope_.empty() && coin(0.7)) return RTerm::var(scope_[pick(scope_.size())]);
    static const char* names[] = {"a", "b", "c"};
    return RTerm::var(names[pick(3)]);
  }
  std::string bind() {
    scope_.push_back("v" + std::to_string(next_++));
    return scope_.back();
  }
  void unbind() { scope_.pop_back(); }

  std::mt19937_64 rng_;
  std::size_t max_bunch_;
  std::vector<std::string> scope_;
  std::size_t next_ = 0;
};

bool bunches_within(const RTerm& t, std::size_t k) {
  switch (t.kind()) {
    case RTerm::Kind::Abs: return bunches_within(t.body(), k);
    case RTerm::Kind::BApp:
      if (t.bunch().size() > k || !bunches_within(t.head(), k)) return false;
      for (const auto& [u, m] : t.bunch().entries())
        if (!bunches_within(u, k)) return false;
      return true;
    default: return true;
  }
}

}  // namespace

std::vector<RComb> generate_rterm_corpus(std::uint64_t seed, std::size_t count,
                                         std::size_t max_bunch) {
  RGen g(seed, max_bunch);
  std::vector<RComb> out;
  std::set<RComb> seen;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100000; ++attempt) {
    RTerm t = g.redex(2 + static_cast<int>(g.pick(4)));
    if (t.size() > 24 || !bunches_within(t, max_bunch)) continue;
    RComb c(t);
    if (!seen.insert(c).second) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace dill
