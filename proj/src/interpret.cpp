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

#include "dill/interpret.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace dill {

namespace {

template <class K>
void put(Value<K>& out, std::vector<PointId> t, const K& w) {
  if (Weight<K>::is_zero(w)) return;
  auto [it, fresh] = out.emplace(std::move(t), w);
  if (!fresh) {
    it->second = Weight<K>::add(it->second, w);
    if (Weight<K>::is_zero(it->second)) out.erase(it);
  }
}

// b with coordinate ib replaced by the coordinates of a other than ia, for
// every pair of tuples agreeing on those two coordinates.
template <class K>
Value<K> splice(const Value<K>& a, std::size_t ia, const Value<K>& b, std::size_t ib) {
  std::map<PointId, std::vector<const typename Value<K>::value_type*>> index;
  for (const auto& e : a) index[e.first[ia]].push_back(&e);
  Value<K> out;
  for (const auto& [tb, wb] : b) {
    auto it = index.find(tb[ib]);
    if (it == index.end()) continue;
    for (const auto* ea : it->second) {
      std::vector<PointId> t(tb.begin(), tb.begin() + ib);
      for (std::size_t i = 0; i < ea->first.size(); ++i)
        if (i != ia) t.push_back(ea->first[i]);
      t.insert(t.end(), tb.begin() + ib + 1, tb.end());
      put(out, std::move(t), Weight<K>::mul(ea->second, wb));
    }
  }
  return out;
}

template <class K>
Value<K> product(const Value<K>& a, const Value<K>& b) {
  Value<K> out;
  for (const auto& [ta, wa] : a)
    for (const auto& [tb, wb] : b) {
      std::vector<PointId> t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      put(out, std::move(t), Weight<K>::mul(wa, wb));
    }
  return out;
}

template <class K>
struct Interp {
  const Valuation& v;
  std::size_t bound;
  PointSpace& s;

  bool fits(PointId bag) const { return s.bag_size(bag) <= bound; }

  Value<K> run(const Deriv& d) {
    switch (d->rule) {
      case Rule::Ax: {
        Value<K> out;
        for (PointId a : enumerate_web(denote_type(d->type, v), bound, s))
          out.emplace(std::vector<PointId>{a, a}, Weight<K>::one());
        return out;
      }
      case Rule::Perm: {
        Value<K> in = run(d->premises[0]);
        Value<K> out;
        for (const auto& [t, w] : in) {
          std::vector<PointId> u;
          for (std::size_t i : d->perm) u.push_back(t[i]);
          put(out, std::move(u), w);
        }
        return out;
      }
      case Rule::Cut: {
        Value<K> l = run(d->premises[0]);
        Value<K> r = run(d->premises[1]);
        if (l.empty() || r.empty()) return {};
        return splice(r, r.begin()->first.size() - 1, l, l.begin()->first.size() - 1);
      }
      case Rule::TensR:
      case Rule::Cocontr: {
        Value<K> l = run(d->premises[0]);
        Value<K> r = run(d->premises[1]);
        Value<K> out;
        for (const auto& [ta, wa] : l)
          for (const auto& [tb, wb] : r) {
            PointId a = ta.back(), b = tb.back();
            std::vector<PointId> t(ta.begin(), ta.end() - 1);
            t.insert(t.end(), tb.begin(), tb.end() - 1);
            K w = Weight<K>::mul(wa, wb);
            if (d->rule == Rule::TensR) {
              t.push_back(s.pair(a, b));
            } else {
              PointId m = s.bag_union(a, b);
              if (!fits(m)) continue;
              t.push_back(m);
              w = Weight<K>::mul(w, Weight<K>::of_count(bag_binomial(s, m, a)));
            }
            put(out, std::move(t), w);
          }
        return out;
      }
      case Rule::Mix:
        return product(run(d->premises[0]), run(d->premises[1]));
      case Rule::Mix0:
        return {{std::vector<PointId>{}, Weight<K>::one()}};
      case Rule::ParR:
      case Rule::Contr: {
        Value<K> in = run(d->premises[0]);
        Value<K> out;
        for (const auto& [t, w] : in) {
          std::size_t n = t.size();
          std::vector<PointId> u(t.begin(), t.end() - 2);
          if (d->rule == Rule::ParR) {
            u.push_back(s.pair(t[n - 2], t[n - 1]));
          } else {
            PointId m = s.bag_union(t[n - 2], t[n - 1]);
            if (!fits(m)) continue;
            u.push_back(m);
          }
          put(out, std::move(u), w);
        }
        return out;
      }
      case Rule::Weak: {
        Value<K> in = run(d->premises[0]);
        Value<K> out;
        for (const auto& [t, w] : in) {
          std::vector<PointId> u = t;
          u.push_back(s.empty_bag());
          out.emplace(std::move(u), w);
        }
        return out;
      }
      case Rule::Coweak:
        return {{std::vector<PointId>{s.empty_bag()}, Weight<K>::one()}};
      case Rule::Der:
      case Rule::Coder: {
        Value<K> in = run(d->premises[0]);
        Value<K> out;
        if (bound == 0) return out;
        for (const auto& [t, w] : in) {
          std::vector<PointId> u = t;
          u.back() = s.singleton(u.back());
          out.emplace(std::move(u), w);
        }
        return out;
      }
      case Rule::Sum: {
        Value<K> out;
        for (std::size_t i = 0; i < d->premises.size(); ++i) {
          K c = Weight<K>::of_coefficient(d->coeffs[i]);
          if (Weight<K>::is_zero(c)) continue;
          for (const auto& [t, w] : run(d->premises[i])) put(out, t, Weight<K>::mul(c, w));
        }
        return out;
      }
      case Rule::Prom: {
        std::size_t n = d->premises.size() - 1;
        Value<K> content = run(d->premises[0]);
        std::vector<PromEntry<K>> es;
        for (const auto& [t, w] : content)
          es.push_back({std::vector<PointId>(t.begin(), t.begin() + n), t[n], w});
        Value<K> cur;
        for (const auto& [key, w] : promotion_closed_form(es, n, bound, s)) {
          std::vector<PointId> t = key.first;
          t.push_back(key.second);
          put(cur, std::move(t), w);
        }
        std::size_t offset = 0;
        for (std::size_t i = 0; i < n; ++i) {
          Value<K> arg = run(d->premises[i + 1]);
          if (arg.empty() || cur.empty()) return {};
          std::size_t last = arg.begin()->first.size() - 1;
          cur = splice(arg, last, cur, offset);
          offset += last;
        }
        return cur;
      }
    }
    throw RuleViolation("unknown rule");
  }
};

template <class K>
int compare_tuples(const std::vector<PointId>& a, const std::vector<PointId>& b,
                   const PointSpace& s) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (int c = s.compare(a[i], b[i])) return c;
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

template <class K>
std::vector<const typename Value<K>::value_type*> sorted(const Value<K>& x,
                                                         const PointSpace& s) {
  std::vector<const typename Value<K>::value_type*> out;
  for (const auto& e : x) out.push_back(&e);
  std::sort(out.begin(), out.end(), [&](auto* a, auto* b) {
    return compare_tuples<K>(a->first, b->first, s) < 0;
  });
  return out;
}

}  // namespace

std::size_t internal_bound(std::size_t d) { return 2 * d + 2; }

template <class K>
Value<K> interpret_derivation(const Deriv& d, const Valuation& v, std::size_t bound,
                              PointSpace& s) {
  return Interp<K>{v, bound, s}.run(d);
}

template <class K>
Value<K> restrict_value(const Value<K>& x, std::size_t d, const PointSpace& s) {
  Value<K> out;
  for (const auto& [t, w] : x)
    if (std::all_of(t.begin(), t.end(), [&](PointId p) { return s.max_bag(p) <= d; }))
      out.emplace(t, w);
  return out;
}

SequentializedNet sequentialize_net(const Net& n, const std::vector<std::optional<LType>>& gamma,
                                    std::size_t budget) {
  std::vector<std::optional<LType>> g = gamma;
  if (g.empty()) g.resize(n.width());
  NetInference inf = infer_net(n, g, {});
  SequentializedNet out{n, inf.gamma, {}, {}};
  std::size_t k = 0;
  for (const auto& [key, term] : n.entries()) {
    SearchOptions opts;
    opts.budget = budget;
    SearchResult r = sequentialize(Net::of(term.rep), inf.gamma, inf.elements[k].phi, opts);
    if (r.status == SearchResult::Status::BudgetExceeded)
      throw BudgetExceeded("no derivation of " + print_simple(term.rep) + " within " +
                           std::to_string(budget) + " goals");
    if (r.status == SearchResult::Status::NotFound)
      throw NotDerivable(print_simple(term.rep) + " has no derivation");
    out.coeffs.push_back(term.coef);
    out.derivations.push_back(r.derivation);
    ++k;
  }
  return out;
}

template <class K>
Value<K> interpret_sequentialized(const SequentializedNet& p, const Valuation& v,
                                  std::size_t bound, PointSpace& s) {
  Value<K> out;
  for (std::size_t i = 0; i < p.derivations.size(); ++i) {
    K c = Weight<K>::of_coefficient(p.coeffs[i]);
    if (Weight<K>::is_zero(c)) continue;
    for (const auto& [t, w] : interpret_derivation<K>(p.derivations[i], v, bound, s))
      put(out, t, Weight<K>::mul(c, w));
  }
  return out;
}

template <class K>
NetValue<K> interpret_net(const SequentializedNet& p, const Valuation& v, std::size_t d,
                          PointSpace& s) {
  NetValue<K> out;
  out.info.gamma = p.gamma;
  out.info.degree = d;
  out.value = restrict_value(interpret_sequentialized<K>(p, v, internal_bound(d), s), d, s);
  Value<K> wider =
      restrict_value(interpret_sequentialized<K>(p, v, internal_bound(d + 2), s), d, s);
  out.info.stable = wider == out.value;
  return out;
}

std::string print_tuple(const std::vector<PointId>& t, const PointSpace& s) {
  std::string r = "(";
  for (std::size_t i = 0; i < t.size(); ++i) r += (i ? ", " : "") + s.print(t[i]);
  return r + ")";
}

template <class K>
std::string value_json(const Value<K>& x, const PointSpace& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto* e : sorted<K>(x, s)) {
    nlohmann::json t = nlohmann::json::array();
    for (PointId p : e->first) t.push_back(s.print(p));
    if constexpr (std::is_same_v<K, bool>) {
      j.push_back(t);
    } else {
      j.push_back({{"tuple", t}, {"val", Weight<K>::str(e->second)}});
    }
  }
  return j.dump();
}

template <class K>
std::optional<std::vector<PointId>> value_difference(const Value<K>& a, const Value<K>& b,
                                                     const PointSpace& s) {
  std::optional<std::vector<PointId>> best;
  auto consider = [&](const std::vector<PointId>& t) {
    if (!best || compare_tuples<K>(t, *best, s) < 0) best = t;
  };
  for (const auto& [t, w] : a) {
    auto it = b.find(t);
    if (it == b.end() || !(it->second == w)) consider(t);
  }
  for (const auto& [t, w] : b)
    if (!a.count(t)) consider(t);
  return best;
}

#define DILL_INSTANTIATE(K)                                                                    \
  template Value<K> interpret_derivation(const Deriv&, const Valuation&, std::size_t,          \
                                         PointSpace&);                                         \
  template Value<K> restrict_value(const Value<K>&, std::size_t, const PointSpace&);           \
  template Value<K> interpret_sequentialized(const SequentializedNet&, const Valuation&,       \
                                             std::size_t, PointSpace&);                        \
  template NetValue<K> interpret_net(const SequentializedNet&, const Valuation&, std::size_t,  \
                                     PointSpace&);                                             \
  template std::string value_json(const Value<K>&, const PointSpace&);                         \
  template std::optional<std::vector<PointId>> value_difference(const Value<K>&,               \
                                                                const Value<K>&,               \
                                                                const PointSpace&);

DILL_INSTANTIATE(bool)
DILL_INSTANTIATE(Scalar)

#undef DILL_INSTANTIATE

}  // namespace dill
