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


#include "dill/resource.hpp"

namespace dill {

namespace {

struct Expander {
  std::size_t p;
  std::set<std::string> avoid;

  std::string fresh() {
    std::string v = fresh_name(avoid);
    avoid.insert(v);
    return v;
  }

  RComb comb(const DComb& m) {
    RComb out;
    for (const auto& [t, c] : m) out.add(term(t).scaled(c));
    return out;
  }

  // Head applied to the derivative arguments plus up to P copies of r.
  RComb series(const DTerm& head, const std::vector<DTerm>& dargs, const RComb* r) {
    RComb h = term(head);
    std::vector<RComb> slots;
    for (const auto& n : dargs) slots.push_back(term(n));
    RComb out;
    RComb rs = r ? *r : RComb();
    std::size_t top = r ? p : 0;
    for (std::size_t k = 0; k <= top; ++k) {
      out.add(rterm::bapp(h, slots).scaled(Scalar(1) / Scalar::factorial(static_cast<unsigned>(k))));
      slots.push_back(rs);
    }
    return out;
  }

  RComb term(const DTerm& t) {
    switch (t.kind()) {
      case DTerm::Kind::Var:
        return rterm::var(t.name());
      case DTerm::Kind::Bound:
        return RComb(RTerm::bound(t.index()));
      case DTerm::Kind::Abs: {
        std::string v = fresh();
        RComb out;
        for (const auto& [u, c] : term(open_term(t.body(), v)))
          out.add(RTerm::abs(t.name(), close_term(u, v)), c);
        return out;
      }
      case DTerm::Kind::App: {
        RComb r = comb(t.arg());
        if (t.head().kind() == DTerm::Kind::Diff)
          return series(t.head().head(), t.head().dargs(), &r);
        return series(t.head(), {}, &r);
      }
      case DTerm::Kind::Diff: {
        std::string v = fresh();
        RComb rv = rterm::var(v);
        RComb body = series(t.head(), t.dargs(), &rv);
        return rterm::lam(v, body);
      }
    }
    return {};
  }
};

}  // namespace

RComb taylor_expand(const DComb& m, std::size_t multiplicity) {
  Expander e{multiplicity, free_vars(m)};
  return e.comb(m);
}

RComb integrate(const RComb& u, const std::string& x) {
  RComb out;
  for (const auto& [t, c] : u) out.add(t, c / Scalar(static_cast<long>(deg(t, x) + 1)));
  return out;
}

void check_antiderivative_hypotheses(const RComb& u, const std::string& x, const std::string& h) {
  if (x == h) throw NotLinearInH("x and h must be different variables");
  for (const auto& [t, c] : u)
    if (deg(t, h) != 1)
      throw NotLinearInH(print_rterm(t) + " has " + std::to_string(deg(t, h)) +
                         " occurrences of " + h);
  std::set<std::string> avoid = free_vars(u);
  avoid.insert(x);
  avoid.insert(h);
  std::string h2 = fresh_name(avoid);
  RComb lhs = dsubst(u, rterm::var(h2), x);
  RComb rhs = dsubst(subst(u, rterm::var(h2), h), rterm::var(h), x);
  if (!(lhs == rhs))
    throw SymmetryViolation("d/dx . " + h2 + " gives " + print_rcomb(lhs) + " but swapping gives " +
                            print_rcomb(rhs));
}

RComb antiderive_resource(const RComb& u, const std::string& x, const std::string& h) {
  check_antiderivative_hypotheses(u, x, h);
  return subst(integrate(u, x), rterm::var(x), h);
}

AntiderivativeCheck antiderivative_check(const RComb& u, const std::string& x,
                                         const std::string& h) {
  AntiderivativeCheck r;
  r.v = antiderive_resource(u, x, h);
  r.derivative = dsubst(r.v, rterm::var(h), x);
  r.ok = r.derivative == u;
  return r;
}

}  // namespace dill
