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

#include "dill/wrel.hpp"

#include <functional>

namespace dill {

namespace {

using W = Weight<Scalar>;

Scalar inverse_factorial(std::size_t i) { return Scalar(1) / Scalar::factorial(static_cast<unsigned>(i)); }

}  // namespace

WMorphism w_generator(const std::string& kind, const std::vector<Obj>& objs, const Env& e) {
  auto need = [&](std::size_t n) {
    if (objs.size() != n)
      throw UsageError("generator " + kind + " takes " + std::to_string(n) + " objects");
  };
  if (kind == "seely0" || kind == "mix0") {
    need(0);
    return kind == "seely0" ? seely0<Scalar>(e) : mix0<Scalar>(e);
  }
  if (kind == "seely2" || kind == "mix2") {
    need(2);
    return kind == "seely2" ? seely2<Scalar>(objs[0], objs[1], e)
                            : mix2<Scalar>(objs[0], objs[1], e);
  }
  need(1);
  const Obj& x = objs[0];
  if (kind == "der") return der<Scalar>(x, e);
  if (kind == "coder") return coder<Scalar>(x, e);
  if (kind == "weak") return weak<Scalar>(x, e);
  if (kind == "coweak") return coweak<Scalar>(x, e);
  if (kind == "contr") return contr<Scalar>(x, e);
  if (kind == "cocontr") return cocontr<Scalar>(x, e);
  if (kind == "digg") return digg<Scalar>(x, e);
  throw UsageError("unknown generator " + kind);
}

WMorphism w_excl(const WMorphism& m) { return excl(m); }

WVector w_prom_vector(const WVector& x, const Env& e) {
  PointSpace& s = *e.space;
  std::vector<PointId> supp;
  for (const auto& [a, w] : x) supp.push_back(a);
  WVector out;
  for (PointId m : enumerate_bags(supp, e.bound, s)) {
    Scalar v(1);
    for (PointId a : s.parts(m)) v = v * x.at(a);
    accumulate(out, m, v);
  }
  return out;
}

WVector w_fun(const WMorphism& m, const WVector& x) {
  WVector out;
  for (const auto& [bag, xm] : w_prom_vector(x, m.env()))
    for (const auto& [b, w] : m.row(bag)) accumulate(out, b, w * xm);
  return out;
}

WVector w_apply(const WMorphism& m, const WVector& x) {
  WVector out;
  for (const auto& [a, xa] : x)
    for (const auto& [b, w] : m.row(a)) accumulate(out, b, w * xa);
  return out;
}

WMorphism w_promotion(const WMorphism& f, const std::vector<Obj>& args) {
  return promotion(f, args);
}

WMorphism w_promotion_closed(const WMorphism& f, const std::vector<Obj>& args) {
  return promotion_closed(f, args);
}

Obj tensor_power(const Obj& x, std::size_t n) {
  if (n == 0) return Obj::unit();
  Obj o = x;
  for (std::size_t i = 1; i < n; ++i) o = Obj::tensor(o, x);
  return o;
}

WMorphism contr_pow(const Obj& x, std::size_t n, const Env& e) {
  if (n == 0) return weak<Scalar>(x, e);
  WMorphism c = identity<Scalar>(Obj::excl(x), e);
  for (std::size_t i = 1; i < n; ++i)
    c = compose(tensor(c, identity<Scalar>(Obj::excl(x), e)), contr<Scalar>(x, e));
  return c;
}

WMorphism d_pow(const Obj& x, std::size_t n, const Env& e) {
  if (n == 0) return weak<Scalar>(x, e);
  WMorphism ds = der<Scalar>(x, e);
  for (std::size_t i = 1; i < n; ++i) ds = tensor(ds, der<Scalar>(x, e));
  return compose(ds, contr_pow(x, n, e));
}

WMorphism dbar_pow(const Obj& x, std::size_t n, const Env& e) {
  if (n == 0) return coweak<Scalar>(x, e);
  WMorphism cs = coder<Scalar>(x, e);
  WMorphism c = identity<Scalar>(Obj::excl(x), e);
  for (std::size_t i = 1; i < n; ++i) {
    cs = tensor(cs, coder<Scalar>(x, e));
    c = compose(cocontr<Scalar>(x, e), tensor(c, identity<Scalar>(Obj::excl(x), e)));
  }
  return compose(c, cs);
}

WMorphism coderc_pow(const Obj& x, std::size_t n, const Env& e) {
  WMorphism c = identity<Scalar>(Obj::excl(x), e);
  for (std::size_t i = 0; i < n; ++i)
    c = compose(coderc<Scalar>(x, e), tensor(c, identity<Scalar>(x, e)));
  return c;
}

WMorphism taylor_T(const Obj& x, std::size_t n, const Env& e, const Semiring& k) {
  k.require_division();
  WMorphism t = zero_morphism<Scalar>(Obj::excl(x), Obj::excl(x), e);
  for (std::size_t i = 0; i <= n; ++i)
    t = add(t, scale(inverse_factorial(i), compose(dbar_pow(x, i, e), d_pow(x, i, e))));
  return t;
}

WMorphism psi(const Obj& x, const Env& e) {
  Obj bx = Obj::excl(x);
  return compose(tensor(coderc<Scalar>(x, e), identity<Scalar>(x, e)),
                 compose(sigma23<Scalar>(bx, x, x, e),
                         tensor(derc<Scalar>(x, e), identity<Scalar>(x, e))));
}

WMorphism J(const Obj& x, const Env& e) {
  return add(identity<Scalar>(Obj::excl(x), e), compose(coderc<Scalar>(x, e), derc<Scalar>(x, e)));
}

WMorphism I(const Obj& x, const Env& e, const Semiring& k) {
  k.require_division();
  Space sp = e.space;
  return Morphism<Scalar>(Obj::excl(x), Obj::excl(x), e, [sp](PointId m) {
    return Row<Scalar>{{m, Scalar(1) / Scalar(static_cast<long>(sp->bag_size(m) + 1))}};
  });
}

std::size_t poly_degree(const WMorphism& f, const Obj& x, std::size_t maxn) {
  const Env& e = f.env();
  const std::size_t d = e.bound;
  if (maxn > d) throw DegreeExceedsBound("degree bound " + std::to_string(maxn) +
                                         " exceeds the web bound " + std::to_string(d));
  for (std::size_t n = 0; n <= maxn; ++n) {
    WMorphism g = compose(f, coderc_pow(x, n + 1, e));
    WMorphism z = zero_morphism<Scalar>(g.src(), g.tgt(), e);
    if (!first_difference(g, z, d)) return n;
  }
  throw DegreeExceedsBound("not polynomial of degree at most " + std::to_string(maxn));
}

WMorphism poly_compose(const WMorphism& g, const WMorphism& f, const Obj& x, const Obj& y,
                       const Semiring& k) {
  k.require_division();
  const Env& e = f.env();
  WMorphism out = zero_morphism<Scalar>(Obj::excl(x), g.tgt(), e);
  for (std::size_t i = 0; i <= e.bound; ++i) {
    WMorphism fs = i == 0 ? identity<Scalar>(Obj::unit(), e) : f;
    for (std::size_t j = 1; j < i; ++j) fs = tensor(fs, f);
    WMorphism term = compose(g, compose(dbar_pow(y, i, e), compose(fs, contr_pow(x, i, e))));
    out = add(out, scale(inverse_factorial(i), term));
  }
  return out;
}

WMorphism quasifunctor_pow(const WMorphism& f, std::size_t n) {
  const Env& e = f.env();
  const Obj& x = f.src();
  const Obj& y = f.tgt();
  WMorphism p = compose(coweak<Scalar>(y, e), weak<Scalar>(x, e));
  for (std::size_t i = 0; i < n; ++i)
    p = compose(coderc<Scalar>(y, e), compose(tensor(p, f), derc<Scalar>(x, e)));
  return p;
}

WMorphism poincare_lhs(const WMorphism& f, const Obj& x) {
  const Env& e = f.env();
  Obj bx = Obj::excl(x);
  return compose(f, compose(tensor(coderc<Scalar>(x, e), identity<Scalar>(x, e)),
                            sigma23<Scalar>(bx, x, x, e)));
}

WMorphism poincare_rhs(const WMorphism& f, const Obj& x) {
  const Env& e = f.env();
  return compose(f, tensor(coderc<Scalar>(x, e), identity<Scalar>(x, e)));
}

WMorphism poincare_antiderivative(const WMorphism& f, const Obj& x, const Semiring& k) {
  const Env& e = f.env();
  if (!(f.src() == Obj::tensor(Obj::excl(x), x)))
    throw WebMismatch("antiderivative: source is " + print_obj(f.src()));
  if (auto m = first_difference(poincare_lhs(f, x), poincare_rhs(f, x), e.bound))
    throw SymmetryViolation(describe(*m, f.space()));
  return compose(f, compose(tensor(I(x, e, k), identity<Scalar>(x, e)), derc<Scalar>(x, e)));
}

std::optional<Mismatch<Scalar>> fundamental_theorem_check(const Obj& x, const Env& e,
                                                           std::size_t d) {
  WMorphism lhs = add(compose(coderc<Scalar>(x, e),
                              compose(tensor(I(x, e), identity<Scalar>(x, e)), derc<Scalar>(x, e))),
                      compose(coweak<Scalar>(x, e), weak<Scalar>(x, e)));
  return first_difference(lhs, identity<Scalar>(Obj::excl(x), e), d);
}

}  // namespace dill
