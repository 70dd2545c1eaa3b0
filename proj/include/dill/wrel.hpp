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

#ifndef DILL_WREL_HPP
#define DILL_WREL_HPP

#include <optional>
#include <string>
#include <vector>

#include "dill/algebra.hpp"
#include "dill/model.hpp"

namespace dill {

using WMorphism = Morphism<Scalar>;
using WVector = Row<Scalar>;

// Same kinds as rel_generator.
WMorphism w_generator(const std::string& kind, const std::vector<Obj>& objs, const Env& e);

WMorphism w_excl(const WMorphism& m);

// x^! : the monomials x^m for every m over the support of x within bound.
WVector w_prom_vector(const WVector& x, const Env& e);
// Fun(M)(x)_b = sum_m M_{m,b} x^m, for M : !X -> Y.
WVector w_fun(const WMorphism& m, const WVector& x);
// M x for M : X -> Y.
WVector w_apply(const WMorphism& m, const WVector& x);

// Generalized promotion: compositional, and by the closed form.
WMorphism w_promotion(const WMorphism& f, const std::vector<Obj>& args);
WMorphism w_promotion_closed(const WMorphism& f, const std::vector<Obj>& args);

// X^(x)n: 1, X, X (x) X, (X (x) X) (x) X, ...
Obj tensor_power(const Obj& x, std::size_t n);

// c^n : !X -> (!X)^(x)n, d^n : !X -> X^(x)n and dbar^n : X^(x)n -> !X.
WMorphism contr_pow(const Obj& x, std::size_t n, const Env& e);
WMorphism d_pow(const Obj& x, std::size_t n, const Env& e);
WMorphism dbar_pow(const Obj& x, std::size_t n, const Env& e);
// Iterated coderivative !X (x) X^(x)n -> !X (left nested).
WMorphism coderc_pow(const Obj& x, std::size_t n, const Env& e);

// The operators below divide, so they need the rational semiring.
WMorphism taylor_T(const Obj& x, std::size_t n, const Env& e, const Semiring& k = Semiring::rat());
WMorphism psi(const Obj& x, const Env& e);
WMorphism J(const Obj& x, const Env& e);
WMorphism I(const Obj& x, const Env& e, const Semiring& k = Semiring::rat());

// Least n <= maxn with f o coderc^(n+1) = 0 for f : !X -> Y. Throws
// DegreeExceedsBound.
std::size_t poly_degree(const WMorphism& f, const Obj& x, std::size_t maxn);
// g o f = sum_i (1/i!) g o dbar^i o f^(x)i o c^i, for f : !X -> Y, g : !Y -> Z.
WMorphism poly_compose(const WMorphism& g, const WMorphism& f, const Obj& x, const Obj& y,
                       const Semiring& k = Semiring::rat());

// f^0 = cw o w, f^(n+1) = coderc o (f^n (x) f) o derc, for f : X -> Y.
WMorphism quasifunctor_pow(const WMorphism& f, std::size_t n);

// For f : !X (x) X -> Y with f o (coderc (x) Id) o sigma23 = f o (coderc (x) Id),
// g = f o (I (x) Id) o derc satisfies g o coderc = f.
WMorphism poincare_antiderivative(const WMorphism& f, const Obj& x,
                                  const Semiring& k = Semiring::rat());
// The two sides of the symmetry condition.
WMorphism poincare_lhs(const WMorphism& f, const Obj& x);
WMorphism poincare_rhs(const WMorphism& f, const Obj& x);

// coderc o (I (x) Id) o derc + cw o w = Id on !X; the first violating entry.
std::optional<Mismatch<Scalar>> fundamental_theorem_check(const Obj& x, const Env& e,
                                                           std::size_t d);

}  // namespace dill

#endif
