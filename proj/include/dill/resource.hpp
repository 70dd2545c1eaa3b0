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


// Taylor expansion of differential terms into resource terms, and
// antiderivatives of resource combinations.

#ifndef DILL_RESOURCE_HPP
#define DILL_RESOURCE_HPP

#include <string>

#include "dill/dterm.hpp"
#include "dill/rterm.hpp"

namespace dill {

// Every application node (D^k M . N1..Nk) R becomes
// sum_{p <= P} 1/p! <M*>[N1*, .., Nk*, R*, .., R*] with p copies of R*. A
// derivative that is not applied is eta-expanded first.
RComb taylor_expand(const DComb& m, std::size_t multiplicity);

// I_x: divides each simple term s by deg_x(s) + 1.
RComb integrate(const RComb& u, const std::string& x);

// Throws NotLinearInH unless every simple term of u has exactly one free h,
// and SymmetryViolation unless du/dx . h' = d(u[h'/h])/dx . h.
void check_antiderivative_hypotheses(const RComb& u, const std::string& x, const std::string& h);

// v = I_x(u)[x/h], after checking the hypotheses.
RComb antiderive_resource(const RComb& u, const std::string& x, const std::string& h);

struct AntiderivativeCheck {
  bool ok = false;
  RComb v;
  RComb derivative;  // dv/dx . h
};

// Computes v and compares dv/dx . h with u. Hypothesis failures throw.
AntiderivativeCheck antiderivative_check(const RComb& u, const std::string& x,
                                         const std::string& h);

}  // namespace dill

#endif
