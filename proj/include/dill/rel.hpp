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

#ifndef DILL_REL_HPP
#define DILL_REL_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dill/model.hpp"

namespace dill {

// A relation is a morphism with boolean weights.
using RelMorphism = Morphism<bool>;

// der, coder, weak, coweak, contr, cocontr, digg, seely2, seely0, mix0,
// mix2. objs holds X (and Y for seely2 / mix2).
RelMorphism rel_generator(const std::string& kind, const std::vector<Obj>& objs, const Env& e);

RelMorphism rel_excl(const RelMorphism& r);

// Closed form of generalized promotion; f : promotion_source(args) -> B.
RelMorphism rel_promotion(const RelMorphism& f, const std::vector<Obj>& args);

// The graph of r at bound d, in structural order.
std::set<std::pair<PointId, PointId>> graph(const RelMorphism& r, std::size_t d);

// g = {(m + [a], b) | ((m, a), b) in f} for f : !X (x) X -> Y. Throws
// SymmetryViolation unless ((m+[a], a'), b) in f iff ((m+[a'], a), b) in f.
RelMorphism antiderivative_rel(const RelMorphism& f, const Obj& x);

// First violation of the symmetry condition, as (m, a, a', b).
struct RelWitness {
  PointId m, a, a2, b;
};
std::optional<RelWitness> rel_symmetry_witness(const RelMorphism& f, const Obj& x);

}  // namespace dill

#endif
