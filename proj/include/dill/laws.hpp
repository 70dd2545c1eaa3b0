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

// Executable law suites over both models. An identity lhs = rhs is checked
// entrywise at degree d with generators truncated at bound(d), and both
// sides are recomputed at bound(d + 2) to make sure the truncation did not
// hide any entry.

#ifndef DILL_LAWS_HPP
#define DILL_LAWS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dill/model.hpp"

namespace dill {

struct LawResult {
  std::string name;
  bool ok = true;
  std::string detail;  // first violating entry
};

template <class K>
using LawSides = std::function<std::pair<Morphism<K>, Morphism<K>>(const Env&)>;

template <class K>
LawResult check_law(const std::string& name, const LawSides<K>& sides, std::size_t d,
                    const Space& s, std::size_t (*bound)(std::size_t));

// X with n points a, b, c, ...
Obj web_object(const std::string& name, std::size_t n);

template <class K> std::vector<LawResult> bialgebra_laws(const Obj& x, std::size_t d);
template <class K> std::vector<LawResult> comonad_laws(const Obj& x, std::size_t d);
template <class K> std::vector<LawResult> seely_laws(const Obj& x, const Obj& y, std::size_t d);
template <class K> std::vector<LawResult> leibniz_laws(const Obj& x, std::size_t d);
template <class K> std::vector<LawResult> schwarz_laws(const Obj& x, std::size_t d);

// Weighted model only.
std::vector<LawResult> taylor_laws(const Obj& x, std::size_t d, std::uint64_t seed,
                                   std::size_t samples);
std::vector<LawResult> antiderivative_laws(const Obj& x, std::size_t d);
std::vector<LawResult> poincare_laws(const Obj& x, std::size_t d, std::uint64_t seed,
                                     std::size_t samples);
std::vector<LawResult> ftc_laws(const Obj& x, std::size_t d);
std::vector<LawResult> quasifunctor_laws(const Obj& x, const Obj& y, const Obj& z,
                                         std::size_t d, std::uint64_t seed, std::size_t samples);
std::vector<LawResult> functor_laws(const Obj& x, const Obj& y, std::size_t d,
                                    std::uint64_t seed, std::size_t samples);

// Relational model only: dbar o d, J = Id and the antiderivative.
std::vector<LawResult> rel_antiderivative_laws(const Obj& x, std::size_t d, std::uint64_t seed,
                                               std::size_t samples);

struct LawConfig {
  std::string suite;
  std::string model = "both";  // rel, wrel or both
  std::size_t web = 1;
  std::size_t degree = 2;
  std::uint64_t seed = 1;
  std::size_t samples = 20;
};

const std::vector<std::string>& law_suite_names();

// Results are prefixed with the model ("rel/..." or "wrel/..."). Throws
// UsageError for an unknown suite or a suite the model does not have.
std::vector<LawResult> run_law_suite(const LawConfig& c);

}  // namespace dill

#endif
