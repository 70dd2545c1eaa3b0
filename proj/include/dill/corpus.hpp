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


// Seeded generators for test corpora: derivable nets built from random
// derivations, simply typed differential terms, and resource terms.

#ifndef DILL_CORPUS_HPP
#define DILL_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dill/dterm.hpp"
#include "dill/logic.hpp"
#include "dill/rterm.hpp"

namespace dill {

struct NetCorpusOptions {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_constructors = 12;
  // Minimum numbers of nets with a box-cd (the chain rule) and a box-box
  // redex.
  std::size_t chain_rule = 10;
  std::size_t box_box = 10;
  std::size_t max_attempts = 200000;
};

struct CorpusNet {
  Net net;
  std::vector<LType> gamma;
  Deriv derivation;
};

// Every net has at least one redex, no box inside a box, and atom o only.
std::vector<CorpusNet> generate_net_corpus(const NetCorpusOptions& o = {});

// One net per line.
std::string print_net_corpus(const std::vector<CorpusNet>& c);
std::vector<Net> parse_net_corpus(const std::string& text);

// Simply typed over one base type, so every term is strongly normalizing.
// Free variables are f : o -> o, g : (o -> o) -> o and a, b : o.
std::vector<DComb> generate_dterm_corpus(std::uint64_t seed, std::size_t count,
                                         std::size_t max_size = 18);

// Terms with at least one redex whose bunches have at most max_bunch
// elements.
std::vector<RComb> generate_rterm_corpus(std::uint64_t seed, std::size_t count,
                                         std::size_t max_bunch = 4);

}  // namespace dill

#endif
