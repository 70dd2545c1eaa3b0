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

#ifndef DILL_TYPING_HPP
#define DILL_TYPING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dill/error.hpp"
#include "dill/syntax.hpp"
#include "dill/types.hpp"

namespace dill {

using Context = std::map<Var, LType>;

class TypeError : public Error {
public:
  enum class Code { TypeMismatch, UnboundVar, AmbiguousType, WidthMismatch, CutTypeClash };

  TypeError(Code code, std::string position, const std::string& message);

  Code code() const { return code_; }
  const std::string& position() const { return position_; }

private:
  Code code_;
  std::string position_;
};

const char* type_error_name(TypeError::Code c);

// Adds ~x : dual(A) for every x : A whose dual is missing. Throws
// TypeMismatch if a present dual disagrees.
Context complete_duals(const Context& phi);

// Phi |-0 t : A. Every variable of t must be in phi; w and cw without an
// annotation must be pinned by the surrounding constraints.
LType typecheck_tree(const Context& phi, const Tree& t);

struct TypecheckOptions {
  // Unpinned w / cw types are accepted when their choice is irrelevant.
  bool allow_ambiguous = false;
};

void typecheck_net(const Context& phi, const Net& p, const std::vector<LType>& gamma,
                   TypecheckOptions opts = {});

// Result of inference on one variable scope.
struct Inference {
  Context phi;                                   // extends the seed
  std::vector<LType> gamma;                      // conclusion types
  std::map<const TreeNode*, LType> node_types;   // every node of the scope
};

// Infers types for the outer scope of p. Variables absent from the seed get
// fresh unknowns; unknown conclusions may be left as nullopt. Unknowns that
// stay unconstrained are instantiated with the atom `ground`.
Inference infer_simple(const SimpleNet& p, const std::vector<std::optional<LType>>& gamma,
                       const Context& seed, const std::string& ground = "o");

// Inference for a sum. Conclusion types are shared by all support
// elements; variables are local to each element (bound names are only
// meaningful up to alpha), so every element gets its own context extending
// the seed.
struct NetInference {
  std::vector<LType> gamma;
  std::vector<Inference> elements;  // in support order
};

NetInference infer_net(const Net& p, const std::vector<std::optional<LType>>& gamma,
                       const Context& seed, const std::string& ground = "o");

}  // namespace dill

#endif
