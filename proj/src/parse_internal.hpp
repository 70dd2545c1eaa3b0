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

#ifndef DILL_SRC_PARSE_INTERNAL_HPP
#define DILL_SRC_PARSE_INTERNAL_HPP

#include "dill/algebra.hpp"
#include "dill/syntax.hpp"
#include "dill/types.hpp"
#include "lexer.hpp"

namespace dill::detail {

bool is_lower_ident(const std::string& s);
LType parse_type_prefix(Lexer& lx);
LType parse_type_expr(Lexer& lx);
// Reads an optionally signed rational "n" or "n/m".
Scalar parse_scalar(Lexer& lx);
Net parse_net_expr(Lexer& lx, std::size_t width_hint);

}  // namespace dill::detail

#endif
