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

#ifndef DILL_TYPES_HPP
#define DILL_TYPES_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace dill {

// Formulas of linear logic without units.
struct LType {
  enum class Kind { Atom, CoAtom, Tens, Par, Excl, Int };

  Kind kind = Kind::Atom;
  std::string atom;
  std::vector<LType> kids;

  static LType atom_of(std::string a) { return {Kind::Atom, std::move(a), {}}; }
  static LType coatom(std::string a) { return {Kind::CoAtom, std::move(a), {}}; }
  static LType tens(LType a, LType b) {
    return {Kind::Tens, {}, {std::move(a), std::move(b)}};
  }
  static LType par(LType a, LType b) {
    return {Kind::Par, {}, {std::move(a), std::move(b)}};
  }
  static LType excl(LType a) { return {Kind::Excl, {}, {std::move(a)}}; }
  static LType intn(LType a) { return {Kind::Int, {}, {std::move(a)}}; }

  bool binary() const { return kind == Kind::Tens || kind == Kind::Par; }
  const LType& left() const { return kids.at(0); }
  const LType& right() const { return kids.at(1); }
  const LType& body() const { return kids.at(0); }

  bool operator==(const LType&) const = default;
  std::strong_ordering operator<=>(const LType& o) const;
};

LType dual(const LType& a);
std::string print_type(const LType& a);
// Parses the type grammar: a, ~a, A tens B, A par B, !A, ?A, parentheses.
LType parse_type(const std::string& text);
void collect_atoms(const LType& a, std::set<std::string>& out);
std::size_t type_size(const LType& a);

}  // namespace dill

#endif
