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

#include "dill/algebra.hpp"

#include <cctype>

namespace dill {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ModeViolation("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ModeViolation("empty scalar");
  std::size_t slash = t.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ModeViolation("malformed scalar '" + text + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw ModeViolation("zero denominator");
  return Scalar(mpq_class(n, d));
}

Scalar Scalar::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(mpq_class(f));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw ModeViolation("division by zero");
  return Scalar(mpq_class(q_ / o.q_));
}

std::size_t Scalar::hash() const {
  std::size_t h = 0;
  const __mpz_struct* n = q_.get_num_mpz_t();
  const __mpz_struct* d = q_.get_den_mpz_t();
  for (int i = 0; i < std::abs(n->_mp_size); ++i)
    h = h * 1000003u ^ static_cast<std::size_t>(n->_mp_d[i]);
  h ^= static_cast<std::size_t>(n->_mp_size) * 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < d->_mp_size; ++i)
    h = h * 998244353u ^ static_cast<std::size_t>(d->_mp_d[i]);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

std::string mode_name(SemiringMode m) {
  switch (m) {
    case SemiringMode::Bool: return "bool";
    case SemiringMode::Nat: return "nat";
    case SemiringMode::Rat: return "rat";
  }
  return "rat";
}

SemiringMode parse_mode(const std::string& name) {
  if (name == "bool" || name == "BOOL") return SemiringMode::Bool;
  if (name == "nat" || name == "NAT") return SemiringMode::Nat;
  if (name == "rat" || name == "RAT") return SemiringMode::Rat;
  throw UsageError("unknown semiring '" + name + "'");
}

void Semiring::check(const Scalar& s) const {
  switch (mode) {
    case SemiringMode::Rat: return;
    case SemiringMode::Nat:
      if (s.is_negative() || !s.is_integer())
        throw ModeViolation(s.str() + " is not a natural number");
      return;
    case SemiringMode::Bool:
      if (!s.is_zero() && !s.is_one())
        throw ModeViolation(s.str() + " is not a boolean");
      return;
  }
}

Scalar Semiring::coerce(const Scalar& s) const {
  switch (mode) {
    case SemiringMode::Rat: return s;
    case SemiringMode::Nat:
      check(s);
      return s;
    case SemiringMode::Bool:
      if (s.is_negative())
        throw NegativeCoefficient(s.str() + " cannot be read as a boolean");
      return s.is_zero() ? Scalar(0) : Scalar(1);
  }
  return s;
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const {
  if (mode == SemiringMode::Bool)
    return (a.is_zero() && b.is_zero()) ? Scalar(0) : Scalar(1);
  return a + b;
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const { return a * b; }

void Semiring::require_division() const {
  if (mode != SemiringMode::Rat)
    throw ModeViolation("operation needs division, semiring is " +
                        mode_name(mode));
}

}  // namespace dill
