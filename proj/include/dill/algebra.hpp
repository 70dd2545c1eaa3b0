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

#ifndef DILL_ALGEBRA_HPP
#define DILL_ALGEBRA_HPP

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dill/error.hpp"

namespace dill {

// Exact rational number. Always kept in lowest terms with a positive
// denominator (GMP canonical form).
class Scalar {
public:
  Scalar() : q_(0) {}
  Scalar(long n) : q_(n) {}  // NOLINT: implicit from integers is intended
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Scalar parse(const std::string& text);
  static Scalar factorial(unsigned n);

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  std::string str() const { return q_.get_str(); }
  std::size_t hash() const;

  Scalar operator+(const Scalar& o) const { return Scalar(mpq_class(q_ + o.q_)); }
  Scalar operator-(const Scalar& o) const { return Scalar(mpq_class(q_ - o.q_)); }
  Scalar operator*(const Scalar& o) const { return Scalar(mpq_class(q_ * o.q_)); }
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }

  bool operator==(const Scalar& o) const { return q_ == o.q_; }
  std::strong_ordering operator<=>(const Scalar& o) const {
    int c = cmp(q_, o.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class SemiringMode { Bool, Nat, Rat };

std::string mode_name(SemiringMode m);
SemiringMode parse_mode(const std::string& name);

// The coefficient semiring. Values are always rationals; the mode restricts
// which rationals are legal and how addition behaves.
struct Semiring {
  SemiringMode mode = SemiringMode::Rat;

  static Semiring rat() { return {SemiringMode::Rat}; }
  static Semiring nat() { return {SemiringMode::Nat}; }
  static Semiring boolean() { return {SemiringMode::Bool}; }

  // Throws ModeViolation if s is not an element of the semiring.
  void check(const Scalar& s) const;
  // Explicit coercion of an arbitrary rational into the semiring. BOOL sends
  // positives to 1, NAT accepts non-negative integers only.
  Scalar coerce(const Scalar& s) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  void require_division() const;
};

// Finite multiset with canonical sorted representation.
template <class T>
class Multiset {
public:
  using Entry = std::pair<T, std::uint64_t>;

  Multiset() = default;
  Multiset(std::initializer_list<T> items) {
    for (const T& t : items) add(t);
  }
  explicit Multiset(const std::vector<T>& items) {
    for (const T& t : items) add(t);
  }

  void add(const T& t, std::uint64_t k = 1) {
    if (k == 0) return;
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), t,
        [](const Entry& e, const T& v) { return e.first < v; });
    if (it != entries_.end() && it->first == t) {
      it->second += k;
    } else {
      entries_.insert(it, Entry{t, k});
    }
  }

  std::uint64_t count(const T& t) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), t,
        [](const Entry& e, const T& v) { return e.first < v; });
    return (it != entries_.end() && it->first == t) ? it->second : 0;
  }

  std::uint64_t size() const {
    std::uint64_t n = 0;
    for (const auto& e : entries_) n += e.second;
    return n;
  }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  std::vector<T> elements() const {
    std::vector<T> out;
    for (const auto& e : entries_)
      for (std::uint64_t i = 0; i < e.second; ++i) out.push_back(e.first);
    return out;
  }

  Multiset operator+(const Multiset& o) const {
    Multiset r = *this;
    for (const auto& e : o.entries_) r.add(e.first, e.second);
    return r;
  }

  bool leq(const Multiset& o) const {
    for (const auto& e : entries_)
      if (o.count(e.first) < e.second) return false;
    return true;
  }

  Multiset minus(const Multiset& o) const {
    if (!o.leq(*this)) throw SubsetViolation("multiset difference");
    Multiset r;
    for (const auto& e : entries_) {
      std::uint64_t k = e.second - o.count(e.first);
      if (k) r.entries_.push_back(Entry{e.first, k});
    }
    return r;
  }

  bool operator==(const Multiset& o) const { return entries_ == o.entries_; }
  bool operator<(const Multiset& o) const { return entries_ < o.entries_; }

private:
  std::vector<Entry> entries_;
};

// Binom(m,p) = prod_a m(a)! / (p(a)! (m(a)-p(a))!).
template <class T>
Scalar multiset_binomial(const Multiset<T>& m, const Multiset<T>& p) {
  if (!p.leq(m)) throw SubsetViolation("binomial: p is not below m");
  mpz_class r = 1;
  for (const auto& e : m.entries()) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), e.second, p.count(e.first));
    r *= b;
  }
  return Scalar(mpq_class(r));
}

// All multisets r over A x B whose row marginal is m and column marginal is p.
template <class A, class B>
std::vector<Multiset<std::pair<A, B>>> enumerate_L(const Multiset<A>& m,
                                                   const Multiset<B>& p) {
  std::vector<Multiset<std::pair<A, B>>> out;
  if (m.size() != p.size()) return out;
  const auto& rows = m.entries();
  const auto& cols = p.entries();
  if (rows.empty()) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint64_t> need(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) need[j] = cols[j].second;
  std::vector<std::vector<std::uint64_t>> choice(
      rows.size(), std::vector<std::uint64_t>(cols.size(), 0));
  // Fill the integer matrix row by row; column j of row i receives k copies.
  std::function<void(std::size_t, std::size_t, std::uint64_t)> go =
      [&](std::size_t i, std::size_t j, std::uint64_t left) {
        if (i == rows.size()) {
          Multiset<std::pair<A, B>> r;
          for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b)
              r.add({rows[a].first, cols[b].first}, choice[a][b]);
          out.push_back(std::move(r));
          return;
        }
        std::uint64_t lo = (j + 1 == cols.size()) ? left : 0;
        std::uint64_t hi = std::min(left, need[j]);
        for (std::uint64_t k = lo; k <= hi; ++k) {
          choice[i][j] = k;
          need[j] -= k;
          if (j + 1 == cols.size())
            go(i + 1, 0, i + 1 < rows.size() ? rows[i + 1].second : 0);
          else
            go(i, j + 1, left - k);
          need[j] += k;
        }
        choice[i][j] = 0;
      };
  go(0, 0, rows[0].second);
  return out;
}

// [p r] = prod_b p(b)! / prod_{a,b} r(a,b)!.
template <class A, class B>
Scalar multiset_multinomial(const Multiset<B>& p,
                            const Multiset<std::pair<A, B>>& r) {
  Multiset<B> col;
  for (const auto& e : r.entries()) col.add(e.first.second, e.second);
  if (!(col == p)) throw MarginalMismatch("column marginal differs from p");
  mpq_class q = 1;
  for (const auto& e : p.entries()) q *= Scalar::factorial(e.second).value();
  for (const auto& e : r.entries()) q /= Scalar::factorial(e.second).value();
  return Scalar(q);
}

// Finitely supported formal linear combination. No zero coefficient is ever
// stored, so structural equality is equality in the free module.
template <class T>
class LinComb {
public:
  using Map = std::map<T, Scalar>;

  LinComb() = default;
  explicit LinComb(const T& t, const Scalar& c = Scalar(1)) {
    if (!c.is_zero()) terms_.emplace(t, c);
  }

  void add(const T& t, const Scalar& c, const Semiring& k = Semiring::rat()) {
    k.check(c);
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, c);
      return;
    }
    Scalar s = k.add(it->second, c);
    if (s.is_zero()) terms_.erase(it);
    else it->second = s;
  }

  void add(const LinComb& o, const Semiring& k = Semiring::rat()) {
    for (const auto& [t, c] : o.terms_) add(t, c, k);
  }

  LinComb scaled(const Scalar& c, const Semiring& k = Semiring::rat()) const {
    k.check(c);
    LinComb r;
    if (c.is_zero()) return r;
    for (const auto& [t, d] : terms_) {
      Scalar s = k.mul(c, d);
      if (!s.is_zero()) r.terms_.emplace(t, s);
    }
    return r;
  }

  template <class F>
  auto map(F f, const Semiring& k = Semiring::rat()) const {
    LinComb<std::decay_t<decltype(f(std::declval<T>()))>> r;
    for (const auto& [t, c] : terms_) r.add(f(t), c, k);
    return r;
  }

  Scalar coefficient(const T& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator<(const LinComb& o) const { return terms_ < o.terms_; }

private:
  Map terms_;
};

template <class T>
LinComb<T> operator+(LinComb<T> a, const LinComb<T>& b) {
  a.add(b);
  return a;
}

}  // namespace dill

#endif
