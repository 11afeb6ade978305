// Copyright 2026 The Kasteleyn Signs Authors.
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

// Exact arithmetic in Z[x_1, x_2, ...]. Indeterminate ids coincide with edge
// ids, so the default weight of edge e is the polynomial x<e>.

#ifndef KASTELEYN_RING_H_
#define KASTELEYN_RING_H_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kasteleyn {

using BigInt = boost::multiprecision::cpp_int;
using VarId = std::uint32_t;

// Product of indeterminates with positive exponents, stored sorted by id.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  // Factors may come in any order and may repeat; they are canonicalized.
  explicit Monomial(std::vector<Factor> factors);

  static Monomial Variable(VarId id, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

// Graded lexicographic order with x1 > x2 > ... ; a larger monomial prints
// first.
std::strong_ordering CompareGradedLex(const Monomial& a, const Monomial& b);

struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return CompareGradedLex(a, b) > 0;
  }
};

using IntegerAssignment = std::map<VarId, BigInt>;

// Sparse polynomial with arbitrary-precision integer coefficients. No stored
// coefficient is ever zero; the zero polynomial has no terms.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, GradedLexDescending>;

  Polynomial() = default;
  Polynomial(BigInt constant);  // NOLINT: implicit on purpose, 2 * x1 reads well.
  Polynomial(long long constant) : Polynomial(BigInt(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(BigInt(constant)) {}        // NOLINT

  static Polynomial Variable(VarId id);
  static Polynomial Term(BigInt coefficient, Monomial monomial);

  // Parses the textual form produced by ToString(). Whitespace is ignored,
  // a coefficient may appear anywhere among the factors of a term, and "0"
  // denotes zero. Throws Error(kParse).
  static Polynomial Parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the monomial 1.
  BigInt constant_term() const;
  std::set<VarId> variables() const;

  // Throws Error(kMissingIndeterminate) if `values` is not total on
  // variables().
  BigInt Evaluate(const IntegerAssignment& values) const;

  // Canonical text: terms in descending graded-lex order, e.g. "x1^2-1",
  // "-2*x1+x2", "0".
  std::string ToString() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void AddTerm(const Monomial& monomial, const BigInt& coefficient);

  TermMap terms_;
};

inline Polynomial Neg(const Polynomial& a) { return -a; }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace kasteleyn

#endif  // KASTELEYN_RING_H_
