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

#include "kasteleyn/ring.h"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "kasteleyn/error.h"

namespace kasteleyn {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [id, exponent] : factors) {
    if (exponent == 0) continue;
    if (!factors_.empty() && factors_.back().first == id) {
      factors_.back().second += exponent;
    } else {
      factors_.emplace_back(id, exponent);
    }
    degree_ += exponent;
  }
}

Monomial Monomial::Variable(VarId id, std::uint32_t exponent) {
  return Monomial({{id, exponent}});
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering CompareGradedLex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  // Equal total degree means neither list can be a proper prefix of the
  // other, so the walk always stops at a differing factor or at the end.
  for (std::size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].first != fb[k].first) {
      // The side holding the smaller id has a positive exponent where the
      // other has zero.
      return fa[k].first < fb[k].first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
    if (auto c = fa[k].second <=> fb[k].second; c != 0) return c;
  }
  return fa.size() <=> fb.size();
}

Polynomial::Polynomial(BigInt constant) {
  if (constant != 0) terms_.emplace(Monomial(), std::move(constant));
}

Polynomial Polynomial::Variable(VarId id) {
  return Term(BigInt(1), Monomial::Variable(id));
}

Polynomial Polynomial::Term(BigInt coefficient, Monomial monomial) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace(std::move(monomial), std::move(coefficient));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigInt Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [monomial, coefficient] : terms_) {
    for (const auto& factor : monomial.factors()) out.insert(factor.first);
  }
  return out;
}

BigInt Polynomial::Evaluate(const IntegerAssignment& values) const {
  BigInt total = 0;
  for (const auto& [monomial, coefficient] : terms_) {
    BigInt term = coefficient;
    for (const auto& [id, exponent] : monomial.factors()) {
      auto it = values.find(id);
      if (it == values.end()) {
        throw Error(ErrorCode::kMissingIndeterminate,
                    "no value for x" + std::to_string(id));
      }
      term *= boost::multiprecision::pow(it->second, exponent);
    }
    total += term;
  }
  return total;
}

void Polynomial::AddTerm(const Monomial& monomial, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [monomial, coefficient] : other.terms_) {
    AddTerm(monomial, coefficient);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [monomial, coefficient] : other.terms_) {
    AddTerm(monomial, -coefficient);
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.AddTerm(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial operator-(Polynomial a) {
  for (auto& [monomial, coefficient] : a.terms_) coefficient = -coefficient;
  return a;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [monomial, coefficient] : terms_) {
    const bool negative = coefficient < 0;
    BigInt magnitude = negative ? BigInt(-coefficient) : coefficient;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    bool need_star = false;
    if (magnitude != 1 || monomial.is_one()) {
      out += magnitude.str();
      need_star = true;
    }
    for (const auto& [id, exponent] : monomial.factors()) {
      if (need_star) out += '*';
      out += 'x';
      out += std::to_string(id);
      if (exponent != 1) {
        out += '^';
        out += std::to_string(exponent);
      }
      need_star = true;
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }
  }

  Polynomial Parse() {
    if (text_.empty()) Fail("empty input");
    Polynomial out;
    bool first = true;
    while (pos_ < text_.size()) {
      BigInt sign = 1;
      if (Peek() == '+' || Peek() == '-') {
        if (Peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        Fail("expected '+' or '-'");
      }
      first = false;
      out += ParseTerm() * Polynomial(sign);
    }
    return out;
  }

 private:
  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "polynomial '" + text_ + "' at offset " +
                                       std::to_string(pos_) + ": " + what);
  }

  std::string ReadDigits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;
    if (start == pos_) Fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t ReadSmall() {
    std::string digits = ReadDigits();
    if (digits.size() > 9) Fail("number too large");
    return std::stoull(digits);
  }

  Polynomial ParseTerm() {
    BigInt coefficient = 1;
    std::vector<Monomial::Factor> factors;
    while (true) {
      if (Peek() == 'x') {
        ++pos_;
        auto id = static_cast<VarId>(ReadSmall());
        std::uint32_t exponent = 1;
        if (Peek() == '^') {
          ++pos_;
          exponent = static_cast<std::uint32_t>(ReadSmall());
        }
        factors.emplace_back(id, exponent);
      } else {
        coefficient *= BigInt(ReadDigits());
      }
      if (Peek() != '*') break;
      ++pos_;
    }
    return Polynomial::Term(coefficient, Monomial(std::move(factors)));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::Parse(std::string_view text) {
  return PolynomialParser(text).Parse();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.ToString();
}

}  // namespace kasteleyn
