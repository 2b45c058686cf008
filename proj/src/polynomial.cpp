// Copyright 2026 The genpos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "genpos/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace genpos {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& [index, exp] = factors_[k];
    if (index < 1) throw std::invalid_argument("Monomial: variable index must be >= 1");
    if (exp < 1) throw std::invalid_argument("Monomial: exponent must be >= 1");
    if (k > 0 && factors_[k - 1].first == index)
      throw std::invalid_argument("Monomial: duplicate variable index");
  }
}

Monomial Monomial::variable(int index, int exponent) {
  return Monomial({{index, exponent}});
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [index, exp] : factors_) d += exp;
  return d;
}

int Monomial::exponent_of(int index) const {
  for (const auto& [i, e] : factors_)
    if (i == index) return e;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      r.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      r.factors_.push_back(*ib++);
    } else {
      r.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia, ++ib;
    }
  }
  r.factors_.insert(r.factors_.end(), ia, a.factors_.end());
  r.factors_.insert(r.factors_.end(), ib, b.factors_.end());
  return r;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Equal degree: scan variables in increasing index; first difference decides.
  auto ia = a.factors().begin(), ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (ia->first != ib->first) {
      // The monomial owning the smaller index has positive exponent there,
      // the other has zero, so it is the larger one.
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia, ++ib;
  }
  return ia == a.factors().end() && ib != b.factors().end();
}

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(Monomial{}, std::move(c));
  return p;
}

Polynomial Polynomial::variable(int index) {
  Polynomial p;
  p.terms_.emplace_back(Monomial::variable(index), 1);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Int, GradedLexGreater> acc;
  for (auto& [m, c] : terms) acc[m] += c;
  Polynomial p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return graded_lex_less(key, t.first); });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto ia = terms_.cbegin(), ib = o.terms_.cbegin();
  while (ia != terms_.cend() && ib != o.terms_.cend()) {
    if (graded_lex_less(ib->first, ia->first)) {
      merged.push_back(*ia++);
    } else if (graded_lex_less(ia->first, ib->first)) {
      merged.push_back(*ib++);
    } else {
      Int c = ia->second + ib->second;
      if (c != 0) merged.emplace_back(ia->first, std::move(c));
      ++ia, ++ib;
    }
  }
  merged.insert(merged.end(), ia, terms_.cend());
  merged.insert(merged.end(), ib, o.terms_.cend());
  terms_ = std::move(merged);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::map<Monomial, Int, GradedLexGreater> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  Polynomial p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Rational evaluate(const Polynomial& p, const std::map<int, Rational>& assignment) {
  auto power = [](const Rational& base, int exp) {
    Rational r = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      if (e > 1) b *= b;
    }
    return r;
  };
  Rational value = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [index, exp] : m.factors()) {
      auto it = assignment.find(index);
      if (it == assignment.end())
        throw std::invalid_argument("evaluate: no value assigned to t_" +
                                    std::to_string(index));
      term *= power(it->second, exp);
    }
    value += term;
  }
  return value;
}

Polynomial det3(const PolyMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [index, exp] : m.factors()) vars.push_back({index, exp});
    terms.push_back({{"coeff", c.str()}, {"vars", vars}});
  }
  return terms;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected a JSON array of terms");
  std::vector<Polynomial::Term> terms;
  for (const auto& t : j) {
    Int coeff(t.at("coeff").get<std::string>());
    std::vector<Monomial::Factor> factors;
    for (const auto& v : t.at("vars"))
      factors.emplace_back(v.at(0).get<int>(), v.at(1).get<int>());
    terms.emplace_back(Monomial(std::move(factors)), std::move(coeff));
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace genpos
