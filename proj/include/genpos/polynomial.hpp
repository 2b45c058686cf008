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

#ifndef GENPOS_POLYNOMIAL_HPP_
#define GENPOS_POLYNOMIAL_HPP_

#include <array>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "genpos/numbers.hpp"

namespace genpos {

/// A power product of the indeterminates t_1, t_2, ...
///
/// Exponents are stored sparsely as (variable index, exponent) pairs with
/// strictly increasing 1-based indices and every exponent >= 1; the empty
/// factor list is the multiplicative unit.
class Monomial {
 public:
  using Factor = std::pair<int, int>;  // (variable index, exponent)

  Monomial() = default;

  // Factors may arrive in any order but indices must be distinct, >= 1,
  // and exponents >= 1. Throws std::invalid_argument otherwise.
  explicit Monomial(std::vector<Factor> factors);

  static Monomial variable(int index, int exponent = 1);

  bool is_unit() const { return factors_.empty(); }
  int degree() const;
  int exponent_of(int index) const;
  const std::vector<Factor>& factors() const { return factors_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order: lower total degree first; on equal degree the
// monomial with the smaller exponent at the first differing variable index
// (scanning t_1, t_2, ...) is smaller. This is the canonical order behind
// term serialization, with terms emitted largest first.
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_less(b, a);
  }
};

/// Sparse multivariate polynomial over arbitrary-precision integers.
///
/// Always canonical: terms are sorted descending in graded-lex order and no
/// stored coefficient is zero, so operator== is structural equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Int>;

  Polynomial() = default;  // the zero polynomial

  static Polynomial constant(Int c);
  static Polynomial variable(int index);
  // Canonicalizes: merges duplicate monomials, drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  Int coefficient(const Monomial& m) const;
  const std::vector<Term>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

// Exact value of p at the assignment. Every variable appearing in p must be
// assigned; throws std::invalid_argument on a missing variable.
Rational evaluate(const Polynomial& p, const std::map<int, Rational>& assignment);

using PolyMatrix3 = std::array<std::array<Polynomial, 3>, 3>;

// Determinant by direct cofactor expansion; exact over the ring.
Polynomial det3(const PolyMatrix3& m);

// Serialization: a polynomial is a JSON array of terms in canonical order,
// each term {"coeff": <decimal string>, "vars": [[index, exponent], ...]}
// with vars sorted by index. Round-trips bit-exactly.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace genpos

#endif  // GENPOS_POLYNOMIAL_HPP_
