// Copyright 2026 The schubert-chain Authors.
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

#ifndef SCHUBERT_CHAIN_POLY_HPP
#define SCHUBERT_CHAIN_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace schubert_chain {

using Integer = mpz_class;
/// Exact rational scalar; gmp keeps it reduced with a positive denominator.
using Rational = mpq_class;

inline constexpr int kMaxVariables = 16;

/// Exponent vector over x_1..x_16 (x_1 is index 0). Unused trailing
/// variables are zero, so equality is canonical.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  /// Throws std::invalid_argument on negative exponents, exponents > 255 or
  /// more than kMaxVariables nonzero positions.
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int index, int power = 1);

  int exponent(int index) const { return exps_[index]; }
  int degree() const;
  /// One past the highest variable index with a nonzero exponent.
  int num_variables() const;
  /// Exponents with trailing zeros trimmed.
  std::vector<int> exponents() const;
  bool is_one() const { return num_variables() == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial swapped(int i, int j) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_;
};

/// Graded lexicographic order (total degree, then x_1 most significant).
bool grlex_less(const Monomial& a, const Monomial& b);
/// Pure lexicographic order, x_1 most significant.
bool lex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class VariableNames {
  kIndexed,  // x1, x2, ...
  kLetters,  // a, b, c, d for x1..x4; x5 onwards stay indexed
};

/// Sparse polynomial in x_1, x_2, ... with rational coefficients.
///
/// Terms are kept sorted by descending graded lexicographic order with no
/// zero coefficients, so two equal polynomials have identical term lists.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(int index, int power = 1);
  static Polynomial term(const Monomial& m, const Rational& c = 1);
  /// Sorts, merges duplicates and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);

  /// Accepts sums/differences of products of numbers (integer or p/q),
  /// variables (x<k> or the aliases a, b, c, d), parenthesized
  /// subexpressions and integer powers. `*` between factors is optional.
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  /// Greatest term in graded lex order. Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  int num_variables() const;
  /// Highest total degree, -1 for zero.
  int degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m) const;
  /// Exchanges x_{i+1} and x_{j+1} (0-based indices).
  Polynomial swap_variables(int i, int j) const;

  std::string to_string(VariableNames names = VariableNames::kIndexed) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// q with q*d == p, or nullopt when d does not divide p. Throws
/// std::invalid_argument when d is zero.
std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& d);

/// Componentwise minimum exponent over all terms. Throws on zero.
Monomial monomial_gcd(const Polynomial& p);

/// Exact value at `point` (point[k] is the value of x_{k+1}). Throws when a
/// variable used by p has no value.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Common total degree of all terms; nullopt for mixed degrees. Zero is
/// treated as homogeneous of degree 0.
std::optional<int> homogeneous_degree(const Polynomial& p);
bool has_nonnegative_integer_coeffs(const Polynomial& p);

/// Lex-minimal term (x_1 most significant). Throws on zero.
Polynomial::Term min_monomial_lex(const Polynomial& p);

/// p divided by its rational content, sign chosen so the leading
/// coefficient is positive. Zero maps to zero.
Polynomial primitive_part(const Polynomial& p);

std::string monomial_to_string(const Monomial& m,
                               VariableNames names = VariableNames::kIndexed);
/// "num/den", always with an explicit denominator.
std::string rational_to_fraction_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// [{"exps": [...], "coef": "num/den"}, ...] in canonical term order.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_POLY_HPP
