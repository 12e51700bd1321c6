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

#include <random>

#include "doctest.h"
#include "schubert_chain/poly.hpp"
#include "support.hpp"

using namespace schubert_chain;
using test_support::P;

TEST_SUITE("poly") {
  TEST_CASE("addition examples") {
    CHECK(P("x1+x2") + P("-x2") == P("x1"));
    CHECK(P("x1+x2") + Polynomial() == P("x1+x2"));
    CHECK((P("x1+x2") - P("x1+x2")).is_zero());
    CHECK((P("x1+x2") - P("x1+x2")).terms().empty());
  }

  TEST_CASE("multiplication examples") {
    auto product = P("a^2+ab+b^2") * P("ab+ac+bc");
    CHECK(product == P("a^3b+a^3c+a^2b^2+2a^2bc+ab^3+2ab^2c+b^3c"));
    CHECK(product.size() == 7);  // 9 products, two pairs merge
    CHECK(P("x1*x3") * P("1") == P("x1*x3"));
    CHECK(P("(a+b)") * P("(a-b)") == P("a^2-b^2"));
  }

  TEST_CASE("exact_div examples") {
    auto q = P("a^2b+a^2c+ab^2+abc+b^2c");
    auto quotient = exact_div(q * P("a"), P("a"));
    REQUIRE(quotient);
    CHECK(*quotient == q);
    CHECK(*exact_div(q, P("1")) == q);
    CHECK_FALSE(exact_div(P("a^2+b^2"), P("a+b")));
    CHECK_THROWS_AS(exact_div(q, Polynomial()), std::invalid_argument);
  }

  TEST_CASE("monomial_gcd examples") {
    CHECK(monomial_gcd(P("a^3b")) == Monomial(std::vector<int>{3, 1}));
    CHECK(monomial_gcd(P("a^2b+a^2c+ab^2+abc+b^2c") * P("a")) == Monomial(std::vector<int>{1}));
    CHECK(monomial_gcd(P("a+b")).is_one());
    CHECK_THROWS_AS(monomial_gcd(Polynomial()), std::invalid_argument);
  }

  TEST_CASE("evaluate examples") {
    std::vector<Rational> third{Rational(1, 3), Rational(1, 3)};
    CHECK(evaluate(P("x1+x2"), third) == Rational(2, 3));
    CHECK(evaluate(P("1"), third) == 1);
    std::vector<Rational> quarter(3, Rational(1, 4));
    // a^3 b has total degree 4, so the value is (1/4)^4.
    CHECK(evaluate(P("a^3b"), quarter) == Rational(1, 256));
    CHECK_THROWS_AS(evaluate(P("x3"), third), std::invalid_argument);
  }

  TEST_CASE("homogeneity and coefficient sign examples") {
    CHECK(homogeneous_degree(P("x1+x2")) == 1);
    CHECK(homogeneous_degree(P("1")) == 0);
    CHECK_FALSE(homogeneous_degree(P("x1+x1*x2")));
    CHECK(has_nonnegative_integer_coeffs(P("2a+b")));
    CHECK_FALSE(has_nonnegative_integer_coeffs(P("a-b")));
    CHECK_FALSE(has_nonnegative_integer_coeffs(P("1/2a")));
  }

  TEST_CASE("min_monomial_lex examples") {
    auto [m1, c1] = min_monomial_lex(P("ab+ac+bc"));
    CHECK(m1.exponents() == std::vector<int>{0, 1, 1});
    CHECK(c1 == 1);
    auto [m2, c2] = min_monomial_lex(P("-3a^2b"));
    CHECK(m2.exponents() == std::vector<int>{2, 1});
    CHECK(c2 == -3);
    auto [m3, c3] = min_monomial_lex(P("a^2+ab+b^2"));
    CHECK(m3.exponents() == std::vector<int>{0, 2});
    CHECK_THROWS_AS(min_monomial_lex(Polynomial()), std::invalid_argument);
  }

  TEST_CASE("printing and parsing") {
    CHECK(P("x1^2+x1*x2+x2^2").to_string() == "x1^2+x1*x2+x2^2");
    CHECK(P("2a^2b").to_string(VariableNames::kLetters) == "2*a^2*b");
    CHECK(Polynomial().to_string() == "0");
    CHECK(P("1/2x1 - 3/4").to_string() == "1/2*x1-3/4");
    CHECK(P("(x1+1)^3") == P("x1^3+3x1^2+3x1+1"));
    CHECK_THROWS_AS(P("x1+"), std::invalid_argument);
    CHECK_THROWS_AS(P("x0"), std::invalid_argument);
    CHECK_THROWS_AS(P("(x1"), std::invalid_argument);
  }

  TEST_CASE("serialization round-trip on the table polynomials") {
    const char* table[] = {
        "(a^2+ab+b^2)(ab+ac+bc)", "(a^2+ab+b^2)ab", "(a+b+c)a^2b",
        "(a^2b+a^2c+ab^2+abc+b^2c)a", "(ab+ac+bc)a^2", "a^3b", "a^6b^3c", "x1+x2", "x1"};
    for (const char* text : table) {
      auto p = P(text);
      CHECK(P(p.to_string()) == p);
      CHECK(P(p.to_string(VariableNames::kLetters)) == p);
      CHECK(polynomial_from_json(to_json(p)) == p);
    }
    auto j = to_json(P("2x1-1/3"));
    CHECK(j[0]["exps"] == nlohmann::json::array({1}));
    CHECK(j[0]["coef"] == "2/1");
    CHECK(j[1]["coef"] == "-1/3");
  }

  TEST_CASE("terms are in descending graded lex order") {
    auto p = P("x2^3 + x1 + x1^2*x2 + 5 + x1*x2^2");
    auto terms = p.terms();
    for (std::size_t i = 1; i < terms.size(); ++i) CHECK(grlex_less(terms[i].first, terms[i - 1].first));
  }

  TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      auto p = test_support::random_polynomial(rng, 3, 3, 4);
      auto q = test_support::random_polynomial(rng, 3, 3, 4);
      auto r = test_support::random_polynomial(rng, 3, 3, 4);
      CHECK(p + q == q + p);
      CHECK(p * q == q * p);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p - p == Polynomial());
    }
  }

  TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      auto p = test_support::random_polynomial(rng, 3, 3, 4);
      auto d = test_support::random_polynomial(rng, 3, 2, 3);
      if (d.is_zero()) continue;
      auto q = exact_div(p * d, d);
      REQUIRE(q);
      CHECK(*q == p);
    }
  }

  TEST_CASE("monomial gcd is multiplicative in a monomial factor") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      auto p = test_support::random_polynomial(rng, 3, 3, 4);
      if (p.is_zero()) continue;
      Monomial m(std::vector<int>{trial % 3, (trial / 3) % 2, 1});
      CHECK(monomial_gcd(p.times(m)) == m * monomial_gcd(p));
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      auto p = test_support::random_polynomial(rng, 3, 3, 4);
      auto q = test_support::random_polynomial(rng, 3, 3, 4);
      auto x = test_support::random_point(rng, 3);
      CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));
      CHECK(evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x));
    }
  }

  TEST_CASE("monomial limits") {
    CHECK_THROWS_AS(Monomial(std::vector<int>{-1}), std::invalid_argument);
    CHECK_THROWS_AS(Monomial(std::vector<int>{256}), std::invalid_argument);
    CHECK_THROWS(Monomial::variable(0, 200) * Monomial::variable(0, 100));
  }

  TEST_CASE("variable swap and primitive part") {
    CHECK(P("x1^2x2+x3").swap_variables(0, 1) == P("x2^2x1+x3"));
    CHECK(primitive_part(P("-4x1+6x2")) == P("2x1-3x2"));
    CHECK(primitive_part(P("1/2x1+1/3")) == P("3x1+2"));
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(rational_to_fraction_string(Rational(5)) == "5/1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  }
}
