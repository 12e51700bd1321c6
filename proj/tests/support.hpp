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

#ifndef SCHUBERT_CHAIN_TESTS_SUPPORT_HPP
#define SCHUBERT_CHAIN_TESTS_SUPPORT_HPP

#include <random>
#include <string_view>
#include <vector>

#include "schubert_chain/perm.hpp"
#include "schubert_chain/poly.hpp"

namespace test_support {

using schubert_chain::Permutation;
using schubert_chain::Polynomial;
using schubert_chain::Rational;

inline Polynomial P(std::string_view text) { return Polynomial::parse(text); }
inline Permutation W(std::string_view text) { return Permutation::parse(text); }

// Small random polynomial with integer coefficients in [-3, 3].
inline Polynomial random_polynomial(std::mt19937& rng, int variables, int max_degree,
                                    int terms) {
  std::uniform_int_distribution<int> exponent(0, max_degree);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  std::vector<Polynomial::Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(variables);
    int budget = max_degree;
    for (auto& e : exps) {
      e = std::min(budget, exponent(rng));
      budget -= e;
    }
    out.emplace_back(schubert_chain::Monomial(exps), Rational(coefficient(rng)));
  }
  return Polynomial::from_terms(std::move(out));
}

inline std::vector<Rational> random_point(std::mt19937& rng, int variables) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 17);
  std::vector<Rational> out;
  for (int i = 0; i < variables; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

}  // namespace test_support

#endif  // SCHUBERT_CHAIN_TESTS_SUPPORT_HPP
