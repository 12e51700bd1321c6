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

#ifndef SCHUBERT_CHAIN_SCHUBERT_HPP
#define SCHUBERT_CHAIN_SCHUBERT_HPP

#include <map>
#include <span>

#include "schubert_chain/perm.hpp"
#include "schubert_chain/poly.hpp"

namespace schubert_chain {

/// Divided difference d_i f = (f - s_i f) / (x_i - x_{i+1}), i one-based.
Polynomial divided_difference(int i, const Polynomial& f);

/// Applies d_{i_1} d_{i_2} ... d_{i_l} to f (d_{i_l} acts first).
Polynomial apply_divided_differences(std::span<const int> word, const Polynomial& f);

/// x_1^{m-1} x_2^{m-2} ... x_{m-1}, the Schubert polynomial of w_0 in S_m.
Polynomial staircase_monomial(int m);

/// Schubert polynomial of w. Results are memoized by canonical permutation
/// in a process-wide cache that is safe for concurrent use.
Polynomial schubert(const Permutation& w);

/// Number of entries currently memoized (for tests and diagnostics).
std::size_t schubert_cache_size();

/// Polynomial in the Schubert basis. Keys are canonical permutations.
using SchubertExpansion = std::map<Permutation, Rational>;

/// Writes f as a combination of Schubert polynomials by repeatedly peeling
/// the lex-minimal term: its exponent vector is the Lehmer code of the next
/// basis element. Coefficients are reported verbatim (possibly negative or
/// fractional).
SchubertExpansion expand_in_schubert_basis(const Polynomial& f);

/// sum of coef * Schub_u.
Polynomial reconstruct(const SchubertExpansion& e);

bool is_nonnegative_integral(const SchubertExpansion& e);

/// [{"perm": "...", "coef": "..."}, ...] sorted by one-line notation.
nlohmann::json to_json(const SchubertExpansion& e);
SchubertExpansion expansion_from_json(const nlohmann::json& j);

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_SCHUBERT_HPP
