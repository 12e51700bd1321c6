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

#ifndef SCHUBERT_CHAIN_RENDER_HPP
#define SCHUBERT_CHAIN_RENDER_HPP

#include <string>

#include "schubert_chain/chain.hpp"
#include "schubert_chain/schubert.hpp"

namespace schubert_chain {

enum class Format { kText, kJson, kLatex };
/// kCyclic keeps one row per chi-orbit, the representative with w_1 = n.
enum class Reps { kAll, kCyclic };

Format parse_format(const std::string& name);
Reps parse_reps(const std::string& name);

/// Letters a, b, c, d while they cover every variable (n <= 5).
VariableNames names_for(int n);

std::string latex_polynomial(const Polynomial& p, VariableNames names);
/// "S[15324] + 2*S[2431]"; "0" when empty.
std::string expansion_to_string(const SchubertExpansion& e);
std::string expansion_to_latex(const SchubertExpansion& e);

/// Text: one "w  zeta(w)" row per state. JSON: {n, polynomial, reps, rows:
/// [{w, zeta, eta}]}. LaTeX: a tabular with columns w, the eta-factored
/// zeta(w), and the Schubert expansion of the cofactor times eta.
std::string render_zeta(const StationaryVector& zeta, Format format, Reps reps);

/// Text: "from -> to: entry" lines, diagonal included. JSON: the matrix
/// serialization. LaTeX is not supported for matrices.
std::string render_matrix(const TransitionMatrix& matrix, Format format);

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_RENDER_HPP
