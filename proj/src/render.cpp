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

#include "schubert_chain/render.hpp"

#include <sstream>
#include <stdexcept>

#include "schubert_chain/conjectures.hpp"

namespace schubert_chain {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "latex") return Format::kLatex;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or latex)");
}

Reps parse_reps(const std::string& name) {
  if (name == "all") return Reps::kAll;
  if (name == "cyclic") return Reps::kCyclic;
  throw std::invalid_argument("unknown reps '" + name + "' (expected all or cyclic)");
}

VariableNames names_for(int n) { return n <= 5 ? VariableNames::kLetters : VariableNames::kIndexed; }

namespace {

std::string variable_latex(int index, VariableNames names) {
  if (names == VariableNames::kLetters) return std::string(1, static_cast<char>('a' + index));
  return "x_{" + std::to_string(index + 1) + "}";
}

std::string monomial_latex(const Monomial& m, VariableNames names) {
  std::string out;
  auto exps = m.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    out += variable_latex(static_cast<int>(i), names);
    if (exps[i] > 1) out += exps[i] < 10 ? "^" + std::to_string(exps[i]) : "^{" + std::to_string(exps[i]) + "}";
  }
  return out;
}

std::string coefficient_latex(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

bool keep(const Permutation& w, Reps reps) { return reps == Reps::kAll || w(1) == w.size(); }

}  // namespace

std::string latex_polynomial(const Polynomial& p, VariableNames names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (sgn(c) < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    std::string mono = monomial_latex(m, names);
    if (mono.empty()) out += coefficient_latex(magnitude);
    else if (magnitude == 1) out += mono;
    else out += coefficient_latex(magnitude) + mono;
  }
  return out;
}

std::string expansion_to_string(const SchubertExpansion& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [u, c] : e) {
    if (!first) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    first = false;
    Rational magnitude = abs(c);
    if (magnitude != 1) out += rational_to_fraction_string(magnitude) + "*";
    out += "S[" + u.to_string() + "]";
  }
  return out;
}

std::string expansion_to_latex(const SchubertExpansion& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [u, c] : e) {
    if (sgn(c) < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    Rational magnitude = abs(c);
    if (magnitude != 1) out += coefficient_latex(magnitude);
    out += "\\Schub_{" + u.to_string() + "}";
  }
  return out;
}

std::string render_zeta(const StationaryVector& zeta, Format format, Reps reps) {
  const VariableNames names = names_for(zeta.n);
  std::ostringstream out;
  if (!zeta.polynomial) {
    if (format == Format::kJson) {
      auto j = to_json(zeta);
      j["reps"] = reps == Reps::kAll ? "all" : "cyclic";
      return j.dump(2) + "\n";
    }
    out << "zeta is not polynomial for n = " << zeta.n << ": " << zeta.diagnostic << "\n";
    return out.str();
  }
  if (format == Format::kJson) {
    auto rows = nlohmann::json::array();
    for (std::size_t s = 0; s < zeta.states.size(); ++s) {
      if (!keep(zeta.states[s], reps)) continue;
      rows.push_back({{"w", zeta.states[s].to_string()},
                      {"zeta", zeta.values[s].to_string()},
                      {"eta", monomial_to_string(eta_of(zeta.values[s]))}});
    }
    nlohmann::json j = {{"n", zeta.n},
                        {"polynomial", true},
                        {"reps", reps == Reps::kAll ? "all" : "cyclic"},
                        {"rows", rows}};
    return j.dump(2) + "\n";
  }
  if (format == Format::kText) {
    std::size_t width = zeta.states.front().to_string().size();
    for (std::size_t s = 0; s < zeta.states.size(); ++s) {
      if (!keep(zeta.states[s], reps)) continue;
      auto w = zeta.states[s].to_string();
      out << w << std::string(width - w.size() + 2, ' ') << zeta.values[s].to_string(names) << "\n";
    }
    return out.str();
  }
  out << "\\begin{tabular}{|c|c|c|}\n\\hline\n$w$ & $\\zeta(w)$ & \\\\\n\\hline\n";
  for (std::size_t s = 0; s < zeta.states.size(); ++s) {
    if (!keep(zeta.states[s], reps)) continue;
    Monomial eta = eta_of(zeta.values[s]);
    Polynomial cofactor = *exact_div(zeta.values[s], Polynomial::term(eta));
    std::string eta_text = monomial_latex(eta, names);
    std::string factored = cofactor.terms().size() > 1 && !eta_text.empty()
                               ? "(" + latex_polynomial(cofactor, names) + ")" + eta_text
                               : eta_text.empty() ? latex_polynomial(cofactor, names)
                               : cofactor == Polynomial::constant(1)
                                   ? eta_text
                                   : latex_polynomial(cofactor, names) + eta_text;
    auto expansion = expand_in_schubert_basis(cofactor);
    std::string schub = expansion_to_latex(expansion);
    if (expansion.size() > 1 && !eta_text.empty()) schub = "(" + schub + ")";
    if (expansion.size() == 1 && expansion.begin()->first.is_identity() && !eta_text.empty()) {
      schub.clear();
    }
    schub += eta_text;
    out << zeta.states[s].to_string() << "&$" << factored << "$&$" << schub << "$\\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

std::string render_matrix(const TransitionMatrix& matrix, Format format) {
  if (format == Format::kJson) return matrix.to_json().dump(2) + "\n";
  if (format == Format::kLatex) throw std::invalid_argument("matrix output supports text and json");
  const VariableNames names = names_for(matrix.n());
  std::ostringstream out;
  for (std::size_t s = 0; s < matrix.size(); ++s) {
    const auto& w = matrix.states()[s];
    std::map<std::size_t, Polynomial> row;
    row[s] = matrix.diagonal(s);
    for (const auto& m : matrix.moves(s)) row[m.target] = Polynomial::variable(m.variable);
    for (const auto& [t, p] : row) {
      out << w.to_string() << " -> " << matrix.states()[t].to_string() << ": " << p.to_string(names)
          << "\n";
    }
  }
  return out.str();
}

}  // namespace schubert_chain
