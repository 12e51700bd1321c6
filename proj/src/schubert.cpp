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

#include "schubert_chain/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "schubert_chain/error.hpp"

namespace schubert_chain {

Polynomial divided_difference(int i, const Polynomial& f) {
  if (i < 1 || i >= kMaxVariables) {
    throw std::invalid_argument("divided_difference index out of range");
  }
  const int lo = i - 1, hi = i;
  // (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1}) is the geometric sum
  // of x_i^{a-1-j} x_{i+1}^{b+j}, j < a-b (negated when a < b).
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [m, c] : f.terms()) {
    int a = m.exponent(lo), b = m.exponent(hi);
    if (a == b) continue;
    bool negate = a < b;
    int top = std::max(a, b), bottom = std::min(a, b);
    std::vector<int> exps = m.exponents();
    exps.resize(std::max<std::size_t>(exps.size(), hi + 1), 0);
    for (int j = 0; j < top - bottom; ++j) {
      exps[lo] = top - 1 - j;
      exps[hi] = bottom + j;
      auto& slot = acc[Monomial(exps)];
      if (negate) slot -= c;
      else slot += c;
    }
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  return Polynomial::from_terms(std::move(terms));
}

Polynomial apply_divided_differences(std::span<const int> word, const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(*it, g);
  return g;
}

Polynomial staircase_monomial(int m) {
  std::vector<int> exps;
  for (int k = m - 1; k >= 1; --k) exps.push_back(k);
  return Polynomial::term(Monomial(exps));
}

namespace {

struct SchubertCache {
  std::shared_mutex mutex;
  std::map<Permutation, Polynomial> values;
};

SchubertCache& cache() {
  static SchubertCache instance;
  return instance;
}

bool is_dominant(const LehmerCode& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i - 1] < c[i]) return false;
  return true;
}

}  // namespace

Polynomial schubert(const Permutation& w) {
  Permutation key = w.canonical();
  auto& store = cache();
  {
    std::shared_lock lock(store.mutex);
    auto it = store.values.find(key);
    if (it != store.values.end()) return it->second;
  }
  Polynomial result;
  LehmerCode c = key.code();
  if (key.is_identity()) {
    result = Polynomial::constant(1);
  } else if (is_dominant(c)) {
    result = Polynomial::term(Monomial(c));
  } else {
    // First ascent of the code is an ascent of w; w s_i is one step longer.
    int i = 1;
    while (c[i - 1] >= c[i]) ++i;
    result = divided_difference(i, schubert(key.swap_positions(i)));
  }
  std::unique_lock lock(store.mutex);
  store.values.try_emplace(key, result);
  return result;
}

std::size_t schubert_cache_size() {
  auto& store = cache();
  std::shared_lock lock(store.mutex);
  return store.values.size();
}

namespace {

// Monomials of total degree <= d in v variables: C(d + v, v).
std::size_t monomial_count(int d, int v) {
  Integer count = 1;
  for (int k = 1; k <= v; ++k) {
    count *= d + k;
    count /= k;
  }
  return count.fits_ulong_p() ? count.get_ui() : static_cast<std::size_t>(-1);
}

}  // namespace

SchubertExpansion expand_in_schubert_basis(const Polynomial& f) {
  SchubertExpansion out;
  Polynomial rest = f;
  const std::size_t cap =
      monomial_count(std::max(f.degree(), 0), std::max(f.num_variables(), 1)) + 1;
  for (std::size_t iteration = 0; !rest.is_zero(); ++iteration) {
    if (iteration >= cap) {
      throw InvariantViolation("Schubert expansion did not terminate for " +
                               f.to_string());
    }
    auto [m, c] = min_monomial_lex(rest);
    Permutation u = Permutation::from_code(m.exponents()).canonical();
    Polynomial basis = schubert(u);
    auto [lead_m, lead_c] = min_monomial_lex(basis);
    if (!(lead_m == m) || lead_c != 1) {
      throw InvariantViolation("lex-minimal term of Schub_" + u.to_string() +
                               " is not x^code(u) with coefficient 1");
    }
    out[u] += c;
    if (out[u] == 0) out.erase(u);
    rest -= basis.scaled(c);
  }
  return out;
}

Polynomial reconstruct(const SchubertExpansion& e) {
  Polynomial total;
  for (const auto& [u, c] : e) total += schubert(u).scaled(c);
  return total;
}

bool is_nonnegative_integral(const SchubertExpansion& e) {
  return std::all_of(e.begin(), e.end(), [](const auto& kv) {
    return kv.second >= 0 && kv.second.get_den() == 1;
  });
}

nlohmann::json to_json(const SchubertExpansion& e) {
  auto out = nlohmann::json::array();
  for (const auto& [u, c] : e) out.push_back({{"perm", u.to_string()}, {"coef", c.get_str()}});
  return out;
}

SchubertExpansion expansion_from_json(const nlohmann::json& j) {
  SchubertExpansion e;
  for (const auto& item : j) {
    auto u = Permutation::parse(item.at("perm").get<std::string>()).canonical();
    e[u] += parse_rational(item.at("coef").get<std::string>());
  }
  return e;
}

}  // namespace schubert_chain
