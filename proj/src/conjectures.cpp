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

#include "schubert_chain/conjectures.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schubert_chain {

std::vector<int> position_range(int lo, int hi) {
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

std::vector<int> zero_to(int m) { return position_range(0, m); }

bool in_cyclic_interval(int value, int from, int to, int n) {
  for (int v = from;; v = v % n + 1) {
    if (v == value) return true;
    if (v == to) return false;
  }
}

EtaProfile predicted_eta(const Permutation& w) {
  const int n = w.size();
  EtaProfile a;
  for (int i = 1; i <= n - 2; ++i) {
    int count = 0;
    for (int k : position_range(i + 2, n))
      if (in_cyclic_interval(w(k), w(i), w(i + 1), n)) ++count;
    a.push_back(count);
  }
  return a;
}

Monomial eta_monomial(const EtaProfile& a) {
  std::vector<int> exps(a.size(), 0);
  int suffix = 0;
  for (std::size_t j = a.size(); j-- > 0;) {
    suffix += a[j];
    exps[j] = suffix;
  }
  return Monomial(exps);
}

Monomial eta_of(const Polynomial& zeta_w) { return monomial_gcd(zeta_w); }

Permutation special_factor_permutation(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("special factor needs 1 <= k <= n");
  std::vector<int> word{1};
  for (int v = k + 1; v <= n; ++v) word.push_back(v);
  for (int v = 2; v <= k; ++v) word.push_back(v);
  return Permutation(std::move(word));
}

std::vector<Permutation> special_value_factors(int n) {
  std::vector<Permutation> out;
  for (int k = 0; k <= n - 2; ++k) out.push_back(special_factor_permutation(n, n - k));
  return out;
}

std::string to_string(Adjacency a) {
  switch (a) {
    case Adjacency::kTrailing: return "trailing";
    case Adjacency::kCyclic: return "cyclic";
    case Adjacency::kLinear: return "linear";
  }
  return "unknown";
}

Adjacency parse_adjacency(const std::string& name) {
  if (name == "trailing") return Adjacency::kTrailing;
  if (name == "cyclic") return Adjacency::kCyclic;
  if (name == "linear") return Adjacency::kLinear;
  throw std::invalid_argument("unknown adjacency reading '" + name + "'");
}

int adjacent_run_length(const Permutation& w, Adjacency reading) {
  const int n = w.size();
  int k = 1;
  if (reading == Adjacency::kTrailing) {
    while (k < n && (w(n - k + 1) - w(n - k) + n) % n == 1) ++k;
    return k;
  }
  int p = w.position_of(1);
  while (k < n) {
    int q = p + k;
    if (q > n) {
      if (reading == Adjacency::kLinear) break;
      q -= n;
    }
    if (w(q) != k + 1) break;
    ++k;
  }
  return k;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kHolds: return "holds";
    case Status::kFails: return "fails";
    case Status::kSkipped: return "skipped";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Witnesses

nlohmann::json Witness::to_json() const {
  nlohmann::json j = {{"check", check}, {"w", w.to_string()}, {"detail", detail}};
  if (!polynomial.is_zero()) j["polynomial"] = polynomial.to_string();
  if (!other.is_zero()) j["other"] = other.to_string();
  if (!expansion.empty()) j["expansion"] = schubert_chain::to_json(expansion);
  if (k != 0) j["k"] = k;
  if (!members.empty()) {
    auto list = nlohmann::json::array();
    for (const auto& m : members) list.push_back(m.to_string());
    j["members"] = list;
  }
  if (!point.empty()) {
    auto list = nlohmann::json::array();
    for (const auto& v : point) list.push_back(v.get_str());
    j["point"] = list;
  }
  return j;
}

Witness Witness::from_json(const nlohmann::json& j) {
  Witness out;
  out.check = j.at("check").get<std::string>();
  out.w = Permutation::parse(j.at("w").get<std::string>());
  out.detail = j.value("detail", std::string());
  if (j.contains("polynomial")) out.polynomial = Polynomial::parse(j["polynomial"].get<std::string>());
  if (j.contains("other")) out.other = Polynomial::parse(j["other"].get<std::string>());
  if (j.contains("expansion")) out.expansion = expansion_from_json(j["expansion"]);
  out.k = j.value("k", 0);
  if (j.contains("members"))
    for (const auto& m : j["members"]) out.members.push_back(Permutation::parse(m.get<std::string>()));
  if (j.contains("point"))
    for (const auto& v : j["point"]) out.point.push_back(parse_rational(v.get<std::string>()));
  return out;
}

namespace {

std::size_t box_size(int n) {
  std::size_t size = 1;
  for (int i = 1; i <= n - 2; ++i) size *= zero_to(n - 1 - i).size();
  return size;
}

Polynomial special_value_product(int n) {
  Polynomial product = Polynomial::constant(1);
  for (const auto& u : special_value_factors(n)) product = product * schubert(u);
  return product;
}

}  // namespace

bool replay_witness(const Witness& wt) {
  const int n = wt.w.size();
  if (wt.check == "main.1") {
    if (wt.other.is_zero()) return false;
    return !exact_div(wt.polynomial, wt.other).has_value();
  }
  if (wt.check == "main.2") return !has_nonnegative_integer_coeffs(wt.polynomial);
  if (wt.check == "main.3") return !is_nonnegative_integral(expand_in_schubert_basis(wt.polynomial));
  if (wt.check == "monomial_factor.eta") {
    return !(eta_of(wt.polynomial) == eta_monomial(predicted_eta(wt.w)));
  }
  if (wt.check == "monomial_factor.fiber") return static_cast<int>(wt.members.size()) != n;
  if (wt.check == "monomial_factor.image") return static_cast<std::size_t>(wt.k) != box_size(n);
  if (wt.check == "special_value") return !(wt.polynomial == special_value_product(n));
  if (wt.check == "special_factors") {
    return !exact_div(wt.polynomial, schubert(special_factor_permutation(n, wt.k))).has_value();
  }
  if (wt.check == "propositions.chi") return !(wt.polynomial == wt.other);
  if (wt.check == "propositions.rank") {
    TransitionMatrix matrix(n);
    return transition_rank(matrix, wt.point) + 1 != matrix.size();
  }
  throw std::invalid_argument("unknown witness kind '" + wt.check + "'");
}

// ---------------------------------------------------------------------------
// Verdicts

nlohmann::json CheckVerdict::to_json() const {
  nlohmann::json parts_json = nlohmann::json::object();
  for (const auto& [part, s] : parts) parts_json[part] = schubert_chain::to_string(s);
  auto wit = nlohmann::json::array();
  for (const auto& w : witnesses) wit.push_back(w.to_json());
  return {{"name", name}, {"status", schubert_chain::to_string(status)},
          {"parts", parts_json}, {"witnesses", wit}, {"info", info}};
}

namespace {

void settle(CheckVerdict& v) {
  bool any_fail = false, all_skipped = !v.parts.empty();
  for (const auto& [part, s] : v.parts) {
    if (s == Status::kFails) any_fail = true;
    if (s != Status::kSkipped) all_skipped = false;
  }
  v.status = any_fail ? Status::kFails : all_skipped ? Status::kSkipped : Status::kHolds;
}

CheckVerdict skipped(const std::string& name, std::initializer_list<const char*> parts,
                     const std::string& why) {
  CheckVerdict v;
  v.name = name;
  for (const char* p : parts) v.parts[p] = Status::kSkipped;
  v.info["reason"] = why;
  settle(v);
  return v;
}

const char* kNotPolynomial = "zeta is not polynomial (precondition of this check unmet)";

}  // namespace

CheckVerdict check_main(const StationaryVector& zeta, const CheckOptions& options) {
  CheckVerdict v;
  v.name = "main";
  if (!zeta.polynomial) {
    v.parts["1"] = Status::kFails;
    v.parts["2"] = Status::kSkipped;
    v.parts["3"] = Status::kSkipped;
    Witness wt;
    wt.check = "main.1";
    wt.w = Permutation::longest(zeta.n);
    wt.detail = zeta.diagnostic;
    if (!zeta.raw.empty()) {
      // Find the first state whose normalization fails and record it.
      std::size_t w0 = wt.w.lex_rank();
      for (std::size_t s = 0; s < zeta.raw.size(); ++s) {
        Polynomial numerator = zeta.target * zeta.raw[s];
        if (!exact_div(numerator, zeta.raw[w0])) {
          wt.w = zeta.states[s];
          wt.polynomial = numerator;
          wt.other = zeta.raw[w0];
          break;
        }
      }
    }
    v.witnesses.push_back(std::move(wt));
    settle(v);
    return v;
  }
  v.parts["1"] = Status::kHolds;
  v.parts["2"] = Status::kHolds;
  v.parts["3"] = Status::kHolds;
  std::map<std::string, SchubertExpansion> memo;
  nlohmann::json expansions = nlohmann::json::object();
  for (std::size_t s = 0; s < zeta.states.size(); ++s) {
    const auto& w = zeta.states[s];
    const auto& value = zeta.values[s];
    if (v.parts["2"] == Status::kHolds || !options.short_circuit) {
      if (!has_nonnegative_integer_coeffs(value)) {
        v.parts["2"] = Status::kFails;
        v.witnesses.push_back({.check = "main.2", .w = w, .polynomial = value});
      }
    }
    if (v.parts["3"] == Status::kHolds || !options.short_circuit) {
      auto key = value.to_string();
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, expand_in_schubert_basis(value)).first;
      if (!is_nonnegative_integral(it->second)) {
        v.parts["3"] = Status::kFails;
        v.witnesses.push_back(
            {.check = "main.3", .w = w, .polynomial = value, .expansion = it->second});
      }
      if (w(1) == zeta.n) expansions[w.to_string()] = to_json(it->second);
    }
  }
  v.info["expansions"] = expansions;
  settle(v);
  return v;
}

CheckVerdict check_monomial_factor(const StationaryVector& zeta, const CheckOptions& options) {
  if (!zeta.polynomial) {
    return skipped("monomial_factor", {"eta_formula", "fiber_sizes", "image"}, kNotPolynomial);
  }
  const int n = zeta.n;
  CheckVerdict v;
  v.name = "monomial_factor";
  v.parts["eta_formula"] = Status::kHolds;
  std::map<std::vector<int>, std::vector<Permutation>> fibers;
  for (std::size_t s = 0; s < zeta.states.size(); ++s) {
    const auto& w = zeta.states[s];
    Monomial observed = eta_of(zeta.values[s]);
    Monomial predicted = eta_monomial(predicted_eta(w));
    fibers[observed.exponents()].push_back(w);
    if (!(observed == predicted)) {
      v.parts["eta_formula"] = Status::kFails;
      if (v.witnesses.empty() || !options.short_circuit) {
        v.witnesses.push_back({.check = "monomial_factor.eta",
                               .w = w,
                               .polynomial = zeta.values[s],
                               .detail = "observed " + monomial_to_string(observed) +
                                         ", predicted " + monomial_to_string(predicted)});
      }
    }
  }

  v.parts["fiber_sizes"] = Status::kHolds;
  bool orbits = true;
  for (const auto& [exps, members] : fibers) {
    if (static_cast<int>(members.size()) != n) {
      v.parts["fiber_sizes"] = Status::kFails;
      v.witnesses.push_back({.check = "monomial_factor.fiber",
                             .w = members.front(),
                             .members = members,
                             .detail = "fiber of " + monomial_to_string(Monomial(exps)) +
                                       " has " + std::to_string(members.size()) + " elements"});
    }
    std::set<Permutation> orbit;
    Permutation u = members.front();
    for (int k = 0; k < n; ++k, u = u.cyclic_shift()) orbit.insert(u);
    if (std::set<Permutation>(members.begin(), members.end()) != orbit) orbits = false;
  }

  std::set<std::vector<int>> box;
  std::vector<int> a(n - 2, 0);
  for (;;) {
    box.insert(eta_monomial(a).exponents());
    int i = n - 3;
    while (i >= 0 && a[i] == n - 2 - i) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  std::set<std::vector<int>> image;
  for (const auto& [exps, members] : fibers) image.insert(exps);
  v.parts["image"] = image == box ? Status::kHolds : Status::kFails;
  if (image != box) {
    v.witnesses.push_back({.check = "monomial_factor.image",
                           .w = Permutation::identity(n),
                           .k = static_cast<int>(image.size()),
                           .detail = "image has " + std::to_string(image.size()) +
                                     " monomials, box has " + std::to_string(box.size())});
  }
  v.info["fiber_count"] = fibers.size();
  v.info["image_size"] = image.size();
  v.info["box_size"] = box.size();
  v.info["fibers_are_chi_orbits"] = orbits;
  settle(v);
  return v;
}

CheckVerdict check_special_value(const StationaryVector& zeta, const CheckOptions&) {
  if (!zeta.polynomial) return skipped("special_value", {"product"}, kNotPolynomial);
  CheckVerdict v;
  v.name = "special_value";
  auto id = Permutation::identity(zeta.n);
  Polynomial product = special_value_product(zeta.n);
  const Polynomial& value = zeta.at(id);
  v.parts["product"] = product == value ? Status::kHolds : Status::kFails;
  if (!(product == value)) {
    v.witnesses.push_back({.check = "special_value", .w = id, .polynomial = value, .other = product});
  }
  auto factors = nlohmann::json::array();
  for (const auto& u : special_value_factors(zeta.n)) factors.push_back(u.to_string());
  v.info["factors"] = factors;
  settle(v);
  return v;
}

CheckVerdict check_special_factors(const StationaryVector& zeta, const CheckOptions& options) {
  if (!zeta.polynomial) return skipped("special_factors", {"divisibility"}, kNotPolynomial);
  CheckVerdict v;
  v.name = "special_factors";
  v.parts["divisibility"] = Status::kHolds;
  std::size_t pairs = 0;
  for (std::size_t s = 0; s < zeta.states.size(); ++s) {
    const auto& w = zeta.states[s];
    int run = adjacent_run_length(w, options.adjacency);
    for (int k = 2; k <= run; ++k) {
      ++pairs;
      auto divisor = schubert(special_factor_permutation(zeta.n, k));
      if (!exact_div(zeta.values[s], divisor)) {
        v.parts["divisibility"] = Status::kFails;
        if (v.witnesses.empty() || !options.short_circuit) {
          v.witnesses.push_back(
              {.check = "special_factors", .w = w, .polynomial = zeta.values[s], .k = k});
        }
      }
    }
  }
  v.info["pairs_checked"] = pairs;
  v.info["adjacency"] = to_string(options.adjacency);
  settle(v);
  return v;
}

CheckVerdict check_propositions(const StationaryVector& zeta, const CheckOptions& options) {
  CheckVerdict v;
  v.name = "propositions";
  if (zeta.polynomial) {
    v.parts["chi_invariance"] = Status::kHolds;
    for (std::size_t s = 0; s < zeta.states.size(); ++s) {
      const auto& w = zeta.states[s];
      const auto& shifted = zeta.at(w.cyclic_shift());
      if (!(shifted == zeta.values[s])) {
        v.parts["chi_invariance"] = Status::kFails;
        v.witnesses.push_back(
            {.check = "propositions.chi", .w = w, .polynomial = zeta.values[s], .other = shifted});
        if (options.short_circuit) break;
      }
    }
  } else {
    v.parts["chi_invariance"] = Status::kSkipped;
  }
  auto report = verify_nullspace_rank(zeta.n, options.rank_trials, options.rank_seed);
  v.parts["nullspace_rank"] = report.all_full ? Status::kHolds : Status::kFails;
  for (std::size_t t = 0; t < report.ranks.size(); ++t) {
    if (report.ranks[t] != report.expected) {
      v.witnesses.push_back({.check = "propositions.rank",
                             .w = Permutation::identity(zeta.n),
                             .point = report.points[t],
                             .detail = "rank " + std::to_string(report.ranks[t])});
    }
  }
  v.info["rank"] = report.to_json();
  settle(v);
  return v;
}

CheckSelection parse_check_selection(const std::string& name) {
  if (name == "all") return CheckSelection::kAll;
  if (name == "main" || name == "1") return CheckSelection::kMain;
  if (name == "monomial-factor" || name == "monomial_factor" || name == "2")
    return CheckSelection::kMonomialFactor;
  if (name == "special-value" || name == "special_value" || name == "3")
    return CheckSelection::kSpecialValue;
  if (name == "special-factors" || name == "special_factors" || name == "4")
    return CheckSelection::kSpecialFactors;
  if (name == "propositions") return CheckSelection::kPropositions;
  throw std::invalid_argument("unknown check '" + name + "'");
}

bool ConjectureReport::all_hold() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckVerdict& c) { return c.status == Status::kFails; });
}

nlohmann::json ConjectureReport::to_json() const {
  auto list = nlohmann::json::array();
  for (const auto& c : checks) list.push_back(c.to_json());
  return {{"n", n}, {"all_hold", all_hold()}, {"checks", list}};
}

std::string ConjectureReport::summary() const {
  std::ostringstream out;
  out << "n = " << n << ": " << (all_hold() ? "all checks hold" : "FAILURES") << "\n";
  for (const auto& c : checks) {
    out << "  " << c.name << ": " << schubert_chain::to_string(c.status);
    if (!c.parts.empty()) {
      out << " (";
      bool first = true;
      for (const auto& [part, s] : c.parts) {
        out << (first ? "" : ", ") << part << " " << schubert_chain::to_string(s);
        first = false;
      }
      out << ")";
    }
    out << "\n";
    for (const auto& w : c.witnesses) {
      out << "    witness " << w.check << " at " << w.w.to_string();
      if (!w.detail.empty()) out << ": " << w.detail;
      out << "\n";
    }
  }
  return out.str();
}

ConjectureReport run_checks(const StationaryVector& zeta, CheckSelection which,
                            const CheckOptions& options) {
  ConjectureReport report;
  report.n = zeta.n;
  auto wanted = [&](CheckSelection s) { return which == CheckSelection::kAll || which == s; };
  if (wanted(CheckSelection::kPropositions)) report.checks.push_back(check_propositions(zeta, options));
  if (wanted(CheckSelection::kMain)) report.checks.push_back(check_main(zeta, options));
  if (wanted(CheckSelection::kMonomialFactor))
    report.checks.push_back(check_monomial_factor(zeta, options));
  if (wanted(CheckSelection::kSpecialValue)) report.checks.push_back(check_special_value(zeta, options));
  if (wanted(CheckSelection::kSpecialFactors))
    report.checks.push_back(check_special_factors(zeta, options));
  return report;
}

}  // namespace schubert_chain
