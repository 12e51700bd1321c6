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

#ifndef SCHUBERT_CHAIN_CONJECTURES_HPP
#define SCHUBERT_CHAIN_CONJECTURES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert_chain/chain.hpp"
#include "schubert_chain/perm.hpp"
#include "schubert_chain/poly.hpp"
#include "schubert_chain/schubert.hpp"

namespace schubert_chain {

// Three different bracket conventions show up in the monomial-factor
// statement; each gets its own helper.

/// {lo, lo+1, ..., hi} as a range of positions (empty when lo > hi).
std::vector<int> position_range(int lo, int hi);
/// {0, 1, ..., m}.
std::vector<int> zero_to(int m);
/// True when `value` is met walking from `from` up to `to` in {1..n},
/// wrapping from n to 1. Both endpoints are included.
bool in_cyclic_interval(int value, int from, int to, int n);

/// (a_1, ..., a_{n-2}) with a_i = #{k in position_range(i+2, n) :
/// w_k in the cyclic interval from w_i to w_{i+1}}.
using EtaProfile = std::vector<int>;

EtaProfile predicted_eta(const Permutation& w);
/// x_1^{a_1+...+a_{n-2}} x_2^{a_2+...+a_{n-2}} ... x_{n-2}^{a_{n-2}}.
Monomial eta_monomial(const EtaProfile& a);
/// Largest monomial dividing zeta(w).
Monomial eta_of(const Polynomial& zeta_w);

/// 1, k+1, k+2, ..., n, 2, 3, ..., k.
Permutation special_factor_permutation(int n, int k);
/// The n-1 factors of the special-value product, identity first.
std::vector<Permutation> special_value_factors(int n);
/// How "an adjacent string of letters 1, 2, ..., k" is read.
enum class Adjacency {
  /// w ends in k letters that are consecutive values modulo n
  /// (equivalently some chi^j(w) ends in 1, 2, ..., k). Invariant under chi.
  kTrailing,
  /// 1, 2, ..., k sit at consecutive positions, wrapping from n to 1.
  kCyclic,
  /// 1, 2, ..., k sit at consecutive positions, no wrap.
  kLinear,
};
std::string to_string(Adjacency a);
Adjacency parse_adjacency(const std::string& name);

/// Largest k for which w has an adjacent string 1, ..., k under `reading`.
int adjacent_run_length(const Permutation& w, Adjacency reading);

enum class Status { kHolds, kFails, kSkipped };
std::string to_string(Status s);

/// Evidence for a failed check. Carries enough to re-run the check in
/// isolation (see replay_witness).
struct Witness {
  std::string check;       // "main.1", "main.2", "main.3", "monomial_factor.eta", ...
  Permutation w{};
  Polynomial polynomial{};  // zeta(w), or the product/shifted value where relevant
  Polynomial other{};       // second polynomial for equality-type checks
  SchubertExpansion expansion{};
  int k = 0;
  std::vector<Permutation> members{};
  std::vector<Rational> point{};
  std::string detail{};

  nlohmann::json to_json() const;
  static Witness from_json(const nlohmann::json& j);
};

/// True when re-checking the witness standalone reproduces the failure.
bool replay_witness(const Witness& witness);

struct CheckVerdict {
  std::string name;
  Status status = Status::kHolds;
  std::map<std::string, Status> parts;
  std::vector<Witness> witnesses;
  nlohmann::json info = nlohmann::json::object();

  nlohmann::json to_json() const;
};

struct CheckOptions {
  Adjacency adjacency = Adjacency::kTrailing;
  /// Stop each check at its first witness instead of sweeping every w.
  bool short_circuit = false;
  int rank_trials = 20;
  std::uint64_t rank_seed = 1;
};

/// Polynomiality, nonnegative integer coefficients, Schubert positivity.
/// Parts "1", "2", "3".
CheckVerdict check_main(const StationaryVector& zeta, const CheckOptions& options = {});
/// Parts "eta_formula", "fiber_sizes", "image". Skipped unless zeta is
/// polynomial. info carries fiber_count, image_size and the informational
/// flag fibers_are_chi_orbits.
CheckVerdict check_monomial_factor(const StationaryVector& zeta,
                                   const CheckOptions& options = {});
CheckVerdict check_special_value(const StationaryVector& zeta,
                                 const CheckOptions& options = {});
CheckVerdict check_special_factors(const StationaryVector& zeta,
                                   const CheckOptions& options = {});
/// Parts "chi_invariance" and "nullspace_rank"; info carries the rank report.
CheckVerdict check_propositions(const StationaryVector& zeta, const CheckOptions& options = {});

enum class CheckSelection {
  kAll,
  kMain,
  kMonomialFactor,
  kSpecialValue,
  kSpecialFactors,
  kPropositions,
};
CheckSelection parse_check_selection(const std::string& name);

struct ConjectureReport {
  int n = 0;
  std::vector<CheckVerdict> checks;

  bool all_hold() const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

ConjectureReport run_checks(const StationaryVector& zeta, CheckSelection which,
                            const CheckOptions& options = {});

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_CONJECTURES_HPP
