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

#ifndef SCHUBERT_CHAIN_CHAIN_HPP
#define SCHUBERT_CHAIN_CHAIN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubert_chain/perm.hpp"
#include "schubert_chain/poly.hpp"

namespace schubert_chain {

/// One off-diagonal transition w -> target with probability x_{variable+1}.
struct Move {
  std::size_t target;
  int variable;  // 0-based index of x
};

/// The transition matrix P on S_n.
///
/// From w, each pair of values i, i+1 with i+1 to the left of i gives a move
/// to (i,i+1)w weighted by the x at the position of i+1; if 1 is to the left
/// of n there is also a move to (1,n)w weighted by the x at the position of
/// 1. The diagonal is whatever makes the row sum to 1. States are ordered
/// lexicographically.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(int n);

  int n() const { return n_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<Permutation>& states() const { return states_; }
  std::size_t index_of(const Permutation& w) const;
  std::span<const Move> moves(std::size_t row) const { return moves_[row]; }

  /// 1 - (sum of the row's off-diagonal variables).
  Polynomial diagonal(std::size_t row) const;
  /// Sum of the row's off-diagonal variables (total outflow).
  Polynomial outflow(std::size_t row) const;
  Polynomial entry(const Permutation& w, const Permutation& v) const;

  /// {n, order: [...], entries: [{from, to, poly}]}, diagonal included.
  nlohmann::json to_json() const;

 private:
  int n_;
  std::vector<Permutation> states_;
  std::vector<std::vector<Move>> moves_;
};

/// Throws std::invalid_argument for n < 3.
TransitionMatrix build_transition(int n);

/// x_1^{1+...+(n-2)} x_2^{1+...+(n-3)} ... x_{n-2}.
Monomial normalization_target(int n);
/// Total degree of normalization_target(n).
int stationary_degree(int n);

/// Normalized stationary vector zeta, indexed like TransitionMatrix::states().
struct StationaryVector {
  int n = 0;
  std::vector<Permutation> states;
  std::vector<Polynomial> values;
  Polynomial target;
  /// False flags a NonPolynomialNormalization: some zeta(w) is not a
  /// polynomial. `raw` then holds a polynomial spanning vector if one was
  /// computed, and `diagnostic` says what failed.
  bool polynomial = true;
  std::vector<Polynomial> raw;
  std::string diagnostic;

  const Polynomial& at(const Permutation& w) const;
};

enum class Reduction {
  kAuto,    // full system for n <= 5, chi-orbit quotient beyond
  kFull,    // solve on all n! states
  kCyclic,  // solve on one representative per chi-orbit
};

struct SymbolicOptions {
  int max_n = 6;
  /// Allows n = 7 (never more).
  bool force = false;
  unsigned threads = 0;  // 0: hardware concurrency
  Reduction reduction = Reduction::kAuto;
  std::uint64_t seed = 0x5c4b5eedULL;
  int max_primes = 32;
};

/// Computes zeta for S_n.
///
/// Each zeta(w) is reconstructed from exact solves of the balance equations
/// modulo 62-bit primes at points of a simplex grid (multivariate Newton
/// interpolation, degree stationary_degree(n), x_{n-1} set to 1), lifted by
/// CRT and rational reconstruction. The result is only returned after the
/// stationarity identity has been checked as an exact polynomial identity on
/// every state, so a returned polynomial vector is certified.
StationaryVector stationary_symbolic(int n, const SymbolicOptions& options = {});

/// Independent route: fraction-free Gauss-Jordan elimination over Q[x] of
/// P^T - I (one balance row dropped), spanning vector reduced by monomial and
/// integer content, then zeta(w) = target * u(w) / u(w_0) by exact division.
/// Degree growth makes this practical only for n <= 4.
StationaryVector stationary_fraction_free(int n);

/// Spanning vector of the nullspace of a matrix over Q[x] whose nullity is
/// one, by fraction-free Gauss-Jordan elimination. Throws
/// InvariantViolation when the nullity is not one.
std::vector<Polynomial> nullspace_fraction_free(std::vector<std::vector<Polynomial>> rows);

/// First state v where sum_w zeta(w) p_{w,v} != zeta(v), or nullopt.
std::optional<Permutation> stationarity_failure(const TransitionMatrix& matrix,
                                                std::span<const Polynomial> zeta);

/// Exact stationary law at a numeric point x = (x_1..x_{n-1}), x_i >= 0,
/// sum <= 1. Throws std::invalid_argument on a bad point or when the law is
/// not unique there.
std::map<Permutation, Rational> stationary_numeric(int n, std::span<const Rational> x);

struct RankReport {
  int n = 0;
  std::size_t expected = 0;  // n! - 1
  std::vector<std::vector<Rational>> points;
  std::vector<std::size_t> ranks;
  bool all_full = true;

  nlohmann::json to_json() const;
};

/// Rank of P^T - I over Q at `trials` pseudo-random points whose coordinates
/// are distinct primes over a common prime denominator.
RankReport verify_nullspace_rank(int n, int trials, std::uint64_t seed);

/// Exact rank of P^T - I over Q at x.
std::size_t transition_rank(const TransitionMatrix& matrix, std::span<const Rational> x);

nlohmann::json to_json(const StationaryVector& zeta);
StationaryVector stationary_from_json(const nlohmann::json& j);

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_CHAIN_HPP
