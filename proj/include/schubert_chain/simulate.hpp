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

#ifndef SCHUBERT_CHAIN_SIMULATE_HPP
#define SCHUBERT_CHAIN_SIMULATE_HPP

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "schubert_chain/perm.hpp"
#include "schubert_chain/poly.hpp"

namespace schubert_chain {

// Trajectories use std::mt19937_64, whose output sequence is fixed by the
// standard, and turn each 64-bit output into a double in [0, 1) from its top
// 53 bits. Trajectory t of a run with master seed s is seeded with
// splitmix64(s + t).

struct SimulationConfig {
  int n = 3;
  std::vector<double> x;  // x_1..x_{n-1}, nonnegative, sum <= 1
  std::uint64_t steps = 1;
  std::uint64_t seed = 0;
  Permutation start;      // empty: identity
  double burn_in = 0.1;   // fraction of steps discarded per trajectory
  unsigned trajectories = 1;
};

std::uint64_t splitmix64(std::uint64_t state);
double uniform_draw(std::mt19937_64& rng);

/// One transition from w given a uniform draw in [0, 1). The draw is compared
/// against cumulative move probabilities: down moves (i,i+1)w in order of i,
/// then the up move (1,n)w; past the total the chain stays at w.
Permutation step(const Permutation& w, std::span<const double> x, double draw);

using Distribution = std::map<Permutation, double>;

/// Occupation frequencies after burn-in, merged over all trajectories.
Distribution empirical_distribution(const SimulationConfig& config);

/// Half the L1 distance; missing states count as zero mass.
double tv_distance(const Distribution& p, const Distribution& q);

Distribution to_distribution(const std::map<Permutation, Rational>& exact);

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_SIMULATE_HPP
