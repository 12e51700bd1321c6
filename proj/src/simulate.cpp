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

#include "schubert_chain/simulate.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "schubert_chain/chain.hpp"

namespace schubert_chain {

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

void validate(int n, std::span<const double> x) {
  if (n < 3) throw std::invalid_argument("simulation needs n >= 3");
  if (static_cast<int>(x.size()) != n - 1) {
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " values for x");
  }
  double total = 0;
  for (double v : x) {
    if (!(v >= 0) || !std::isfinite(v)) throw std::invalid_argument("x values must be nonnegative");
    total += v;
  }
  if (total > 1 + 1e-12) throw std::invalid_argument("x values must sum to at most 1");
}

}  // namespace

Permutation step(const Permutation& w, std::span<const double> x, double draw) {
  const int n = w.size();
  validate(n, x);
  const Permutation inv = w.inverse();
  double cumulative = 0;
  for (int i = 1; i < n; ++i) {
    if (inv(i + 1) < inv(i)) {
      cumulative += x[inv(i + 1) - 1];
      if (draw < cumulative) return w.swap_values(i, i + 1);
    }
  }
  if (inv(1) < inv(n)) {
    cumulative += x[inv(1) - 1];
    if (draw < cumulative) return w.swap_values(1, n);
  }
  return w;
}

Distribution empirical_distribution(const SimulationConfig& config) {
  validate(config.n, config.x);
  if (config.steps < 1) throw std::invalid_argument("steps must be positive");
  if (config.burn_in < 0 || config.burn_in >= 1) {
    throw std::invalid_argument("burn-in fraction must lie in [0, 1)");
  }
  if (config.trajectories < 1) throw std::invalid_argument("need at least one trajectory");
  const Permutation start =
      config.start.size() == 0 ? Permutation::identity(config.n) : config.start;
  if (start.size() != config.n) throw std::invalid_argument("start is not in S_n");

  // Walk on state indices; move order matches step().
  TransitionMatrix matrix(config.n);
  std::vector<std::vector<std::pair<double, std::size_t>>> cumulative(matrix.size());
  for (std::size_t s = 0; s < matrix.size(); ++s) {
    double total = 0;
    for (const auto& m : matrix.moves(s)) {
      total += config.x[m.variable];
      cumulative[s].emplace_back(total, m.target);
    }
  }
  const auto burn = static_cast<std::uint64_t>(std::floor(config.burn_in * config.steps));
  std::vector<std::uint64_t> counts(matrix.size(), 0);
  std::uint64_t recorded = 0;
  for (unsigned t = 0; t < config.trajectories; ++t) {
    std::mt19937_64 rng(splitmix64(config.seed + t));
    std::size_t state = matrix.index_of(start);
    for (std::uint64_t k = 1; k <= config.steps; ++k) {
      double draw = uniform_draw(rng);
      for (const auto& [bound, target] : cumulative[state]) {
        if (draw < bound) {
          state = target;
          break;
        }
      }
      if (k > burn) {
        ++counts[state];
        ++recorded;
      }
    }
  }
  Distribution freqs;
  for (std::size_t s = 0; s < matrix.size(); ++s) {
    if (counts[s] > 0) {
      freqs[matrix.states()[s]] = static_cast<double>(counts[s]) / static_cast<double>(recorded);
    }
  }
  return freqs;
}

double tv_distance(const Distribution& p, const Distribution& q) {
  std::set<Permutation> keys;
  for (const auto& [w, v] : p) keys.insert(w);
  for (const auto& [w, v] : q) keys.insert(w);
  double total = 0;
  for (const auto& w : keys) {
    auto a = p.find(w), b = q.find(w);
    double pv = a == p.end() ? 0.0 : a->second;
    double qv = b == q.end() ? 0.0 : b->second;
    total += std::abs(pv - qv);
  }
  return total / 2;
}

Distribution to_distribution(const std::map<Permutation, Rational>& exact) {
  Distribution d;
  for (const auto& [w, v] : exact) d[w] = v.get_d();
  return d;
}

}  // namespace schubert_chain
