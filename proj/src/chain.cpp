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

#include "schubert_chain/chain.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "modular.hpp"
#include "schubert_chain/error.hpp"

namespace schubert_chain {

// ---------------------------------------------------------------------------
// Transition matrix

TransitionMatrix::TransitionMatrix(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("transition matrix needs n >= 3");
  if (n > 9) throw std::invalid_argument("transition matrix limited to n <= 9");
  states_ = all_permutations(n);
  moves_.resize(states_.size());
  for (std::size_t row = 0; row < states_.size(); ++row) {
    const Permutation& w = states_[row];
    const Permutation inv = w.inverse();
    auto& out = moves_[row];
    for (int i = 1; i < n; ++i) {
      if (inv(i + 1) < inv(i)) {
        out.push_back({index_of(w.swap_values(i, i + 1)), inv(i + 1) - 1});
      }
    }
    if (inv(1) < inv(n)) out.push_back({index_of(w.swap_values(1, n)), inv(1) - 1});
  }
}

std::size_t TransitionMatrix::index_of(const Permutation& w) const {
  if (w.size() != n_) throw std::invalid_argument("permutation not in S_" + std::to_string(n_));
  return w.lex_rank();
}

Polynomial TransitionMatrix::outflow(std::size_t row) const {
  Polynomial total;
  for (const auto& m : moves_[row]) total += Polynomial::variable(m.variable);
  return total;
}

Polynomial TransitionMatrix::diagonal(std::size_t row) const {
  return Polynomial::constant(1) - outflow(row);
}

Polynomial TransitionMatrix::entry(const Permutation& w, const Permutation& v) const {
  std::size_t from = index_of(w), to = index_of(v);
  if (from == to) return diagonal(from);
  for (const auto& m : moves_[from])
    if (m.target == to) return Polynomial::variable(m.variable);
  return {};
}

nlohmann::json TransitionMatrix::to_json() const {
  nlohmann::json order = nlohmann::json::array();
  for (const auto& w : states_) order.push_back(w.to_string());
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t row = 0; row < states_.size(); ++row) {
    std::vector<std::pair<std::size_t, Polynomial>> cells;
    cells.emplace_back(row, diagonal(row));
    for (const auto& m : moves_[row]) cells.emplace_back(m.target, Polynomial::variable(m.variable));
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [to, poly] : cells) {
      entries.push_back({{"from", states_[row].to_string()},
                         {"to", states_[to].to_string()},
                         {"poly", poly.to_string()}});
    }
  }
  return {{"n", n_}, {"order", order}, {"entries", entries}};
}

TransitionMatrix build_transition(int n) { return TransitionMatrix(n); }

Monomial normalization_target(int n) {
  std::vector<int> exps;
  for (int j = 1; j <= n - 2; ++j) exps.push_back((n - 1 - j) * (n - j) / 2);
  return Monomial(exps);
}

int stationary_degree(int n) { return normalization_target(n).degree(); }

const Polynomial& StationaryVector::at(const Permutation& w) const {
  if (w.size() != n) throw std::invalid_argument("permutation not in S_" + std::to_string(n));
  return values.at(w.lex_rank());
}

std::optional<Permutation> stationarity_failure(const TransitionMatrix& matrix,
                                                std::span<const Polynomial> zeta) {
  if (zeta.size() != matrix.size()) throw std::invalid_argument("zeta has wrong length");
  std::vector<Polynomial> inflow(matrix.size());
  for (std::size_t w = 0; w < matrix.size(); ++w) {
    for (const auto& m : matrix.moves(w)) {
      inflow[m.target] += zeta[w].times(Monomial::variable(m.variable));
    }
  }
  // sum_w zeta(w) p_{w,v} = zeta(v)  <=>  inflow(v) = zeta(v) * outflow(v).
  for (std::size_t v = 0; v < matrix.size(); ++v) {
    Polynomial out;
    for (const auto& m : matrix.moves(v)) out += zeta[v].times(Monomial::variable(m.variable));
    if (!(out == inflow[v])) return matrix.states()[v];
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Modular evaluation / interpolation route

namespace {

using modular::u64;

// Balance equations with one row swapped for the normalization of w_0.
// Every coefficient is +-x_var.
struct BalanceSystem {
  struct Entry {
    std::size_t row, col;
    int variable;
    bool negative;
  };
  std::size_t unknowns = 0;
  std::vector<Entry> entries;
  std::size_t normalization = 0;  // row and column of w_0's unknown
  std::vector<std::size_t> unknown_of_state;
};

BalanceSystem make_balance_system(const TransitionMatrix& matrix, bool cyclic) {
  const int n = matrix.n();
  const std::size_t count = matrix.size();
  BalanceSystem sys;
  sys.unknown_of_state.assign(count, 0);
  std::vector<long> row_of_state(count, -1);
  if (cyclic) {
    std::size_t next = 0;
    for (std::size_t s = 0; s < count; ++s) {
      const Permutation& w = matrix.states()[s];
      if (w(1) != n) continue;
      Permutation orbit = w;
      for (int k = 0; k < n; ++k) {
        sys.unknown_of_state[matrix.index_of(orbit)] = next;
        orbit = orbit.cyclic_shift();
      }
      row_of_state[s] = static_cast<long>(next);
      ++next;
    }
    sys.unknowns = next;
  } else {
    for (std::size_t s = 0; s < count; ++s) {
      sys.unknown_of_state[s] = s;
      row_of_state[s] = static_cast<long>(s);
    }
    sys.unknowns = count;
  }
  for (std::size_t w = 0; w < count; ++w) {
    for (const auto& m : matrix.moves(w)) {
      if (row_of_state[m.target] >= 0) {
        sys.entries.push_back({static_cast<std::size_t>(row_of_state[m.target]),
                               sys.unknown_of_state[w], m.variable, false});
      }
      if (row_of_state[w] >= 0) {
        sys.entries.push_back({static_cast<std::size_t>(row_of_state[w]),
                               sys.unknown_of_state[w], m.variable, true});
      }
    }
  }
  sys.normalization = sys.unknown_of_state[matrix.index_of(Permutation::longest(n))];
  return sys;
}

std::optional<std::vector<u64>> solve_at(const modular::Field& f, const BalanceSystem& sys,
                                         std::span<const u64> x, u64 target_value) {
  modular::DenseMatrix a(sys.unknowns, sys.unknowns);
  for (const auto& e : sys.entries) {
    if (e.row == sys.normalization) continue;
    u64& cell = a.at(e.row, e.col);
    cell = e.negative ? f.sub(cell, x[e.variable]) : f.add(cell, x[e.variable]);
  }
  a.at(sys.normalization, sys.normalization) = 1;
  std::vector<u64> rhs(sys.unknowns, 0);
  rhs[sys.normalization] = target_value;
  return modular::solve(f, std::move(a), std::move(rhs));
}

u64 monomial_value(const modular::Field& f, const Monomial& m, std::span<const u64> x) {
  u64 v = 1;
  for (int i = 0; i < m.num_variables(); ++i) v = f.mul(v, f.pow(x[i], m.exponent(i)));
  return v;
}

// Multi-indices i in N^dims with |i| <= degree, plus their offsets in a dense
// (degree+1)^dims array.
struct SimplexGrid {
  int dims = 0;
  int degree = 0;
  std::vector<std::vector<int>> points;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> stride;
  std::size_t dense_size = 1;

  SimplexGrid(int d, int deg) : dims(d), degree(deg) {
    stride.resize(d);
    for (int k = 0; k < d; ++k) {
      stride[k] = dense_size;
      dense_size *= static_cast<std::size_t>(deg + 1);
    }
    std::vector<int> idx(d, 0);
    enumerate(idx, 0, deg);
  }

 private:
  void enumerate(std::vector<int>& idx, int k, int budget) {
    if (k == dims) {
      points.push_back(idx);
      std::size_t off = 0;
      for (int j = 0; j < dims; ++j) off += stride[j] * idx[j];
      offset.push_back(off);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      idx[k] = v;
      enumerate(idx, k + 1, budget - v);
    }
    idx[k] = 0;
  }
};

int point_weight(const std::vector<int>& idx) {
  int s = 0;
  for (int v : idx) s += v;
  return s;
}

// Turns sampled values on the simplex grid into monomial coefficients of the
// unique polynomial of total degree <= grid.degree through them: Newton
// divided differences along each axis, then Newton-to-monomial conversion.
void interpolate_in_place(const modular::Field& f, const SimplexGrid& grid,
                          const std::vector<std::vector<u64>>& nodes,
                          const std::vector<std::vector<std::vector<u64>>>& inv_diff,
                          std::vector<u64>& dense) {
  const int deg = grid.degree;
  std::vector<u64> fiber(deg + 2), next(deg + 2);
  for (int k = 0; k < grid.dims; ++k) {
    for (std::size_t p = 0; p < grid.points.size(); ++p) {
      if (grid.points[p][k] != 0) continue;
      std::size_t base = grid.offset[p], step = grid.stride[k];
      int len = deg - point_weight(grid.points[p]) + 1;
      for (int i = 0; i < len; ++i) fiber[i] = dense[base + i * step];
      for (int j = 1; j < len; ++j)
        for (int i = len - 1; i >= j; --i)
          fiber[i] = f.mul(f.sub(fiber[i], fiber[i - 1]), inv_diff[k][i][j]);
      for (int i = 0; i < len; ++i) dense[base + i * step] = fiber[i];
    }
  }
  for (int k = 0; k < grid.dims; ++k) {
    for (std::size_t p = 0; p < grid.points.size(); ++p) {
      if (grid.points[p][k] != 0) continue;
      std::size_t base = grid.offset[p], step = grid.stride[k];
      int len = deg - point_weight(grid.points[p]) + 1;
      // Horner: b <- b * (y - a_j) + c_j for j = len-2 .. 0.
      std::fill(fiber.begin(), fiber.end(), 0);
      fiber[0] = dense[base + (len - 1) * step];
      int blen = 1;
      for (int j = len - 2; j >= 0; --j) {
        u64 a = nodes[k][j];
        std::fill(next.begin(), next.begin() + blen + 1, 0);
        for (int t = 0; t < blen; ++t) {
          next[t + 1] = f.add(next[t + 1], fiber[t]);
          next[t] = f.sub(next[t], f.mul(a, fiber[t]));
        }
        next[0] = f.add(next[0], dense[base + j * step]);
        ++blen;
        std::swap(fiber, next);
      }
      for (int i = 0; i < len; ++i) dense[base + i * step] = fiber[i];
    }
  }
}

class PrimeRun {
 public:
  PrimeRun(const modular::Field& field, const BalanceSystem& sys, const Monomial& target,
           const SimplexGrid& grid, int variables, unsigned threads)
      : f_(field), sys_(sys), target_(target), grid_(grid), vars_(variables),
        threads_(threads) {}

  enum class Outcome { kOk, kSingular, kNotPolynomial };

  // coefficients[u][p]: coefficient of the grid monomial p for unknown u.
  Outcome run(std::mt19937_64& rng, std::vector<std::vector<u64>>& coefficients) {
    const int dims = grid_.dims, deg = grid_.degree;
    std::vector<std::vector<u64>> nodes(dims, std::vector<u64>(deg + 1));
    for (auto& axis : nodes) {
      for (int i = 0; i <= deg; ++i) {
        u64 candidate;
        do {
          candidate = rng() % f_.prime();
        } while (candidate == 0 ||
                 std::find(axis.begin(), axis.begin() + i, candidate) != axis.begin() + i);
        axis[i] = candidate;
      }
    }
    std::vector<std::vector<std::vector<u64>>> inv_diff(
        dims, std::vector<std::vector<u64>>(deg + 1, std::vector<u64>(deg + 1, 0)));
    for (int k = 0; k < dims; ++k)
      for (int i = 0; i <= deg; ++i)
        for (int j = 1; j <= i; ++j)
          inv_diff[k][i][j] = f_.inv(f_.sub(nodes[k][i], nodes[k][i - j]));

    const std::size_t count = grid_.points.size();
    std::vector<std::vector<u64>> samples(count);
    std::atomic<bool> singular{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&](unsigned t, unsigned stride) {
      try {
        for (std::size_t p = t; p < count && !singular; p += stride) {
          std::vector<u64> x(vars_, 1);
          for (int k = 0; k < dims; ++k) x[k] = nodes[k][grid_.points[p][k]];
          auto sol = solve_at(f_, sys_, x, monomial_value(f_, target_, x));
          if (!sol) {
            singular = true;
            return;
          }
          samples[p] = std::move(*sol);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        failure = std::current_exception();
      }
    };
    unsigned workers = std::max(1u, std::min<unsigned>(threads_, static_cast<unsigned>(count)));
    if (workers == 1) {
      worker(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker, t, workers);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    if (singular) return Outcome::kSingular;

    coefficients.assign(sys_.unknowns, std::vector<u64>(count, 0));
    std::vector<u64> dense(grid_.dense_size);
    for (std::size_t u = 0; u < sys_.unknowns; ++u) {
      std::fill(dense.begin(), dense.end(), 0);
      for (std::size_t p = 0; p < count; ++p) dense[grid_.offset[p]] = samples[p][u];
      interpolate_in_place(f_, grid_, nodes, inv_diff, dense);
      for (std::size_t p = 0; p < count; ++p) coefficients[u][p] = dense[grid_.offset[p]];
    }

    // One off-grid sample: a rational (non-polynomial) zeta cannot match.
    std::vector<u64> x(vars_, 1);
    for (int k = 0; k < dims; ++k) x[k] = 1 + rng() % (f_.prime() - 1);
    auto check = solve_at(f_, sys_, x, monomial_value(f_, target_, x));
    if (!check) return Outcome::kSingular;
    for (std::size_t u = 0; u < sys_.unknowns; ++u) {
      u64 predicted = 0;
      for (std::size_t p = 0; p < count; ++p) {
        if (coefficients[u][p] == 0) continue;
        u64 term = coefficients[u][p];
        for (int k = 0; k < dims; ++k) term = f_.mul(term, f_.pow(x[k], grid_.points[p][k]));
        predicted = f_.add(predicted, term);
      }
      if (predicted != (*check)[u]) return Outcome::kNotPolynomial;
    }
    return Outcome::kOk;
  }

 private:
  const modular::Field& f_;
  const BalanceSystem& sys_;
  const Monomial& target_;
  const SimplexGrid& grid_;
  int vars_;
  unsigned threads_;
};

void check_symbolic_size(int n, int max_n, bool force) {
  if (n < 3) throw std::invalid_argument("stationary vector needs n >= 3");
  if (n > 7) throw CapExceeded("n = " + std::to_string(n) + " is beyond the supported range");
  if (n > max_n && !(force && n == 7)) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(max_n) + " (override required)");
  }
}

std::vector<Polynomial> fraction_free_spanning_vector(const TransitionMatrix& matrix);

}  // namespace

StationaryVector stationary_symbolic(int n, const SymbolicOptions& options) {
  check_symbolic_size(n, options.max_n, options.force);
  TransitionMatrix matrix(n);
  const bool cyclic = options.reduction == Reduction::kCyclic ||
                      (options.reduction == Reduction::kAuto && n >= 6);
  BalanceSystem sys = make_balance_system(matrix, cyclic);
  const Monomial target = normalization_target(n);
  const int degree = target.degree();
  const int vars = n - 1;
  SimplexGrid grid(n - 2, degree);
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());

  StationaryVector result;
  result.n = n;
  result.states = matrix.states();
  result.target = Polynomial::term(target);

  // Grid monomial p  ->  y^points[p] * x_{n-1}^{degree - |points[p]|}.
  std::vector<Monomial> grid_monomials;
  for (const auto& idx : grid.points) {
    std::vector<int> exps(idx.begin(), idx.end());
    exps.push_back(degree - point_weight(idx));
    grid_monomials.emplace_back(exps);
  }

  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<mpz_class>> residues(sys.unknowns,
                                               std::vector<mpz_class>(grid.points.size()));
  mpz_class modulus = 1;
  std::vector<std::vector<std::optional<mpq_class>>> previous;
  int singular_streak = 0;
  for (int k = 0; k < options.max_primes; ++k) {
    modular::Field field(modular::nth_prime(static_cast<std::size_t>(k)));
    PrimeRun run(field, sys, target, grid, vars, threads);
    std::vector<std::vector<u64>> coefficients;
    auto outcome = run.run(rng, coefficients);
    if (outcome == PrimeRun::Outcome::kSingular) {
      if (++singular_streak >= 4) {
        throw InvariantViolation("balance system singular at every sampled point (n = " +
                                 std::to_string(n) + ")");
      }
      continue;
    }
    singular_streak = 0;
    if (outcome == PrimeRun::Outcome::kNotPolynomial) {
      result.polynomial = false;
      result.diagnostic = "zeta is not a polynomial of degree " + std::to_string(degree) +
                          ": interpolant disagrees with an off-grid solve";
      if (n <= 4) result.raw = fraction_free_spanning_vector(matrix);
      return result;
    }

    // CRT: r <- r + M * ((c - r) * M^{-1} mod p).
    mpz_class p_z(static_cast<unsigned long>(field.prime()));
    u64 m_inv = field.inv(field.from(modulus));
    for (std::size_t u = 0; u < sys.unknowns; ++u) {
      for (std::size_t p = 0; p < grid.points.size(); ++p) {
        mpz_class& r = residues[u][p];
        u64 delta = field.mul(field.sub(coefficients[u][p], field.from(r)), m_inv);
        if (delta != 0) r += modulus * static_cast<unsigned long>(delta);
      }
    }
    modulus *= p_z;

    std::vector<std::vector<std::optional<mpq_class>>> lifted(
        sys.unknowns, std::vector<std::optional<mpq_class>>(grid.points.size()));
    bool complete = true;
    for (std::size_t u = 0; u < sys.unknowns; ++u) {
      for (std::size_t p = 0; p < grid.points.size(); ++p) {
        lifted[u][p] = residues[u][p] == 0 ? std::optional<mpq_class>(0)
                                           : modular::rational_reconstruct(residues[u][p], modulus);
        if (!lifted[u][p]) complete = false;
      }
    }
    bool stable = complete && lifted == previous;
    previous = std::move(lifted);
    if (!stable) continue;

    std::vector<Polynomial> per_unknown(sys.unknowns);
    for (std::size_t u = 0; u < sys.unknowns; ++u) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t p = 0; p < grid.points.size(); ++p) {
        if (*previous[u][p] != 0) terms.emplace_back(grid_monomials[p], *previous[u][p]);
      }
      per_unknown[u] = Polynomial::from_terms(std::move(terms));
    }
    std::vector<Polynomial> values(matrix.size());
    for (std::size_t s = 0; s < matrix.size(); ++s) values[s] = per_unknown[sys.unknown_of_state[s]];
    const auto w0 = matrix.index_of(Permutation::longest(n));
    if (values[w0] == result.target && !stationarity_failure(matrix, values)) {
      result.values = std::move(values);
      return result;
    }
  }
  throw InvariantViolation("modular reconstruction of zeta did not certify after " +
                           std::to_string(options.max_primes) + " primes (n = " +
                           std::to_string(n) + ")");
}

// ---------------------------------------------------------------------------
// Fraction-free route

namespace {

Polynomial divide_exactly(const Polynomial& p, const Polynomial& d, const char* where) {
  if (d.size() == 1 && d.leading_term().first.is_one() && d.leading_term().second == 1) return p;
  auto q = exact_div(p, d);
  if (!q) throw InvariantViolation(std::string("inexact division in ") + where);
  return std::move(*q);
}

std::vector<std::vector<Polynomial>> balance_matrix(const TransitionMatrix& matrix) {
  const std::size_t count = matrix.size();
  std::vector<std::vector<Polynomial>> rows(count, std::vector<Polynomial>(count));
  for (std::size_t w = 0; w < count; ++w) {
    for (const auto& m : matrix.moves(w)) {
      rows[m.target][w] += Polynomial::variable(m.variable);
      rows[w][w] -= Polynomial::variable(m.variable);
    }
  }
  return rows;
}

std::vector<Polynomial> fraction_free_spanning_vector(const TransitionMatrix& matrix) {
  auto rows = balance_matrix(matrix);
  rows.pop_back();  // the balance rows sum to zero
  auto u = nullspace_fraction_free(std::move(rows));
  Monomial content;
  bool first = true;
  for (const auto& entry : u) {
    if (entry.is_zero()) continue;
    content = first ? monomial_gcd(entry) : content.gcd(monomial_gcd(entry));
    first = false;
  }
  Polynomial divisor = Polynomial::term(content);
  for (auto& entry : u) {
    entry = divide_exactly(entry, divisor, "monomial content");
  }
  // Integer content, taken jointly over the vector so ratios are preserved.
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& entry : u) {
    for (const auto& [m, c] : entry.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  }
  if (num_gcd != 0) {
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    const auto w0 = matrix.index_of(Permutation::longest(matrix.n()));
    if (!u[w0].is_zero() && u[w0].leading_term().second < 0) factor = -factor;
    for (auto& entry : u) entry = entry.scaled(factor);
  }
  return u;
}

}  // namespace

std::vector<Polynomial> nullspace_fraction_free(std::vector<std::vector<Polynomial>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) throw std::invalid_argument("empty matrix");
  const std::size_t cols = a.front().size();
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  Polynomial prev = Polynomial::constant(1);

  for (;;) {
    // Column with the fewest live nonzeros, then its smallest entry.
    std::size_t best_col = cols, best_count = rows + 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (col_used[c]) continue;
      std::size_t count = 0;
      for (std::size_t r = 0; r < rows; ++r)
        if (!row_used[r] && !a[r][c].is_zero()) ++count;
      if (count > 0 && count < best_count) {
        best_count = count;
        best_col = c;
      }
    }
    if (best_col == cols) break;
    std::size_t best_row = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_used[r] || a[r][best_col].is_zero()) continue;
      if (best_row == rows || a[r][best_col].size() < a[best_row][best_col].size() ||
          (a[r][best_col].size() == a[best_row][best_col].size() &&
           a[r][best_col].degree() < a[best_row][best_col].degree())) {
        best_row = r;
      }
    }
    const std::size_t pr = best_row, pc = best_col;
    const Polynomial pivot = a[pr][pc];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      const Polynomial factor = a[r][pc];
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == pc) continue;
        if (a[r][c].is_zero() && (factor.is_zero() || a[pr][c].is_zero())) continue;
        Polynomial value = pivot * a[r][c];
        if (!factor.is_zero() && !a[pr][c].is_zero()) value -= factor * a[pr][c];
        a[r][c] = divide_exactly(value, prev, "fraction-free elimination");
      }
      a[r][pc] = Polynomial{};
    }
    row_used[pr] = true;
    col_used[pc] = true;
    pivots.emplace_back(pr, pc);
    prev = pivot;
  }

  if (pivots.size() + 1 != cols) {
    throw InvariantViolation("nullspace dimension is " + std::to_string(cols - pivots.size()) +
                             ", expected 1");
  }
  std::size_t free_col = 0;
  while (col_used[free_col]) ++free_col;
  // Every pivot row now reads  d * u[pc] + a[pr][free] * u[free] = 0.
  std::vector<Polynomial> u(cols);
  u[free_col] = prev;
  for (const auto& [pr, pc] : pivots) u[pc] = -a[pr][free_col];
  return u;
}

StationaryVector stationary_fraction_free(int n) {
  if (n < 3) throw std::invalid_argument("stationary vector needs n >= 3");
  TransitionMatrix matrix(n);
  StationaryVector result;
  result.n = n;
  result.states = matrix.states();
  result.target = Polynomial::term(normalization_target(n));
  auto u = fraction_free_spanning_vector(matrix);
  const auto w0 = matrix.index_of(Permutation::longest(n));
  if (u[w0].is_zero()) throw InvariantViolation("spanning vector vanishes at w_0");
  result.values.reserve(u.size());
  for (std::size_t s = 0; s < u.size(); ++s) {
    auto q = exact_div(result.target * u[s], u[w0]);
    if (!q) {
      result.polynomial = false;
      result.diagnostic = "normalization of zeta(" + matrix.states()[s].to_string() +
                          ") is not a polynomial";
      result.values.clear();
      result.raw = std::move(u);
      return result;
    }
    result.values.push_back(std::move(*q));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Numeric routes

namespace {

void validate_point(int n, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != n - 1) {
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " values for x");
  }
  Rational total = 0;
  for (const auto& v : x) {
    if (v < 0) throw std::invalid_argument("x values must be nonnegative");
    total += v;
  }
  if (total > 1) throw std::invalid_argument("x values must sum to at most 1");
}

// Dense rows of P^T - I at x.
std::vector<std::vector<Rational>> numeric_balance(const TransitionMatrix& matrix,
                                                   std::span<const Rational> x) {
  const std::size_t count = matrix.size();
  std::vector<std::vector<Rational>> rows(count, std::vector<Rational>(count));
  for (std::size_t w = 0; w < count; ++w) {
    for (const auto& m : matrix.moves(w)) {
      rows[m.target][w] += x[m.variable];
      rows[w][w] -= x[m.variable];
    }
  }
  return rows;
}

std::size_t exact_rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= factor * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::map<Permutation, Rational> stationary_numeric(int n, std::span<const Rational> x) {
  validate_point(n, x);
  TransitionMatrix matrix(n);
  auto a = numeric_balance(matrix, x);
  const std::size_t count = matrix.size();
  std::vector<Rational> rhs(count, 0);
  a.back().assign(count, 1);
  rhs.back() = 1;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t p = c;
    while (p < count && a[p][c] == 0) ++p;
    if (p == count) {
      throw std::invalid_argument("stationary law is not unique at this point");
    }
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t i = 0; i < count; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational factor = a[i][c] / a[c][c];
      for (std::size_t j = c; j < count; ++j)
        if (a[c][j] != 0) a[i][j] -= factor * a[c][j];
      rhs[i] -= factor * rhs[c];
    }
  }
  std::map<Permutation, Rational> law;
  for (std::size_t s = 0; s < count; ++s) law.emplace(matrix.states()[s], rhs[s] / a[s][s]);
  return law;
}

std::size_t transition_rank(const TransitionMatrix& matrix, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != matrix.n() - 1) {
    throw std::invalid_argument("expected " + std::to_string(matrix.n() - 1) + " values for x");
  }
  auto a = numeric_balance(matrix, x);
  const std::size_t count = matrix.size();
  // Rank mod p never exceeds the rank over Q, and the columns of P^T - I sum
  // to zero, so a modular rank of count - 1 settles it.
  Integer den = 1;
  for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  modular::Field field(modular::nth_prime(0));
  modular::DenseMatrix m(count, count);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < count; ++c) {
      if (a[r][c] == 0) continue;
      Rational scaled = a[r][c] * den;
      m.at(r, c) = field.from(scaled.get_num());
    }
  }
  std::size_t r = modular::rank(field, std::move(m));
  if (r + 1 == count) return r;
  return exact_rank(std::move(a));
}

RankReport verify_nullspace_rank(int n, int trials, std::uint64_t seed) {
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
  TransitionMatrix matrix(n);
  RankReport report;
  report.n = n;
  report.expected = matrix.size() - 1;
  static const int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> pool(std::begin(kPrimes), std::end(kPrimes));
    std::vector<int> numerators;
    for (int k = 0; k < n - 1; ++k) {
      std::size_t pick = rng() % pool.size();
      numerators.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<long>(pick));
    }
    int sum = 0;
    for (int v : numerators) sum += v;
    mpz_class den(sum + static_cast<int>(rng() % 1000) + 1);
    mpz_nextprime(den.get_mpz_t(), den.get_mpz_t());
    std::vector<Rational> x;
    for (int v : numerators) {
      Rational q(v, den);
      q.canonicalize();
      x.push_back(q);
    }
    std::size_t r = transition_rank(matrix, x);
    report.ranks.push_back(r);
    report.points.push_back(x);
    if (r != report.expected) report.all_full = false;
  }
  return report;
}

nlohmann::json RankReport::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : p) row.push_back(v.get_str());
    pts.push_back(row);
  }
  return {{"n", n}, {"expected_rank", expected}, {"ranks", ranks},
          {"points", pts}, {"all_full_rank", all_full}};
}

// ---------------------------------------------------------------------------
// Serialization

nlohmann::json to_json(const StationaryVector& zeta) {
  nlohmann::json values = nlohmann::json::object();
  const auto& source = zeta.polynomial ? zeta.values : zeta.raw;
  for (std::size_t s = 0; s < source.size(); ++s) {
    values[zeta.states[s].to_string()] = source[s].to_string();
  }
  nlohmann::json out = {{"n", zeta.n}, {"polynomial", zeta.polynomial}, {"zeta", values}};
  if (!zeta.diagnostic.empty()) out["diagnostic"] = zeta.diagnostic;
  return out;
}

StationaryVector stationary_from_json(const nlohmann::json& j) {
  StationaryVector zeta;
  zeta.n = j.at("n").get<int>();
  if (zeta.n < 3) throw std::invalid_argument("stationary vector JSON: n < 3");
  zeta.states = all_permutations(zeta.n);
  zeta.target = Polynomial::term(normalization_target(zeta.n));
  zeta.polynomial = j.value("polynomial", true);
  zeta.diagnostic = j.value("diagnostic", std::string());
  const auto& values = j.at("zeta");
  auto& dest = zeta.polynomial ? zeta.values : zeta.raw;
  if (values.size() == 0) return zeta;
  dest.resize(zeta.states.size());
  for (std::size_t s = 0; s < zeta.states.size(); ++s) {
    dest[s] = Polynomial::parse(values.at(zeta.states[s].to_string()).get<std::string>());
  }
  return zeta;
}

}  // namespace schubert_chain
