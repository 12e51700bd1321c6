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

#include "modular.hpp"

#include <mutex>
#include <utility>

namespace schubert_chain::modular {

u64 Field::pow(u64 a, u64 e) const {
  u64 result = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

u64 Field::from(const mpz_class& z) const {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  mpz_class r;
  mpz_class modulus(static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  return r.get_ui();
}

u64 Field::from_signed(long long v) const {
  if (v >= 0) return static_cast<u64>(v) % p_;
  u64 m = static_cast<u64>(-(v + 1)) + 1;
  return neg(m % p_);
}

u64 nth_prime(std::size_t k) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  while (primes.size() <= k) {
    mpz_class candidate(primes.empty() ? (1UL << 62) : static_cast<unsigned long>(primes.back()));
    do {
      candidate -= 1;
    } while (mpz_probab_prime_p(candidate.get_mpz_t(), 40) == 0);
    primes.push_back(candidate.get_ui());
  }
  return primes[k];
}

std::optional<std::vector<u64>> solve(const Field& f, DenseMatrix a, std::vector<u64> rhs) {
  const std::size_t n = a.rows;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(rhs[pivot], rhs[col]);
    }
    u64 inv = f.inv(a.at(col, col));
    u64* prow = &a.data[col * n];
    for (std::size_t j = col; j < n; ++j) prow[j] = f.mul(prow[j], inv);
    rhs[col] = f.mul(rhs[col], inv);
    // Sparse pivot rows are common; only touch their nonzero columns.
    std::vector<std::size_t> support;
    for (std::size_t j = col + 1; j < n; ++j)
      if (prow[j] != 0) support.push_back(j);
    for (std::size_t r = col + 1; r < n; ++r) {
      u64 factor = a.at(r, col);
      if (factor == 0) continue;
      u64* row = &a.data[r * n];
      row[col] = 0;
      for (std::size_t j : support) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
      rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[col]));
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    const u64* prow = &a.data[col * n];
    u64 v = rhs[col];
    for (std::size_t j = col + 1; j < n; ++j)
      if (prow[j] != 0) v = f.sub(v, f.mul(prow[j], rhs[j]));
    rhs[col] = v;
  }
  return rhs;
}

std::size_t rank(const Field& f, DenseMatrix a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols && r < a.rows; ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    u64 inv = f.inv(a.at(r, col));
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      u64 factor = f.mul(a.at(i, col), inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j) {
        if (a.at(r, j) != 0) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
      }
    }
    ++r;
  }
  return r;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  // Extended Euclid on (m, a) stopped once the remainder drops below the bound.
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class result(r1, t1);
  result.canonicalize();
  return result;
}

}  // namespace schubert_chain::modular
