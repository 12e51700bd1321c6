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

// Arithmetic modulo word-size primes, dense elimination, and lifting of
// residues back to rationals. Internal to the library.
#ifndef SCHUBERT_CHAIN_SRC_MODULAR_HPP
#define SCHUBERT_CHAIN_SRC_MODULAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace schubert_chain::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class Field {
 public:
  explicit Field(u64 p) : p_(p) {}
  u64 prime() const { return p_; }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % p_); }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p_ - 2); }
  u64 from(const mpz_class& z) const;
  u64 from_signed(long long v) const;

 private:
  u64 p_;
};

/// The k-th prime below 2^62 (k = 0 is the largest). Memoized.
u64 nth_prime(std::size_t k);

/// Dense row-major square matrix mod p.
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<u64> data;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  u64& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  u64 at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Solves a * x = rhs in place; nullopt when a is singular.
std::optional<std::vector<u64>> solve(const Field& f, DenseMatrix a, std::vector<u64> rhs);

std::size_t rank(const Field& f, DenseMatrix a);

/// r/s with |r|, s <= sqrt(m/2) and r = s * a (mod m), or nullopt.
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

}  // namespace schubert_chain::modular

#endif  // SCHUBERT_CHAIN_SRC_MODULAR_HPP
