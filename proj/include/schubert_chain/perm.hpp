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

#ifndef SCHUBERT_CHAIN_PERM_HPP
#define SCHUBERT_CHAIN_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert_chain {

/// Nonnegative integer sequence c_1..c_m with c_i = #{j > i : w_j < w_i}.
/// Trailing zeros are permitted and do not change the permutation it encodes.
using LehmerCode = std::vector<int>;

/// A permutation of {1..n} in one-line notation.
///
/// The ambient size n is part of the value: 123 and 1234 are different
/// Permutation objects (operator== compares words), but they are equal under
/// canonical_equal(), which ignores trailing fixed points.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `word` is a bijection of {1..word.size()}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// The longest element n(n-1)...1.
  static Permutation longest(int n);

  /// "4123" for n <= 9, "4,1,2,3" otherwise (both forms accepted on input).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// One-based position access: w(i) = w_i.
  int operator()(int position) const { return word_[position - 1]; }
  std::span<const int> word() const { return word_; }

  /// Number of inversions.
  int length() const;
  Permutation inverse() const;
  /// Position of `value` (one-based), i.e. w^{-1}(value).
  int position_of(int value) const;

  /// Left multiplication by the transposition (i, j): exchanges the letters
  /// i and j wherever they occur.
  Permutation swap_values(int i, int j) const;
  /// Right multiplication by s_i: exchanges positions i and i+1.
  Permutation swap_positions(int i) const;

  /// Adds one to every letter, n wrapping to 1.
  Permutation cyclic_shift() const;

  LehmerCode code() const;
  static Permutation from_code(std::span<const int> code);

  /// Positions i (one-based) with w_i > w_{i+1}.
  std::vector<int> descents() const;

  /// Indices i_1..i_l (l = length()) with w = s_{i_1} s_{i_2} ... s_{i_l}:
  /// starting from the identity and swapping positions i_1, then i_2, ...
  /// rebuilds w. Built by repeatedly peeling the smallest descent.
  std::vector<int> reduced_word() const;

  /// Drops trailing fixed points; the identity becomes the empty word.
  Permutation canonical() const;
  bool canonical_equal(const Permutation& other) const;
  /// Same permutation viewed inside S_m, m >= canonical().size().
  Permutation embedded(int m) const;

  bool is_identity() const;

  /// Rank of the word in lexicographic order of S_n (0-based).
  std::size_t lex_rank() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Every reduced word of w (for small w; exponential in length).
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

/// Composition u*v as functions: (u*v)(i) = u(v(i)). Sizes must match.
Permutation compose(const Permutation& u, const Permutation& v);

std::uint64_t factorial(int n);

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_PERM_HPP
