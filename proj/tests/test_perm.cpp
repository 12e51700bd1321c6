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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "schubert_chain/perm.hpp"
#include "support.hpp"

using namespace schubert_chain;
using test_support::W;

namespace {

// Oracles: direct definitions, no shared code with the library.
int brute_inversions(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

std::vector<int> brute_code(const Permutation& w) {
  std::vector<int> c;
  for (int i = 1; i <= w.size(); ++i) {
    int k = 0;
    for (int j = i + 1; j <= w.size(); ++j) k += w(j) < w(i);
    c.push_back(k);
  }
  return c;
}

Permutation apply_word(int n, const std::vector<int>& word) {
  auto w = Permutation::identity(n);
  for (int i : word) w = w.swap_positions(i);
  return w;
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("parse and print") {
    CHECK(W("4123").to_string() == "4123");
    CHECK(W("4,1,2,3") == W("4123"));
    auto big = Permutation::identity(10);
    CHECK(big.to_string() == "1,2,3,4,5,6,7,8,9,10");
    CHECK(Permutation::parse(big.to_string()) == big);
    CHECK_THROWS_AS(W("1224"), std::invalid_argument);
    CHECK_THROWS_AS(W("124"), std::invalid_argument);
    CHECK_THROWS_AS(W("12a"), std::invalid_argument);
  }

  TEST_CASE("length examples") {
    CHECK(W("123").length() == 0);
    CHECK(W("321").length() == 3);
    CHECK(W("4231").length() == 5);
  }

  TEST_CASE("inverse examples") {
    CHECK(W("123").inverse() == W("123"));
    CHECK(W("231").inverse() == W("312"));
    CHECK(W("4123").inverse() == W("2341"));
  }

  TEST_CASE("swap_values examples") {
    CHECK(W("123").swap_values(1, 3) == W("321"));
    CHECK(W("321").swap_values(2, 3) == W("231"));
    for (const auto& w : all_permutations(4))
      for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(w.swap_values(i, j).swap_values(i, j) == w);
    CHECK_THROWS_AS(W("123").swap_values(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(W("123").swap_values(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(W("123").swap_values(1, 4), std::invalid_argument);
  }

  TEST_CASE("cyclic_shift examples") {
    CHECK(W("123").cyclic_shift() == W("231"));
    CHECK(W("4123").cyclic_shift() == W("1234"));
  }

  TEST_CASE("code and from_code examples") {
    CHECK(Permutation::identity(5).code() == LehmerCode(5, 0));
    CHECK(W("15234").code() == LehmerCode{0, 3, 0, 0, 0});
    std::vector<int> c{1, 1, 0};
    CHECK(Permutation::from_code(c) == W("231"));
  }

  TEST_CASE("reduced word examples") {
    CHECK(Permutation::identity(4).reduced_word().empty());
    CHECK(W("321").reduced_word().size() == 3);
    for (const auto& w : all_permutations(4)) {
      auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(apply_word(4, word) == w);
    }
  }

  TEST_CASE("statistics agree with brute-force oracles up to S_6") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& w : all_permutations(n)) {
        auto code = w.code();
        CHECK(code == brute_code(w));
        CHECK(w.length() == brute_inversions(w));
        int sum = 0;
        for (int c : code) sum += c;
        CHECK(sum == w.length());
        auto inv = w.inverse();
        for (int i = 1; i <= n; ++i) CHECK(inv(w(i)) == i);
      }
    }
  }

  TEST_CASE("from_code inverts code on S_5 up to trailing fixed points") {
    for (const auto& w : all_permutations(5)) {
      auto code = w.code();
      auto back = Permutation::from_code(code);
      CHECK(back.canonical_equal(w));
      CHECK(back.size() <= 5);
      if (!w.is_identity()) CHECK(back.size() == w.canonical().size());
    }
  }

  TEST_CASE("from_code matches a brute-force search over S_n") {
    for (const auto& w : all_permutations(4)) {
      auto code = brute_code(w);
      Permutation found;
      for (const auto& u : all_permutations(4))
        if (brute_code(u) == code) found = u;
      CHECK(Permutation::from_code(code).embedded(4) == found);
    }
  }

  TEST_CASE("cyclic shift is a bijection of order n on S_5") {
    std::set<Permutation> image;
    for (const auto& w : all_permutations(5)) {
      image.insert(w.cyclic_shift());
      auto u = w;
      for (int k = 0; k < 5; ++k) u = u.cyclic_shift();
      CHECK(u == w);
    }
    CHECK(image.size() == 120);
  }

  TEST_CASE("adjacent value swaps change length by one") {
    for (const auto& w : all_permutations(5))
      for (int i = 1; i < 5; ++i) CHECK(std::abs(w.swap_values(i, i + 1).length() - w.length()) == 1);
  }

  TEST_CASE("canonical form and embedding") {
    CHECK(W("1243").canonical_equal(W("12435")));
    CHECK_FALSE(W("1243") == W("12435"));
    CHECK(W("21").embedded(4) == W("2134"));
    CHECK(Permutation::identity(3).canonical_equal(Permutation::identity(7)));
    CHECK_THROWS_AS(W("2341").embedded(3), std::invalid_argument);
  }

  TEST_CASE("lexicographic order and ranks") {
    auto all = all_permutations(4);
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (std::size_t r = 0; r < all.size(); ++r) CHECK(all[r].lex_rank() == r);
  }

  TEST_CASE("all reduced words of w0 in S_4") {
    auto words = all_reduced_words(Permutation::longest(4));
    CHECK(words.size() == 16);
    for (const auto& word : words) CHECK(apply_word(4, word) == Permutation::longest(4));
  }

  TEST_CASE("descents") {
    CHECK(W("2413").descents() == std::vector<int>{2});
    CHECK(Permutation::longest(4).descents() == std::vector<int>{1, 2, 3});
  }

  TEST_CASE("compose") {
    auto u = W("231"), v = W("213");
    auto uv = compose(u, v);
    for (int i = 1; i <= 3; ++i) CHECK(uv(i) == u(v(i)));
    CHECK(compose(u, u.inverse()).is_identity());
  }
}
