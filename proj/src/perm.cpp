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

#include "schubert_chain/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubert_chain {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int letter : word_) {
    if (letter < 1 || letter > size() || seen[letter]) {
      throw std::invalid_argument("not a permutation of {1.." +
                                  std::to_string(size()) + "}");
    }
    seen[letter] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed.empty()) throw std::invalid_argument("empty permutation");
  if (trimmed.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= trimmed.size()) {
      auto end = trimmed.find(',', start);
      if (end == std::string_view::npos) end = trimmed.size();
      auto piece = trimmed.substr(start, end - start);
      while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
      while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
      if (piece.empty() ||
          !std::all_of(piece.begin(), piece.end(),
                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("bad permutation letter in '" +
                                    std::string(text) + "'");
      }
      w.push_back(std::stoi(std::string(piece)));
      start = end + 1;
    }
  } else {
    for (char c : trimmed) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad permutation letter in '" +
                                    std::string(text) + "'");
      }
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inversions = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (word_[i] > word_[j]) ++inversions;
  return inversions;
}

Permutation Permutation::inverse() const {
  std::vector<int> u(word_.size());
  for (int i = 0; i < size(); ++i) u[word_[i] - 1] = i + 1;
  return Permutation(std::move(u));
}

int Permutation::position_of(int value) const {
  auto it = std::find(word_.begin(), word_.end(), value);
  if (it == word_.end()) throw std::invalid_argument("value not in permutation");
  return static_cast<int>(it - word_.begin()) + 1;
}

Permutation Permutation::swap_values(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > size() || j > size()) {
    throw std::invalid_argument("swap_values needs distinct letters in 1..n");
  }
  auto w = word_;
  for (int& letter : w) {
    if (letter == i) letter = j;
    else if (letter == j) letter = i;
  }
  return Permutation(std::move(w));
}

Permutation Permutation::swap_positions(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("swap_positions out of range");
  auto w = word_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::cyclic_shift() const {
  auto w = word_;
  for (int& letter : w) letter = letter % size() + 1;
  return Permutation(std::move(w));
}

LehmerCode Permutation::code() const {
  LehmerCode c(word_.size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (word_[j] < word_[i]) ++c[i];
  return c;
}

Permutation Permutation::from_code(std::span<const int> code) {
  int m = 1;
  for (int i = 0; i < static_cast<int>(code.size()); ++i) {
    if (code[i] < 0) throw std::invalid_argument("negative Lehmer code entry");
    if (code[i] > 0) m = std::max(m, i + 1 + code[i]);
  }
  std::vector<int> available(m);
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> w;
  w.reserve(m);
  for (int i = 0; i < m; ++i) {
    int c = i < static_cast<int>(code.size()) ? code[i] : 0;
    w.push_back(available[c]);
    available.erase(available.begin() + c);
  }
  return Permutation(std::move(w));
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (word_[i - 1] > word_[i]) d.push_back(i);
  return d;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> peeled;
  Permutation w = *this;
  for (;;) {
    int descent = 0;
    for (int i = 1; i < w.size(); ++i) {
      if (w.word_[i - 1] > w.word_[i]) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    peeled.push_back(descent);
    std::swap(w.word_[descent - 1], w.word_[descent]);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

Permutation Permutation::canonical() const {
  auto w = word_;
  while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
  if (w.empty()) w.push_back(1);
  Permutation p;
  p.word_ = std::move(w);
  return p;
}

bool Permutation::canonical_equal(const Permutation& other) const {
  return canonical() == other.canonical();
}

Permutation Permutation::embedded(int m) const {
  auto c = canonical();
  if (m < c.size()) throw std::invalid_argument("ambient size too small for embedding");
  auto w = c.word_;
  for (int k = c.size() + 1; k <= m; ++k) w.push_back(k);
  Permutation p;
  p.word_ = std::move(w);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (word_[i] != i + 1) return false;
  return true;
}

std::size_t Permutation::lex_rank() const {
  auto c = code();
  std::size_t rank = 0;
  for (int i = 0; i < size(); ++i) rank = rank * (size() - i) + c[i];
  return rank;
}

std::string Permutation::to_string() const {
  std::string out;
  bool wide = size() > 9;
  for (int i = 0; i < size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

void collect_reduced_words(const Permutation& w, std::vector<int>& suffix,
                           std::vector<std::vector<int>>& out) {
  auto d = w.descents();
  if (d.empty()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i : d) {
    suffix.push_back(i);
    collect_reduced_words(w.swap_positions(i), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_reduced_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(u.size());
  for (int i = 1; i <= u.size(); ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace schubert_chain
