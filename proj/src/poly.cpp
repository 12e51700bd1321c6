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

#include "schubert_chain/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace schubert_chain {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::span<const int> exponents) {
  exps_.fill(0);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int e = exponents[i];
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (i >= static_cast<std::size_t>(kMaxVariables)) {
      throw std::invalid_argument("too many variables (max " +
                                  std::to_string(kMaxVariables) + ")");
    }
    if (e > 255) throw std::invalid_argument("exponent exceeds 255");
    exps_[i] = static_cast<std::uint8_t>(e);
  }
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVariables) {
    throw std::invalid_argument("variable index out of range");
  }
  if (power < 0 || power > 255) throw std::invalid_argument("bad power");
  Monomial m;
  m.exps_[index] = static_cast<std::uint8_t>(power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

int Monomial::num_variables() const {
  for (int i = kMaxVariables; i > 0; --i)
    if (exps_[i - 1] != 0) return i;
  return 0;
}

std::vector<int> Monomial::exponents() const {
  std::vector<int> out(exps_.begin(), exps_.begin() + num_variables());
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i)
    m.exps_[i] = static_cast<std::uint8_t>(other.exps_[i] - exps_[i]);
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i)
    m.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return m;
}

Monomial Monomial::swapped(int i, int j) const {
  Monomial m = *this;
  std::swap(m.exps_[i], m.exps_[j]);
  return m;
}

std::size_t Monomial::hash() const {
  std::uint64_t lo, hi;
  std::memcpy(&lo, exps_.data(), 8);
  std::memcpy(&hi, exps_.data() + 8, 8);
  std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
  h ^= hi + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVariables; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
  }
  return false;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_less(a, b);
}

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(int index, int power) {
  return term(Monomial::variable(index, power));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grlex_less(b.first, a.first);
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return grlex_less(key, t.first); });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int Polynomial::num_variables() const {
  int v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, m.num_variables());
  return v;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.front().first.degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

namespace {

// Merge two sorted term lists: a + sign * b.
std::vector<Polynomial::Term> merge_terms(std::span<const Polynomial::Term> a,
                                          std::span<const Polynomial::Term> b,
                                          bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].first, a[i].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].first, b[j].first)) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second)
                            : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].first.is_one()) return b.scaled(a.terms_[0].second);
  if (b.size() == 1 && b.terms_[0].first.is_one()) return a.scaled(b.terms_[0].second);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb);
      if (inserted) {
        mpq_mul(it->second.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return grlex_less(y.first, x.first); });
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& [m, coef] : p.terms_) coef *= c;
  return p;
}

Polynomial Polynomial::times(const Monomial& m) const {
  // Multiplying by a monomial preserves grlex order.
  Polynomial p = *this;
  for (auto& [mono, c] : p.terms_) mono = mono * m;
  return p;
}

Polynomial Polynomial::swap_variables(int i, int j) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) terms.emplace_back(m.swapped(i, j), c);
  return from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string variable_name(int index, VariableNames names) {
  if (names == VariableNames::kLetters && index < 4) {
    return std::string(1, static_cast<char>('a' + index));
  }
  return "x" + std::to_string(index + 1);
}

}  // namespace

std::string monomial_to_string(const Monomial& m, VariableNames names) {
  std::string out;
  for (int i = 0; i < m.num_variables(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, names);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string(VariableNames names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Rational magnitude = abs(c);
    if (negative) out += '-';
    else if (!first) out += '+';
    first = false;
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += monomial_to_string(m, names);
    }
  }
  return out;
}

std::string rational_to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    std::size_t k = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (k == part.size()) return false;
    for (; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) +
                                "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expression() {
    Polynomial sum;
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial t = product();
    sum = negate ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial next = product();
      if (c == '+') sum += next;
      else sum -= next;
    }
    return sum;
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(' ||
           (c >= 'a' && c <= 'd');
  }

  Polynomial product() {
    Polynomial p = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = p * power();
      } else if (starts_factor(c)) {
        p = p * power();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Polynomial result = Polynomial::constant(1);
      for (int k = 0; k < e; ++k) result = result * base;
      return result;
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
        if (den_start == pos_) fail("expected denominator");
      }
      return Polynomial::constant(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected variable index after 'x'");
      int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (k < 1 || k > kMaxVariables) fail("variable index out of range");
      return Polynomial::variable(k - 1);
    }
    if (c >= 'a' && c <= 'd') {
      ++pos_;
      return Polynomial::variable(c - 'a');
    }
    fail("expected number, variable or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Free operations

std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div by zero polynomial");
  if (p.is_zero()) return Polynomial{};
  const auto& [lead_m, lead_c] = d.leading_term();
  if (d.size() == 1) {
    std::vector<Polynomial::Term> q;
    q.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      if (!lead_m.divides(m)) return std::nullopt;
      q.emplace_back(lead_m.quotient_of(m), c / lead_c);
    }
    return Polynomial::from_terms(std::move(q));
  }
  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& [m, c] : p.terms()) rem.emplace(m, c);
  std::vector<Polynomial::Term> quotient;
  auto rest = d.terms().subspan(1);
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead_m.divides(it->first)) return std::nullopt;
    Monomial qm = lead_m.quotient_of(it->first);
    Rational qc = it->second / lead_c;
    rem.erase(it);
    for (const auto& [m, c] : rest) {
      auto [slot, inserted] = rem.try_emplace(qm * m);
      slot->second -= qc * c;
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return Polynomial::from_terms(std::move(quotient));
}

Monomial monomial_gcd(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("monomial_gcd of zero polynomial");
  Monomial g = p.terms().front().first;
  for (const auto& [m, c] : p.terms()) g = g.gcd(m);
  return g;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (p.num_variables() > static_cast<int>(point.size())) {
    throw std::invalid_argument("evaluate: missing value for x" +
                                std::to_string(p.num_variables()));
  }
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (int i = 0; i < m.num_variables(); ++i) {
      for (int e = 0; e < m.exponent(i); ++e) v *= point[i];
    }
    total += v;
  }
  return total;
}

std::optional<int> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return 0;
  int d = p.terms().front().first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) return std::nullopt;
  return d;
}

bool has_nonnegative_integer_coeffs(const Polynomial& p) {
  for (const auto& [m, c] : p.terms())
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

Polynomial::Term min_monomial_lex(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("min_monomial_lex of zero polynomial");
  const Polynomial::Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (lex_less(t.first, best->first)) best = &t;
  return *best;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading_term().second < 0) factor = -factor;
  return p.scaled(factor);
}

nlohmann::json to_json(const Polynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"exps", m.exponents()}, {"coef", rational_to_fraction_string(c)}});
  }
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Polynomial::Term> terms;
  for (const auto& t : j) {
    auto exps = t.at("exps").get<std::vector<int>>();
    terms.emplace_back(Monomial(exps), parse_rational(t.at("coef").get<std::string>()));
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace schubert_chain
