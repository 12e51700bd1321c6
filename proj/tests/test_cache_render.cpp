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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "schubert_chain/cache.hpp"
#include "schubert_chain/error.hpp"
#include "schubert_chain/render.hpp"
#include "support.hpp"

using namespace schubert_chain;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("schubert-chain-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("round-trip keeps a stationary vector") {
    TempDir dir;
    ZetaCache cache(dir.path);
    CHECK_FALSE(cache.load(4));
    auto z = stationary_symbolic(4);
    cache.store(z);
    auto back = cache.load(4);
    REQUIRE(back);
    CHECK(back->values == z.values);
    CHECK_FALSE(stationarity_failure(TransitionMatrix(4), back->values));
    CHECK_FALSE(cache.load(3));
  }

  TEST_CASE("checksum and version mismatches invalidate the entry") {
    TempDir dir;
    ZetaCache cache(dir.path);
    cache.store(stationary_symbolic(3));
    auto path = cache.entry_path(3);
    nlohmann::json entry;
    std::ifstream(path) >> entry;

    auto tampered = entry;
    tampered["zeta"]["zeta"]["123"] = "x1+2*x2";
    std::ofstream(path) << tampered.dump();
    CHECK_FALSE(cache.load(3));

    auto old = entry;
    old["engine_version"] = "schubert-chain-engine/0";
    std::ofstream(path) << old.dump();
    CHECK_FALSE(cache.load(3));

    std::ofstream(path) << "{ not json";
    CHECK_FALSE(cache.load(3));

    std::ofstream(path) << entry.dump();
    CHECK(cache.load(3));
  }

  TEST_CASE("directory resolution order") {
    CHECK(ZetaCache::resolve_directory("flagdir") == fs::path("flagdir"));
    ::setenv("SCHUBERT_CHAIN_CACHE_DIR", "/tmp/from-env", 1);
    CHECK(ZetaCache::resolve_directory() == fs::path("/tmp/from-env"));
    ::unsetenv("SCHUBERT_CHAIN_CACHE_DIR");
    CHECK(ZetaCache::resolve_directory() == fs::path(".schubert-chain-cache"));
  }

  TEST_CASE("unwritable directory raises IoError") {
    TempDir dir;
    auto blocker = dir.path / "file";
    std::ofstream(blocker) << "x";
    ZetaCache cache(blocker / "sub");
    CHECK_THROWS_AS(cache.store(stationary_symbolic(3)), IoError);
  }

  TEST_CASE("checksum is CRC-32") {
    CHECK(checksum_hex("123456789") == "cbf43926");
  }
}

TEST_SUITE("render") {
  TEST_CASE("cyclic representatives of n = 4") {
    auto z = stationary_symbolic(4);
    auto text = render_zeta(z, Format::kText, Reps::kCyclic);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    CHECK(text.find("4321  a^3*b\n") != std::string::npos);
    auto all = render_zeta(z, Format::kText, Reps::kAll);
    CHECK(std::count(all.begin(), all.end(), '\n') == 24);
  }

  TEST_CASE("n = 3 rows match Figure 1") {
    auto text = render_zeta(stationary_symbolic(3), Format::kText, Reps::kAll);
    CHECK(text == "123  a+b\n132  a\n213  a\n231  a+b\n312  a+b\n321  a\n");
  }

  TEST_CASE("latex table layout") {
    auto latex = render_zeta(stationary_symbolic(4), Format::kLatex, Reps::kCyclic);
    CHECK(latex.find("\\begin{tabular}{|c|c|c|}") != std::string::npos);
    CHECK(latex.find("4132&$(a^2+ab+b^2)ab$&$\\Schub_{1423}ab$\\\\") != std::string::npos);
    CHECK(latex.find("4321&$a^3b$&$a^3b$\\\\") != std::string::npos);
    auto five = render_zeta(stationary_symbolic(5), Format::kLatex, Reps::kCyclic);
    CHECK(std::count(five.begin(), five.end(), '&') == 2 * (24 + 1));
  }

  TEST_CASE("json rows") {
    auto j = nlohmann::json::parse(render_zeta(stationary_symbolic(3), Format::kJson, Reps::kCyclic));
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["w"] == "312");
    CHECK(j["rows"][0]["zeta"] == "x1+x2");
  }

  TEST_CASE("matrix text") {
    auto text = render_matrix(TransitionMatrix(3), Format::kText);
    CHECK(text.find("123 -> 321: a\n") != std::string::npos);
    CHECK(text.find("123 -> 123: -a+1\n") != std::string::npos);
    CHECK_THROWS_AS(render_matrix(TransitionMatrix(3), Format::kLatex), std::invalid_argument);
  }

  TEST_CASE("expansion text") {
    SchubertExpansion e{{test_support::W("132"), 1}, {test_support::W("21"), Rational(-1, 2)}};
    CHECK(expansion_to_string(e) == "S[132] - 1/2*S[21]");
    CHECK(expansion_to_string({}) == "0");
  }

  TEST_CASE("format names") {
    CHECK(parse_format("latex") == Format::kLatex);
    CHECK(parse_reps("cyclic") == Reps::kCyclic);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
    CHECK_THROWS_AS(parse_reps("some"), std::invalid_argument);
  }
}
