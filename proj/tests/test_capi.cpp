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

// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>

#include "schubert_chain.h"

namespace {

struct Context {
  sc_context* ctx = sc_context_create();
  Context() { sc_context_set_cache_enabled(ctx, 0); }
  ~Context() { sc_context_destroy(ctx); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  sc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(sc_version()) == "1.0.0");
  CHECK(std::string(sc_status_string(SC_CAP_EXCEEDED)) == "cap exceeded");
}

TEST_CASE("zeta handle") {
  Context c;
  sc_zeta* z = nullptr;
  REQUIRE(sc_zeta_compute(c.ctx, 4, &z) == SC_OK);
  CHECK(sc_zeta_n(z) == 4);
  CHECK(sc_zeta_is_polynomial(z) == 1);
  char* out = nullptr;
  REQUIRE(sc_zeta_value(c.ctx, z, "4321", &out) == SC_OK);
  CHECK(take(out) == "x1^3*x2");
  CHECK(sc_zeta_value(c.ctx, z, "321", &out) == SC_INVALID_ARGUMENT);
  CHECK(std::string(sc_context_last_error(c.ctx)).find("S_n") != std::string::npos);
  REQUIRE(sc_zeta_render(c.ctx, z, "text", "cyclic", &out) == SC_OK);
  CHECK(take(out).find("4132  a^3*b+a^2*b^2+a*b^3") != std::string::npos);
  CHECK(sc_zeta_render(c.ctx, z, "pdf", "all", &out) == SC_INVALID_ARGUMENT);
  sc_zeta_destroy(z);
}

TEST_CASE("caps") {
  Context c;
  sc_zeta* z = nullptr;
  CHECK(sc_zeta_compute(c.ctx, 7, &z) == SC_CAP_EXCEEDED);
  CHECK(sc_zeta_compute(c.ctx, 2, &z) == SC_INVALID_ARGUMENT);
  CHECK(sc_context_set_limits(c.ctx, 4, 0) == SC_OK);
  CHECK(sc_zeta_compute(c.ctx, 5, &z) == SC_CAP_EXCEEDED);
  CHECK(sc_context_set_limits(c.ctx, 2, 0) == SC_INVALID_ARGUMENT);
}

TEST_CASE("check") {
  Context c;
  char* out = nullptr;
  CHECK(sc_check(c.ctx, 4, "all", "text", &out) == SC_OK);
  CHECK(take(out).find("all checks hold") != std::string::npos);
  REQUIRE(sc_context_set_adjacency(c.ctx, "cyclic") == SC_OK);
  CHECK(sc_check(c.ctx, 4, "special-factors", "json", &out) == SC_CONJECTURE_FAILED);
  CHECK(take(out).find("\"witnesses\"") != std::string::npos);
  CHECK(sc_check(c.ctx, 4, "nonsense", "text", &out) == SC_INVALID_ARGUMENT);
  CHECK(sc_context_set_adjacency(c.ctx, "sideways") == SC_INVALID_ARGUMENT);
}

TEST_CASE("schubert and expand") {
  Context c;
  char* out = nullptr;
  REQUIRE(sc_schubert(c.ctx, "1423", 0, &out) == SC_OK);
  CHECK(take(out) == "x1^2+x1*x2+x2^2");
  REQUIRE(sc_expand(c.ctx, "x1*x2+x1*x3+x2*x3", "text", &out) == SC_OK);
  CHECK(take(out) == "S[1342]\n");
  CHECK(sc_expand(c.ctx, "x1+", "text", &out) == SC_INVALID_ARGUMENT);
  CHECK(sc_schubert(c.ctx, "1224", 0, &out) == SC_INVALID_ARGUMENT);
  CHECK(sc_schubert(c.ctx, nullptr, 0, &out) == SC_INVALID_ARGUMENT);
}

TEST_CASE("matrix, rank and numeric") {
  Context c;
  char* out = nullptr;
  REQUIRE(sc_matrix(c.ctx, 3, "json", &out) == SC_OK);
  CHECK(take(out).find("\"entries\"") != std::string::npos);
  REQUIRE(sc_rank(c.ctx, 3, 3, 7, &out) == SC_OK);
  CHECK(take(out).find("\"all_full_rank\": true") != std::string::npos);
  const char* x[] = {"1/3", "0.3333333333333333333"};
  CHECK(sc_stationary_numeric(c.ctx, 3, x, 2, &out) == SC_OK);
  sc_string_free(out);
  const char* third[] = {"1/3", "1/3"};
  REQUIRE(sc_stationary_numeric(c.ctx, 3, third, 2, &out) == SC_OK);
  CHECK(take(out).find("\"123\": \"2/9\"") != std::string::npos);
  const char* bad[] = {"2/3", "2/3"};
  CHECK(sc_stationary_numeric(c.ctx, 3, bad, 2, &out) == SC_INVALID_ARGUMENT);
}

TEST_CASE("simulate") {
  Context c;
  sc_simulation_config config;
  sc_simulation_config_init(&config);
  const char* x[] = {"0.25", "1/4", "0.25"};
  config.n = 4;
  config.x = x;
  config.x_count = 3;
  config.steps = 1000000;
  config.seed = 7;
  config.compare_exact = 1;
  char* out = nullptr;
  REQUIRE(sc_simulate(c.ctx, &config, &out) == SC_OK);
  auto text = take(out);
  auto pos = text.find("\"tv_to_exact\": ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(text.substr(pos + 15)) < 0.01);
  config.x_count = 2;
  CHECK(sc_simulate(c.ctx, &config, &out) == SC_INVALID_ARGUMENT);
}

TEST_CASE("cache directory through the C API") {
  auto dir = std::filesystem::temp_directory_path() / "schubert-chain-capi-cache";
  std::filesystem::remove_all(dir);
  sc_context* ctx = sc_context_create();
  sc_context_set_cache_dir(ctx, dir.c_str());
  sc_zeta* z = nullptr;
  REQUIRE(sc_zeta_compute(ctx, 3, &z) == SC_OK);
  sc_zeta_destroy(z);
  sc_context_destroy(ctx);
  CHECK(std::filesystem::exists(dir / "zeta-n3.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("null arguments") {
  CHECK(sc_zeta_compute(nullptr, 3, nullptr) == SC_INVALID_ARGUMENT);
  Context c;
  CHECK(sc_zeta_compute(c.ctx, 3, nullptr) == SC_INVALID_ARGUMENT);
  CHECK(sc_zeta_n(nullptr) == 0);
}
