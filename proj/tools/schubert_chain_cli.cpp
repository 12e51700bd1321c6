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

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "schubert_chain.h"

namespace {

enum ExitCode { kSuccess = 0, kConjectureFailed = 1, kUsage = 2, kInternal = 3 };

int exit_code_for(sc_status status) {
  switch (status) {
    case SC_OK: return kSuccess;
    case SC_CONJECTURE_FAILED: return kConjectureFailed;
    case SC_INVALID_ARGUMENT:
    case SC_CAP_EXCEEDED: return kUsage;
    default: return kInternal;
  }
}

struct ContextDeleter {
  void operator()(sc_context* ctx) const { sc_context_destroy(ctx); }
};
using Context = std::unique_ptr<sc_context, ContextDeleter>;

struct ZetaDeleter {
  void operator()(sc_zeta* z) const { sc_zeta_destroy(z); }
};

struct GlobalOptions {
  std::string cache_dir;
  bool no_cache = false;
  int max_n = 6;
  bool force = false;
  unsigned threads = 0;
};

// Prints the output string (if any) and any diagnostics; returns the exit code.
int finish(sc_context* ctx, sc_status status, char* out) {
  if (out) {
    std::fputs(out, stdout);
    sc_string_free(out);
  }
  const char* warning = sc_context_last_warning(ctx);
  if (warning && *warning) std::cerr << "warning: " << warning << "\n";
  if (status != SC_OK && status != SC_CONJECTURE_FAILED) {
    std::cerr << "error (" << sc_status_string(status) << "): " << sc_context_last_error(ctx)
              << "\n";
  }
  return exit_code_for(status);
}

std::vector<const char*> c_strings(const std::vector<std::string>& values) {
  std::vector<const char*> out;
  for (const auto& v : values) out.push_back(v.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stationary distribution of the Schubert-weighted chain on S_n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sc_version());

  GlobalOptions global;
  app.add_option("--cache-dir", global.cache_dir, "Cache directory")->group("Global");
  app.add_flag("--no-cache", global.no_cache, "Neither read nor write the disk cache")->group("Global");
  app.add_option("--max-n", global.max_n, "Largest n solved symbolically")
      ->check(CLI::Range(3, 7))
      ->group("Global");
  app.add_flag("--force", global.force, "Allow n = 7 (very slow, several GB of memory)")
      ->group("Global");
  app.add_option("--threads", global.threads, "Worker threads, 0 = all cores")->group("Global");

  int n = 3;
  std::string format = "text";
  std::string reps = "all";

  auto* zeta_cmd = app.add_subcommand("zeta", "Print the normalized stationary vector");
  zeta_cmd->add_option("-n,--n", n, "Size of the symmetric group")->required();
  zeta_cmd->add_option("--format", format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  zeta_cmd->add_option("--reps", reps, "all states, or cyclic (one per orbit, w_1 = n)")
      ->check(CLI::IsMember({"all", "cyclic"}));

  std::string which = "all";
  std::string adjacency = "trailing";
  int rank_trials = 20;
  std::uint64_t rank_seed = 1;
  auto* check_cmd = app.add_subcommand("check", "Test the propositions and conjectures");
  check_cmd->add_option("-n,--n", n, "Size of the symmetric group")->required();
  check_cmd->add_option("--check,--conjecture", which,
                        "all, main, monomial-factor, special-value, special-factors, propositions");
  check_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--adjacency", adjacency, "Reading of adjacent strings: trailing, cyclic, linear")
      ->check(CLI::IsMember({"trailing", "cyclic", "linear"}));
  check_cmd->add_option("--rank-trials", rank_trials, "Random points for the rank check");
  check_cmd->add_option("--rank-seed", rank_seed, "Seed for the rank check");

  auto* matrix_cmd = app.add_subcommand("matrix", "Print the transition matrix");
  matrix_cmd->add_option("-n,--n", n, "Size of the symmetric group")->required();
  matrix_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string perm;
  bool letters = false;
  auto* schubert_cmd = app.add_subcommand("schubert", "Print a Schubert polynomial");
  schubert_cmd->add_option("perm,--perm", perm, "Permutation in one-line notation")->required();
  schubert_cmd->add_flag("--letters", letters, "Name variables a, b, c, d");

  std::string poly;
  auto* expand_cmd = app.add_subcommand("expand", "Expand a polynomial in the Schubert basis");
  expand_cmd->add_option("poly,--poly", poly, "Polynomial, e.g. 'x1^2+x1*x2'")->required();
  expand_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  sc_simulation_config sim;
  sc_simulation_config_init(&sim);
  std::vector<std::string> x_values;
  std::string start;
  bool compare_exact = false;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the stationary law");
  simulate_cmd->add_option("-n,--n", n, "Size of the symmetric group")->required();
  simulate_cmd->add_option("--x", x_values, "x_1 .. x_{n-1}; defaults to 1/n each");
  simulate_cmd->add_option("--steps", sim.steps, "Steps per trajectory");
  simulate_cmd->add_option("--seed", sim.seed, "Master seed");
  simulate_cmd->add_option("--start", start, "Starting permutation (default identity)");
  simulate_cmd->add_option("--burn-in", sim.burn_in, "Fraction of steps discarded")
      ->check(CLI::Range(0.0, 0.999999));
  simulate_cmd->add_option("--trajectories", sim.trajectories, "Independent trajectories");
  simulate_cmd->add_flag("--compare-exact", compare_exact, "Report TV distance to the exact law");

  int trials = 20;
  std::uint64_t seed = 1;
  auto* rank_cmd = app.add_subcommand("rank", "Rank of P^T - I at random rational points");
  rank_cmd->add_option("-n,--n", n, "Size of the symmetric group")->required();
  rank_cmd->add_option("--trials", trials, "Number of points");
  rank_cmd->add_option("--seed", seed, "Seed");

  auto* numeric_cmd = app.add_subcommand("numeric", "Exact stationary law at a rational point");
  numeric_cmd->add_option("-n,--n", n, "Size of the symmetric group")->required();
  numeric_cmd->add_option("--x", x_values, "x_1 .. x_{n-1}; defaults to 1/n each");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Context ctx(sc_context_create());
  if (!ctx) {
    std::cerr << "error: cannot create context\n";
    return kInternal;
  }
  sc_context_set_cache_dir(ctx.get(), global.cache_dir.c_str());
  sc_context_set_cache_enabled(ctx.get(), global.no_cache ? 0 : 1);
  sc_context_set_threads(ctx.get(), global.threads);
  if (sc_status s = sc_context_set_limits(ctx.get(), global.max_n, global.force ? 1 : 0); s != SC_OK) {
    return finish(ctx.get(), s, nullptr);
  }
  if (global.force && n == 7) {
    std::cerr << "warning: n = 7 has 5040 states; expect hours of computation and several GB "
                 "of memory\n";
  }

  auto default_x = [&] {
    if (x_values.empty()) x_values.assign(n - 1, "1/" + std::to_string(n));
  };

  char* out = nullptr;
  sc_status status = SC_OK;
  sc_context* c = ctx.get();

  if (*zeta_cmd) {
    sc_zeta* raw = nullptr;
    status = sc_zeta_compute(c, n, &raw);
    if (status != SC_OK) return finish(c, status, nullptr);
    std::unique_ptr<sc_zeta, ZetaDeleter> zeta(raw);
    status = sc_zeta_render(c, zeta.get(), format.c_str(), reps.c_str(), &out);
    if (status == SC_OK && !sc_zeta_is_polynomial(zeta.get())) status = SC_CONJECTURE_FAILED;
  } else if (*check_cmd) {
    status = sc_context_set_adjacency(c, adjacency.c_str());
    if (status == SC_OK) status = sc_context_set_rank_trials(c, rank_trials, rank_seed);
    if (status == SC_OK) status = sc_check(c, n, which.c_str(), format.c_str(), &out);
  } else if (*matrix_cmd) {
    status = sc_matrix(c, n, format.c_str(), &out);
  } else if (*schubert_cmd) {
    status = sc_schubert(c, perm.c_str(), letters ? 1 : 0, &out);
    if (status == SC_OK) {
      std::fputs(out, stdout);
      sc_string_free(out);
      out = nullptr;
      std::fputs("\n", stdout);
    }
  } else if (*expand_cmd) {
    status = sc_expand(c, poly.c_str(), format.c_str(), &out);
  } else if (*simulate_cmd) {
    default_x();
    auto xs = c_strings(x_values);
    sim.n = n;
    sim.x = xs.data();
    sim.x_count = xs.size();
    sim.start = start.empty() ? nullptr : start.c_str();
    sim.compare_exact = compare_exact ? 1 : 0;
    status = sc_simulate(c, &sim, &out);
  } else if (*rank_cmd) {
    status = sc_rank(c, n, trials, seed, &out);
  } else if (*numeric_cmd) {
    default_x();
    auto xs = c_strings(x_values);
    status = sc_stationary_numeric(c, n, xs.data(), xs.size(), &out);
  }
  return finish(c, status, out);
}
