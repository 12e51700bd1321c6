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

#include "schubert_chain.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "schubert_chain/cache.hpp"
#include "schubert_chain/chain.hpp"
#include "schubert_chain/conjectures.hpp"
#include "schubert_chain/error.hpp"
#include "schubert_chain/render.hpp"
#include "schubert_chain/schubert.hpp"
#include "schubert_chain/simulate.hpp"

using namespace schubert_chain;

struct sc_context {
  std::string last_error;
  std::string last_warning;
  std::string cache_dir;
  bool cache_enabled = true;
  SymbolicOptions symbolic;
  CheckOptions checks;
  std::mutex memo_mutex;
  std::map<int, std::shared_ptr<const StationaryVector>> memo;
};

struct sc_zeta {
  std::shared_ptr<const StationaryVector> value;
};

namespace {

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string required(const char* s, const char* what) {
  if (!s) throw std::invalid_argument(std::string(what) + " must not be null");
  return s;
}

template <class F>
sc_status guarded(sc_context* ctx, F&& body) {
  if (!ctx) return SC_INVALID_ARGUMENT;
  ctx->last_error.clear();
  ctx->last_warning.clear();
  try {
    return body();
  } catch (const CapExceeded& e) {
    ctx->last_error = e.what();
    return SC_CAP_EXCEEDED;
  } catch (const InvariantViolation& e) {
    ctx->last_error = e.what();
    return SC_INVARIANT_VIOLATION;
  } catch (const IoError& e) {
    ctx->last_error = e.what();
    return SC_IO_ERROR;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return SC_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    ctx->last_error = e.what();
    return SC_INVALID_ARGUMENT;
  } catch (const std::overflow_error& e) {
    ctx->last_error = e.what();
    return SC_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal error: ") + e.what();
    return SC_INTERNAL_ERROR;
  } catch (...) {
    ctx->last_error = "internal error";
    return SC_INTERNAL_ERROR;
  }
}

void check_size(const sc_context& ctx, int n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const int cap = ctx.symbolic.force ? std::max(ctx.symbolic.max_n, 7) : ctx.symbolic.max_n;
  if (n > 7 || n > cap) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the symbolic cap of " +
                      std::to_string(ctx.symbolic.max_n) +
                      (n == 7 ? " (pass --force to allow n = 7)" : ""));
  }
}

std::shared_ptr<const StationaryVector> obtain_zeta(sc_context& ctx, int n) {
  check_size(ctx, n);
  std::lock_guard lock(ctx.memo_mutex);
  if (auto it = ctx.memo.find(n); it != ctx.memo.end()) return it->second;
  std::optional<ZetaCache> cache;
  if (ctx.cache_enabled) cache.emplace(ZetaCache::resolve_directory(ctx.cache_dir));
  std::shared_ptr<const StationaryVector> result;
  if (cache) {
    if (auto hit = cache->load(n)) result = std::make_shared<StationaryVector>(std::move(*hit));
  }
  if (!result) {
    result = std::make_shared<StationaryVector>(stationary_symbolic(n, ctx.symbolic));
    if (cache) {
      try {
        cache->store(*result);
      } catch (const IoError& e) {
        ctx.last_warning = std::string("cache not updated: ") + e.what();
      }
    }
  }
  ctx.memo[n] = result;
  return result;
}

// Integers, p/q, or finite decimals such as 0.25 or 1e-3, read exactly.
Rational parse_number(const std::string& text) {
  if (text.find_first_of(".eE") == std::string::npos) return parse_rational(text);
  std::size_t used = 0;
  double approx = 0;
  try {
    approx = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse number '" + text + "'");
  std::string mantissa = text, exponent = "0";
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exponent = text.substr(e + 1);
  }
  int scale = std::stoi(exponent);
  bool negative = !mantissa.empty() && mantissa[0] == '-';
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) mantissa.erase(0, 1);
  std::string digits;
  for (char c : mantissa) {
    if (c == '.') continue;
    digits += c;
  }
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    scale -= static_cast<int>(mantissa.size() - dot - 1);
  }
  Rational value(Integer(digits.empty() ? "0" : digits));
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(scale)));
  if (scale >= 0) value *= power;
  else value /= power;
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::vector<Rational> parse_point(const char* const* x, std::size_t count) {
  if (count > 0 && !x) throw std::invalid_argument("x must not be null");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(parse_number(required(x[i], "x value")));
  return out;
}

bool wants_json(const char* format) {
  std::string f = format ? format : "text";
  if (f == "json") return true;
  if (f == "text") return false;
  throw std::invalid_argument("unknown format '" + f + "' (expected text or json)");
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_status_string(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_CONJECTURE_FAILED: return "conjecture failed";
    case SC_INVALID_ARGUMENT: return "invalid argument";
    case SC_INVARIANT_VIOLATION: return "invariant violation";
    case SC_CAP_EXCEEDED: return "cap exceeded";
    case SC_IO_ERROR: return "i/o error";
    case SC_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void sc_string_free(char* s) { std::free(s); }

sc_context* sc_context_create(void) {
  try {
    return new sc_context();
  } catch (...) {
    return nullptr;
  }
}

void sc_context_destroy(sc_context* ctx) { delete ctx; }

const char* sc_context_last_error(const sc_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

const char* sc_context_last_warning(const sc_context* ctx) {
  return ctx ? ctx->last_warning.c_str() : "";
}

sc_status sc_context_set_cache_dir(sc_context* ctx, const char* dir) {
  return guarded(ctx, [&] {
    ctx->cache_dir = dir ? dir : "";
    return SC_OK;
  });
}

sc_status sc_context_set_cache_enabled(sc_context* ctx, int enabled) {
  return guarded(ctx, [&] {
    ctx->cache_enabled = enabled != 0;
    return SC_OK;
  });
}

sc_status sc_context_set_limits(sc_context* ctx, int max_n, int force) {
  return guarded(ctx, [&] {
    if (max_n < 3) throw std::invalid_argument("max n must be at least 3");
    ctx->symbolic.max_n = max_n;
    ctx->symbolic.force = force != 0;
    return SC_OK;
  });
}

sc_status sc_context_set_threads(sc_context* ctx, unsigned threads) {
  return guarded(ctx, [&] {
    ctx->symbolic.threads = threads;
    return SC_OK;
  });
}

sc_status sc_context_set_adjacency(sc_context* ctx, const char* reading) {
  return guarded(ctx, [&] {
    ctx->checks.adjacency = parse_adjacency(required(reading, "adjacency"));
    return SC_OK;
  });
}

sc_status sc_context_set_rank_trials(sc_context* ctx, int trials, uint64_t seed) {
  return guarded(ctx, [&] {
    if (trials < 1) throw std::invalid_argument("rank trials must be positive");
    ctx->checks.rank_trials = trials;
    ctx->checks.rank_seed = seed;
    return SC_OK;
  });
}

sc_status sc_zeta_compute(sc_context* ctx, int n, sc_zeta** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    *out = new sc_zeta{obtain_zeta(*ctx, n)};
    return SC_OK;
  });
}

void sc_zeta_destroy(sc_zeta* zeta) { delete zeta; }

int sc_zeta_n(const sc_zeta* zeta) { return zeta ? zeta->value->n : 0; }

int sc_zeta_is_polynomial(const sc_zeta* zeta) { return zeta && zeta->value->polynomial ? 1 : 0; }

sc_status sc_zeta_value(sc_context* ctx, const sc_zeta* zeta, const char* perm, char** out) {
  return guarded(ctx, [&] {
    if (!zeta || !out) throw std::invalid_argument("zeta and out must not be null");
    auto w = Permutation::parse(required(perm, "perm"));
    if (w.size() != zeta->value->n) throw std::invalid_argument("permutation is not in S_n");
    if (!zeta->value->polynomial) throw std::invalid_argument("zeta is not polynomial");
    *out = copy_out(zeta->value->at(w).to_string());
    return SC_OK;
  });
}

sc_status sc_zeta_render(sc_context* ctx, const sc_zeta* zeta, const char* format,
                         const char* reps, char** out) {
  return guarded(ctx, [&] {
    if (!zeta || !out) throw std::invalid_argument("zeta and out must not be null");
    *out = copy_out(render_zeta(*zeta->value, parse_format(format ? format : "text"),
                                parse_reps(reps ? reps : "all")));
    return SC_OK;
  });
}

sc_status sc_check(sc_context* ctx, int n, const char* which, const char* format, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    auto selection = parse_check_selection(which ? which : "all");
    bool json = wants_json(format);
    auto zeta = obtain_zeta(*ctx, n);
    auto report = run_checks(*zeta, selection, ctx->checks);
    *out = copy_out(json ? report.to_json().dump(2) + "\n" : report.summary());
    return report.all_hold() ? SC_OK : SC_CONJECTURE_FAILED;
  });
}

sc_status sc_matrix(sc_context* ctx, int n, const char* format, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    *out = copy_out(render_matrix(build_transition(n), parse_format(format ? format : "text")));
    return SC_OK;
  });
}

sc_status sc_schubert(sc_context* ctx, const char* perm, int letters, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    auto p = schubert(Permutation::parse(required(perm, "perm")));
    if (letters && p.num_variables() > 4) {
      throw std::invalid_argument("letter names cover only four variables");
    }
    *out = copy_out(p.to_string(letters ? VariableNames::kLetters : VariableNames::kIndexed));
    return SC_OK;
  });
}

sc_status sc_expand(sc_context* ctx, const char* poly, const char* format, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    bool json = wants_json(format);
    auto e = expand_in_schubert_basis(Polynomial::parse(required(poly, "poly")));
    *out = copy_out(json ? to_json(e).dump(2) + "\n" : expansion_to_string(e) + "\n");
    return SC_OK;
  });
}

void sc_simulation_config_init(sc_simulation_config* config) {
  if (!config) return;
  *config = sc_simulation_config{};
  config->n = 3;
  config->steps = 100000;
  config->burn_in = 0.1;
  config->trajectories = 1;
}

sc_status sc_simulate(sc_context* ctx, const sc_simulation_config* config, char** out) {
  return guarded(ctx, [&] {
    if (!config || !out) throw std::invalid_argument("config and out must not be null");
    auto exact_x = parse_point(config->x, config->x_count);
    SimulationConfig sim;
    sim.n = config->n;
    for (const auto& v : exact_x) sim.x.push_back(v.get_d());
    sim.steps = config->steps;
    sim.seed = config->seed;
    if (config->start && *config->start) sim.start = Permutation::parse(config->start);
    sim.burn_in = config->burn_in;
    sim.trajectories = config->trajectories;
    auto freqs = empirical_distribution(sim);
    nlohmann::json f = nlohmann::json::object();
    for (const auto& [w, v] : freqs) f[w.to_string()] = v;
    nlohmann::json j = {{"n", sim.n},
                        {"steps", sim.steps},
                        {"seed", sim.seed},
                        {"burn_in", sim.burn_in},
                        {"trajectories", sim.trajectories},
                        {"freqs", f}};
    if (config->compare_exact) {
      auto exact = to_distribution(stationary_numeric(sim.n, exact_x));
      j["tv_to_exact"] = tv_distance(freqs, exact);
    }
    *out = copy_out(j.dump(2) + "\n");
    return SC_OK;
  });
}

sc_status sc_rank(sc_context* ctx, int n, int trials, uint64_t seed, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (n > 6) throw CapExceeded("rank verification is limited to n <= 6");
    auto report = verify_nullspace_rank(n, trials, seed);
    *out = copy_out(report.to_json().dump(2) + "\n");
    return report.all_full ? SC_OK : SC_CONJECTURE_FAILED;
  });
}

sc_status sc_stationary_numeric(sc_context* ctx, int n, const char* const* x, size_t x_count,
                                char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    if (n > 6) throw CapExceeded("exact numeric solve is limited to n <= 6");
    auto law = stationary_numeric(n, parse_point(x, x_count));
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, v] : law) j[w.to_string()] = rational_to_fraction_string(v);
    *out = copy_out(j.dump(2) + "\n");
    return SC_OK;
  });
}

}  // extern "C"
