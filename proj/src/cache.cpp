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

#include "schubert_chain/cache.hpp"

#include <zlib.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "schubert_chain/error.hpp"

namespace schubert_chain {

namespace fs = std::filesystem;

std::string checksum_hex(const std::string& payload) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(payload.data()),
              static_cast<uInt>(payload.size()));
  char buffer[9];
  std::snprintf(buffer, sizeof buffer, "%08lx", static_cast<unsigned long>(crc));
  return buffer;
}

ZetaCache::ZetaCache(fs::path directory) : directory_(std::move(directory)) {}

fs::path ZetaCache::resolve_directory(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SCHUBERT_CHAIN_CACHE_DIR"); env && *env) return env;
  return ".schubert-chain-cache";
}

fs::path ZetaCache::entry_path(int n) const {
  return directory_ / ("zeta-n" + std::to_string(n) + ".json");
}

std::optional<StationaryVector> ZetaCache::load(int n) const {
  std::ifstream in(entry_path(n));
  if (!in) return std::nullopt;
  try {
    auto entry = nlohmann::json::parse(in);
    if (entry.at("n").get<int>() != n) return std::nullopt;
    if (entry.at("engine_version").get<std::string>() != kEngineVersion) return std::nullopt;
    const auto& zeta = entry.at("zeta");
    if (checksum_hex(zeta.dump()) != entry.at("checksum").get<std::string>()) return std::nullopt;
    return stationary_from_json(zeta);
  } catch (const std::exception&) {
    // A corrupt entry is a miss; it gets recomputed and overwritten.
    return std::nullopt;
  }
}

void ZetaCache::store(const StationaryVector& zeta) const {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) throw IoError("cannot create cache directory " + directory_.string() + ": " + ec.message());
  auto payload = to_json(zeta);
  nlohmann::json entry = {{"n", zeta.n},
                          {"engine_version", kEngineVersion},
                          {"zeta", payload},
                          {"checksum", checksum_hex(payload.dump())}};
  auto final_path = entry_path(zeta.n);
  auto temp_path = final_path;
  temp_path += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(temp_path, std::ios::trunc);
    if (!out) throw IoError("cannot write " + temp_path.string());
    out << entry.dump() << "\n";
    if (!out) throw IoError("write failed for " + temp_path.string());
  }
  fs::rename(temp_path, final_path, ec);
  if (ec) {
    fs::remove(temp_path, ec);
    throw IoError("cannot move cache entry into place at " + final_path.string());
  }
}

}  // namespace schubert_chain
