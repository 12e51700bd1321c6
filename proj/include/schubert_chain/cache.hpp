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

#ifndef SCHUBERT_CHAIN_CACHE_HPP
#define SCHUBERT_CHAIN_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "schubert_chain/chain.hpp"

namespace schubert_chain {

/// Bumped whenever a change could alter a cached stationary vector.
inline constexpr const char* kEngineVersion = "schubert-chain-engine/1";

/// On-disk store of stationary vectors, one JSON file per n:
/// {n, engine_version, zeta, checksum}, checksum being the CRC-32 (hex) of
/// the serialized zeta object. Entries with another engine version or a
/// checksum mismatch are treated as absent.
class ZetaCache {
 public:
  explicit ZetaCache(std::filesystem::path directory);

  /// `flag` if nonempty, else $SCHUBERT_CHAIN_CACHE_DIR, else
  /// ".schubert-chain-cache".
  static std::filesystem::path resolve_directory(const std::string& flag = {});

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path entry_path(int n) const;

  std::optional<StationaryVector> load(int n) const;
  /// Writes through a temporary file and a rename. Throws IoError.
  void store(const StationaryVector& zeta) const;

 private:
  std::filesystem::path directory_;
};

std::string checksum_hex(const std::string& payload);

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_CACHE_HPP
