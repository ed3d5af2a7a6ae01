#pragma once

// On-disk store of expensive intermediates: JSON payloads with a checksum,
// written atomically with one writer per key.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hodge/derham.hpp"
#include "hodge/periods.hpp"

namespace hodge {

inline constexpr int kCacheSchema = 1;
inline constexpr const char* kCacheEnv = "HODGE_CACHE_DIR";

std::uint64_t fnv1a(std::string_view data);
std::uint64_t monomial_set_hash(const std::vector<Monomial>& monomials);

struct CacheKey {
  std::string kind;  // "periods" or "connection"
  int n = 0;
  int d = 3;
  std::uint64_t monomials = 0;
  int order = 0;
  std::string extra;  // e.g. the cycle roots

  std::string file_name() const;
  nlohmann::json to_json() const;
};

class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path dir);
  /// The store named by the environment, if any.
  static std::optional<CacheStore> from_env();

  const std::filesystem::path& dir() const { return dir_; }

  /// Payload of a valid entry; corrupt or mismatched entries are removed and reported as absent.
  std::optional<nlohmann::json> load(const CacheKey& key) const;
  /// Returns false when another writer holds the key.
  bool store(const CacheKey& key, const nlohmann::json& payload) const;

 private:
  std::filesystem::path dir_;
};

nlohmann::json connection_to_json(const ConnectionMatrix& cm);
/// Throws std::runtime_error when the payload is malformed or not transversal.
ConnectionMatrix connection_from_json(const nlohmann::json& j, const GriffithsBasis& basis);

PeriodVector cached_periods(const CacheStore* store, const LinearCycle& cycle, const GriffithsBasis& basis);
ConnectionMatrix cached_connection(const CacheStore* store, int n, const std::vector<Monomial>& monomials, int order,
                                   const GriffithsBasis& basis, int threads);

}  // namespace hodge
