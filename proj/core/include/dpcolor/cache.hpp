#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpcolor/search.hpp"

namespace dpc {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One line of the cache file, JSON encoded.
struct CacheRecord {
  std::string key;  // graph_key(G)
  int m = 0;
  std::uint64_t value = 0;
  std::string mode;     // pdp_mode_name
  std::string witness;  // serialized cover
  std::uint64_t covers_examined = 0;
  std::uint64_t elapsed_ms = 0;
  std::string tool_version;
};

CacheRecord to_cache_record(const PdpResult& r);

// Append-only store of search results, one JSON record per line, keyed by
// (graph key, m). Later records for a key win. A file that fails to parse
// is never partially trusted: load throws CacheError and callers start a
// fresh store.
class ResultCache {
 public:
  ResultCache() = default;

  // Reads the file when it exists; throws CacheError on any bad line.
  static ResultCache load(const std::filesystem::path& file);

  std::optional<CacheRecord> get(const std::string& key, int m) const;

  // Appends to the file (when a path is bound) and updates the in-memory view.
  void put(const CacheRecord& rec);

  const std::vector<CacheRecord>& records() const { return records_; }
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  std::vector<CacheRecord> records_;
};

std::string serialize_cache_record(const CacheRecord& rec);
CacheRecord parse_cache_record(const std::string& line);

}  // namespace dpc
