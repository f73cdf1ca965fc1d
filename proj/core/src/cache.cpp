#include "dpcolor/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dpcolor/version.hpp"

namespace dpc {

CacheRecord to_cache_record(const PdpResult& r) {
  CacheRecord rec;
  rec.key = r.graph_key;
  rec.m = r.m;
  rec.value = r.value;
  rec.mode = pdp_mode_name(r.mode);
  rec.witness = serialize_cover(r.witness);
  rec.covers_examined = r.covers_examined;
  rec.elapsed_ms = r.elapsed_ms;
  rec.tool_version = kToolVersion;
  return rec;
}

std::string serialize_cache_record(const CacheRecord& rec) {
  nlohmann::ordered_json j;
  j["key"] = rec.key;
  j["m"] = rec.m;
  j["value"] = rec.value;
  j["mode"] = rec.mode;
  j["witness"] = rec.witness;
  j["covers_examined"] = rec.covers_examined;
  j["elapsed_ms"] = rec.elapsed_ms;
  j["tool_version"] = rec.tool_version;
  return j.dump();
}

CacheRecord parse_cache_record(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& err) {
    throw CacheError(std::string("bad JSON: ") + err.what());
  }
  CacheRecord rec;
  try {
    rec.key = j.at("key").get<std::string>();
    rec.m = j.at("m").get<int>();
    rec.value = j.at("value").get<std::uint64_t>();
    rec.mode = j.at("mode").get<std::string>();
    rec.witness = j.at("witness").get<std::string>();
    rec.covers_examined = j.at("covers_examined").get<std::uint64_t>();
    rec.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    rec.tool_version = j.at("tool_version").get<std::string>();
  } catch (const nlohmann::json::exception& err) {
    throw CacheError(std::string("missing or mistyped field: ") + err.what());
  }
  if (rec.mode != "exact" && rec.mode != "heuristic-upper-bound") {
    throw CacheError("unknown mode: " + rec.mode);
  }
  return rec;
}

ResultCache ResultCache::load(const std::filesystem::path& file) {
  ResultCache cache;
  cache.file_ = file;
  std::ifstream in(file);
  if (!in.is_open()) return cache;  // a fresh store
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      cache.records_.push_back(parse_cache_record(line));
    } catch (const CacheError& err) {
      throw CacheError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return cache;
}

std::optional<CacheRecord> ResultCache::get(const std::string& key, int m) const {
  for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
    if (it->key == key && it->m == m) return *it;
  }
  return std::nullopt;
}

void ResultCache::put(const CacheRecord& rec) {
  records_.push_back(rec);
  if (file_.empty()) return;
  std::ofstream out(file_, std::ios::app);
  if (!out.is_open()) throw CacheError("cannot append to " + file_.string());
  out << serialize_cache_record(rec) << '\n';
}

}  // namespace dpc
