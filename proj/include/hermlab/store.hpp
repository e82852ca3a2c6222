#pragma once

// Disk artifacts: content-addressed JSON caches of points, lines and curves,
// and resumable bulk intersection profiles.

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermlab/digest.hpp"
#include "hermlab/hermitian.hpp"

namespace hermlab::store {

namespace fs = std::filesystem;
using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Flag value if given, else $HERMLAB_CACHE, else ".hermlab-cache".
fs::path resolve_cache_dir(const std::optional<std::string>& flag);

/// {format_version, p, e, modulus, q, kind, count}.
json cache_header(const hermitian::Surface& s, const std::string& kind, std::uint64_t count);
Digest header_digest(const json& header);
fs::path cache_file(const fs::path& dir, const json& header);

json serialize_point(const projgeo::ProjPoint& p);
json serialize_line(const projgeo::LineFrame& l);
json serialize_curve(const hermitian::CurveMatrix& c);
projgeo::ProjPoint parse_point(const json& j);
projgeo::LineFrame parse_line(const json& j);
hermitian::CurveMatrix parse_curve(const json& j);

/// Writes {"header": ..., "items": [...], "keys": [...]} atomically.
fs::path write_cache(const fs::path& dir, const json& header, const json& items, const json& keys = nullptr);

struct CacheRead {
  std::optional<json> items;
  std::optional<json> keys;
  std::string rejected;  // reason, when a file existed but was not usable
};
/// Loads the cache for `header`. Files whose header differs (another format
/// version, modulus or count) or whose item count is wrong are rejected.
CacheRead read_cache(const fs::path& dir, const json& header);

/// Writes text to path via a temporary file and rename.
void atomic_write(const fs::path& path, const std::string& text);

// ---------------------------------------------------------------------------

/// I(C_ref, C) for the curves of an orbit, keyed by curve-key hash.
struct Profile {
  std::uint32_t q = 0;
  Digest reference;
  std::vector<std::pair<Digest, std::uint32_t>> entries;  // sorted by key
  json to_json() const;
  static Profile from_json(const json& j);
};

struct ProfileRun {
  Profile profile;
  bool complete = false;
  std::size_t computed = 0;  // new entries this run
  std::size_t resumed = 0;   // entries taken from the partial file
};

/// Computes value(i) for every orbit index i != ref_index. With resume set,
/// entries already in `path` are reused (after checking q and the reference
/// hash). At most `budget` new entries are computed when budget > 0. The
/// partial file is rewritten every `chunk` entries.
ProfileRun run_profile(const fs::path& path, std::uint32_t q, const std::vector<Digest>& keys, std::size_t ref_index,
                       const std::function<std::uint32_t(std::size_t)>& value, bool resume, std::size_t budget,
                       unsigned jobs, std::size_t chunk = 1024);

}  // namespace hermlab::store
