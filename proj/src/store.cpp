#include "hermlab/store.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "hermlab/parallel.hpp"

namespace hermlab::store {

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("HERMLAB_CACHE"); env && *env) return env;
  return ".hermlab-cache";
}

json cache_header(const hermitian::Surface& s, const std::string& kind, std::uint64_t count) {
  const auto& f = s.field();
  json h;
  h["format_version"] = kFormatVersion;
  h["p"] = f.characteristic();
  h["e"] = f.degree();
  h["modulus"] = f.modulus();
  h["q"] = s.q();
  h["kind"] = kind;
  h["count"] = count;
  return h;
}

Digest header_digest(const json& header) {
  Hasher h;
  h.update(header.dump());
  return h.finish();
}

fs::path cache_file(const fs::path& dir, const json& header) {
  return dir / (header.at("kind").get<std::string>() + "-q" + std::to_string(header.at("q").get<unsigned>()) + "-" +
                header_digest(header).hex() + ".json");
}

json serialize_point(const projgeo::ProjPoint& p) { return p.c; }
json serialize_line(const projgeo::LineFrame& l) { return l.g; }
json serialize_curve(const hermitian::CurveMatrix& c) { return c.f; }

projgeo::ProjPoint parse_point(const json& j) {
  projgeo::ProjPoint p;
  p.c = j.get<std::array<gf::Elem, 4>>();
  return p;
}
projgeo::LineFrame parse_line(const json& j) {
  projgeo::LineFrame l;
  l.g = j.get<std::array<gf::Elem, 8>>();
  return l;
}
hermitian::CurveMatrix parse_curve(const json& j) {
  hermitian::CurveMatrix c;
  c.f = j.get<hermitian::Mat4>();
  return c;
}

void atomic_write(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  static std::atomic<unsigned> serial{0};
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(serial++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

fs::path write_cache(const fs::path& dir, const json& header, const json& items, const json& keys) {
  json doc;
  doc["header"] = header;
  doc["items"] = items;
  if (!keys.is_null()) doc["keys"] = keys;
  const fs::path path = cache_file(dir, header);
  atomic_write(path, doc.dump() + "\n");
  return path;
}

CacheRead read_cache(const fs::path& dir, const json& header) {
  CacheRead r;
  const fs::path path = cache_file(dir, header);
  if (!fs::exists(path)) return r;
  json doc;
  try {
    std::ifstream in(path);
    doc = json::parse(in);
  } catch (const std::exception& e) {
    r.rejected = "unreadable cache file " + path.string() + ": " + e.what();
    return r;
  }
  if (!doc.contains("header") || doc["header"] != header) {
    r.rejected = "cache header mismatch in " + path.string();
    return r;
  }
  if (!doc.contains("items") || !doc["items"].is_array() || doc["items"].size() != header["count"].get<std::size_t>()) {
    r.rejected = "cache item count mismatch in " + path.string();
    return r;
  }
  if (doc.contains("keys")) {
    if (doc["keys"].size() != doc["items"].size()) {
      r.rejected = "cache key count mismatch in " + path.string();
      return r;
    }
    r.keys = std::move(doc["keys"]);
  }
  r.items = std::move(doc["items"]);
  return r;
}

// ---------------------------------------------------------------------------

json Profile::to_json() const {
  json j;
  j["q"] = q;
  j["reference_curve_key_hash"] = reference.hex();
  auto e = json::array();
  for (const auto& [k, v] : entries) e.push_back({k.hex(), v});
  j["entries"] = std::move(e);
  return j;
}

Profile Profile::from_json(const json& j) {
  Profile p;
  p.q = j.at("q").get<std::uint32_t>();
  p.reference = Digest::from_hex(j.at("reference_curve_key_hash").get<std::string>());
  for (const auto& e : j.at("entries")) p.entries.emplace_back(Digest::from_hex(e.at(0).get<std::string>()), e.at(1).get<std::uint32_t>());
  return p;
}

ProfileRun run_profile(const fs::path& path, std::uint32_t q, const std::vector<Digest>& keys, std::size_t ref_index,
                       const std::function<std::uint32_t(std::size_t)>& value, bool resume, std::size_t budget,
                       unsigned jobs, std::size_t chunk) {
  ProfileRun run;
  std::map<Digest, std::uint32_t> done;
  if (resume && fs::exists(path)) {
    std::ifstream in(path);
    const Profile old = Profile::from_json(json::parse(in));
    if (old.q != q || old.reference != keys.at(ref_index))
      throw std::runtime_error("partial profile " + path.string() + " belongs to a different run");
    for (const auto& [k, v] : old.entries) done.emplace(k, v);
    run.resumed = done.size();
  }

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (i != ref_index && !done.count(keys[i])) todo.push_back(i);
  if (budget > 0 && todo.size() > budget) todo.resize(budget);

  auto snapshot = [&] {
    Profile p;
    p.q = q;
    p.reference = keys[ref_index];
    p.entries.assign(done.begin(), done.end());
    return p;
  };
  for (std::size_t start = 0; start < todo.size(); start += chunk) {
    const std::size_t stop = std::min(todo.size(), start + chunk);
    std::vector<std::uint32_t> vals(stop - start);
    parallel_for(
        stop - start, jobs, [&](std::size_t w) { vals[w] = value(todo[start + w]); }, 16);
    for (std::size_t w = 0; w < vals.size(); ++w) done.emplace(keys[todo[start + w]], vals[w]);
    run.computed += vals.size();
    atomic_write(path, snapshot().to_json().dump() + "\n");
  }
  run.profile = snapshot();
  run.complete = run.profile.entries.size() + 1 == keys.size();
  if (todo.empty()) atomic_write(path, run.profile.to_json().dump() + "\n");
  return run;
}

}  // namespace hermlab::store
