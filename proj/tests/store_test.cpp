#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "hermlab/store.hpp"
#include "hermlab/suite.hpp"
#include "test_util.hpp"

using namespace hermlab;
using nlohmann::json;

namespace {

json slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

void spit(const std::filesystem::path& p, const json& j) { std::ofstream(p) << j.dump(); }

std::vector<Digest> fake_keys(std::size_t n) {
  std::vector<Digest> keys;
  for (std::size_t i = 0; i < n; ++i) {
    Hasher h;
    h.update(static_cast<std::uint64_t>(i));
    keys.push_back(h.finish());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

TEST(Store, CacheDirPrecedence) {
  ::setenv("HERMLAB_CACHE", "/tmp/from-env", 1);
  EXPECT_EQ(store::resolve_cache_dir(std::string("/tmp/from-flag")), "/tmp/from-flag");
  EXPECT_EQ(store::resolve_cache_dir(std::nullopt), "/tmp/from-env");
  ::unsetenv("HERMLAB_CACHE");
  EXPECT_EQ(store::resolve_cache_dir(std::nullopt), ".hermlab-cache");
}

TEST(Store, SerializationRoundTrip) {
  const hermitian::Surface s(3);
  const auto c = hermitian::construct_fj(s);
  EXPECT_EQ(store::parse_curve(store::serialize_curve(c)), c);
  const auto l = hermitian::reference_line(s);
  EXPECT_EQ(store::parse_line(store::serialize_line(l)), l);
  const auto p = s.rational_points()[17];
  EXPECT_EQ(store::parse_point(store::serialize_point(p)), p);
  const Digest d{0x0123456789abcdefull, 0xfedcba9876543210ull};
  EXPECT_EQ(Digest::from_hex(d.hex()), d);
}

TEST(Store, CacheRoundTripAndRejection) {
  testutil::TempDir dir;
  const hermitian::Surface s(2);
  const auto pts = s.rational_points();
  json items = json::array();
  for (const auto& p : pts) items.push_back(store::serialize_point(p));
  const json header = store::cache_header(s, "points", pts.size());
  EXPECT_EQ(header["format_version"], 1);
  EXPECT_EQ(header["q"], 2);
  EXPECT_EQ(header["p"], 2);
  EXPECT_EQ(header["e"], 2);
  EXPECT_EQ(header["count"], 45);
  const auto path = store::write_cache(dir.path(), header, items);
  EXPECT_EQ(path, store::cache_file(dir.path(), header));
  EXPECT_NE(path.filename().string().find("points-q2-"), std::string::npos);

  const auto back = store::read_cache(dir.path(), header);
  ASSERT_TRUE(back.items.has_value());
  EXPECT_EQ(*back.items, items);
  EXPECT_TRUE(back.rejected.empty());

  // Same address, stale contents.
  json stale = slurp(path);
  stale["header"]["format_version"] = 0;
  spit(path, stale);
  const auto old = store::read_cache(dir.path(), header);
  EXPECT_FALSE(old.items.has_value());
  EXPECT_FALSE(old.rejected.empty());

  json short_items = items;
  short_items.erase(short_items.end() - 1);
  store::write_cache(dir.path(), header, short_items);
  EXPECT_FALSE(store::read_cache(dir.path(), header).items.has_value());

  // Nothing on disk for another count.
  const auto none = store::read_cache(dir.path(), store::cache_header(s, "points", 44));
  EXPECT_FALSE(none.items.has_value());
  EXPECT_TRUE(none.rejected.empty());
}

TEST(Store, ProfileBudgetAndResume) {
  testutil::TempDir dir;
  const auto keys = fake_keys(12);
  const auto path = dir.path() / "profile.json";
  std::size_t calls = 0;
  auto value = [&](std::size_t i) {
    ++calls;
    return static_cast<std::uint32_t>(i % 5 + 1);
  };
  auto first = store::run_profile(path, 2, keys, 3, value, false, 4, 1, 2);
  EXPECT_FALSE(first.complete);
  EXPECT_EQ(first.computed, 4u);
  EXPECT_EQ(calls, 4u);
  ASSERT_TRUE(std::filesystem::exists(path));

  calls = 0;
  auto second = store::run_profile(path, 2, keys, 3, value, true, 0, 1, 2);
  EXPECT_TRUE(second.complete);
  EXPECT_EQ(second.resumed, 4u);
  EXPECT_EQ(second.computed, 7u);
  EXPECT_EQ(calls, 7u);
  ASSERT_EQ(second.profile.entries.size(), 11u);
  EXPECT_EQ(second.profile.reference, keys[3]);
  for (std::size_t i = 0, k = 0; i < keys.size(); ++i) {
    if (i == 3) continue;
    EXPECT_EQ(second.profile.entries[k].first, keys[i]);
    EXPECT_EQ(second.profile.entries[k].second, value(i));
    ++k;
  }
  const auto parsed = store::Profile::from_json(slurp(path));
  EXPECT_EQ(parsed.entries, second.profile.entries);
  EXPECT_EQ(parsed.q, 2u);

  // A partial file for another reference curve must not be reused.
  EXPECT_THROW(store::run_profile(path, 2, keys, 4, value, true, 0, 1), std::exception);
  EXPECT_THROW(store::run_profile(path, 3, keys, 3, value, true, 0, 1), std::exception);
  calls = 0;
  auto fresh = store::run_profile(path, 2, keys, 3, value, false, 0, 2);
  EXPECT_EQ(fresh.computed, 11u);
  EXPECT_EQ(fresh.profile.entries, second.profile.entries);
}

TEST(Session, CurveCacheReuseAndValidation) {
  testutil::TempDir dir;
  suite::Config c;
  c.q = 2;
  c.cache_dir = dir.path();
  std::vector<Digest> keys;
  std::filesystem::path cache;
  {
    suite::Session s(c);
    keys = s.curves().keys;
    ASSERT_EQ(keys.size(), 432u);
    ASSERT_EQ(s.events().size(), 1u);
    EXPECT_NE(s.events()[0].find("written"), std::string::npos);
    cache = s.write_curves_cache();
  }
  {
    suite::Session s(c);
    EXPECT_EQ(s.curves().keys, keys);
    ASSERT_EQ(s.events().size(), 1u);
    EXPECT_NE(s.events()[0].find("loaded"), std::string::npos);
    EXPECT_EQ(s.curve_action().size(), s.generators().size());
  }
  // Swapping two stored frames breaks the key order check.
  json j = slurp(cache);
  std::swap(j["items"][0], j["items"][1]);
  spit(cache, j);
  {
    suite::Session s(c);
    EXPECT_EQ(s.curves().keys, keys);
    ASSERT_GE(s.events().size(), 2u);
    EXPECT_NE(s.events()[0].find("rejected"), std::string::npos);
  }
  // Bit-identical rewrite.
  const auto before = slurp(cache).dump();
  {
    suite::Session s(c);
    s.write_curves_cache();
  }
  EXPECT_EQ(slurp(cache).dump(), before);
}
