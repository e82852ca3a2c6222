// One PASS/FAIL line per acceptance criterion. With criterion numbers as
// arguments only those run; the exit status is 0 when every selected
// criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermlab/reference.hpp"
#include "hermlab/suite.hpp"
#include "test_util.hpp"

namespace {

using namespace hermlab;
using emit::Report;
using emit::Status;
using nlohmann::json;

struct Context {
  std::filesystem::path cache_dir;
  unsigned jobs = 1;

  suite::Config config(unsigned q, const std::filesystem::path& dir) const {
    suite::Config c;
    c.q = q;
    c.cache_dir = dir;
    c.jobs = jobs;
    c.resume = true;
    return c;
  }
  suite::Session session(unsigned q) const { return suite::Session(config(q, cache_dir)); }
};

void add_identities(Report& r, suite::Session& s, const std::string& source) {
  const auto& sch = s.scheme(source);
  const std::string tag = "q" + std::to_string(s.q()) + "." + source;
  r.expect_eq(tag + ".axioms", json::array(), sch.axiom_violations());
  r.expect_eq(tag + ".table_identities", json::array(), schemes::verify_char_table(sch, s.table(source)));
}

void time_limit(Report& r, const std::string& name, double seconds, double limit) {
  r.add(name, "< " + std::to_string(static_cast<int>(limit)) + " s", seconds,
        seconds < limit ? Status::pass : Status::fail);
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(const Context&, Report&)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "counts q=2 (45 points, 27 lines, 432 curves)",
       [](const Context& ctx, Report& r) {
         testutil::TempDir cold;
         const auto t0 = std::chrono::steady_clock::now();
         suite::Session s(ctx.config(2, cold.path()));
         suite::check_counts(s, r);
         time_limit(r, "time.counts_q2", elapsed(t0), 10);
       }},
      {2, "counts q=3 (280 points, 112 lines, 18144 curves)",
       [](const Context& ctx, Report& r) {
         testutil::TempDir cold;
         const auto t0 = std::chrono::steady_clock::now();
         suite::Session s(ctx.config(3, cold.path()));
         suite::check_counts(s, r);
         time_limit(r, "time.counts_q3", elapsed(t0), 600);
       }},
      {3, "strongly regular graphs q=2,3 and formula q=2,3,4",
       [](const Context& ctx, Report& r) {
         for (unsigned q : {2u, 3u, 4u}) {
           auto s = ctx.session(q);
           Report part;
           suite::check_srg(s, part);
           for (auto& c : part.checks) r.checks.push_back({"q" + std::to_string(q) + "." + c.name, c.expected, c.actual, c.status});
         }
       }},
      {4, "incidence q=2 and q=3",
       [](const Context& ctx, Report& r) {
         for (unsigned q : {2u, 3u}) {
           auto s = ctx.session(q);
           Report part;
           suite::check_incidence(s, part);
           for (auto& c : part.checks) r.checks.push_back({"q" + std::to_string(q) + "." + c.name, c.expected, c.actual, c.status});
         }
       }},
      {5, "intersection scheme q=2 against the reference tables",
       [](const Context& ctx, Report& r) {
         const auto t0 = std::chrono::steady_clock::now();
         auto s = ctx.session(2);
         suite::check_intersection_scheme_q2(s, r);
         time_limit(r, "time.intersection_scheme_q2", elapsed(t0), 1800);
       }},
      {6, "q=2 intersection graph complete, disjoint lines give 0",
       [](const Context& ctx, Report& r) {
         auto s = ctx.session(2);
         suite::check_intersection_graph_q2(s, r);
       }},
      {7, "q=3 intersection profile values and d = q^2+1 for q=2,3",
       [](const Context& ctx, Report& r) {
         auto s2 = ctx.session(2);
         const auto c2 = schemes::conjecture_check(2, s2.scheme("intersection").classes());
         r.add("conjecture.q2", c2.expected, c2.d, c2.holds ? Status::pass : Status::fail);
         auto s3 = ctx.session(3);
         suite::check_intersection_profile(s3, r);
       }},
      {8, "orbital schemes q=2 on points, lines and curves",
       [](const Context& ctx, Report& r) {
         auto s = ctx.session(2);
         suite::check_orbital_schemes(s, r);
       }},
      {9, "dense oracle q=2, fast vs reference intersection numbers",
       [](const Context& ctx, Report& r) {
         auto s2 = ctx.session(2);
         suite::check_dense_oracle(s2, r);
         suite::check_intersection_paths(s2, r);
         auto s3 = ctx.session(3);
         Report part;
         suite::check_intersection_paths(s3, part, 10000);
         for (auto& c : part.checks) r.checks.push_back({"q3." + c.name, c.expected, c.actual, c.status});
       }},
      {10, "field, scheme and idempotent identities, partition sums",
       [](const Context& ctx, Report& r) {
         suite::check_properties(r);
         auto s2 = ctx.session(2);
         for (const char* src : {"intersection", "orbital:points", "orbital:lines", "orbital:curves"})
           add_identities(r, s2, src);
         auto s3 = ctx.session(3);
         for (const char* src : {"orbital:points", "orbital:lines"}) add_identities(r, s3, src);
       }},
  };
}

std::string brief(const json& j) {
  std::string s = j.dump();
  return s.size() > 160 ? s.substr(0, 157) + "..." : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  Context ctx;
  std::string cache = ".hermlab-acceptance";
  std::vector<int> only;
  app.add_option("--cache-dir", cache, "shared cache directory");
  app.add_option("--jobs", ctx.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("criteria", only, "criterion numbers (default: all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  ctx.cache_dir = cache;

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(ctx, r);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = elapsed(t0);
    std::vector<const emit::Check*> bad;
    for (const auto& ch : r.checks)
      if (ch.status != Status::pass) bad.push_back(&ch);
    const bool pass = error.empty() && bad.empty() && !r.checks.empty();
    all_pass &= pass;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << r.checks.size()
              << " checks, " << buf << " s)\n";
    if (!error.empty()) std::cout << "    error: " << error << '\n';
    for (const auto* ch : bad)
      std::cout << "    " << emit::to_string(ch->status) << " " << ch->name << ": expected " << brief(ch->expected)
                << ", got " << brief(ch->actual) << '\n';
    std::cout.flush();
  }
  return all_pass ? 0 : 1;
}
