// hermlab: generate orbits, check strongly regular graphs, emit association
// scheme tables and run the verification suite for one q.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hermlab/emit.hpp"
#include "hermlab/graphs.hpp"
#include "hermlab/polyalg.hpp"
#include "hermlab/reference.hpp"
#include "hermlab/store.hpp"
#include "hermlab/suite.hpp"

namespace {

using namespace hermlab;
using emit::Report;
using emit::Status;
using nlohmann::json;

constexpr int kUsage = 3;

struct Options {
  unsigned q = 2;
  std::optional<std::string> cache_dir;
  unsigned jobs = 1;
  std::string format = "json";
  unsigned cyclotomic_order = 12;
  std::string profile = "counts";
  bool resume = false;
  std::size_t budget = 0;
  bool quiet = false;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--q", o.q, "field parameter q (field F_{q^2}); one of 2, 3, 4, 5")->default_val(2);
  app->add_option("--cache-dir", o.cache_dir, "cache directory (default $HERMLAB_CACHE or .hermlab-cache)");
  app->add_option("--jobs", o.jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
  app->add_option("--format", o.format, "output format")->default_val("json")->check(CLI::IsMember({"json", "latex", "text"}));
  app->add_option("--cyclotomic-order", o.cyclotomic_order, "order N of the cyclotomic field Q(zeta_N)")
      ->default_val(12)
      ->check(CLI::PositiveNumber);
  app->add_option("--profile", o.profile, "counts, or full for the long-running runs")
      ->default_val("counts")
      ->check(CLI::IsMember({"full", "counts"}));
  app->add_flag("--resume", o.resume, "reuse the partial intersection profile in the cache directory");
  app->add_option("--budget", o.budget, "stop a bulk run after this many new entries (0: no limit)")->default_val(0);
  app->add_flag("--quiet", o.quiet, "no progress messages on stderr");
}

suite::Config make_config(const Options& o) {
  suite::Config c;
  c.q = o.q;
  c.cache_dir = store::resolve_cache_dir(o.cache_dir);
  c.jobs = o.jobs;
  c.cyclotomic_order = o.cyclotomic_order;
  c.full = o.profile == "full";
  c.resume = o.resume;
  c.budget = o.budget;
  if (!o.quiet) c.log = [](const std::string& m) { std::cerr << "hermlab: " << m << '\n'; };
  return c;
}

void print_report(const Report& r, const Options& o) {
  if (o.format == "json") std::cout << r.to_json().dump(2) << '\n';
  else if (o.format == "latex") std::cout << r.to_latex();
  else std::cout << r.to_text();
}

std::string point_label(const projgeo::ProjPoint& p) {
  std::ostringstream os;
  os << '(' << p.c[0] << ',' << p.c[1] << ',' << p.c[2] << ',' << p.c[3] << ')';
  return os.str();
}

int run_generate(const Options& o, const std::string& kind) {
  suite::Session s(make_config(o));
  Report r;
  r.q = o.q;
  r.command = "generate " + kind;
  const auto& surf = s.surface();
  std::uint64_t expected = 0, actual = 0;
  std::filesystem::path path;
  if (kind == "points") {
    expected = surf.point_count();
    actual = s.points().size();
    path = s.write_points_cache();
  } else if (kind == "lines") {
    expected = surf.line_count();
    actual = s.lines().size();
    path = s.write_lines_cache();
  } else {
    expected = surf.curve_count();
    actual = s.curves().size();
    path = s.write_curves_cache();
  }
  r.expect_eq(kind + ".count", expected, actual);
  r.extra = {{"count", actual}, {"path", path.string()}, {"events", s.events()}};
  if (o.format == "text") std::cout << actual << '\n';
  print_report(r, o);
  return r.exit_code();
}

int run_srg(const Options& o, const std::string& export_dir) {
  suite::Session s(make_config(o));
  Report r;
  r.q = o.q;
  r.command = "srg";
  suite::check_srg(s, r);
  if (!export_dir.empty()) {
    std::vector<std::string> labels;
    for (const auto& p : s.points().items) labels.push_back(point_label(p));
    const std::string stem = (std::filesystem::path(export_dir) / ("q" + std::to_string(o.q))).string();
    auto dump = [&](const graphs::Graph& g, const std::string& name) {
      store::atomic_write(stem + "-" + name + ".edges.json", graphs::edge_list_json(g, labels));
      store::atomic_write(stem + "-" + name + ".adjacency.txt", graphs::adjacency_text(g));
    };
    dump(suite::collinearity_graph(s), "collinearity");
    if (o.q <= 3 || o.profile == "full") dump(suite::point_curve_graph(s), "point-curve");
    r.extra = {{"export_prefix", stem}};
  }
  print_report(r, o);
  return r.exit_code();
}

int run_scheme(const Options& o, const std::string& source) {
  suite::Session s(make_config(o));
  Report r;
  r.q = o.q;
  r.command = "scheme " + source;
  if (source == "intersection" && o.q > 2) {
    suite::check_intersection_profile(s, r);
    print_report(r, o);
    return r.exit_code();
  }
  const auto& sch = s.scheme(source);
  const schemes::CharTable* table = nullptr;
  try {
    table = &s.table(source);
  } catch (const schemes::RecognitionError& e) {
    r.add(source + ".character_table", "recognized", e.what(), Status::inconclusive);
  }
  r.expect_eq(source + ".axioms", json::array(), sch.axiom_violations());
  if (table) r.expect_eq(source + ".table_identities", json::array(), schemes::verify_char_table(sch, *table));
  if (o.q == 2 && table) {
    std::optional<reference::SchemeTables> ref;
    const unsigned n = table->cyclotomic_order;
    if (n % 3 == 0) {
      if (source == "intersection") ref = reference::intersection_q2(n);
      if (source == "orbital:points") ref = reference::orbital_points_q2(n);
      if (source == "orbital:lines") ref = reference::orbital_lines_q2(n);
      if (source == "orbital:curves") ref = reference::orbital_curves_q2(n);
    }
    if (ref) {
      const auto cmp = reference::compare(sch, *table, *ref);
      r.add(source + ".tables_match", true, cmp.matched ? json(true) : json(cmp.detail),
            cmp.matched ? Status::pass : Status::fail);
    } else {
      r.add(source + ".tables_match", true, "reference tables need 3 | N", Status::inconclusive);
    }
  }
  if (o.format == "latex") {
    std::cout << emit::scheme_latex(sch, table);
  } else if (o.format == "text") {
    std::cout << emit::scheme_text(sch, table) << '\n' << r.to_text();
  } else {
    r.extra = emit::scheme_json(sch, table);
    print_report(r, o);
  }
  return r.exit_code();
}

int run_verify(const Options& o) {
  suite::Session s(make_config(o));
  const Report r = suite::verify(s);
  print_report(r, o);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian surface curves, strongly regular graphs and association schemes"};
  app.require_subcommand(1);
  Options o;
  std::string kind, source, export_dir;

  auto* gen = app.add_subcommand("generate", "enumerate points, lines or curves and write the cache");
  add_common(gen, o);
  gen->add_option("kind", kind, "points, lines or curves")->required()->check(CLI::IsMember({"points", "lines", "curves"}));

  auto* srg = app.add_subcommand("srg", "strongly regular graph parameters");
  add_common(srg, o);
  srg->add_option("--export", export_dir, "directory for edge-list JSON and adjacency text");

  auto* sch = app.add_subcommand("scheme", "association scheme tables");
  add_common(sch, o);
  sch->add_option("source", source, "intersection, orbital:points, orbital:lines or orbital:curves")
      ->required()
      ->check(CLI::IsMember({"intersection", "orbital:points", "orbital:lines", "orbital:curves"}));

  auto* ver = app.add_subcommand("verify", "run every check for q");
  add_common(ver, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!suite::supported_q(o.q)) {
    std::cerr << "hermlab: --q must be one of 2, 3, 4, 5\n";
    return kUsage;
  }

  try {
    if (*gen) return run_generate(o, kind);
    if (*srg) return run_srg(o, export_dir);
    if (*sch) return run_scheme(o, source);
    return run_verify(o);
  } catch (const polyalg::SameCurveError& e) {
    std::cerr << "hermlab: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hermlab: " << e.what() << '\n';
    return kUsage;
  } catch (const polyalg::InconclusiveError& e) {
    std::cerr << "hermlab: inconclusive: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hermlab: " << e.what() << '\n';
    return 1;
  }
}
