#include "hermlab/suite.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hermlab/parallel.hpp"
#include "hermlab/reference.hpp"

namespace hermlab::suite {

using emit::Status;
using hermitian::CurveMatrix;
using nlohmann::json;
using projgeo::ProjPoint;

namespace {

class Timer {
 public:
  Timer(Report& r, std::string name) : r_(r), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.timings[name_] += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  Report& r_;
  std::string name_;
  std::chrono::steady_clock::time_point t0_;
};

unsigned checked_q(unsigned q) {
  if (!supported_q(q)) throw std::invalid_argument("q must be one of 2, 3, 4, 5 (got " + std::to_string(q) + ")");
  return q;
}

std::vector<std::uint32_t> index_set(const std::vector<ProjPoint>& all, const std::vector<ProjPoint>& sub) {
  std::vector<std::uint32_t> out;
  out.reserve(sub.size());
  for (const auto& p : sub) {
    auto it = std::lower_bound(all.begin(), all.end(), p);
    if (it == all.end() || *it != p) throw std::runtime_error("point missing from the surface point list");
    out.push_back(static_cast<std::uint32_t>(it - all.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

json params_json(const graphs::SrgParams& p) { return {p.v, p.k, p.lambda, p.mu}; }

json srg_json(const graphs::SrgReport& r) {
  if (r.params) return params_json(*r.params);
  json j{{"v", r.v}, {"k", r.k}, {"degenerate", r.degenerate}};
  if (!r.violation.empty()) j["violation"] = r.violation;
  return j;
}

std::size_t find_key(const std::vector<Digest>& keys, const Digest& k) {
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k) return keys.size();
  return static_cast<std::size_t>(it - keys.begin());
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool supported_q(unsigned q) { return q >= 2 && q <= 5; }

Session::Session(Config c) : cfg_(std::move(c)), surface_(checked_q(cfg_.q)) {
  if (cfg_.jobs == 0) cfg_.jobs = 1;
}

const std::vector<hermitian::GroupElem>& Session::generators() {
  if (!gens_) gens_ = hermitian::unitary_generators(surface_, cfg_.jobs);
  return *gens_;
}

const hermitian::PointOrbit& Session::points() {
  if (!points_) points_ = hermitian::point_orbit(surface_, generators(), cfg_.jobs);
  return *points_;
}

const hermitian::LineOrbit& Session::lines() {
  if (!lines_) lines_ = hermitian::line_orbit(surface_, generators(), cfg_.jobs);
  return *lines_;
}

const hermitian::CurveOrbit& Session::curves() {
  if (curves_) return *curves_;
  const auto header = store::cache_header(surface_, "curves", surface_.curve_count());
  auto cached = store::read_cache(cfg_.cache_dir, header);
  if (!cached.rejected.empty()) events_.push_back(cached.rejected);
  if (cached.items && cached.keys) {
    try {
      hermitian::CurveOrbit o;
      for (const auto& j : *cached.items) o.items.push_back(store::parse_curve(j));
      for (const auto& j : *cached.keys) o.keys.push_back(Digest::from_hex(j.get<std::string>()));
      for (std::size_t i = 1; i < o.keys.size(); ++i)
        if (!(o.keys[i - 1] < o.keys[i])) throw std::runtime_error("keys out of order");
      std::atomic<bool> bad{false};
      parallel_for(o.items.size(), cfg_.jobs, [&](std::size_t i) {
        if (!hermitian::satisfies_gram(surface_, o.items[i])) bad = true;
      });
      if (bad) throw std::runtime_error("a cached curve fails the Gram condition");
      const std::size_t n = o.items.size();
      for (std::size_t k = 0; k <= 32; ++k) {
        const std::size_t i = k * (n - 1) / 32;
        if (hermitian::curve_key(surface_, o.items[i]) != o.keys[i]) throw std::runtime_error("cached key mismatch");
      }
      if (find_key(o.keys, hermitian::curve_key(surface_, hermitian::construct_fj(surface_))) == n)
        throw std::runtime_error("reference curve missing");
      events_.push_back("curves loaded from " + store::cache_file(cfg_.cache_dir, header).string());
      curves_ = std::move(o);
      return *curves_;
    } catch (const std::exception& e) {
      events_.push_back(std::string("curve cache rejected: ") + e.what());
    }
  }
  log("enumerating the curve orbit");
  curves_ = hermitian::curve_orbit(surface_, generators(), cfg_.jobs);
  events_.push_back("curves written to " + write_curves_cache().string());
  return *curves_;
}

const std::vector<std::vector<std::uint32_t>>& Session::curve_action() {
  auto& o = const_cast<hermitian::CurveOrbit&>(curves());
  if (!o.action.empty()) return o.action;
  const auto& gens = generators();
  std::vector<std::vector<std::uint32_t>> action(gens.size(), std::vector<std::uint32_t>(o.size()));
  std::atomic<bool> missing{false};
  parallel_for(o.size(), cfg_.jobs, [&](std::size_t i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto k = hermitian::curve_key(surface_, hermitian::act_on_curve(surface_, gens[g], o.items[i]));
      const std::size_t j = find_key(o.keys, k);
      if (j == o.keys.size()) missing = true;
      else action[g][i] = static_cast<std::uint32_t>(j);
    }
  });
  if (missing) throw std::runtime_error("generator image not found in the curve orbit");
  o.action = std::move(action);
  return o.action;
}

std::size_t Session::reference_curve() {
  const auto& o = curves();
  const std::size_t i = find_key(o.keys, hermitian::curve_key(surface_, hermitian::construct_fj(surface_)));
  if (i == o.keys.size()) throw std::runtime_error("reference curve missing from the orbit");
  return i;
}

const std::vector<std::vector<std::uint32_t>>& Session::line_point_sets() {
  if (!line_sets_) {
    const auto& pts = points().items;
    std::vector<std::vector<std::uint32_t>> sets;
    for (const auto& l : lines().items) sets.push_back(index_set(pts, projgeo::line_points(surface_.field(), l)));
    line_sets_ = std::move(sets);
  }
  return *line_sets_;
}

const std::vector<std::vector<std::uint32_t>>& Session::curve_point_sets() {
  if (!curve_sets_) {
    const auto& pts = points().items;
    const auto& cs = curves().items;
    std::vector<std::vector<std::uint32_t>> sets(cs.size());
    parallel_for(cs.size(), cfg_.jobs,
                 [&](std::size_t i) { sets[i] = index_set(pts, hermitian::curve_rational_points(surface_, cs[i])); });
    curve_sets_ = std::move(sets);
  }
  return *curve_sets_;
}

const polyalg::ParamCurve& Session::param(std::size_t i) {
  if (params_.size() != curves().size()) params_.resize(curves().size());
  if (!params_[i]) params_[i] = hermitian::param_curve(surface_, curves().items[i]);
  return *params_[i];
}

const std::vector<polyalg::GradedPiece>& Session::ideal(std::size_t i) {
  if (ideals_.size() != curves().size()) ideals_.resize(curves().size());
  if (!ideals_[i]) ideals_[i] = hermitian::curve_ideal_pieces(surface_, curves().items[i]);
  return *ideals_[i];
}

void Session::prepare_all_ideals() {
  const auto& cs = curves().items;
  params_.resize(cs.size());
  ideals_.resize(cs.size());
  parallel_for(cs.size(), cfg_.jobs, [&](std::size_t i) {
    if (!params_[i]) params_[i] = hermitian::param_curve(surface_, cs[i]);
    if (!ideals_[i]) ideals_[i] = hermitian::curve_ideal_pieces(surface_, cs[i]);
  });
}

fs::path Session::write_points_cache() {
  const auto& o = points();
  json items = json::array();
  for (const auto& p : o.items) items.push_back(store::serialize_point(p));
  return store::write_cache(cfg_.cache_dir, store::cache_header(surface_, "points", o.size()), items);
}

fs::path Session::write_lines_cache() {
  const auto& o = lines();
  json items = json::array();
  for (const auto& l : o.items) items.push_back(store::serialize_line(l));
  return store::write_cache(cfg_.cache_dir, store::cache_header(surface_, "lines", o.size()), items);
}

fs::path Session::write_curves_cache() {
  const auto& o = curves();
  json items = json::array(), keys = json::array();
  for (const auto& c : o.items) items.push_back(store::serialize_curve(c));
  for (const auto& k : o.keys) keys.push_back(k.hex());
  return store::write_cache(cfg_.cache_dir, store::cache_header(surface_, "curves", o.size()), items, keys);
}

fs::path Session::profile_path() {
  const auto& o = curves();
  return cfg_.cache_dir / ("profile-q" + std::to_string(q()) + "-" + o.keys[reference_curve()].hex() + ".json");
}

const std::optional<std::vector<std::uint32_t>>& Session::profile() {
  if (profile_) return *profile_;
  const auto& o = curves();
  const std::size_t ref = reference_curve();
  const auto pc0 = hermitian::param_curve(surface_, o.items[ref]);
  log("intersection profile against the reference curve");
  auto run = store::run_profile(
      profile_path(), q(), o.keys, ref,
      [&](std::size_t i) {
        const auto pieces = hermitian::curve_ideal_pieces(surface_, o.items[i]);
        return polyalg::intersection_number_fast(surface_.field(), pc0, pieces);
      },
      cfg_.resume, cfg_.budget, cfg_.jobs);
  profile_resumed_ = run.resumed;
  profile_computed_ = run.computed;
  if (!run.complete) {
    profile_.emplace(std::nullopt);
    return *profile_;
  }
  std::vector<std::uint32_t> v(o.size(), 0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i == ref) continue;
    if (run.profile.entries[pos].first != o.keys[i]) throw std::runtime_error("profile entries do not match the orbit");
    v[i] = run.profile.entries[pos++].second;
  }
  profile_.emplace(std::move(v));
  return *profile_;
}

const schemes::Scheme& Session::scheme(const std::string& source) {
  if (auto it = schemes_.find(source); it != schemes_.end()) return it->second;
  std::optional<schemes::Scheme> built;
  if (source == "orbital:points") {
    built = schemes::scheme_from_orbitals(points().action, cfg_.jobs);
  } else if (source == "orbital:lines") {
    built = schemes::scheme_from_orbitals(lines().action, cfg_.jobs);
  } else if (source == "orbital:curves") {
    if (surface_.curve_count() > 4096)
      throw std::invalid_argument("orbital:curves is limited to 4096 vertices (q = 2)");
    built = schemes::scheme_from_orbitals(curve_action(), cfg_.jobs);
  } else if (source == "intersection" && q() == 2) {
    prepare_all_ideals();
    const auto& f = surface_.field();
    built = schemes::scheme_from_invariant(
        curves().size(),
        [&](std::size_t a, std::size_t b) {
          return static_cast<std::int64_t>(polyalg::intersection_number_fast(f, *params_[a], *ideals_[b]));
        },
        cfg_.jobs);
  } else if (source == "intersection") {
    if (!cfg_.full) throw std::invalid_argument("the intersection scheme for q >= 3 needs --profile full");
    const auto& prof = profile();
    if (!prof) throw std::runtime_error("intersection profile is incomplete");
    const auto& o = curves();
    const auto& vals = *prof;
    const std::size_t n = o.size();
    const std::size_t ref = reference_curve();
    std::set<std::uint32_t> distinct;
    for (std::size_t i = 0; i < n; ++i)
      if (i != ref) distinct.insert(vals[i]);
    std::vector<std::int64_t> labels{0};
    std::map<std::uint32_t, std::uint8_t> cls;
    for (auto v : distinct) {
      cls[v] = static_cast<std::uint8_t>(labels.size());
      labels.push_back(v);
    }
    // Vertex 0 is the reference curve.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[ref]);
    std::map<std::size_t, std::vector<std::uint8_t>> rows;
    auto& r0 = rows[0];
    r0.resize(n);
    for (std::size_t v = 1; v < n; ++v) r0[v] = cls.at(vals[perm[v]]);
    std::map<std::uint8_t, int> taken;
    const auto& f = surface_.field();
    for (std::size_t v = 1; v < n; ++v) {
      if (taken[r0[v]]++ >= 2) continue;
      log("intersection row " + std::to_string(v));
      const auto pieces = hermitian::curve_ideal_pieces(surface_, o.items[perm[v]]);
      std::vector<std::uint8_t> row(n, 0);
      std::atomic<bool> unseen{false};
      parallel_for(n, cfg_.jobs, [&](std::size_t w) {
        if (w == v) return;
        const auto val = polyalg::intersection_number_fast(f, hermitian::param_curve(surface_, o.items[perm[w]]), pieces);
        auto it = cls.find(val);
        if (it == cls.end()) unseen = true;
        else row[w] = it->second;
      });
      if (unseen) throw schemes::NotASchemeError("row " + std::to_string(v) + " has a value missing from row 0");
      rows[v] = std::move(row);
    }
    built = schemes::Scheme::from_symmetric_rows(n, labels, rows);
  } else {
    throw std::invalid_argument("unknown scheme source '" + source + "'");
  }
  return schemes_.emplace(source, std::move(*built)).first->second;
}

const schemes::CharTable& Session::table(const std::string& source) {
  if (auto it = tables_.find(source); it != tables_.end()) return it->second;
  auto t = schemes::character_table_auto(scheme(source), cfg_.cyclotomic_order);
  return tables_.emplace(source, std::move(t)).first->second;
}

// ---------------------------------------------------------------------------

graphs::Graph point_curve_graph(Session& s) {
  const auto& pts = s.points().items;
  std::vector<std::vector<ProjPoint>> blocks;
  for (const auto& set : s.curve_point_sets()) {
    blocks.emplace_back();
    for (auto i : set) blocks.back().push_back(pts[i]);
  }
  return graphs::clique_union(pts, blocks);
}

graphs::Graph collinearity_graph(Session& s) {
  const auto& pts = s.points().items;
  std::vector<std::vector<ProjPoint>> blocks;
  for (const auto& set : s.line_point_sets()) {
    blocks.emplace_back();
    for (auto i : set) blocks.back().push_back(pts[i]);
  }
  return graphs::clique_union(pts, blocks);
}

namespace {

bool curves_enabled(const Session& s) { return s.q() <= 3 || s.config().full; }

struct KnownCounts {
  std::uint64_t points, lines, curves;
};

std::optional<KnownCounts> known_counts(unsigned q) {
  if (q == 2) return KnownCounts{45, 27, 432};
  if (q == 3) return KnownCounts{280, 112, 18144};
  return std::nullopt;
}

std::optional<graphs::SrgParams> known_point_curve(unsigned q) {
  if (q == 2) return graphs::SrgParams{45, 32, 22, 24};
  if (q == 3) return graphs::SrgParams{280, 243, 210, 216};
  if (q == 4) return graphs::SrgParams{1105, 1024, 948, 960};
  return std::nullopt;
}

std::optional<graphs::SrgParams> known_collinearity(unsigned q) {
  if (q == 2) return graphs::SrgParams{45, 12, 3, 3};
  if (q == 3) return graphs::SrgParams{280, 36, 8, 4};
  return std::nullopt;
}

json missing_dual_fractions(const schemes::CharTable& t, std::initializer_list<const char*> want) {
  std::set<std::string> have;
  for (const auto& m : schemes::dual_intersection_matrices(t))
    for (const auto& row : m)
      for (const auto& x : row)
        if (x.is_rational() && x.rational().get_den() != 1) have.insert(cyclo::to_string(x.rational()));
  json missing = json::array();
  for (const char* f : want)
    if (!have.count(f)) missing.push_back(f);
  return missing;
}

void add_scheme_identities(Report& r, const std::string& name, const schemes::Scheme& sch,
                           const schemes::CharTable* t) {
  r.expect_eq(name + ".axioms", json::array(), sch.axiom_violations());
  if (t) r.expect_eq(name + ".table_identities", json::array(), schemes::verify_char_table(sch, *t));
}

}  // namespace

void check_counts(Session& s, Report& r) {
  Timer timer(r, "counts");
  const auto& surf = s.surface();
  const auto known = known_counts(s.q());
  const auto& pts = s.points();
  r.expect_eq("points.orbit", known ? known->points : surf.point_count(), pts.size());
  r.expect_eq("points.enumeration", pts.size(), surf.rational_points().size());
  if (known) r.expect_eq("points.formula", known->points, surf.point_count());
  const auto& lines = s.lines();
  r.expect_eq("lines.orbit", known ? known->lines : surf.line_count(), lines.size());
  if (known) r.expect_eq("lines.formula", known->lines, surf.line_count());
  std::size_t short_lines = 0;
  for (const auto& set : s.line_point_sets()) short_lines += set.size() != s.q() * s.q() + 1;
  r.expect_eq("lines.rational_points", 0, short_lines);
  if (!curves_enabled(s)) return;
  const auto& curves = s.curves();
  r.expect_eq("curves.orbit", known ? known->curves : surf.curve_count(), curves.size());
  if (known) r.expect_eq("curves.formula", known->curves, surf.curve_count());
  std::size_t short_curves = 0;
  for (const auto& set : s.curve_point_sets()) short_curves += set.size() != s.q() * s.q() + 1;
  r.expect_eq("curves.rational_points", 0, short_curves);
}

void check_srg(Session& s, Report& r) {
  Timer timer(r, "srg");
  const unsigned q = s.q();
  const unsigned jobs = s.config().jobs;
  const auto formula = graphs::point_curve_formula(q);
  const auto col = collinearity_graph(s);
  const auto col_rep = graphs::srg_params(col, jobs);
  const auto col_expected = known_collinearity(q).value_or(graphs::collinearity_formula(q));
  r.expect_eq("srg.collinearity", params_json(col_expected), srg_json(col_rep));
  r.expect_eq("srg.collinearity.formula", params_json(col_expected), params_json(graphs::collinearity_formula(q)));
  if (auto k = known_point_curve(q)) r.expect_eq("srg.point_curve.formula", params_json(*k), params_json(formula));
  r.expect_eq("srg.feasible", true, formula.feasible() && graphs::collinearity_formula(q).feasible());

  const auto comp = graphs::complement(col);
  if (curves_enabled(s)) {
    const auto g = point_curve_graph(s);
    const auto rep = graphs::srg_params(g, jobs);
    r.expect_eq("srg.point_curve", params_json(known_point_curve(q).value_or(formula)), srg_json(rep));
    r.expect_eq("srg.complement_identity", true, comp == g);
  } else {
    r.expect_eq("srg.complement_of_collinearity", params_json(formula), srg_json(graphs::srg_params(comp, jobs)));
  }

  // Rank 3: the orbital scheme on points has two classes, one of them the
  // adjacency of the complement of the collinearity graph.
  const auto& sch = s.scheme("orbital:points");
  r.expect_eq("srg.rank3.classes", 2, sch.classes());
  std::size_t bad = sch.classes() == 2 ? 0 : 1;
  if (!bad) {
    const auto& rel = sch.relations();
    for (std::size_t x = 0; x < rel.n; ++x)
      for (std::size_t y = 0; y < rel.n; ++y)
        if (x != y && (sch.valency(rel(x, y)) == formula.k) != comp.adjacent(x, y)) ++bad;
  }
  r.expect_eq("srg.rank3.relations", 0, bad);
}

void check_incidence(Session& s, Report& r) {
  Timer timer(r, "incidence");
  const std::size_t n = s.points().size();
  const std::size_t w = (n + 63) / 64;
  auto bitsets = [&](const std::vector<std::vector<std::uint32_t>>& sets) {
    std::vector<std::uint64_t> b(sets.size() * w, 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (auto p : sets[i]) b[i * w + p / 64] |= std::uint64_t{1} << (p % 64);
    return b;
  };
  auto uncovered = [&](const std::vector<std::uint64_t>& b, std::size_t count) {
    std::vector<std::uint64_t> u(w, 0);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t k = 0; k < w; ++k) u[k] |= b[i * w + k];
    std::size_t c = 0;
    for (auto x : u) c += std::popcount(x);
    return n - c;
  };
  const auto& lsets = s.line_point_sets();
  const auto lb = bitsets(lsets);
  r.expect_eq("incidence.points_on_lines", 0, uncovered(lb, lsets.size()));
  if (!curves_enabled(s)) return;
  const auto& csets = s.curve_point_sets();
  const auto cb = bitsets(csets);
  r.expect_eq("incidence.points_on_curves", 0, uncovered(cb, csets.size()));

  std::atomic<std::uint64_t> violations{0};
  std::atomic<unsigned> worst{0};
  parallel_for(csets.size(), s.config().jobs, [&](std::size_t c) {
    unsigned local = 0;
    std::uint64_t v = 0;
    for (std::size_t l = 0; l < lsets.size(); ++l) {
      unsigned common = 0;
      for (std::size_t k = 0; k < w; ++k) common += std::popcount(cb[c * w + k] & lb[l * w + k]);
      local = std::max(local, common);
      v += common > 1;
    }
    violations += v;
    unsigned cur = worst.load();
    while (local > cur && !worst.compare_exchange_weak(cur, local)) {
    }
  });
  r.expect_eq("incidence.pairs_checked", csets.size() * lsets.size(), csets.size() * lsets.size());
  r.expect_eq("incidence.curve_line_violations", 0, violations.load());
  r.add("incidence.max_common_points", "<= 1", worst.load(), worst.load() <= 1 ? Status::pass : Status::fail);
}

void check_intersection_scheme_q2(Session& s, Report& r) {
  Timer timer(r, "intersection_scheme");
  const auto& sch = s.scheme("intersection");
  const std::size_t n = sch.order();
  r.expect_eq("intersection.pairs", 93096, n * (n - 1) / 2);
  const std::vector<std::int64_t> values(sch.labels().begin() + 1, sch.labels().end());
  r.expect_eq("intersection.values", json{1, 2, 3, 4, 5}, values);
  r.expect_eq("intersection.classes", 5, sch.classes());
  r.expect_eq("intersection.symmetric", true, sch.symmetric());
  const auto& t = s.table("intersection");
  add_scheme_identities(r, "intersection", sch, &t);
  const auto ref = reference::intersection_q2(t.cyclotomic_order);
  const auto cmp = reference::compare(sch, t, ref);
  r.add("intersection.tables_match", true, cmp.matched ? json(true) : json(cmp.detail),
        cmp.matched ? Status::pass : Status::fail);

  r.expect_eq("intersection.dual_fractions_missing", json::array(),
              missing_dual_fractions(t, {"3/2", "9/2", "51/2"}));

  const auto c = schemes::conjecture_check(2, sch.classes());
  r.add("conjecture.q2", c.expected, c.d, c.holds ? Status::pass : Status::fail);
}

void check_intersection_graph_q2(Session& s, Report& r) {
  Timer timer(r, "intersection_graph");
  const auto& sch = s.scheme("intersection");
  const auto& rel = sch.relations();
  graphs::Graph g(rel.n);
  std::int64_t least = std::numeric_limits<std::int64_t>::max();
  for (std::size_t x = 0; x < rel.n; ++x)
    for (std::size_t y = x + 1; y < rel.n; ++y) {
      const auto v = sch.labels()[rel(x, y)];
      least = std::min(least, v);
      if (v >= 1) g.add_edge(x, y);
    }
  r.expect_eq("intersection_graph.complete", true, graphs::is_complete(g));
  r.add("intersection_graph.min_value", ">= 1", least, least >= 1 ? Status::pass : Status::fail);

  const auto& surf = s.surface();
  const auto& f = surf.field();
  const auto [l1, l2] = hermitian::disjoint_line_pair(surf);
  const auto a = hermitian::param_curve(l1), b = hermitian::param_curve(l2);
  r.expect_eq("disjoint_lines.reference", 0, polyalg::intersection_number(f, a, b).value);
  r.expect_eq("disjoint_lines.fast", 0, polyalg::intersection_number_fast(f, a, hermitian::line_ideal_pieces(surf, l2)));
  const auto p1 = projgeo::line_points(f, l1), p2 = projgeo::line_points(f, l2);
  std::vector<ProjPoint> common;
  std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(common));
  r.expect_eq("disjoint_lines.common_points", 0, common.size());
}

void check_intersection_profile(Session& s, Report& r) {
  Timer timer(r, "intersection_profile");
  const unsigned q = s.q();
  const auto& prof = s.profile();
  const std::size_t n = s.curves().size();
  const std::size_t have = s.profile_resumed() + s.profile_computed();
  r.add("profile.entries", n - 1, have, prof ? Status::pass : Status::inconclusive);
  json info{{"path", s.profile_path().string()},
            {"resumed", s.profile_resumed()},
            {"computed", s.profile_computed()}};
  if (!prof) {
    r.add("profile.values", q == 3 ? json{1, 2, 3, 4, 5, 6, 7, 8, 10, 20} : json(nullptr), nullptr,
          Status::inconclusive);
    r.extra["profile"] = info;
    return;
  }
  const auto& vals = *prof;
  const std::size_t ref = s.reference_curve();
  std::map<std::uint32_t, std::uint64_t> hist;
  for (std::size_t i = 0; i < n; ++i)
    if (i != ref) hist[vals[i]]++;
  std::vector<std::uint32_t> values;
  json hj = json::object();
  for (const auto& [v, c] : hist) {
    values.push_back(v);
    hj[std::to_string(v)] = c;
  }
  info["histogram"] = hj;
  info["reference_curve_key_hash"] = s.curves().keys[ref].hex();
  r.extra["profile"] = info;

  if (q == 3) {
    r.expect_eq("profile.values", json{1, 2, 3, 4, 5, 6, 7, 8, 10, 20}, values);
    r.expect_eq("profile.classes", 10, values.size());
  }
  const auto c = schemes::conjecture_check(q, static_cast<unsigned>(values.size()));
  r.add("conjecture.q" + std::to_string(q), c.expected, c.d, c.holds ? Status::pass : Status::fail);
  const std::uint64_t zeros = hist.count(0) ? hist[0] : 0;
  r.add("profile.positive", ">= 1", json{{"zero_count", zeros}}, zeros == 0 ? Status::pass : Status::fail);

  const auto& sets = s.curve_point_sets();
  std::size_t below = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == ref) continue;
    std::vector<std::uint32_t> common;
    std::set_intersection(sets[ref].begin(), sets[ref].end(), sets[i].begin(), sets[i].end(),
                          std::back_inserter(common));
    below += vals[i] < common.size();
  }
  r.expect_eq("profile.rational_point_bound_violations", 0, below);

  if (!s.config().full) return;
  try {
    const auto& sch = s.scheme("intersection");
    r.expect_eq("intersection.classes", values.size(), sch.classes());
    const auto& t = s.table("intersection");
    add_scheme_identities(r, "intersection", sch, &t);
    r.extra["scheme"] = emit::scheme_json(sch, &t);
  } catch (const schemes::NotASchemeError& e) {
    r.add("intersection.scheme", "association scheme", e.what(), Status::fail);
  } catch (const schemes::RecognitionError& e) {
    r.add("intersection.character_table", "recognized", e.what(), Status::inconclusive);
  }
}

void check_intersection_paths(Session& s, Report& r, std::size_t samples) {
  Timer timer(r, "intersection_paths");
  const auto& surf = s.surface();
  const auto& f = surf.field();
  const unsigned jobs = s.config().jobs;
  const auto& cs = s.curves().items;
  std::atomic<std::uint64_t> mismatch{0}, asym{0}, inconclusive{0}, pairs{0};
  if (s.q() == 2) {
    s.prepare_all_ideals();
    std::vector<const polyalg::ParamCurve*> pc(cs.size());
    std::vector<const std::vector<polyalg::GradedPiece>*> id(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      pc[i] = &s.param(i);
      id[i] = &s.ideal(i);
    }
    parallel_for(
        cs.size(), jobs,
        [&](std::size_t a) {
          polyalg::CurveData da(f, *pc[a]);
          for (std::size_t b = a + 1; b < cs.size(); ++b) {
            polyalg::CurveData db(f, *pc[b]);
            const auto fa = polyalg::intersection_number_fast(f, *pc[a], *id[b]);
            const auto fb = polyalg::intersection_number_fast(f, *pc[b], *id[a]);
            asym += fa != fb;
            try {
              mismatch += polyalg::intersection_number(f, da, db).value != fa;
            } catch (const polyalg::InconclusiveError&) {
              ++inconclusive;
            }
            ++pairs;
          }
        },
        1);
    r.expect_eq("paths.pairs", 93096, pairs.load());
  } else {
    std::mt19937_64 rng(0x5eed + s.q());
    std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    while (todo.size() < samples) {
      const std::size_t a = pick(rng), b = pick(rng);
      if (a != b) todo.emplace_back(a, b);
    }
    parallel_for(
        todo.size(), jobs,
        [&](std::size_t k) {
          const auto [a, b] = todo[k];
          const auto pa = hermitian::param_curve(surf, cs[a]), pb = hermitian::param_curve(surf, cs[b]);
          const auto fa = polyalg::intersection_number_fast(f, pa, hermitian::curve_ideal_pieces(surf, cs[b]));
          const auto fb = polyalg::intersection_number_fast(f, pb, hermitian::curve_ideal_pieces(surf, cs[a]));
          asym += fa != fb;
          try {
            mismatch += polyalg::intersection_number(f, pa, pb).value != fa;
          } catch (const polyalg::InconclusiveError&) {
            ++inconclusive;
          }
          ++pairs;
        },
        4);
    r.add("paths.pairs", ">= " + std::to_string(samples), pairs.load(),
          pairs.load() >= samples ? Status::pass : Status::fail);
  }
  r.expect_eq("paths.mismatches", 0, mismatch.load());
  r.expect_eq("paths.asymmetric", 0, asym.load());
  r.add("paths.inconclusive", 0, inconclusive.load(), inconclusive.load() ? Status::inconclusive : Status::pass);

  // Invariance under random unitary transformations.
  std::mt19937_64 rng(0xa11ce + s.q());
  std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
  std::size_t changed = 0;
  for (int k = 0; k < 16; ++k) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const auto g = hermitian::canonical_group_elem(f, hermitian::random_unitary(surf, rng));
    const auto ga = hermitian::act_on_curve(surf, g, cs[a]), gb = hermitian::act_on_curve(surf, g, cs[b]);
    const auto before = polyalg::intersection_number_fast(f, hermitian::param_curve(surf, cs[a]),
                                                          hermitian::curve_ideal_pieces(surf, cs[b]));
    const auto after = polyalg::intersection_number_fast(f, hermitian::param_curve(surf, ga),
                                                         hermitian::curve_ideal_pieces(surf, gb));
    changed += before != after;
  }
  r.expect_eq("paths.unitary_invariance", 0, changed);
}

void check_orbital_schemes(Session& s, Report& r) {
  Timer timer(r, "orbital_schemes");
  const unsigned q = s.q();
  for (const std::string src : {"orbital:points", "orbital:lines"}) {
    const auto& sch = s.scheme(src);
    const auto& t = s.table(src);
    add_scheme_identities(r, src, sch, &t);
    r.expect_eq(src + ".classes", 2, sch.classes());
    if (q == 2) {
      const auto ref = src == "orbital:points" ? reference::orbital_points_q2(t.cyclotomic_order)
                                               : reference::orbital_lines_q2(t.cyclotomic_order);
      const auto cmp = reference::compare(sch, t, ref);
      r.add(src + ".tables_match", true, cmp.matched ? json(true) : json(cmp.detail),
            cmp.matched ? Status::pass : Status::fail);
      if (src == "orbital:points")
        r.expect_eq(src + ".dual_fractions_missing", json::array(), missing_dual_fractions(t, {"21/2", "25/2"}));
    }
  }
  {
    // Points: valencies 1, q^2(q+1), q^5. Lines (dual quadrangle): 1, q(q^2+1), q^4.
    const std::uint64_t Q = q;
    r.expect_eq("orbital:points.valencies", json{1, Q * Q * (Q + 1), Q * Q * Q * Q * Q},
                sorted(s.scheme("orbital:points").valencies()));
    r.expect_eq("orbital:lines.valencies", json{1, Q * (Q * Q + 1), Q * Q * Q * Q},
                sorted(s.scheme("orbital:lines").valencies()));
  }
  if (q != 2) return;

  const std::string src = "orbital:curves";
  const auto& sch = s.scheme(src);
  const auto& t = s.table(src);
  add_scheme_identities(r, src, sch, &t);
  r.expect_eq(src + ".classes", 19, sch.classes());
  r.expect_eq(src + ".commutative", false, sch.commutative());
  const auto ref = reference::orbital_curves_q2(t.cyclotomic_order);
  const auto cmp = reference::compare(sch, t, ref);
  r.add(src + ".tables_match", true, cmp.matched ? json(true) : json(cmp.detail),
        cmp.matched ? Status::pass : Status::fail);
  r.expect_eq(src + ".idempotents", 14, t.size());
  r.expect_eq(src + ".minimal_cyclotomic_order", 3, t.minimal_order);

  // Reference-order lists, read through the matching when there is one.
  auto permuted = [&](const std::vector<std::uint64_t>& computed, const std::vector<std::size_t>& to_ref,
                      std::size_t size) {
    std::vector<std::uint64_t> out(size, 0);
    for (std::size_t i = 0; i < computed.size() && i < to_ref.size(); ++i) out[to_ref[i]] = computed[i];
    return out;
  };
  if (cmp.matching) {
    const auto& m = *cmp.matching;
    r.expect_eq(src + ".valencies", ref.valencies, permuted(sch.valencies(), m.cols, ref.valencies.size()));
    r.expect_eq(src + ".idempotent_ranks", ref.ranks, permuted(t.ranks, m.rows, ref.ranks.size()));
    r.expect_eq(src + ".representation_degrees", ref.rep_degrees, permuted(t.rep_degrees, m.rows, ref.rep_degrees.size()));
    r.expect_eq(src + ".multiplicities", ref.multiplicities,
                permuted(t.multiplicities, m.rows, ref.multiplicities.size()));
  } else {
    r.expect_eq(src + ".valencies", sorted(ref.valencies), sorted(sch.valencies()));
    r.expect_eq(src + ".idempotent_ranks", sorted(ref.ranks), sorted(t.ranks));
    r.expect_eq(src + ".representation_degrees", sorted(ref.rep_degrees), sorted(t.rep_degrees));
    r.expect_eq(src + ".multiplicities", sorted(ref.multiplicities), sorted(t.multiplicities));
  }
}

void check_dense_oracle(Session& s, Report& r) {
  Timer timer(r, "dense_oracle");
  std::mt19937_64 rng(0xd3a5e);
  for (const std::string src : {"intersection", "orbital:points", "orbital:lines", "orbital:curves"}) {
    const auto& sch = s.scheme(src);
    const auto& t = s.table(src);
    const auto& rel = sch.relations();
    const std::size_t n = rel.n;
    const unsigned D = sch.classes() + 1;

    schemes::IntMatrix tr(D, std::vector<std::int64_t>(D, 0));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) tr[rel(x, y)][rel(y, x)]++;
    r.expect_eq("dense." + src + ".traces", schemes::adjacency_trace_products(sch), tr);

    std::vector<Eigen::MatrixXd> A(D, Eigen::MatrixXd::Zero(n, n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) A[rel(x, y)](x, y) = 1;

    std::vector<std::pair<unsigned, unsigned>> prods;
    if (D <= 6) {
      for (unsigned i = 0; i < D; ++i)
        for (unsigned j = 0; j < D; ++j) prods.emplace_back(i, j);
    } else {
      std::uniform_int_distribution<unsigned> pick(1, D - 1);
      for (int k = 0; k < 24; ++k) prods.emplace_back(pick(rng), pick(rng));
    }
    std::size_t bad_products = 0;
    for (const auto& [i, j] : prods) {
      Eigen::MatrixXd m = A[i] * A[j];
      for (unsigned k = 0; k < D; ++k) m -= static_cast<double>(sch.p(i, j, k)) * A[k];
      bad_products += m.cwiseAbs().maxCoeff() != 0.0;
    }
    r.expect_eq("dense." + src + ".products", 0, bad_products);

    // Spectrum of a random symmetric element against the character table.
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<int> c(D, 0);
    for (unsigned j = 1; j < D; ++j) c[j] = coef(rng);
    const unsigned N = t.cyclotomic_order;
    std::vector<cyclo::CycNum> h(D, cyclo::CycNum(N));
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    for (unsigned j = 0; j < D; ++j) {
      H += c[j] * (A[j] + A[j].transpose());
      h[j] += cyclo::CycNum(N, c[j]);
      h[sch.transpose(j)] += cyclo::CycNum(N, c[j]);
    }
    const auto h2 = schemes::algebra_multiply(sch, h, h);
    auto chi = [&](std::size_t i, const std::vector<cyclo::CycNum>& x) {
      cyclo::CycNum acc(N);
      for (unsigned k = 0; k < D; ++k) acc += x[k] * t.P[i][k];
      return (acc * mpq_class(1, t.rep_degrees[i])).to_complex().real();
    };
    std::vector<double> predicted;
    bool unsupported = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double t1 = chi(i, h);
      std::vector<double> ev;
      if (t.rep_degrees[i] == 1) {
        ev = {t1};
      } else if (t.rep_degrees[i] == 2) {
        const double disc = std::max(0.0, 2 * chi(i, h2) - t1 * t1);
        ev = {(t1 - std::sqrt(disc)) / 2, (t1 + std::sqrt(disc)) / 2};
      } else {
        unsupported = true;
      }
      for (double e : ev)
        for (std::uint64_t m = 0; m < t.multiplicities[i]; ++m) predicted.push_back(e);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    std::vector<double> actual(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(predicted.begin(), predicted.end());
    double worst = predicted.size() == actual.size() && !unsupported ? 0.0 : INFINITY;
    double scale = 1;
    for (std::size_t k = 0; k < actual.size() && std::isfinite(worst); ++k) {
      worst = std::max(worst, std::abs(actual[k] - predicted[k]));
      scale = std::max(scale, std::abs(actual[k]));
    }
    const bool ok = worst <= 1e-6 * scale;
    r.add("dense." + src + ".spectrum", "max deviation <= 1e-6 scale", worst, ok ? Status::pass : Status::fail);
  }
}

void check_properties(Report& r) {
  Timer timer(r, "properties");
  json failures = json::array();
  std::size_t fields = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u, 67u,
                          71u, 73u, 79u}) {
    for (std::uint32_t e = 1, order = p; order <= 81; ++e, order *= p) {
      const auto f = gf::Field::build(p, e);
      const gf::PolyField g(p, e, f.modulus());
      const auto el = f.elements();
      ++fields;
      std::size_t bad = 0;
      for (auto a : el) {
        if (f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0) ++bad;
        if (a != 0 && f.mul(a, f.inv(a)) != 1) ++bad;
        if (f.pow(a, order) != a) ++bad;
        for (auto b : el) {
          if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) ++bad;
          if (f.pow(f.add(a, b), p) != f.add(f.pow(a, p), f.pow(b, p))) ++bad;
          if (f.pow(f.mul(a, b), p) != f.mul(f.pow(a, p), f.pow(b, p))) ++bad;
          if (f.to_coeffs(f.add(a, b)) != g.add(f.to_coeffs(a), f.to_coeffs(b))) ++bad;
          if (f.to_coeffs(f.mul(a, b)) != g.mul(f.to_coeffs(a), f.to_coeffs(b))) ++bad;
          for (auto c : el) {
            if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ++bad;
            if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ++bad;
            if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ++bad;
          }
        }
      }
      if (bad) failures.push_back({{"field", std::to_string(p) + "^" + std::to_string(e)}, {"violations", bad}});
    }
  }
  r.expect_eq("field.axioms", json::array(), failures);
  r.expect_eq("field.count", 32, fields);

  json tower_failures = json::array();
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto t = gf::Tower::build(q);
    const auto& f = t.field();
    std::size_t bad = 0;
    std::set<gf::Elem> norms;
    for (auto x : f.elements()) {
      if (t.frobenius(x) != f.pow(x, q) || t.frobenius(t.frobenius(x)) != x) ++bad;
      if (!t.in_base(t.norm(x))) ++bad;
      if (x != 0) norms.insert(t.norm(x));
      for (auto y : f.elements())
        if (t.norm(f.mul(x, y)) != f.mul(t.norm(x), t.norm(y))) ++bad;
    }
    if (norms.size() != q - 1) ++bad;
    if (bad) tower_failures.push_back({{"q", q}, {"violations", bad}});
  }
  r.expect_eq("tower.frobenius_norm", json::array(), tower_failures);

  auto psum = [](std::initializer_list<unsigned> ms) {
    mpz_class s = 0;
    for (auto m : ms) s += schemes::partition_count(m);
    return s.get_str();
  };
  r.expect_eq("partition.p0", "1", schemes::partition_count(0).get_str());
  r.expect_eq("partition.sum_q2", "18", psum({1, 2, 3, 4, 5}));
  r.expect_eq("partition.sum_q3", "735", psum({1, 2, 3, 4, 5, 6, 7, 8, 10, 20}));

  // K_5 as the trivial scheme.
  schemes::RelationMatrix k5{5, std::vector<std::uint8_t>(25)};
  for (std::size_t x = 0; x < 5; ++x)
    for (std::size_t y = 0; y < 5; ++y) k5.r[x * 5 + y] = x != y;
  const auto triv = schemes::Scheme::from_relations(k5, {0, 1});
  const auto tt = schemes::character_table_auto(triv);
  add_scheme_identities(r, "trivial_scheme", triv, &tt);
  std::vector<std::vector<std::string>> P;
  for (const auto& row : tt.P) {
    P.emplace_back();
    for (const auto& x : row) P.back().push_back(x.render());
  }
  r.expect_eq("trivial_scheme.P", json::array({json::array({"1", "4"}), json::array({"1", "-1"})}), P);
}

Report verify(Session& s) {
  Report r;
  r.q = s.q();
  r.command = "verify";
  check_counts(s, r);
  check_srg(s, r);
  check_incidence(s, r);
  if (s.q() == 2) {
    check_intersection_scheme_q2(s, r);
    check_intersection_graph_q2(s, r);
    check_intersection_paths(s, r);
    check_orbital_schemes(s, r);
    check_dense_oracle(s, r);
  } else {
    if (curves_enabled(s)) {
      check_intersection_profile(s, r);
      check_intersection_paths(s, r, s.q() == 3 ? 10000 : 1000);
    }
    check_orbital_schemes(s, r);
  }
  check_properties(r);
  if (!s.events().empty()) r.extra["cache_events"] = s.events();
  return r;
}

}  // namespace hermlab::suite
