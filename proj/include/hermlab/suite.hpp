#pragma once

// Lazily computed objects for one q (field, generators, orbits, point sets)
// backed by the disk cache, and the verification checks built on them.

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hermlab/emit.hpp"
#include "hermlab/graphs.hpp"
#include "hermlab/hermitian.hpp"
#include "hermlab/schemes.hpp"
#include "hermlab/store.hpp"

namespace hermlab::suite {

namespace fs = std::filesystem;
using emit::Report;

struct Config {
  unsigned q = 2;
  fs::path cache_dir = ".hermlab-cache";
  unsigned jobs = 1;
  unsigned cyclotomic_order = 12;
  bool full = false;  // --profile full
  bool resume = false;
  std::size_t budget = 0;  // max new profile entries per run, 0 = unlimited
  std::function<void(const std::string&)> log;
};

bool supported_q(unsigned q);

class Session {
 public:
  explicit Session(Config c);

  const Config& config() const { return cfg_; }
  unsigned q() const { return cfg_.q; }
  const hermitian::Surface& surface() const { return surface_; }

  const std::vector<hermitian::GroupElem>& generators();
  const hermitian::PointOrbit& points();
  const hermitian::LineOrbit& lines();
  /// Curves and keys come from the cache when a valid one exists; the
  /// action table is left empty until curve_action() is called.
  const hermitian::CurveOrbit& curves();
  const std::vector<std::vector<std::uint32_t>>& curve_action();
  /// Index of construct_fj in the curve orbit.
  std::size_t reference_curve();

  /// Sorted point indices of each line / curve.
  const std::vector<std::vector<std::uint32_t>>& line_point_sets();
  const std::vector<std::vector<std::uint32_t>>& curve_point_sets();

  const polyalg::ParamCurve& param(std::size_t curve);
  const std::vector<polyalg::GradedPiece>& ideal(std::size_t curve);
  /// Fills param/ideal for every curve (parallel).
  void prepare_all_ideals();

  /// Writes the canonical cache file and returns its path.
  fs::path write_points_cache();
  fs::path write_lines_cache();
  fs::path write_curves_cache();
  const std::vector<std::string>& events() const { return events_; }

  /// "intersection", "orbital:points", "orbital:lines" or "orbital:curves".
  /// The intersection scheme is built from all pairs at q = 2 and from the
  /// sampled rows of the profile otherwise (full profile only).
  const schemes::Scheme& scheme(const std::string& source);
  const schemes::CharTable& table(const std::string& source);
  /// I(C_ref, C_i) for every i (the reference itself gets 0), or nullopt when
  /// the run stopped at the budget. Uses the profile file in the cache
  /// directory when resuming.
  const std::optional<std::vector<std::uint32_t>>& profile();
  fs::path profile_path();
  std::size_t profile_resumed() const { return profile_resumed_; }
  std::size_t profile_computed() const { return profile_computed_; }

  void log(const std::string& msg) const {
    if (cfg_.log) cfg_.log(msg);
  }

 private:
  Config cfg_;
  hermitian::Surface surface_;
  std::optional<std::vector<hermitian::GroupElem>> gens_;
  std::optional<hermitian::PointOrbit> points_;
  std::optional<hermitian::LineOrbit> lines_;
  std::optional<hermitian::CurveOrbit> curves_;
  std::optional<std::vector<std::vector<std::uint32_t>>> line_sets_, curve_sets_;
  std::vector<std::optional<polyalg::ParamCurve>> params_;
  std::vector<std::optional<std::vector<polyalg::GradedPiece>>> ideals_;
  std::vector<std::string> events_;
  std::map<std::string, schemes::Scheme> schemes_;
  std::map<std::string, schemes::CharTable> tables_;
  std::optional<std::optional<std::vector<std::uint32_t>>> profile_;
  std::size_t profile_resumed_ = 0, profile_computed_ = 0;
};

// Check groups. Each appends checks to the report and records its timing
// under the group name.

void check_counts(Session& s, Report& r);
/// Point-curve graph and collinearity graph; q >= 4 uses only the formula
/// and the complement of the collinearity graph.
void check_srg(Session& s, Report& r);
/// Every point on a curve and a line; |C ∩ L| <= 1 over all curve-line pairs.
void check_incidence(Session& s, Report& r);
/// q = 2 intersection scheme over all pairs against the reference tables.
void check_intersection_scheme_q2(Session& s, Report& r);
/// The q = 2 intersection graph is complete; the disjoint line pair meets in 0.
void check_intersection_graph_q2(Session& s, Report& r);
/// I(C0, .) over the whole orbit (resumable), its value set, d and the
/// conjecture d = q^2 + 1. The full profile adds the structure constants.
void check_intersection_profile(Session& s, Report& r);
/// Reference against fast path: all pairs at q = 2, `samples` random pairs
/// otherwise.
void check_intersection_paths(Session& s, Report& r, std::size_t samples = 10000);
/// Orbital schemes on points, lines (and curves at q = 2).
void check_orbital_schemes(Session& s, Report& r);
/// Dense adjacency-matrix recomputation for the q = 2 schemes.
void check_dense_oracle(Session& s, Report& r);
/// Field axioms for p^e <= 81, partition sums, identities on small schemes.
void check_properties(Report& r);

/// verify: every group that applies to q.
Report verify(Session& s);

/// Graph on surface points joining points on a common curve / line.
graphs::Graph point_curve_graph(Session& s);
graphs::Graph collinearity_graph(Session& s);

}  // namespace hermlab::suite
