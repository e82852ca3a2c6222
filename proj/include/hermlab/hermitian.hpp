#pragma once

// The Fermat (Hermitian) surface x0^{q+1} + x1^{q+1} + x2^{q+1} + x3^{q+1} = 0
// over F_{q^2}: its sesquilinear form, unitary similitudes, the rational
// curves of degree q+1 and the orbits of points, lines and curves.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hermlab/digest.hpp"
#include "hermlab/gf.hpp"
#include "hermlab/orbit.hpp"
#include "hermlab/polyalg.hpp"
#include "hermlab/projgeo.hpp"

namespace hermlab::hermitian {

using gf::Elem;
using projgeo::LineFrame;
using projgeo::P1Point;
using projgeo::ProjPoint;
using projgeo::Vec4;

/// 4x4 matrix, row-major.
using Mat4 = std::array<Elem, 16>;

Mat4 identity4();
Mat4 mat_mul(const gf::Field& f, const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
Vec4 apply(const gf::Field& f, const Mat4& a, const Vec4& v);

class Surface {
 public:
  explicit Surface(std::uint32_t q);

  std::uint32_t q() const { return tower_.q(); }
  const gf::Tower& tower() const { return tower_; }
  const gf::Field& field() const { return tower_.field(); }

  /// b(u, v) = sum u_i v_i^q.
  Elem form(const Vec4& u, const Vec4& v) const;
  bool contains(const Vec4& v) const { return form(v, v) == 0; }
  /// Entrywise q-th power.
  Mat4 frobenius(const Mat4& a) const;
  /// F^T F^(q), the matrix of b on the columns of F.
  Mat4 gram(const Mat4& f) const;
  /// Target Gram matrix: -1 at (0,3) and (3,0), 1 at (1,1) and (2,2).
  Mat4 gram_target() const;

  /// All rational points, sorted.
  std::vector<ProjPoint> rational_points() const;

  std::uint64_t point_count() const;  // (q^3+1)(q^2+1)
  std::uint64_t line_count() const;   // (q^3+1)(q+1)
  std::uint64_t curve_count() const;  // q^4(q^3+1)(q^2-1)

 private:
  gf::Tower tower_;
};

/// |PGU_4(F_{q^2})| = q^6 (q^2-1)(q^3+1)(q^4-1).
std::uint64_t group_order(std::uint32_t q);
/// |Stab(C)| = q^2(q^4-1) and |Stab(v)| = q^6(q^2-1)^2 for a curve and a point.
std::uint64_t curve_stabilizer_order(std::uint32_t q);
std::uint64_t point_stabilizer_order(std::uint32_t q);

/// Projective class of an invertible matrix: first nonzero entry is 1.
struct GroupElem {
  Mat4 a{};

  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

GroupElem canonical_group_elem(const gf::Field& f, const Mat4& a);

/// lambda with A^T A^(q) = lambda I, when A is a unitary similitude.
std::optional<Elem> similitude_factor(const Surface& s, const Mat4& a);

/// A curve frame F with F^T F^(q) equal to the target Gram matrix.
struct CurveMatrix {
  Mat4 f{};
  friend bool operator==(const CurveMatrix&, const CurveMatrix&) = default;
};

bool satisfies_gram(const Surface& s, const CurveMatrix& c);

/// Columns (e, e2, e3, e') with e = (1, rho, 0, 0), e' a scaled (1, rho', 0, 0).
CurveMatrix construct_fj(const Surface& s);

/// The line s -> (s, t, rho s, rho t).
LineFrame reference_line(const Surface& s);
/// Lines x0 = rho x1, x2 = rho x3 and the same with rho' != rho.
std::pair<LineFrame, LineFrame> disjoint_line_pair(const Surface& s);

/// F * (s^{q+1}, s^q t, s t^q, t^{q+1}).
ProjPoint parameterize(const Surface& s, const CurveMatrix& c, const P1Point& st);
/// The q^2+1 rational points of the curve, sorted. Throws if two parameters
/// collide (non-conforming frame).
std::vector<ProjPoint> curve_rational_points(const Surface& s, const CurveMatrix& c);

polyalg::ParamCurve param_curve(const Surface& s, const CurveMatrix& c);
polyalg::ParamCurve param_curve(const LineFrame& l);

/// Ideal pieces of the curve in degrees 2..q+1 (RREF).
std::vector<polyalg::GradedPiece> curve_ideal_pieces(const Surface& s, const CurveMatrix& c);
/// Degree-1 piece of a line.
std::vector<polyalg::GradedPiece> line_ideal_pieces(const Surface& s, const LineFrame& l);

/// Digest of the concatenated ideal pieces in degrees 2..q+1.
Digest curve_key(const Surface& s, const CurveMatrix& c);

ProjPoint act_on_point(const Surface& s, const GroupElem& g, const ProjPoint& p);
LineFrame act_on_line(const Surface& s, const GroupElem& g, const LineFrame& l);
/// g*F rescaled by c with c^{q+1} = lambda^{-1} so the Gram condition holds.
CurveMatrix act_on_curve(const Surface& s, const GroupElem& g, const CurveMatrix& c);

/// A random unitary matrix (orthonormal columns for b).
Mat4 random_unitary(const Surface& s, std::mt19937_64& rng);

/// Generators of PGU_4: coordinate transpositions, diag(alpha,1,1,1) with
/// alpha of order q+1, a non-monomial 2x2 unitary block when one exists, and
/// a unitary reflection. Returned list is validated against the point and
/// line orbit sizes; random unitary matrices are appended if needed.
std::vector<GroupElem> unitary_generators(const Surface& s, unsigned jobs = 1);

using PointOrbit = Orbit<ProjPoint, ProjPoint>;
using LineOrbit = Orbit<LineFrame, LineFrame>;
using CurveOrbit = Orbit<CurveMatrix, Digest>;

PointOrbit point_orbit(const Surface& s, const std::vector<GroupElem>& gens, unsigned jobs = 1);
LineOrbit line_orbit(const Surface& s, const std::vector<GroupElem>& gens, unsigned jobs = 1);
/// Orbit of construct_fj(s). Throws if the size differs from curve_count().
CurveOrbit curve_orbit(const Surface& s, const std::vector<GroupElem>& gens, unsigned jobs = 1,
                       std::size_t cap = 0);

/// Every group element as a projective class (only sensible for q = 2).
std::vector<GroupElem> enumerate_group(const Surface& s, const std::vector<GroupElem>& gens,
                                       std::size_t cap = 100000);

}  // namespace hermlab::hermitian
