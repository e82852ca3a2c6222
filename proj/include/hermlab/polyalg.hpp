#pragma once

// Homogeneous polynomials in x0..x3 over a finite field, pulled back along
// parameterized rational curves P^1 -> P^3. Curve ideals are computed degree
// by degree as kernels of the pullback map; intersection numbers of two
// curves come from the Hilbert function of the sum of their ideals.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermlab/gf.hpp"
#include "hermlab/linalg.hpp"

namespace hermlab::polyalg {

using gf::Elem;
using gf::Field;
using linalg::Matrix;

using Exponent = std::array<std::uint8_t, 4>;

/// Monomials of degree d in x0..x3, lexicographically decreasing
/// (x0^d first, x3^d last). Size C(d+3, 3).
class MonomialBasis {
 public:
  explicit MonomialBasis(unsigned degree);

  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  /// Position of a monomial of this degree.
  std::size_t index(const Exponent& e) const;

 private:
  unsigned degree_;
  std::vector<Exponent> monomials_;
  std::vector<std::uint32_t> lookup_;  // dense (a0,a1,a2) -> index
};

/// Shared, lazily built bases (thread-safe).
const MonomialBasis& monomial_basis(unsigned degree);

std::uint64_t binomial(unsigned n, unsigned k);

/// Binary form of degree D: coefficient k belongs to s^{D-k} t^k.
using BinaryForm = std::vector<Elem>;

/// Rational curve P^1 -> P^3 given by four binary forms of a common degree.
struct ParamCurve {
  unsigned degree = 0;
  std::array<BinaryForm, 4> coords;
};

/// s^{D-k} t^k coefficients of the product.
BinaryForm multiply_forms(const Field& f, const BinaryForm& a, const BinaryForm& b);

/// Columns are indexed by monomial_basis(d), rows by the coefficients of the
/// pulled-back form (degree * d + 1 rows).
Matrix pullback_matrix(const Field& f, const ParamCurve& c, unsigned d);

/// Pullback of a homogeneous form given by its coefficients in monomial_basis(d).
BinaryForm pullback(const Field& f, std::span<const Elem> form, unsigned d, const ParamCurve& c);

/// Evaluate a form at a point.
Elem evaluate(const Field& f, std::span<const Elem> form, unsigned d, const std::array<Elem, 4>& x);

/// Row-reduced basis of a degree-d space of forms.
struct GradedPiece {
  unsigned degree = 0;
  Matrix basis;  // RREF rows over monomial_basis(degree)

  std::size_t dim() const { return basis.rows(); }
};

/// All degree-d forms vanishing on the curve.
GradedPiece curve_ideal_piece(const Field& f, const ParamCurve& c, unsigned d);

/// dim of the degree-d part of S / (ideal generated by the given pieces).
/// Every generator degree must be <= d.
std::size_t hilbert_function(const Field& f, std::span<const GradedPiece> generators, unsigned d);

/// Thrown when the Hilbert function did not settle before the degree cap.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when two inputs define the same curve (1-dimensional intersection).
class SameCurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-curve cache of the reduced pullback row spaces by degree. Not
/// thread-safe; use one per worker.
class CurveData {
 public:
  CurveData(const Field& f, ParamCurve curve);

  const ParamCurve& curve() const { return curve_; }
  /// RREF of the pullback matrix in degree d (rows are binary coefficients).
  const Matrix& pullback_rref(unsigned d);
  const std::vector<std::size_t>& pullback_pivots(unsigned d);
  /// Ideal piece in degree d.
  const GradedPiece& ideal(unsigned d);

 private:
  void ensure(unsigned d);

  const Field* field_;
  ParamCurve curve_;
  std::map<unsigned, Matrix> rref_;
  std::map<unsigned, std::vector<std::size_t>> pivots_;
  std::map<unsigned, GradedPiece> ideal_;
};

struct IntersectionOptions {
  unsigned first_degree = 1;
  /// Degree cap; 0 selects 6 * max(curve degree).
  unsigned max_degree = 0;
  /// Number of consecutive equal values that counts as stable.
  unsigned stable_run = 3;
};

struct IntersectionResult {
  std::uint32_t value = 0;
  unsigned stabilized_at = 0;   // first degree of the stable run
  std::vector<std::size_t> hilbert;  // h(first_degree), h(first_degree+1), ...
};

/// Length of the scheme cut out by I(C1) + I(C2): the stable value of the
/// Hilbert function h(d) = dim S_d / (I(C1)_d + I(C2)_d).
IntersectionResult intersection_number(const Field& f, CurveData& a, CurveData& b,
                                       const IntersectionOptions& opts = {});
IntersectionResult intersection_number(const Field& f, const ParamCurve& a, const ParamCurve& b,
                                       const IntersectionOptions& opts = {});

/// Same quantity through the restriction of C2's ideal to C1 = P^1: degree of
/// the gcd of the pullbacks along C1 of the ideal generators of C2 in degrees
/// 2..gen_degree.
std::uint32_t intersection_number_fast(const Field& f, const ParamCurve& a,
                                       std::span<const GradedPiece> b_generators);

/// Univariate helpers over F (dense, constant term first).
namespace univariate {
using Poly = std::vector<Elem>;
void trim(Poly& p);
Poly mod(const Field& f, Poly a, const Poly& b);
Poly gcd(const Field& f, Poly a, Poly b);
}  // namespace univariate

/// Degree of the homogeneous gcd of a list of binary forms of possibly
/// different degrees; zero forms are ignored. nullopt if all are zero.
std::optional<unsigned> binary_gcd_degree(const Field& f, std::span<const BinaryForm> forms);

}  // namespace hermlab::polyalg
