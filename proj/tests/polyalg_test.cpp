#include <gtest/gtest.h>

#include <random>

#include "hermlab/hermitian.hpp"
#include "hermlab/polyalg.hpp"

using namespace hermlab;
using namespace hermlab::polyalg;

namespace {

// Coordinates given as monomials s^{D-k} t^k (k < 0 for a zero form).
ParamCurve monomial_curve(unsigned degree, std::array<int, 4> ks) {
  ParamCurve c;
  c.degree = degree;
  for (int i = 0; i < 4; ++i) {
    c.coords[i].assign(degree + 1, 0);
    if (ks[i] >= 0) c.coords[i][ks[i]] = 1;
  }
  return c;
}

GradedPiece linear_piece(std::vector<std::array<gf::Elem, 4>> rows) {
  GradedPiece g;
  g.degree = 1;
  g.basis = linalg::Matrix(0, 4);
  for (const auto& r : rows) g.basis.append_row(r);
  return g;
}

}  // namespace

TEST(Monomials, BasisSizesAndIndex) {
  for (unsigned d = 0; d <= 8; ++d) {
    const auto& b = monomial_basis(d);
    EXPECT_EQ(b.size(), binomial(d + 3, 3));
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index(b[i]), i);
  }
  EXPECT_EQ(monomial_basis(2)[0], (Exponent{2, 0, 0, 0}));
  EXPECT_EQ(monomial_basis(2)[9], (Exponent{0, 0, 0, 2}));
}

TEST(Hilbert, EmptyAndLinear) {
  const auto f = gf::Field::build(3, 1);
  EXPECT_EQ(hilbert_function(f, {}, 2), 10u);
  const std::vector<GradedPiece> x0{linear_piece({{1, 0, 0, 0}})};
  for (unsigned d = 1; d < 7; ++d) EXPECT_EQ(hilbert_function(f, x0, d), binomial(d + 2, 2));
}

TEST(Hilbert, TwistedCubic) {
  const auto f = gf::Field::build(2, 2);
  const auto cubic = monomial_curve(3, {0, 1, 2, 3});
  const auto i2 = curve_ideal_piece(f, cubic, 2);
  EXPECT_EQ(i2.dim(), 3u);
  const std::vector<GradedPiece> gens{i2};
  for (unsigned d = 2; d < 9; ++d) EXPECT_EQ(hilbert_function(f, gens, d), 3 * d + 1);
}

TEST(Ideal, QuadricThroughDegreeFourCurve) {
  // v = (s^4, s^3 t, s t^3, t^4): x0 x3 - x1 x2 pulls back to s^4 t^4 - s^4 t^4.
  const auto f = gf::Field::build(3, 2);
  const auto c = monomial_curve(4, {0, 1, 3, 4});
  const auto& b = monomial_basis(2);
  std::vector<gf::Elem> form(b.size(), 0);
  form[b.index({1, 0, 0, 1})] = 1;
  form[b.index({0, 1, 1, 0})] = f.minus_one();
  const auto pb = pullback(f, form, 2, c);
  for (auto x : pb) EXPECT_EQ(x, 0u);
  const auto piece = curve_ideal_piece(f, c, 2);
  linalg::RowSpace rs(b.size());
  for (std::size_t i = 0; i < piece.dim(); ++i) rs.insert(f, piece.basis.row(i));
  EXPECT_TRUE(rs.reduce(f, form));
}

TEST(Intersection, LinesAndConics) {
  const auto f = gf::Field::build(3, 2);
  const auto l01 = monomial_curve(1, {0, 1, -1, -1});
  const auto l02 = monomial_curve(1, {0, -1, 1, -1});
  const auto l23 = monomial_curve(1, {-1, -1, 0, 1});
  EXPECT_EQ(intersection_number(f, l01, l02).value, 1u);
  EXPECT_EQ(intersection_number(f, l01, l23).value, 0u);
  EXPECT_THROW(intersection_number(f, l01, l01), SameCurveError);
  // Conic x0 x2 = x1^2 in x3 = 0: the line x1 = 0 cuts two points, x2 = 0 is tangent.
  const auto conic = monomial_curve(2, {0, 1, 2, -1});
  EXPECT_EQ(intersection_number(f, conic, l02).value, 2u);
  EXPECT_EQ(intersection_number(f, conic, l01).value, 2u);
  EXPECT_EQ(intersection_number(f, conic, l23).value, 1u);
}

TEST(Intersection, BinaryGcd) {
  const auto f = gf::Field::build(3, 2);
  const gf::Elem m1 = f.minus_one();
  const std::vector<BinaryForm> a{{1, 0, m1}, {1, m1}};
  EXPECT_EQ(binary_gcd_degree(f, a), 1u);
  const std::vector<BinaryForm> b{{1, 0, 0, 0}, {0, 0, 1}};
  EXPECT_EQ(binary_gcd_degree(f, b), 0u);
  const std::vector<BinaryForm> c{{1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_EQ(binary_gcd_degree(f, c), 2u);
  const std::vector<BinaryForm> zero{{0, 0}, {0}};
  EXPECT_FALSE(binary_gcd_degree(f, zero).has_value());
}

// The restriction shortcut against Hilbert stabilization on orbit curves, and
// the count of common rational points as a lower bound.
TEST(Intersection, FastPathAgreesOnQ2Curves) {
  const hermitian::Surface s(2);
  const auto& f = s.field();
  const auto orbit = hermitian::curve_orbit(s, hermitian::unitary_generators(s));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t i = rng() % orbit.size(), j = rng() % orbit.size();
    if (i == j) continue;
    const auto a = hermitian::param_curve(s, orbit.items[i]);
    const auto b = hermitian::param_curve(s, orbit.items[j]);
    const auto slow = intersection_number(f, a, b).value;
    const auto pieces = hermitian::curve_ideal_pieces(s, orbit.items[j]);
    EXPECT_EQ(intersection_number_fast(f, a, pieces), slow);
    const auto pa = hermitian::curve_rational_points(s, orbit.items[i]);
    const auto pb = hermitian::curve_rational_points(s, orbit.items[j]);
    std::vector<projgeo::ProjPoint> common;
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(common));
    EXPECT_GE(slow, common.size());
  }
}
