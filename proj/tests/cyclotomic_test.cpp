#include <gtest/gtest.h>

#include "hermlab/cyclotomic.hpp"

using hermlab::cyclo::CycField;
using hermlab::cyclo::CycNum;

namespace {

std::vector<long> poly(unsigned n) {
  std::vector<long> out;
  for (const auto& c : CycField::get(n)->cyclotomic_polynomial()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(poly(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(poly(3), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(poly(8), (std::vector<long>{1, 0, 0, 0, 1}));
  EXPECT_EQ(poly(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(CycField::get(24)->degree(), 8u);
}

TEST(Cyclotomic, RootsOfUnity) {
  for (unsigned n : {3u, 4u, 5u, 12u, 24u}) {
    const CycNum z = CycNum::zeta(n, 1);
    CycNum acc(n, 1);
    for (unsigned k = 1; k <= n; ++k) {
      acc *= z;
      EXPECT_EQ(acc == CycNum(n, 1), k == n) << n << " " << k;
    }
    EXPECT_EQ(z * z.conj(), CycNum(n, 1));
  }
}

TEST(Cyclotomic, SquareRoots) {
  const auto check = [](unsigned n, long m) {
    const auto s = CycNum::sqrt_of_integer(n, m);
    ASSERT_TRUE(s.has_value()) << n << " " << m;
    EXPECT_EQ(*s * *s, CycNum(n, m));
  };
  check(3, -3);
  check(12, -3);
  check(12, 3);
  check(4, -1);
  check(8, 2);
  check(8, -2);
  check(5, 5);
  check(24, 6);
  EXPECT_FALSE(CycNum::sqrt_of_integer(12, 2).has_value());
  EXPECT_FALSE(CycNum::sqrt_of_integer(12, 5).has_value());
  EXPECT_FALSE(CycNum::sqrt_of_integer(3, -1).has_value());
}

TEST(Cyclotomic, FieldOperations) {
  const CycNum z = CycNum::zeta(12, 1);
  const CycNum x = CycNum(12, 1) + z * mpq_class(2, 3);
  EXPECT_EQ(x * x.inverse(), CycNum(12, 1));
  EXPECT_EQ((x - x).is_zero(), true);
  EXPECT_THROW((x - x).inverse(), std::domain_error);
  EXPECT_EQ(x.galois(5).galois(5), x);
  EXPECT_EQ((x * x.conj()).conj(), x * x.conj());
  EXPECT_TRUE(CycNum(12, mpq_class(3, 2)).is_rational());
  EXPECT_EQ(CycNum(12, mpq_class(3, 2)).rational(), mpq_class(3, 2));
  EXPECT_FALSE(z.is_rational());
  const auto c = CycNum::zeta(4, 1).to_complex();
  EXPECT_NEAR(c.real(), 0.0, 1e-12);
  EXPECT_NEAR(c.imag(), 1.0, 1e-12);
  EXPECT_EQ(hermlab::cyclo::to_string(mpq_class(-3, 2)), "-3/2");
}

TEST(Cyclotomic, Rendering) {
  const auto s = *CycNum::sqrt_of_integer(12, -3);
  EXPECT_EQ(CycNum(12, 7).render(), "7");
  const std::string r = (CycNum(12, 1) + s).render();
  EXPECT_NE(r.find("-3"), std::string::npos) << r;
}
