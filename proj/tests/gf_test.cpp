#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "hermlab/gf.hpp"

using namespace hermlab::gf;

TEST(Primes, SmallValues) {
  const std::set<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t n = 0; n < 50; ++n) EXPECT_EQ(is_prime(n), primes.count(n) == 1) << n;
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(prime_factors(65535), (std::vector<std::uint64_t>{3, 5, 17, 257}));
}

TEST(Primes, PrimePowerSplit) {
  EXPECT_EQ(prime_power(8), std::make_pair(2u, 3u));
  EXPECT_EQ(prime_power(9), std::make_pair(3u, 2u));
  EXPECT_EQ(prime_power(5), std::make_pair(5u, 1u));
  EXPECT_THROW(prime_power(6), std::invalid_argument);
  EXPECT_THROW(prime_power(1), std::invalid_argument);
}

TEST(Modulus, LeastPrimitiveByHand) {
  // x^2+x+1; x^3+x^2+1 (constant term compared first); over F_3, x^2+x+2 (x^2+1 has X of order 4).
  EXPECT_EQ(least_primitive_modulus(2, 2), (PolyField::Coeffs{1, 1, 1}));
  EXPECT_EQ(least_primitive_modulus(2, 3), (PolyField::Coeffs{1, 0, 1, 1}));
  EXPECT_EQ(least_primitive_modulus(3, 2), (PolyField::Coeffs{2, 1, 1}));
}

TEST(Field, F4ByHand) {
  const auto f = Field::build(2, 2);
  ASSERT_EQ(f.order(), 4u);
  // 0, 1, g, g^2 = g + 1
  EXPECT_EQ(f.add(2, 1), 3u);
  EXPECT_EQ(f.add(3, 1), 2u);
  EXPECT_EQ(f.add(2, 3), 1u);
  for (Elem a : f.elements()) EXPECT_EQ(f.add(a, a), 0u);
  EXPECT_EQ(f.mul(3, 3), 2u);
  EXPECT_EQ(f.inv(2), 3u);
  EXPECT_EQ(f.minus_one(), 1u);
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::build(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::build(2, 0), std::invalid_argument);
  EXPECT_THROW(Field::build(2, 20), std::invalid_argument);
  const auto f = Field::build(3, 2);
  EXPECT_THROW(f.inv(0), std::domain_error);
}

// Table arithmetic against the coefficient-vector implementation.
class FieldVsPoly : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldVsPoly, AgreesEverywhere) {
  const auto [p, e] = GetParam();
  const auto f = Field::build(p, e);
  const PolyField g(p, e, f.modulus());
  ASSERT_TRUE(g.modulus_is_primitive());
  const auto el = f.elements();
  ASSERT_EQ(el.size(), f.order());
  std::set<std::uint64_t> packed;
  for (Elem a : el) {
    packed.insert(g.pack(f.to_coeffs(a)));
    EXPECT_EQ(f.from_coeffs(f.to_coeffs(a)), a);
    if (a) EXPECT_EQ(f.to_coeffs(f.inv(a)), g.inv(f.to_coeffs(a)));
    EXPECT_EQ(f.to_coeffs(f.pow(a, 7)), g.pow(f.to_coeffs(a), 7));
    for (Elem b : el) {
      ASSERT_EQ(f.to_coeffs(f.add(a, b)), g.add(f.to_coeffs(a), f.to_coeffs(b)));
      ASSERT_EQ(f.to_coeffs(f.mul(a, b)), g.mul(f.to_coeffs(a), f.to_coeffs(b)));
      ASSERT_EQ(f.to_coeffs(f.sub(a, b)), g.sub(f.to_coeffs(a), f.to_coeffs(b)));
    }
  }
  EXPECT_EQ(packed.size(), f.order());
}

INSTANTIATE_TEST_SUITE_P(Small, FieldVsPoly,
                         ::testing::Values(std::make_pair(2u, 1u), std::make_pair(2u, 4u), std::make_pair(3u, 2u),
                                           std::make_pair(3u, 4u), std::make_pair(5u, 2u), std::make_pair(7u, 2u),
                                           std::make_pair(2u, 6u), std::make_pair(13u, 1u)));

TEST(Field, LargeSparseModeMatchesPoly) {
  // 3^8 = 6561 elements: no dense tables, Zech path only.
  const auto f = Field::build(3, 8);
  EXPECT_FALSE(f.has_dense_tables());
  const PolyField g(3, 8, f.modulus());
  std::mt19937 rng(7);
  std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
  for (int i = 0; i < 20000; ++i) {
    const Elem a = pick(rng), b = pick(rng);
    ASSERT_EQ(f.to_coeffs(f.add(a, b)), g.add(f.to_coeffs(a), f.to_coeffs(b)));
  }
}

TEST(Field, FrobeniusIsAdditive) {
  const auto f = Field::build(5, 2);
  for (Elem a : f.elements())
    for (Elem b : f.elements()) EXPECT_EQ(f.pow(f.add(a, b), 5), f.add(f.pow(a, 5), f.pow(b, 5)));
}

TEST(Embedding, F4IntoF16IsAHomomorphism) {
  const auto small = Field::build(2, 2);
  const auto big = Field::build(2, 4);
  const auto emb = subfield_embedding(small, big);
  std::set<Elem> image(emb.begin(), emb.end());
  EXPECT_EQ(image.size(), 4u);
  for (Elem a : small.elements())
    for (Elem b : small.elements()) {
      EXPECT_EQ(emb[small.add(a, b)], big.add(emb[a], emb[b]));
      EXPECT_EQ(emb[small.mul(a, b)], big.mul(emb[a], emb[b]));
    }
  EXPECT_THROW(subfield_embedding(Field::build(2, 3), big), std::invalid_argument);
}

class TowerTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(TowerTest, NormFibers) {
  const std::uint32_t q = GetParam();
  const auto t = Tower::build(q);
  const auto& f = t.field();
  ASSERT_EQ(f.order(), q * q);
  std::map<Elem, unsigned> fiber;
  for (Elem x : f.elements()) {
    EXPECT_EQ(t.frobenius(x), f.pow(x, q));
    if (x) ++fiber[t.norm(x)];
  }
  // x -> x^{q+1} maps F_{q^2}^x onto F_q^x with fibers of size q + 1.
  EXPECT_EQ(fiber.size(), q - 1);
  for (const auto& [y, n] : fiber) {
    EXPECT_TRUE(t.in_base(y));
    EXPECT_EQ(n, q + 1);
  }
  for (Elem b : t.base().elements()) EXPECT_TRUE(t.in_base(t.embed(b)));
}

TEST_P(TowerTest, RhoAndNormPreimage) {
  const std::uint32_t q = GetParam();
  const auto t = Tower::build(q);
  const auto& f = t.field();
  const Elem rho = find_rho(t);
  EXPECT_EQ(t.norm(rho), f.minus_one());
  const auto [r1, r2] = find_rho_pair(t);
  EXPECT_NE(r1, r2);
  EXPECT_EQ(r1, rho);
  EXPECT_EQ(t.norm(r2), f.minus_one());
  for (Elem x : f.elements())
    if (x && t.in_base(x)) EXPECT_EQ(t.norm(norm_preimage(t, x)), x);
}

INSTANTIATE_TEST_SUITE_P(Q, TowerTest, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u));
