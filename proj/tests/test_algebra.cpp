#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "oracle.hpp"
#include "starcheck/algebra.hpp"

using namespace starcheck;

namespace {

const oracle::Rationals Q;

Algebra mat(std::size_t n, Involution inv, Field f = Field::rationals()) { return Algebra::matrices(f, n, inv); }

std::vector<Algebra> instances() {
  return {mat(2, Involution::transpose),  mat(3, Involution::transpose),  mat(4, Involution::transpose),
          mat(2, Involution::symplectic), mat(4, Involution::symplectic), mat(6, Involution::symplectic),
          Algebra::quaternions(),         mat(3, Involution::transpose, Field::prime(5)),
          mat(4, Involution::symplectic, Field::prime(3))};
}

}  // namespace

TEST(Algebra, ParseSpecs) {
  EXPECT_EQ(Algebra::parse("mat:4:symplectic", "q").spec(), "mat:4:symplectic");
  EXPECT_EQ(Algebra::parse("quat", "q").spec(), "quat");
  EXPECT_EQ(Algebra::parse("mat:3:transpose", "gf:5").field(), Field::prime(5));
  EXPECT_THROW(Algebra::parse("mat:3:symplectic", "q"), AlgebraError);
  EXPECT_THROW(Algebra::parse("mat:0:transpose", "q"), AlgebraError);
  EXPECT_THROW(Algebra::parse("mat:2:hermitian", "q"), Error);
  EXPECT_THROW(Algebra::quaternions(Field::prime(5)), AlgebraError);
}

TEST(Algebra, SymplecticStarMatchesExplicitJ) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {2, 4, 6}) {
    const Algebra alg = mat(n, Involution::symplectic);
    for (int trial = 0; trial < 10; ++trial) {
      const Element x = random_element(alg, rng);
      EXPECT_EQ(oracle::to_matrix(x.star()), oracle::symplectic_star(Q, oracle::to_matrix(x))) << "n = " << n;
    }
  }
}

TEST(Algebra, TransposeStarAndProductMatchDenseOracle) {
  std::mt19937_64 rng(5);
  const Algebra alg = mat(4, Involution::transpose);
  for (int trial = 0; trial < 10; ++trial) {
    const Element a = random_element(alg, rng);
    const Element b = random_element(alg, rng);
    EXPECT_EQ(oracle::to_matrix(a.star()), oracle::transpose(Q, oracle::to_matrix(a)));
    EXPECT_EQ(oracle::to_matrix(a * b), oracle::mul(Q, oracle::to_matrix(a), oracle::to_matrix(b)));
  }
}

TEST(Algebra, QuaternionUnitsAndProduct) {
  const Algebra h = Algebra::quaternions();
  const Element one = h.one();
  const Element i = h.quaternion_unit(1);
  const Element j = h.quaternion_unit(2);
  const Element k = h.quaternion_unit(3);
  EXPECT_EQ(i * i, -one);
  EXPECT_EQ(j * j, -one);
  EXPECT_EQ(k * k, -one);
  EXPECT_EQ(i * j * k, -one);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Element a = random_element(h, rng);
    const Element b = random_element(h, rng);
    std::vector<mpq_class> ca;
    std::vector<mpq_class> cb;
    std::vector<mpq_class> cp;
    for (std::size_t t = 0; t < 4; ++t) {
      ca.push_back(a[t].rational());
      cb.push_back(b[t].rational());
      cp.push_back((a * b)[t].rational());
    }
    EXPECT_EQ(cp, oracle::quaternion_product(ca, cb));
  }
}

TEST(Algebra, InvolutionAxiomsOnEveryInstance) {
  std::mt19937_64 rng(13);
  for (const auto& alg : instances()) {
    for (int trial = 0; trial < 8; ++trial) {
      const Element a = random_element(alg, rng);
      const Element b = random_element(alg, rng);
      EXPECT_EQ((a * b).star(), b.star() * a.star()) << alg.describe();
      EXPECT_EQ(a.star().star(), a) << alg.describe();
      EXPECT_EQ((a + b).star(), a.star() + b.star()) << alg.describe();
    }
    EXPECT_EQ(alg.one().star(), alg.one());
  }
}

TEST(Algebra, SymmetricSkewSplit) {
  std::mt19937_64 rng(17);
  for (const auto& alg : instances()) {
    const Element r = random_element(alg, rng);
    const auto [s, k] = sk_split(r);
    EXPECT_TRUE(s.is_symmetric());
    EXPECT_TRUE(k.is_skew());
    EXPECT_EQ(s + k, r);
    EXPECT_TRUE(random_element(alg, rng, ElementKind::symmetric).is_symmetric());
    EXPECT_TRUE(random_element(alg, rng, ElementKind::skew).is_skew());
  }
}

TEST(Algebra, InverseIsTwoSided) {
  std::mt19937_64 rng(19);
  for (const auto& alg : instances()) {
    for (int trial = 0; trial < 5; ++trial) {
      const Element a = random_element(alg, rng);
      const auto z = right_inverse(a);
      EXPECT_EQ(z.has_value(), is_invertible(a)) << alg.describe();
      if (!z) continue;
      EXPECT_EQ(a * *z, alg.one());
      EXPECT_EQ(*z * a, alg.one());
    }
    EXPECT_FALSE(right_inverse(alg.zero()).has_value());
    EXPECT_FALSE(is_invertible(alg.zero()));
  }
  const Algebra m2 = mat(2, Involution::transpose);
  EXPECT_FALSE(is_invertible(m2.matrix_unit(1, 2)));
  EXPECT_TRUE(is_invertible(m2.matrix_unit(1, 2) - m2.matrix_unit(2, 1)));
}

TEST(Algebra, SkewMatricesOfOddSizeAreSingular) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {3, 5}) {
    const Algebra alg = mat(n, Involution::transpose);
    for (int trial = 0; trial < 20; ++trial) EXPECT_FALSE(is_invertible(random_element(alg, rng, ElementKind::skew)));
  }
}

TEST(Algebra, TraceAndLieJordan) {
  const Algebra m3 = mat(3, Involution::transpose);
  const Element a = m3.matrix_unit(1, 2);
  const Element b = m3.matrix_unit(2, 1);
  EXPECT_EQ(lie(a, b), m3.matrix_unit(1, 1) - m3.matrix_unit(2, 2));
  EXPECT_EQ(jordan(a, b), m3.matrix_unit(1, 1) + m3.matrix_unit(2, 2));
  EXPECT_TRUE(trace(lie(a, b)).is_zero());
  EXPECT_EQ(trace(m3.one()), Scalar::from_int(m3.field(), 3));
  EXPECT_THROW(trace(Algebra::quaternions().one()), Unsupported);
}

TEST(Algebra, ElementsFromDifferentAlgebrasDoNotMix) {
  const Algebra m2 = mat(2, Involution::transpose);
  const Algebra m2s = mat(2, Involution::symplectic);
  EXPECT_THROW(m2.one() + m2s.one(), AlgebraError);
  EXPECT_THROW(m2.one() * mat(3, Involution::transpose).one(), AlgebraError);
  EXPECT_THROW(devectorize(m2, Vector(3, Scalar::zero(Field::rationals()))), DimensionMismatch);
}

TEST(Algebra, ToStringIsSparse) {
  const Algebra m2 = mat(2, Involution::transpose);
  const Element e = m2.matrix_unit(1, 2) - Scalar::from_rational(m2.field(), mpq_class(1, 2)) * m2.matrix_unit(2, 1);
  EXPECT_EQ(e.to_string(), "e12 - 1/2 e21");
  EXPECT_EQ(m2.zero().to_string(), "0");
  const Algebra h = Algebra::quaternions();
  EXPECT_EQ((h.one() + Scalar::from_int(h.field(), 2) * h.quaternion_unit(1)).to_string(), "1 + 2 i");
}
