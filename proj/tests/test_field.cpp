#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "starcheck/field.hpp"

using namespace starcheck;

namespace {

Scalar q(long num, long den = 1) { return Scalar::from_rational(Field::rationals(), mpq_class(num, den)); }

}  // namespace

TEST(Field, ParseAndSpec) {
  EXPECT_TRUE(Field::parse("q").is_rational());
  EXPECT_EQ(Field::parse("gf:5").characteristic(), 5);
  EXPECT_EQ(Field::parse("gf:7").spec(), "gf:7");
  EXPECT_EQ(Field::rationals().name(), "Q");
  EXPECT_EQ(Field::prime(3).name(), "GF(3)");
}

TEST(Field, RejectsCharacteristicTwoAndComposites) {
  EXPECT_THROW(Field::prime(2), InvalidField);
  EXPECT_THROW(Field::prime(9), InvalidField);
  EXPECT_THROW(Field::prime(1), InvalidField);
  EXPECT_THROW(Field::parse("gf:2"), InvalidField);
  EXPECT_THROW(Field::parse("r"), Error);
}

TEST(Scalar, RationalArithmeticIsExact) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ((q(1, 2) + q(1, 3)).to_string(), "5/6");
  EXPECT_EQ(q(-6, 2).to_string(), "-3");
  EXPECT_EQ(q(2, 3) * q(3, 2), Scalar::one(Field::rationals()));
  EXPECT_EQ(q(1, 3).inverse(), q(3));
  EXPECT_EQ(Scalar::parse(Field::rationals(), "-4/6"), q(-2, 3));
}

TEST(Scalar, ResidueArithmetic) {
  const Field f = Field::prime(7);
  EXPECT_EQ(Scalar::from_int(f, 3) * Scalar::from_int(f, 5), Scalar::one(f));
  EXPECT_EQ(Scalar::from_int(f, -1).to_string(), "6");
  EXPECT_EQ(Scalar::from_rational(f, mpq_class(1, 2)), Scalar::from_int(f, 4));
  EXPECT_EQ(Scalar::parse(f, "3/2"), Scalar::from_int(f, 5));
  EXPECT_EQ(Scalar::from_int(f, 4).inverse(), Scalar::from_int(f, 2));
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(Scalar::zero(Field::rationals()).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar::from_rational(Field::prime(5), mpq_class(1, 5)), DivisionByZero);
  EXPECT_THROW(Scalar::one(Field::prime(5)) / Scalar::zero(Field::prime(5)), DivisionByZero);
}

TEST(Scalar, MixingFieldsIsAnError) {
  EXPECT_THROW(Scalar::one(Field::rationals()) + Scalar::one(Field::prime(5)), FieldMismatch);
  EXPECT_THROW(Scalar::one(Field::prime(3)) * Scalar::one(Field::prime(5)), FieldMismatch);
}

TEST(Scalar, MalformedText) {
  EXPECT_THROW(Scalar::parse(Field::rationals(), ""), ParseError);
  EXPECT_THROW(Scalar::parse(Field::rationals(), "1/x"), ParseError);
}

class FieldAxioms : public ::testing::TestWithParam<const char*> {};

TEST_P(FieldAxioms, HoldOnRandomElements) {
  const Field f = Field::parse(GetParam());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  auto draw = [&] {
    return f.is_rational() ? Scalar::from_rational(f, mpq_class(num(rng), den(rng))) : Scalar::from_int(f, num(rng));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar a = draw();
    const Scalar b = draw();
    const Scalar c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(Scalar::parse(f, a.to_string()), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values("q", "gf:3", "gf:5", "gf:101"));
