#include <gtest/gtest.h>

#include <cmath>

#include "goorbit/error.hpp"
#include "goorbit/field.hpp"
#include "support.hpp"

using namespace goorbit;
using goorbit::testing::random_nonzero;
using goorbit::testing::random_scalar;

namespace {

Scalar r(int k) { return Scalar::radical(k); }

// Double value straight from the coordinates; the oracle for sign and approx.
double naive_value(const Scalar& s) {
  double v = 0;
  for (int i = 0; i < Scalar::kDim; ++i) v += s.coeff(i).to_double() * std::sqrt(double(Scalar::kRadicand[i]));
  return v;
}

constexpr int kSamples = 1000;

}  // namespace

TEST(Rational, SmallAndBigAgree) {
  Rational big = Rational::parse("123456789012345678901234567890/7");
  Rational back = big * Rational(7) / Rational::parse("123456789012345678901234567890");
  EXPECT_TRUE(back.is_one());
  Rational x(1LL << 61);
  Rational y = x * x * x;
  EXPECT_EQ((y / x / x), x);
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, OverflowPromotesAndDemotes) {
  Rational a((1LL << 61) - 1);
  Rational s = a + a + a + a;  // past the inline limit
  EXPECT_EQ(s - a - a - a, a);
  EXPECT_TRUE(s > a);
  EXPECT_EQ((s * Rational(1, 4) - a).sign(), 0);
}

TEST(Scalar, RadicalProducts) {
  EXPECT_EQ(r(2) * r(3), r(6));
  EXPECT_EQ(r(10) / r(2), r(5));
  EXPECT_EQ((Scalar(1) + r(2)) * (Scalar(1) - r(2)), Scalar(-1));
  EXPECT_EQ(r(6) * r(10), Scalar(2) * r(15));
  EXPECT_EQ(r(30) * r(30), Scalar(30));
  EXPECT_EQ(r(15) * r(6), Scalar(3) * r(10));
}

TEST(Scalar, SignExamples) {
  EXPECT_EQ(Scalar().sign(), 0);
  EXPECT_EQ((r(6) - Scalar(2)).sign(), 1);
  EXPECT_EQ((Scalar(3) * r(2) - r(3) * r(6)).sign(), 0);
  EXPECT_EQ((r(2) + r(3) - r(10)).sign(), -1);  // 3.1462 vs 3.1623
}

TEST(Scalar, SignNearCancellation) {
  // Continued-fraction convergents of r2, one from each side.
  Scalar d = r(2) - Scalar(Rational(665857, 470832));
  EXPECT_EQ(d.sign(), -1);
  Scalar e = r(2) - Scalar(Rational(470832, 332929));
  EXPECT_EQ(e.sign(), 1);
}

TEST(Scalar, DivisionByZeroIsAnError) {
  EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
}

TEST(Scalar, ApproxWidthAndContainment) {
  Interval a = r(2).approx(4);
  EXPECT_LE(a.width(), mpq_class(1, 16));
  EXPECT_LE(a.lo, mpq_class(141421, 100000));
  EXPECT_GE(a.hi, mpq_class(141422, 100000));
  Interval z = Scalar().approx(30);
  EXPECT_EQ(z.lo, 0);
  EXPECT_EQ(z.hi, 0);
  Interval b = (Scalar(1) + r(5)).approx(8);
  EXPECT_LE(b.width(), mpq_class(1, 256));
  EXPECT_LT(b.lo.get_d(), 3.2360679775);
  EXPECT_GT(b.hi.get_d(), 3.2360679775);
}

TEST(Scalar, RoundTripSerialization) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar s = random_scalar(rng);
    EXPECT_EQ(Scalar::parse(s.str()), s) << s.str();
    EXPECT_EQ(Scalar::parse(s.pretty()), s) << s.pretty();
  }
  EXPECT_EQ(Scalar::parse("3*r2"), Scalar(3) * r(2));
  EXPECT_EQ(Scalar::parse("1/3"), Scalar(Rational(1, 3)));
  EXPECT_EQ(Scalar::parse("-r6 + 1/2"), Scalar(Rational(1, 2)) - r(6));
  EXPECT_EQ(Scalar::parse("r2*r3"), r(6));
  EXPECT_THROW(Scalar::parse("r7"), ParseError);
  EXPECT_THROW(Scalar::parse("2 3"), ParseError);
  EXPECT_THROW(Scalar::parse(""), ParseError);
}

TEST(Scalar, SqrtInField) {
  EXPECT_EQ(*sqrt_in_field(Rational(4)), Scalar(2));
  EXPECT_EQ(*sqrt_in_field(Rational(3)), r(3));
  EXPECT_EQ(*sqrt_in_field(Rational(1, 2)), Scalar(Rational(1, 2)) * r(2));
  EXPECT_EQ(*sqrt_in_field(Rational(12, 5)), Scalar(Rational(2, 5)) * r(15));
  EXPECT_FALSE(sqrt_in_field(Rational(7)).has_value());
  EXPECT_FALSE(sqrt_in_field(Rational(-1)).has_value());
}

TEST(FieldProperty, RingAxioms) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < kSamples; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c)) << a << " | " << b << " | " << c;
    EXPECT_EQ(a * (b + c), a * b + a * c) << a << " | " << b << " | " << c;
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a - a, Scalar());
  }
}

TEST(FieldProperty, InverseIsExact) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < kSamples; ++i) {
    Scalar a = random_nonzero(rng);
    EXPECT_TRUE((a * a.inverse()).is_one()) << a;
  }
}

TEST(FieldProperty, SignIsMultiplicative) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < kSamples; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_EQ((a * b).sign(), a.sign() * b.sign()) << a << " | " << b;
  }
}

TEST(FieldProperty, SignMatchesFloatOracleAwayFromZero) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < kSamples; ++i) {
    Scalar a = random_scalar(rng);
    double v = naive_value(a);
    if (std::abs(v) < 1e-9) continue;
    EXPECT_EQ(a.sign(), v > 0 ? 1 : -1) << a;
  }
}

TEST(FieldProperty, ApproxIntervalsNest) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Scalar a = random_scalar(rng);
    for (unsigned bits : {4u, 10u, 33u}) {
      Interval coarse = a.approx(bits);
      Interval fine = a.approx(bits * 3);
      EXPECT_LE(coarse.width(), mpq_class(mpz_class(1), mpz_class(1) << bits));
      EXPECT_TRUE(coarse.lo <= fine.hi && fine.lo <= coarse.hi) << a;
      // The fine midpoint lies in the coarse interval.
      mpq_class mid = (fine.lo + fine.hi) / 2;
      EXPECT_TRUE(coarse.lo <= mid && mid <= coarse.hi) << a;
    }
  }
}
