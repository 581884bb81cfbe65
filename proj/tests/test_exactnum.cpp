#include <gtest/gtest.h>

#include <random>

#include "tkklab/composition.hpp"
#include "tkklab/linalg.hpp"
#include "tkklab/polynomial.hpp"
#include "tkklab/scalar.hpp"

using namespace tkklab::exactnum;

namespace {

Scalar q(std::int64_t p, std::int64_t d = 1) { return Scalar(Rational(p, d)); }

Scalar random_scalar(std::mt19937_64& rng) {
  static const std::uint64_t radicands[] = {1, 2, 3, 5, 6};
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), pick(0, 4);
  Scalar s;
  for (int t = 0; t < 3; ++t)
    s += Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))) * Scalar::sqrt(radicands[pick(rng)]);
  return s;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational::parse("-15/16"), Rational(-15, 16));
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OverflowIsReported) {
  Rational big(INT64_MAX / 2 + 1);
  EXPECT_THROW(big * Rational(4), std::overflow_error);
}

TEST(Scalar, RadicalProducts) {
  EXPECT_EQ(Scalar::sqrt(2) * Scalar::sqrt(2), q(2));
  EXPECT_EQ(Scalar::sqrt(2) * Scalar::sqrt(3), Scalar::sqrt(6));
  EXPECT_EQ(Scalar::sqrt(6) * Scalar::sqrt(10), q(2) * Scalar::sqrt(15));
  EXPECT_EQ(Scalar::sqrt(12), q(2) * Scalar::sqrt(3));
  Scalar one_plus_i(Rational(1), Rational(1));
  EXPECT_EQ(one_plus_i * one_plus_i.conj(), q(2));
}

TEST(Scalar, Inverses) {
  EXPECT_EQ(Scalar::sqrt(2).inverse(), Scalar::sqrt(2) * q(1, 2));
  EXPECT_EQ(Scalar::i().inverse(), -Scalar::i());
  Scalar a = q(1) + Scalar::sqrt(2);
  EXPECT_EQ(a.inverse(), q(-1) + Scalar::sqrt(2));
  EXPECT_EQ((q(-1) + Scalar::sqrt(2)) * a, q(1));
  EXPECT_THROW(Scalar().inverse(), std::domain_error);
}

TEST(Scalar, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), q(1));
  }
}

TEST(Scalar, JsonRoundTrip) {
  Scalar a = Scalar(Rational(3, 4), Rational(-1, 3)) * Scalar::sqrt(5) + q(7, 2);
  auto j = a.to_json();
  EXPECT_EQ(j.dump(), R"({"1":[7,2,0,1],"5":[3,4,-1,3]})");
  EXPECT_EQ(Scalar::from_json(j), a);
}

TEST(Composition, UnitProducts) {
  auto u = [](int s) { return CompElement::unit(CompTag::O, s); };
  EXPECT_EQ(u(1) * u(2), u(3));                       // i j = k
  EXPECT_EQ(u(4) * u(4), CompElement(CompTag::O, -1));  // l l = -1
  EXPECT_EQ(u(1) * u(4), u(5));                       // i l = il
  EXPECT_EQ(u(1).conj(), -u(1));
  // (i j) l != i (j l)
  EXPECT_NE((u(1) * u(2)) * u(4), u(1) * (u(2) * u(4)));
}

TEST(Composition, NormIsMultiplicativeAndOctonionsAlternative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-6, 6);
  for (CompTag tag : {CompTag::R, CompTag::C, CompTag::H, CompTag::O}) {
    for (int t = 0; t < 30; ++t) {
      CompElement x(tag), y(tag);
      for (int s = 0; s < comp_dim(tag); ++s) {
        x[s] = Rational(num(rng), 2);
        y[s] = Rational(num(rng), 3);
      }
      EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
      EXPECT_EQ(x * (x * y), (x * x) * y);
      EXPECT_EQ((y * x) * x, y * (x * x));
      if (tag != CompTag::O) {
        CompElement z = x * y - y;
        EXPECT_EQ((x * y) * z, x * (y * z));
      }
    }
  }
}

TEST(LinearAlgebra, InverseDeterminantNullspace) {
  Matrix m(3, 3);
  m(0, 0) = q(2);
  m(0, 1) = Scalar::sqrt(2);
  m(1, 1) = q(1);
  m(2, 0) = Scalar::i();
  m(2, 2) = q(3);
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Matrix::identity(3));
  EXPECT_EQ(determinant(m), q(6));
  Matrix s(2, 3);
  s(0, 0) = q(1);
  s(0, 1) = q(1);
  s(1, 2) = q(1);
  auto ns = nullspace(s);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero(s.apply(ns[0])));
}

TEST(LinearAlgebra, SpanCoordinates) {
  LinearSpan span(3);
  EXPECT_TRUE(span.add({{0, q(1)}, {1, q(1)}}));
  EXPECT_TRUE(span.add({{1, q(1)}, {2, Scalar::sqrt(2)}}));
  EXPECT_FALSE(span.add({{0, q(1)}, {1, q(2)}, {2, Scalar::sqrt(2)}}));
  auto c = span.coords({{0, q(2)}, {1, q(5)}, {2, q(3) * Scalar::sqrt(2)}});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], q(2));
  EXPECT_EQ((*c)[1], q(3));
  EXPECT_FALSE(span.coords({{2, q(1)}}).has_value());
}

TEST(Polynomial, ArithmeticAndSubstitution) {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.eval({q(3), q(1)}), q(8));
  EXPECT_EQ(p.substitute(1, x), Poly(2));
  auto kappa = proportionality(p * q(-4), p);
  ASSERT_TRUE(kappa.has_value());
  EXPECT_EQ(*kappa, q(-4));
  EXPECT_FALSE(proportionality(p + x, p).has_value());
}
