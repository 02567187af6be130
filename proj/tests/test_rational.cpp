#include "gutt/rational.hpp"

#include <gtest/gtest.h>

#include "gutt/unipoly.hpp"

using gutt::Rational;
using gutt::UniPoly;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(-2, -4), Rational(1, 2));
    EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
    EXPECT_EQ(Rational(0, 7), Rational(0));
    EXPECT_EQ(Rational(2, -4).str(), "-1/2");
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
    Rational a(1, 6), b(1, 10);
    EXPECT_EQ(a + b, Rational(4, 15));
    EXPECT_EQ(a - b, Rational(1, 15));
    EXPECT_EQ(a * b, Rational(1, 60));
    EXPECT_EQ(a / b, Rational(5, 3));
    EXPECT_EQ(-a, Rational(-1, 6));
    EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("-691/2730"), Rational(-691, 2730));
    EXPECT_EQ(Rational::parse("42"), Rational(42));
    EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
}

TEST(Rational, PowAbsSign) {
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(-2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_EQ(Rational(-7, 2).abs(), Rational(7, 2));
    EXPECT_EQ(Rational(-3).sign(), -1);
    EXPECT_EQ(Rational(0).sign(), 0);
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_FALSE(Rational(1, 2).is_integer());
}

TEST(Rational, FactorialBinomial) {
    EXPECT_EQ(gutt::factorial(0), Rational(1));
    EXPECT_EQ(gutt::factorial(5), Rational(120));
    EXPECT_EQ(gutt::binomial(10, 3), Rational(120));
    EXPECT_EQ(gutt::binomial(4, 7), Rational(0));
    EXPECT_EQ(gutt::binomial(4, -1), Rational(0));
}

TEST(UniPolyT, BasicOps) {
    UniPoly t = UniPoly::variable();
    UniPoly p = t * t - t + UniPoly(Rational(1, 6));  // t^2 - t + 1/6
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.coeff(1), Rational(-1));
    EXPECT_EQ(p.eval(Rational(1, 2)), Rational(-1, 12));
    EXPECT_EQ(p.derivative(), t.scaled(Rational(2)) - UniPoly(Rational(1)));
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(t.pow(3).degree(), 3);
    EXPECT_EQ(UniPoly::monomial(Rational(2, 3), 4).coeff(4), Rational(2, 3));
}

TEST(UniPolyT, EvalAbs) {
    UniPoly t = UniPoly::variable();
    UniPoly p = t - UniPoly(Rational(1));  // |1| + |−1| x at x
    EXPECT_EQ(p.eval_abs(Rational(2)), Rational(3));
    EXPECT_EQ(p.eval(Rational(2)), Rational(1));
}

TEST(UniPolyT, Str) {
    UniPoly t = UniPoly::variable();
    EXPECT_EQ(UniPoly().str("z"), "0");
    EXPECT_EQ((t * t + UniPoly(Rational(1, 2))).str("t"), "1/2 + t^2");
    EXPECT_EQ(t.scaled(Rational(-3, 2)).str("z"), "(-3/2)z");
}

TEST(UniPolyT, IntegrateUnit) {
    UniPoly t = UniPoly::variable();
    EXPECT_EQ(gutt::integrate_unit(UniPoly(Rational(1))), Rational(1));
    EXPECT_EQ(gutt::integrate_unit(t), Rational(1, 2));
    // integral over [0,1] of t^a (t-1)^b equals (-1)^b a! b! / (a+b+1)!
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            UniPoly p = t.pow(a) * (t - UniPoly(Rational(1))).pow(b);
            Rational expect = gutt::factorial(a) * gutt::factorial(b) / gutt::factorial(a + b + 1);
            if (b % 2) expect = -expect;
            EXPECT_EQ(gutt::integrate_unit(p), expect) << "a=" << a << " b=" << b;
        }
}
