#include "gutt/sym_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using gutt::LieAlgebra;
using gutt::PolyZ;
using gutt::Rational;
using gutt::SymElement;
using gutt::SymMonomial;

namespace {

SymElement random_element(int dim, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), deg(0, max_deg), idx(0, dim - 1),
        num(-4, 4), zp(0, 2);
    SymElement out;
    for (int t = nterms(rng); t > 0; --t) {
        SymMonomial m;
        for (int d = deg(rng); d > 0; --d) m.push_back(idx(rng));
        std::sort(m.begin(), m.end());
        out.add(m, PolyZ::monomial(Rational(num(rng)), zp(rng)));
    }
    return out;
}

}  // namespace

TEST(SymAlgebra, MulBasics) {
    SymElement e1 = SymElement::monomial({0});
    SymElement e2 = SymElement::monomial({1});
    EXPECT_EQ(gutt::sym_mul(e1, e2), SymElement::monomial({0, 1}));

    SymElement sum = e1 + e2;
    SymElement expect = SymElement::monomial({0, 0}) + SymElement::monomial({0, 1});
    EXPECT_EQ(gutt::sym_mul(sum, e1), expect);

    EXPECT_EQ(gutt::sym_mul(SymElement::unit(), sum), sum);
    EXPECT_EQ(gutt::sym_mul(sum, SymElement::unit()), sum);
}

TEST(SymAlgebra, MulCommutativeAssociative) {
    std::mt19937 rng(21);
    for (int t = 0; t < 30; ++t) {
        SymElement a = random_element(3, 3, rng), b = random_element(3, 3, rng),
                   c = random_element(3, 2, rng);
        EXPECT_EQ(gutt::sym_mul(a, b), gutt::sym_mul(b, a));
        EXPECT_EQ(gutt::sym_mul(gutt::sym_mul(a, b), c), gutt::sym_mul(a, gutt::sym_mul(b, c)));
    }
}

TEST(SymAlgebra, ProjectGrading) {
    SymElement x = SymElement::monomial({0, 1}) + SymElement::monomial({2});
    EXPECT_EQ(gutt::project(x, 1), SymElement::monomial({2}));
    EXPECT_TRUE(gutt::project(x, 5).is_zero());

    std::mt19937 rng(22);
    for (int t = 0; t < 20; ++t) {
        SymElement a = random_element(3, 4, rng);
        SymElement sum;
        for (int n = 0; n <= a.top_degree(); ++n) sum += gutt::project(a, n);
        EXPECT_EQ(sum, a);

        SymElement b = random_element(3, 3, rng);
        SymElement ab = gutt::sym_mul(a, b);
        for (int n = 0; n <= ab.top_degree(); ++n) {
            SymElement parts;
            for (int p = 0; p <= n; ++p)
                parts += gutt::sym_mul(gutt::project(a, p), gutt::project(b, n - p));
            EXPECT_EQ(gutt::project(ab, n), parts);
        }
    }
}

TEST(SymAlgebra, EvaluateZ) {
    SymElement x = SymElement::monomial({0}, PolyZ::monomial(Rational(1), 2));
    SymElement at2 = gutt::evaluate_z(x, Rational(2));
    EXPECT_EQ(at2.coeff({0}), PolyZ(Rational(4)));
    SymElement at0 = gutt::evaluate_z(x, Rational(0));
    EXPECT_TRUE(at0.is_zero());
}

TEST(SymAlgebra, FromVector) {
    gutt::Vector v = {Rational(2), Rational(0), Rational(-1, 3)};
    SymElement x = SymElement::from_vector(v);
    EXPECT_EQ(x.coeff({0}), PolyZ(Rational(2)));
    EXPECT_TRUE(x.coeff({1}).is_zero());
    EXPECT_EQ(x.coeff({2}), PolyZ(Rational(-1, 3)));
}

TEST(SymAlgebra, Render) {
    LieAlgebra h = LieAlgebra::heisenberg(1);
    SymElement star_pq = SymElement::monomial({0, 1}) +
                         SymElement::monomial({2}, PolyZ::monomial(Rational(1, 2), 1));
    EXPECT_EQ(gutt::render(star_pq, h), "P*Q + (1/2)z*E");

    EXPECT_EQ(gutt::render(SymElement(), h), "0");
    EXPECT_EQ(gutt::render(SymElement::unit(), h), "1");

    SymElement y = SymElement::monomial({0, 0, 1}, PolyZ::monomial(Rational(-3), 2)) +
                   SymElement::monomial({2}, PolyZ(Rational(5, 7)));
    EXPECT_EQ(gutt::render(y, h), "-3z^2*P^2*Q + (5/7)*E");

    SymElement u = SymElement::unit().scaled(Rational(2)) + SymElement::monomial({1});
    EXPECT_EQ(gutt::render(u, h), "Q + 2");

    // z-powers of the same monomial come in ascending order
    SymElement w = SymElement::monomial({2}, PolyZ({Rational(1), Rational(-1)}));
    EXPECT_EQ(gutt::render(w, h), "E - z*E");
}
