#include "gutt/hopf.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "gutt/gutt_star.hpp"

namespace gutt {
namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

SymElement random_element(const LieAlgebra& L, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> letter(0, L.dim() - 1);
    SymElement out;
    for (int t = 0; t < 4; ++t) {
        SymMonomial m;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m.push_back(letter(rng));
        std::sort(m.begin(), m.end());
        out.add(m, PolyZ(random_rational(rng)));
    }
    return out;
}

std::vector<SymMonomial> monomials_up_to(int dim, int max_deg) {
    std::vector<SymMonomial> out{{}};
    std::vector<SymMonomial> layer{{}};
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<SymMonomial> next;
        for (const SymMonomial& m : layer)
            for (int v = m.empty() ? 0 : m.back(); v < dim; ++v) {
                SymMonomial n = m;
                n.push_back(v);
                next.push_back(n);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

TEST(Coproduct, GeneratorAndQuadraticExamples) {
    PolyZ one(Rational(1));

    TensorSquareElement d1 = coproduct(SymElement::monomial({0}));
    TensorSquareElement e1;
    e1.add({0}, {}, one);
    e1.add({}, {0}, one);
    EXPECT_EQ(d1, e1);

    TensorSquareElement d2 = coproduct(SymElement::monomial({0, 1}));
    TensorSquareElement e2;
    e2.add({0, 1}, {}, one);
    e2.add({0}, {1}, one);
    e2.add({1}, {0}, one);
    e2.add({}, {0, 1}, one);
    EXPECT_EQ(d2, e2);

    TensorSquareElement d3 = coproduct(SymElement::monomial({0, 0}));
    TensorSquareElement e3;
    e3.add({0, 0}, {}, one);
    e3.add({0}, {0}, PolyZ(Rational(2)));
    e3.add({}, {0, 0}, one);
    EXPECT_EQ(d3, e3);

    TensorSquareElement du = coproduct(SymElement::unit());
    TensorSquareElement eu;
    eu.add({}, {}, one);
    EXPECT_EQ(du, eu);
}

TEST(Antipode, SignsAndInvolution) {
    SymElement cubic = SymElement::monomial({0, 1, 2});
    EXPECT_EQ(antipode(cubic), cubic.scaled(Rational(-1)));
    EXPECT_EQ(antipode(SymElement::unit()), SymElement::unit());

    std::mt19937 rng(7);
    LieAlgebra S = LieAlgebra::so3();
    for (int t = 0; t < 5; ++t) {
        SymElement x = random_element(S, 5, rng);
        EXPECT_EQ(antipode(antipode(x)), x);
    }
}

TEST(Counit, CoefficientOfEmptyMonomial) {
    EXPECT_EQ(counit(SymElement::unit()), PolyZ(Rational(1)));
    EXPECT_EQ(counit(SymElement::monomial({1})), PolyZ());
    SymElement x = SymElement::unit().scaled(Rational(3));
    x.add({0, 1}, PolyZ(Rational(1)));
    EXPECT_EQ(counit(x), PolyZ(Rational(3)));
}

TEST(HopfAxioms, SingleGeneratorAntipodeCancellation) {
    LieAlgebra H = LieAlgebra::heisenberg(1);
    Enveloping env(H);
    SymElement xi = SymElement::monomial({0});
    EXPECT_TRUE(check_antipode_axiom(env, xi, Rational(1)));
    EXPECT_TRUE(check_counit_axioms(xi));
}

TEST(HopfAxioms, HeisenbergPQAllChecks) {
    LieAlgebra H = LieAlgebra::heisenberg(1);
    Enveloping env(H);
    SymElement pq = SymElement::monomial({0, 1});
    HopfReport r = verify_hopf(env, pq, Rational(1));
    EXPECT_TRUE(r.all_pass()) << r.render();
    EXPECT_EQ(r.lines.size(), 5u);
}

TEST(HopfAxioms, RandomElementsAllAlgebrasAllParameters) {
    std::mt19937 rng(17);
    std::vector<Rational> z0s{Rational(0), Rational(1), Rational(2, 3)};
    for (const LieAlgebra& L :
         {LieAlgebra::heisenberg(1), LieAlgebra::so3(), LieAlgebra::abelian(2)}) {
        Enveloping env(L);
        for (int t = 0; t < 2; ++t) {
            SymElement x = random_element(L, 5, rng);
            for (const Rational& z0 : z0s) {
                HopfReport r = verify_hopf(env, x, z0);
                EXPECT_TRUE(r.all_pass()) << L.label(0) << ": " << r.render();
            }
        }
    }
}

TEST(HopfAxioms, MorphismOnDistinctPairs) {
    std::mt19937 rng(19);
    for (const LieAlgebra& L : {LieAlgebra::heisenberg(1), LieAlgebra::so3()}) {
        Enveloping env(L);
        for (const Rational& z0 : {Rational(0), Rational(1), Rational(2, 3)}) {
            SymElement f = random_element(L, 3, rng);
            SymElement g = random_element(L, 3, rng);
            EXPECT_TRUE(check_coproduct_morphism(env, f, g, z0));
        }
    }
}

TEST(HopfAxioms, CocommutativeAndCoassociative) {
    std::mt19937 rng(23);
    LieAlgebra S = LieAlgebra::so3();
    for (int t = 0; t < 5; ++t) {
        SymElement x = random_element(S, 5, rng);
        EXPECT_TRUE(check_cocommutativity(x));
        EXPECT_TRUE(check_coassociativity(x));
        EXPECT_TRUE(check_counit_axioms(x));
    }
}

TEST(TensorSquare, MechanicsAndFlip) {
    SymElement a = SymElement::monomial({0});
    SymElement b = SymElement::monomial({1});
    TensorSquareElement t = tensor_product(a + b, b);
    EXPECT_EQ(t.coeff({0}, {1}), PolyZ(Rational(1)));
    EXPECT_EQ(t.coeff({1}, {1}), PolyZ(Rational(1)));
    EXPECT_TRUE(t.coeff({1}, {0}).is_zero());
    TensorSquareElement f = flip(t);
    EXPECT_EQ(f.coeff({1}, {0}), PolyZ(Rational(1)));
    // Adding the negation cancels to zero.
    TensorSquareElement z = t;
    z += t.scaled(PolyZ(Rational(-1)));
    EXPECT_TRUE(z.is_zero());
}

TEST(Undeformed, CoproductMatchesGeneratorExpansion) {
    for (const LieAlgebra& L : {LieAlgebra::heisenberg(1), LieAlgebra::so3()}) {
        Enveloping env(L);
        for (const SymMonomial& m : monomials_up_to(L.dim(), 4))
            EXPECT_TRUE(coproduct_undeformed(env, m)) << "degree " << m.size();
    }
}

TEST(Undeformed, AntipodeMatchesWordReversal) {
    for (const LieAlgebra& L : {LieAlgebra::heisenberg(1), LieAlgebra::so3()}) {
        Enveloping env(L);
        for (const SymMonomial& m : monomials_up_to(L.dim(), 4))
            EXPECT_TRUE(antipode_undeformed(env, m)) << "degree " << m.size();
    }
}

}  // namespace
}  // namespace gutt
