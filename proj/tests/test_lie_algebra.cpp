#include "gutt/lie_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using gutt::BracketEntry;
using gutt::LieAlgebra;
using gutt::Rational;
using gutt::Vector;

namespace {

Vector rand_vec(int dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Vector v;
    for (int i = 0; i < dim; ++i) v.emplace_back(num(rng), den(rng));
    return v;
}

Vector jacobiator(const LieAlgebra& L, const Vector& x, const Vector& y, const Vector& z) {
    Vector a = L.bracket(x, L.bracket(y, z));
    Vector b = L.bracket(y, L.bracket(z, x));
    Vector c = L.bracket(z, L.bracket(x, y));
    Vector out(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i] + c[i];
    return out;
}

bool is_zero(const Vector& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

TEST(LieAlgebra, Builders) {
    LieAlgebra h = LieAlgebra::heisenberg(1);
    EXPECT_EQ(h.dim(), 3);
    EXPECT_EQ(h.label(0), "P");
    EXPECT_EQ(h.label(1), "Q");
    EXPECT_EQ(h.label(2), "E");
    EXPECT_FALSE(h.validate().has_value());

    LieAlgebra s = LieAlgebra::so3();
    EXPECT_EQ(s.dim(), 3);
    EXPECT_FALSE(s.validate().has_value());

    LieAlgebra a = LieAlgebra::abelian(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_TRUE(is_zero(a.bracket_basis(i, j)));

    LieAlgebra h2 = LieAlgebra::heisenberg(2);
    EXPECT_EQ(h2.dim(), 5);
    EXPECT_EQ(h2.label(0), "P1");
    EXPECT_EQ(h2.label(2), "Q1");
    EXPECT_EQ(h2.label(4), "E");
    EXPECT_EQ(h2.bracket_basis(0, 2), h2.basis_vector(4));  // [P1,Q1] = E
    EXPECT_TRUE(is_zero(h2.bracket_basis(0, 3)));           // [P1,Q2] = 0
}

TEST(LieAlgebra, BracketTable) {
    LieAlgebra h = LieAlgebra::heisenberg(1);
    EXPECT_EQ(h.bracket_basis(0, 1), h.basis_vector(2));  // [P,Q] = E
    EXPECT_TRUE(is_zero(h.bracket_basis(0, 2)));
    EXPECT_TRUE(is_zero(h.bracket_basis(1, 2)));

    LieAlgebra s = LieAlgebra::so3();
    EXPECT_EQ(s.bracket_basis(0, 1), s.basis_vector(2));  // [e1,e2] = e3
    EXPECT_EQ(s.bracket_basis(1, 2), s.basis_vector(0));  // [e2,e3] = e1
    EXPECT_EQ(s.bracket_basis(2, 0), s.basis_vector(1));  // [e3,e1] = e2

    std::mt19937 rng(7);
    Vector x = rand_vec(3, rng);
    EXPECT_TRUE(is_zero(s.bracket(x, x)));
}

TEST(LieAlgebra, AdPower) {
    LieAlgebra h = LieAlgebra::heisenberg(1);
    Vector p = h.basis_vector(0), q = h.basis_vector(1);
    EXPECT_EQ(h.ad_power(p, 0, q), q);
    EXPECT_EQ(h.ad_power(p, 1, q), h.basis_vector(2));
    EXPECT_TRUE(is_zero(h.ad_power(p, 2, q)));

    LieAlgebra s = LieAlgebra::so3();
    Vector e1 = s.basis_vector(0), e2 = s.basis_vector(1);
    Vector m = s.ad_power(e1, 2, e2);  // [e1,[e1,e2]] = [e1,e3] = -e2
    EXPECT_EQ(m[1], Rational(-1));
    EXPECT_TRUE(m[0].is_zero() && m[2].is_zero());
    // four-periodicity of ad_{e1} on e2
    EXPECT_EQ(s.ad_power(e1, 4, e2), e2);
}

TEST(LieAlgebra, JacobiFuzz) {
    std::mt19937 rng(11);
    for (const LieAlgebra& L :
         {LieAlgebra::heisenberg(1), LieAlgebra::so3(), LieAlgebra::abelian(3),
          LieAlgebra::heisenberg(2)}) {
        for (int t = 0; t < 25; ++t) {
            Vector x = rand_vec(L.dim(), rng), y = rand_vec(L.dim(), rng),
                   z = rand_vec(L.dim(), rng);
            EXPECT_TRUE(is_zero(jacobiator(L, x, y, z)));
        }
    }
}

TEST(LieAlgebra, NilpotencyIndex) {
    EXPECT_EQ(LieAlgebra::heisenberg(1).nilpotency_index(5), std::optional<int>(2));
    EXPECT_EQ(LieAlgebra::heisenberg(2).nilpotency_index(5), std::optional<int>(2));
    EXPECT_EQ(LieAlgebra::heisenberg(3).nilpotency_index(5), std::optional<int>(2));
    EXPECT_EQ(LieAlgebra::abelian(3).nilpotency_index(5), std::optional<int>(1));
    EXPECT_EQ(LieAlgebra::so3().nilpotency_index(6), std::nullopt);
}

TEST(LieAlgebra, FromEntriesAccepts) {
    // so3 given as the lower triangle
    std::vector<BracketEntry> entries = {
        {1, 0, {Rational(0), Rational(0), Rational(-1)}},
        {2, 1, {Rational(-1), Rational(0), Rational(0)}},
        {2, 0, {Rational(0), Rational(1), Rational(0)}},
    };
    auto r = LieAlgebra::from_entries(3, {"e1", "e2", "e3"}, entries);
    ASSERT_TRUE(std::holds_alternative<LieAlgebra>(r));
    const LieAlgebra& L = std::get<LieAlgebra>(r);
    EXPECT_EQ(L.bracket_basis(0, 1), L.basis_vector(2));
    EXPECT_EQ(L.bracket_basis(1, 2), L.basis_vector(0));
}

TEST(LieAlgebra, FromEntriesAntisymmetryViolation) {
    // c_{12}^3 = 1 together with c_{21}^3 = 1 contradicts antisymmetry.
    std::vector<BracketEntry> entries = {
        {0, 1, {Rational(0), Rational(0), Rational(1)}},
        {1, 0, {Rational(0), Rational(0), Rational(1)}},
    };
    auto r = LieAlgebra::from_entries(3, {"a", "b", "c"}, entries);
    ASSERT_TRUE(std::holds_alternative<gutt::Violation>(r));
    const auto& v = std::get<gutt::Violation>(r);
    EXPECT_EQ(v.kind, "antisymmetry");
    EXPECT_EQ(v.indices, (std::vector<int>{2, 1, 3}));
}

TEST(LieAlgebra, FromEntriesJacobiViolation) {
    // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e1 is antisymmetric but its
    // Jacobiator on (e1,e2,e3) equals [[e3,e1],e2] = [e1,e2] = e3 != 0.
    std::vector<BracketEntry> entries = {
        {0, 1, {Rational(0), Rational(0), Rational(1)}},
        {1, 2, {Rational(1), Rational(0), Rational(0)}},
        {2, 0, {Rational(1), Rational(0), Rational(0)}},
    };
    auto r = LieAlgebra::from_entries(3, {"e1", "e2", "e3"}, entries);
    ASSERT_TRUE(std::holds_alternative<gutt::Violation>(r));
    EXPECT_EQ(std::get<gutt::Violation>(r).kind, "jacobi");
}

TEST(LieAlgebra, RedundantConsistentEntriesAccepted) {
    std::vector<BracketEntry> entries = {
        {0, 1, {Rational(0), Rational(0), Rational(1)}},
        {1, 0, {Rational(0), Rational(0), Rational(-1)}},
    };
    auto r = LieAlgebra::from_entries(3, {"P", "Q", "E"}, entries);
    ASSERT_TRUE(std::holds_alternative<LieAlgebra>(r));
    EXPECT_EQ(std::get<LieAlgebra>(r).bracket_basis(0, 1),
              std::get<LieAlgebra>(r).basis_vector(2));
}

TEST(LieAlgebra, LabelLookup) {
    LieAlgebra h = LieAlgebra::heisenberg(1);
    EXPECT_EQ(h.label_index("Q"), std::optional<int>(1));
    EXPECT_EQ(h.label_index("missing"), std::nullopt);
}
