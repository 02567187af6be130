#pragma once

#include <map>
#include <string>
#include <vector>

#include "gutt/lie_algebra.hpp"
#include "gutt/unipoly.hpp"

namespace gutt {

// Multiset of basis indices, sorted nondecreasing; empty = unit. Degree = size.
using SymMonomial = std::vector<int>;

// Polynomial in the deformation variable z. Never truncated: products of
// degree-(k,l) monomials only reach z-degree k+l-1.
using PolyZ = UniPoly;

// Element of the symmetric algebra: finitely supported monomial -> PolyZ map.
class SymElement {
public:
    SymElement() = default;

    static SymElement unit() { return monomial({}); }
    static SymElement monomial(SymMonomial m, PolyZ c = PolyZ(Rational(1)));
    // Degree-1 element with the vector's coordinates as coefficients.
    static SymElement from_vector(const Vector& v);

    bool is_zero() const { return t_.empty(); }
    const std::map<SymMonomial, PolyZ>& terms() const { return t_; }
    PolyZ coeff(const SymMonomial& m) const;
    // Highest monomial degree present; -1 on the zero element.
    int top_degree() const;

    void add(const SymMonomial& m, const PolyZ& c);
    SymElement& operator+=(const SymElement& o);
    SymElement& operator-=(const SymElement& o);
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
    SymElement scaled(const PolyZ& c) const;
    SymElement scaled(const Rational& c) const { return scaled(PolyZ(c)); }
    friend bool operator==(const SymElement& a, const SymElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SymElement& a, const SymElement& b) { return !(a == b); }

private:
    std::map<SymMonomial, PolyZ> t_;
};

// Commutative multiset-union product, bilinear over PolyZ.
SymElement sym_mul(const SymElement& a, const SymElement& b);

// Degree-n graded piece.
SymElement project(const SymElement& x, int n);

// Specialize the formal parameter: every PolyZ evaluated at z0.
SymElement evaluate_z(const SymElement& x, const Rational& z0);

// Canonical text rendering: terms by degree descending, then monomial
// lexicographic, then z-power ascending; e.g. "P*Q + (1/2)z*E".
std::string render(const SymElement& x, const LieAlgebra& L);

}  // namespace gutt
