#pragma once

#include <map>
#include <mutex>
#include <random>
#include <vector>

#include "gutt/sym_algebra.hpp"

namespace gutt {

// PBW basis word: nondecreasing sequence of basis indices (empty = unit).
using PBWWord = std::vector<int>;

// Element of the deformed enveloping algebra: PBW word -> PolyZ, finite support.
class UElement {
public:
    UElement() = default;

    static UElement unit() { return word({}); }
    static UElement word(PBWWord w, PolyZ c = PolyZ(Rational(1)));

    bool is_zero() const { return t_.empty(); }
    const std::map<PBWWord, PolyZ>& terms() const { return t_; }
    PolyZ coeff(const PBWWord& w) const;
    int top_degree() const;

    void add(const PBWWord& w, const PolyZ& c);
    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    UElement scaled(const PolyZ& c) const;
    friend bool operator==(const UElement& a, const UElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

private:
    std::map<PBWWord, PolyZ> t_;
};

using Matrix = std::vector<std::vector<Rational>>;

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_identity(int n);
Matrix mat_scaled(const Matrix& a, const Rational& s);
Matrix mat_commutator(const Matrix& a, const Matrix& b);

// Product/rewrite engine for one algebra, with memoized normal ordering and
// quantization maps. All caches are behind a mutex and semantically pure.
class Enveloping {
public:
    explicit Enveloping(const LieAlgebra& L) : L_(&L) {}
    const LieAlgebra& algebra() const { return *L_; }

    // Rewrites an arbitrary word into the PBW basis: adjacent e_j e_i with
    // j > i becomes e_i e_j + z [e_j, e_i]. Terminates (degree, then inversion
    // count); strategy-independent (confluence is tested).
    UElement normal_order(const std::vector<int>& w) const;
    // Same rewrite with randomized descent choices and no memoization; the
    // confluence oracle.
    UElement normal_order_random(const std::vector<int>& w, std::mt19937& rng) const;

    UElement u_mul(const UElement& a, const UElement& b) const;

    // Symmetrization map: monomial -> (1/n!) sum over all letter orders,
    // normal-ordered; computed by the first-letter recursion and memoized.
    UElement q_z(const SymElement& x) const;
    // Inverse by unitriangular recursion through the degree filtration.
    SymElement q_z_inv(const UElement& u) const;

private:
    const UElement& normal_order_ref(const std::vector<int>& w) const;
    const UElement& q_z_mono(const SymMonomial& m) const;
    const SymElement& q_z_inv_word(const PBWWord& w) const;

    const LieAlgebra* L_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, UElement> order_cache_;
    mutable std::map<SymMonomial, UElement> qz_cache_;
    mutable std::map<PBWWord, SymElement> qzinv_cache_;
};

// Letterwise image of PBW words under a validated Lie homomorphism
// phi: L1 -> L2 (phi[k][i] = k-th coordinate of phi(e_i)), normal-ordered in
// L2. Throws std::invalid_argument when phi fails bracket compatibility.
UElement lift_hom(const Enveloping& src, const Enveloping& dst, const Matrix& phi,
                  const UElement& a);
bool is_lie_hom(const LieAlgebra& L1, const LieAlgebra& L2, const Matrix& phi);

// Evaluates q_{z0}(x) word-by-word as matrix products with generator images
// z0 * rho[i]. rho must represent the brackets under commutators; z0 must be
// nonzero. Throws std::invalid_argument otherwise.
Matrix represent(const Enveloping& env, const std::vector<Matrix>& rho, const Rational& z0,
                 const SymElement& x);
bool is_matrix_rep(const LieAlgebra& L, const std::vector<Matrix>& rho);

}  // namespace gutt
