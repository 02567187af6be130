#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gutt/enveloping.hpp"
#include "gutt/sym_algebra.hpp"

namespace gutt {

// Element of Sym(g) (x) Sym(g): finite map from monomial pairs to
// parameter-polynomial coefficients, zero entries pruned.
class TensorSquareElement {
public:
    using Key = std::pair<SymMonomial, SymMonomial>;

    TensorSquareElement() = default;

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, PolyZ>& terms() const { return t_; }
    PolyZ coeff(const SymMonomial& a, const SymMonomial& b) const;

    void add(const SymMonomial& a, const SymMonomial& b, const PolyZ& c);
    TensorSquareElement& operator+=(const TensorSquareElement& o);
    TensorSquareElement scaled(const PolyZ& c) const;
    friend bool operator==(const TensorSquareElement& a, const TensorSquareElement& b) {
        return a.t_ == b.t_;
    }
    friend bool operator!=(const TensorSquareElement& a, const TensorSquareElement& b) {
        return !(a == b);
    }

private:
    std::map<Key, PolyZ> t_;
};

// Outer product a (x) b.
TensorSquareElement tensor_product(const SymElement& a, const SymElement& b);

// Leg swap.
TensorSquareElement flip(const TensorSquareElement& t);

// Coproduct: on a monomial, the sum over sub-multisets I of m of m_I (x)
// m_{complement}, each weighted by the number of position subsets realizing
// it (a product of binomials over the letters); extended linearly.
TensorSquareElement coproduct(const SymElement& x);

// Antipode: (-1)^n on the degree-n homogeneous component.
SymElement antipode(const SymElement& x);

// Counit: the coefficient of the empty monomial.
PolyZ counit(const SymElement& x);

// Componentwise product of tensor legs at a fixed parameter value z0.
TensorSquareElement tensor_star(const Enveloping& env, const TensorSquareElement& a,
                                const TensorSquareElement& b, const Rational& z0);

// (eps (x) id) Delta = id = (id (x) eps) Delta.
bool check_counit_axioms(const SymElement& x);

// (Delta (x) id) Delta = (id (x) Delta) Delta.
bool check_coassociativity(const SymElement& x);

// Delta followed by a leg swap equals Delta.
bool check_cocommutativity(const SymElement& x);

// star o (S (x) id) o Delta(x) = eps(x) 1, star at z0.
bool check_antipode_axiom(const Enveloping& env, const SymElement& x, const Rational& z0);

// Delta(f star g) = Delta(f) star(x)star Delta(g) at z0.
bool check_coproduct_morphism(const Enveloping& env, const SymElement& f, const SymElement& g,
                              const Rational& z0);

// The subset coproduct matches the generator coproduct on the enveloping
// side: (q_z (x) q_z)(Delta m) equals the word-by-word product expansion of
// Delta applied to q_z(m).
bool coproduct_undeformed(const Enveloping& env, const SymMonomial& m);

// q_z(S(m)) equals reversing and sign-flipping every word of q_z(m).
bool antipode_undeformed(const Enveloping& env, const SymMonomial& m);

// One pass/fail line per Hopf axiom on x at z0; all five checks above with
// f = g = x for the morphism line.
struct HopfCheckLine {
    bool pass;
    std::string name;
};
struct HopfReport {
    std::vector<HopfCheckLine> lines;
    bool all_pass() const;
    std::string render() const;
};
HopfReport verify_hopf(const Enveloping& env, const SymElement& x, const Rational& z0);

}  // namespace gutt
