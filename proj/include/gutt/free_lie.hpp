#pragma once

#include <map>
#include <string>
#include <vector>

#include "gutt/lie_algebra.hpp"
#include "gutt/rational.hpp"

namespace gutt {

// Word over the two-letter alphabet {X, Y}; 'X' and 'Y' are the only letters.
using Word = std::string;

// Rational combination of left-nested bracket words [w] (w -> coefficient).
// Not reduced modulo antisymmetry/Jacobi; equality of Lie series is decided
// by associative expansion.
class BracketSeries {
public:
    void add(const Word& w, const Rational& c);
    const std::map<Word, Rational>& terms() const { return t_; }
    bool empty() const { return t_.empty(); }
    // Terms with exactly a letters X and b letters Y.
    BracketSeries content_part(int a, int b) const;
    // Terms with exactly n letters.
    BracketSeries degree_part(int n) const;
    BracketSeries& operator+=(const BracketSeries& o);

private:
    std::map<Word, Rational> t_;
};

// Free associative polynomial over {X, Y}: word -> coefficient, with the
// empty word as unit. No zero-coefficient entries.
class NCPoly {
public:
    void add(const Word& w, const Rational& c);
    Rational coeff(const Word& w) const;
    const std::map<Word, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    NCPoly degree_part(int n) const;
    NCPoly content_part(int a, int b) const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly scaled(const Rational& s) const;
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
    // Concatenation product, dropping words longer than maxlen.
    static NCPoly mul_trunc(const NCPoly& a, const NCPoly& b, int maxlen);

private:
    std::map<Word, Rational> t_;
};

// Associative expansion of c * [w], left-nested: [[..[w1,w2],..],wn].
NCPoly expand_bracket(const Rational& c, const Word& w);
NCPoly expand_series(const BracketSeries& s);

// log(exp(X) exp(Y)) by truncated series composition; the oracle both bracket
// forms are tested against.
NCPoly bch_associative(int order);

// Goldberg-Thompson form: sum over words of (g_w/|w|) [w], |w| <= order.
BracketSeries bch_goldberg(int order);

// Dynkin's form, truncated at total letter count <= order.
BracketSeries bch_dynkin(int order);

// Terms of bch_goldberg with exactly a X's and b Y's. Memoized.
const BracketSeries& bch_part(int a, int b);

// BCH_{a,b} with the i-th X replaced by xs[i] and the j-th Y by ys[j]
// (left-to-right occurrence order), brackets evaluated in L.
Vector bch_tilde(int a, int b, const std::vector<Vector>& xs, const std::vector<Vector>& ys,
                 const LieAlgebra& L);

// Both routes to the eta-linear part of BCH(xi, eta) through letter count
// `order`: the closed Bernoulli form and the expanded bch_tilde sum.
struct FirstOrderPair {
    Vector closed;    // sum_n (B_n^*/n!) (ad_xi)^n(eta)
    Vector expanded;  // sum_n bch_tilde(n, 1, xi..xi, eta)
};
FirstOrderPair bch_first_order(const LieAlgebra& L, const Vector& xi, const Vector& eta,
                               int order);

}  // namespace gutt
