#pragma once

#include <string>
#include <vector>

#include "gutt/enveloping.hpp"
#include "gutt/hopf.hpp"
#include "gutt/sym_algebra.hpp"

namespace gutt {

// Weighted l^1 data on the basis: one positive weight per basis index.
struct BasisSeminorm {
    std::vector<Rational> weights;

    static BasisSeminorm unit(int dim);
    // Product of the weights of the letters of m.
    Rational weight_product(const SymMonomial& m) const;
    void validate() const;  // throws std::invalid_argument on nonpositive weight
};

// Smallest s >= 1 such that s*p dominates the bracket on basis pairs:
// s = max(1, max over i<j of p([e_i,e_j]) / (w_i w_j)). Scaling the data by
// s makes it submultiplicative for the bracket.
Rational bracket_scale(const LieAlgebra& L, const BasisSeminorm& p);

// Factorial-growth seminorm. On each monomial m of degree d the contribution
// is (sum_j |a_j| z_abs^j) * scale^d * weight_product(m) * d!^R, summed over
// the support; a_j are the parameter-polynomial coefficients. Exact for
// integer R; the double version accepts any R >= 0 (log-gamma powers).
Rational p_r_exact(const SymElement& x, const BasisSeminorm& p, int R, const Rational& z_abs,
                   const Rational& scale = Rational(1));
double p_r(const SymElement& x, const BasisSeminorm& p, double R, double z_abs,
           double scale = 1.0);

// l^1 cross seminorm on tensor squares: each (m1, m2) entry contributes
// |coeff| * w(m1) w(m2) * d1!^R d2!^R.
Rational tensor_p_r_exact(const TensorSquareElement& t, const BasisSeminorm& p, int R,
                          const Rational& z_abs);
double tensor_p_r(const TensorSquareElement& t, const BasisSeminorm& p, double R, double z_abs);

// One inequality instance; lhs/rhs are decimal or exact-rational renderings.
struct CheckLine {
    bool pass;
    std::string check;
    std::string sample;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::vector<CheckLine> lines;
    double max_ratio = 0.0;        // largest observed lhs/rhs with rhs > 0
    Rational scale = Rational(1);  // bracket scale folded into the estimate

    bool all_pass() const;
    int fail_count() const;
    void add(bool pass, const std::string& check, const std::string& sample,
             const std::string& lhs, const std::string& rhs);
    // Line-oriented text: "PASS|FAIL <check> <sample-id> lhs=<v> rhs=<v>".
    std::string render() const;
};

// Growth-table rows (k, value, bound); serializes to CSV "k,value,bound"
// with 12 significant digits.
struct GrowthTable {
    struct Row {
        int k;
        double value;
        double bound;
    };
    std::vector<Row> rows;
    std::string to_csv() const;
};

// Product continuity at R >= 1: p_R(x star_{z0} y) <= (c q)_R(x) (c q)_R(y)
// with c = 16(|z0|+1) and q the bracket-scaled p, over all monomial pairs of
// total degree <= max_total_degree. Violations get FAIL lines; a summary
// line records the maximum ratio.
Report check_continuity_r1(const Enveloping& env, const BasisSeminorm& p, const Rational& z0,
                           double R, int max_total_degree);

// Order-n coefficient continuity: p_R(C_n(x,y)) <= n!^{1-R}/(2*8^n) *
// (16 q)_R(x) (16 q)_R(y) over the same monomial grid.
Report cn_estimate_check(const Enveloping& env, const BasisSeminorm& p, double R, int n,
                         int max_total_degree);

// Sharpened bound for nilpotent algebras (letter depth N from
// nilpotency_index): p_R(C_n(x,y)) <= 1/(2*8^n) * (32 e q)_{R+eps}(x)
// (32 e q)_{R+eps}(y) with eps = (N-1)/N*(1-R). Requires 0 <= R < 1.
Report cn_nilpotent_check(const Enveloping& env, const BasisSeminorm& p, double R, int n,
                          int max_total_degree);

// One-sided module bound for nilpotent algebras, 0 <= R < 1:
// p_R(x star_1 y) <= (16 q)_R(x) * (16 c q)_{R+N(1-R)}(y),
// c = (N e)^{N(1-R)}.
Report bimodule_estimate_check(const Enveloping& env, const BasisSeminorm& p, double R,
                               int max_total_degree);

// Growth table for a_k star_1 b_k with a_k = P^k/k!^{R+eps},
// b_k = Q^k/k!^{R+eps} in heisenberg(1), unit weights: value = n_R of the
// product, bound = k!^{1-R-2eps}. Requires 0 <= R < 1, 2*eps < 1-R,
// 1 <= kmax <= 30.
GrowthTable heisenberg_counterexample(double R, double eps, int kmax);

// Same for a_k = e1^k/k!^{R+eps} star_1 e2 in so3: value = n_R of the
// product over k!^{R+eps}, bound = |B_k^*|/k!^{R+eps}. Requires R + eps < 1,
// 1 <= kmax <= 30.
GrowthTable so3_counterexample(double R, double eps, int kmax);

// Per-row check value >= bound.
Report growth_lower_bound_check(const GrowthTable& t, const std::string& name);

// Divergence proxy: value/c^k strictly increases over the last `window`
// rows.
Report growth_divergence_check(const GrowthTable& t, double c, int window = 5);

// Substitute the central letter E by the scalar h; defined for algebras
// shaped like heisenberg(1). Result uses letters 0 (P) and 1 (Q) only.
SymElement weyl_project(const LieAlgebra& L, const SymElement& x, const Rational& h);

// Projection continuity: p_R(pi(x)) <= ((|h|+1) p)_R(x) on all monomials of
// degree <= max_degree.
Report weyl_projection_check(const LieAlgebra& L, const BasisSeminorm& p, const Rational& h,
                             double R, int max_degree);

// Quotient product bound: p_R(pi(x star_{z0} y)) <= (ct)^{d1} d1!^R *
// (ct)^{d2} d2!^R with ct = 8(|z0|+1)(|h|+1), over all pairs from the
// monomial grid of degree <= max_total_degree/... each factor degree <=
// max_degree. Unit weights. Diagnostic at R < 1/2: failures are reported,
// not thrown.
Report weyl_estimate_check(const Enveloping& env, const Rational& h, const Rational& z0,
                           double R, int max_degree);

// Antipode and coproduct continuity: p_R(S(m)) <= p_R(m) and
// (p_R x p_R)(Delta m) <= (2p)_R(m) on all monomials of degree <=
// max_degree over dim letters.
Report hopf_bounds_check(const BasisSeminorm& p, double R, int max_degree);

}  // namespace gutt
