#pragma once

#include "gutt/enveloping.hpp"
#include "gutt/free_lie.hpp"

#include <utility>
#include <vector>

namespace gutt {

// Index tuple driving one term family of the degree-n star coefficient on a
// pair of monomials of degrees (k, l): an r-tuple of pairs (a_i, b_i) with
// r = k + l - n, a_i + b_i >= 1, sum a_i = k, sum b_i = l, canonically
// nondecreasing under the key (a_i + b_i, a_i), and a_i = 0 (resp. b_i = 0)
// only with b_i = 1 (resp. a_i = 1).
struct GIndex {
    std::vector<std::pair<int, int>> pairs;
};

// All canonical index tuples for monomial degrees (k, l) at z-order n.
std::vector<GIndex> g_indices(int k, int l, int n);

// Product of (multiplicity)! over repeated pairs; the canonical tuple stands
// for r!/J! ordered arrangements.
Rational g_factorial(const GIndex& J);

// Reference star product: transport of the enveloping product through the
// symmetrization map, q_z_inv(q_z(f) . q_z(g)). This is the oracle the other
// constructions are validated against.
SymElement star_pbw(const Enveloping& env, const SymElement& f, const SymElement& g);

// Star product assembled order-by-order from the commutator series: for each
// monomial pair, sum over canonical index tuples, weighted 1/J!, of the
// symmetrized products of multilinear series slices. Independent of star_pbw.
SymElement star_bch(const LieAlgebra& L, const SymElement& f, const SymElement& g);

// Same sum with the symmetrizations expanded as literal permutation sums
// (k! * l! terms per monomial pair); fallback oracle for small degrees.
SymElement star_bch_literal(const LieAlgebra& L, const SymElement& f, const SymElement& g);

// Same sum over ordered (non-canonical) tuples of pairs, each weighted 1/r!;
// slow double-check of the canonicalization and multiplicity bookkeeping.
SymElement star_bch_slow(const LieAlgebra& L, const SymElement& f, const SymElement& g);

// The original definition: multiply through the undeformed (parameter = 1)
// symmetrization map, then reinsert z-powers by the degree drop, z^n on the
// degree-(k + l - n) graded piece of each monomial-pair product.
SymElement star_gutt_original(const Enveloping& env, const SymElement& f, const SymElement& g);

enum class StarSide { left, right };

// Star product of an element with a single vector. StarSide::left computes
// f * eta (starred-Bernoulli weights B_j^*), StarSide::right computes
// eta * f (plain Bernoulli weights B_j); both via the closed formula
//   sum_j (1/k!) C(k,j) z^j B_j^(*) sum_sigma [x_s(1),[...,[x_s(j), eta]...]]
//   x_s(j+1) ... x_s(k)
// with the permutation sum evaluated multiset-aware.
SymElement star_linear(const LieAlgebra& L, const SymElement& f, const Vector& eta,
                       StarSide side);

// Coefficient of z^n in star_pbw(f, g), with constant coefficients.
SymElement c_n(const Enveloping& env, const SymElement& f, const SymElement& g, int n);

// Iterated star product of vectors via the nested coefficient-operator
// multi-sum: sum over (i_1..i_{k-1}), i_j <= j, of
// z^{sum i_j} C_{i_{k-1}}(...C_{i_1}(x_1, x_2)..., x_k).
SymElement star_vectors(const Enveloping& env, const std::vector<Vector>& xs);

// The unique biderivation extending the Lie bracket, by the Leibniz rule on
// monomial pairs (constant-coefficient inputs).
SymElement poisson_biderivation(const LieAlgebra& L, const SymElement& f, const SymElement& g);

// True iff c_1(f,g) - c_1(g,f) equals poisson_biderivation(f,g); inputs are
// expected to carry constant coefficients.
bool poisson_check(const Enveloping& env, const SymElement& f, const SymElement& g);

}  // namespace gutt
