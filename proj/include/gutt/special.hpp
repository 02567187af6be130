#pragma once

#include <vector>

#include "gutt/rational.hpp"
#include "gutt/unipoly.hpp"

namespace gutt {

// Bernoulli numbers in the B_1 = -1/2 convention, via the recursion
// B_n = -(1/(n+1)) sum_{k<n} C(n+1,k) B_k. Memoized.
Rational bernoulli(int n);

// Star convention B_n^* = (-1)^n B_n, so B_1^* = +1/2 and even values agree.
Rational bernoulli_star(int n);

// Goldberg polynomials: G_1 = 1, G_s = (1/s) d/dt[ t(t-1) G_{s-1}(t) ]. Memoized.
UniPoly goldberg_poly(int s);

// Leading letter of a two-letter word.
enum class Letter { xi, eta };

// Goldberg coefficient of the word with run lengths `runs`, first run made of
// `first`. For a xi-leading word with m runs and n = sum of runs:
//   c_xi(s_1..s_m) = integral_0^1 t^floor(m/2) (t-1)^floor((m-1)/2) prod_i G_{s_i}(t) dt,
// and c_eta = (-1)^(n-1) c_xi. Invariant under permutation of the runs.
Rational goldberg_coeff(Letter first, const std::vector<int>& runs);

// Exact sum of |g_w| over all 2^n two-letter words of length n; always <= 2.
Rational thompson_sum(int n);

// K(k,s) = (1/(k+1)) sum_{n<=k} C(k+1,n) B_n^*
//            sum_{j<=n} (-1)^j C(n,j) #{l in [0,k-n] : l+j = s}.
// Collapses to 1 for s = 0 and 0 for 0 < s <= k.
Rational kks_kernel(int k, int s);

// Carlitz symmetry: (-1)^k sum_{j<=k} C(k,j) B_{m+j} = (-1)^m sum_{i<=m} C(m,i) B_{k+i}.
bool carlitz_check(int k, int m);

}  // namespace gutt
