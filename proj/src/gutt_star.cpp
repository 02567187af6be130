#include "gutt/gutt_star.hpp"

#include "gutt/special.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gutt {

namespace {

void check_letters(const LieAlgebra& L, const SymElement& x) {
    for (const auto& [m, c] : x.terms())
        for (int v : m)
            if (v < 0 || v >= L.dim())
                throw std::invalid_argument("monomial letter out of range for this algebra");
}

void check_vector(const LieAlgebra& L, const Vector& v) {
    if (static_cast<int>(v.size()) != L.dim())
        throw std::invalid_argument("vector dimension mismatch");
}

bool vector_is_zero(const Vector& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

SymMonomial merged(const SymMonomial& a, const SymMonomial& b) {
    SymMonomial m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

Rational multiset_weight(const SymMonomial& m) {
    Rational w(1);
    size_t i = 0;
    while (i < m.size()) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        w = w * factorial(static_cast<int>(j - i));
        i = j;
    }
    return w;
}

// Distribute the symmetric product of `factors` into `out`, each final
// monomial getting coef * (product of chosen coordinates) * z^zpow * cf.
void add_vector_product(const std::vector<Vector>& factors, const Rational& coef, int zpow,
                        const PolyZ& cf, SymElement& out) {
    SymMonomial mono;
    mono.reserve(factors.size());
    std::function<void(size_t, const Rational&)> rec = [&](size_t i, const Rational& acc) {
        if (i == factors.size()) {
            SymMonomial m = mono;
            std::sort(m.begin(), m.end());
            out.add(m, cf * PolyZ::monomial(acc, zpow));
            return;
        }
        for (size_t c = 0; c < factors[i].size(); ++c) {
            if (factors[i][c].is_zero()) continue;
            mono.push_back(static_cast<int>(c));
            rec(i + 1, acc * factors[i][c]);
            mono.pop_back();
        }
    };
    rec(0, coef);
}

// One ordered index tuple, one pair of letter sequences: multiply the slice
// evaluations and accumulate with the given weight.
void eval_tuple(const LieAlgebra& L, const std::vector<std::pair<int, int>>& tuple,
                const std::vector<int>& s1, const std::vector<int>& s2, const Rational& weight,
                int zpow, const PolyZ& cf, SymElement& out) {
    std::vector<Vector> factors;
    factors.reserve(tuple.size());
    size_t px = 0, py = 0;
    for (const auto& [a, b] : tuple) {
        std::vector<Vector> xs, ys;
        xs.reserve(static_cast<size_t>(a));
        ys.reserve(static_cast<size_t>(b));
        for (int i = 0; i < a; ++i) xs.push_back(L.basis_vector(s1[px++]));
        for (int i = 0; i < b; ++i) ys.push_back(L.basis_vector(s2[py++]));
        Vector v = bch_tilde(a, b, xs, ys, L);
        if (vector_is_zero(v)) return;
        factors.push_back(std::move(v));
    }
    add_vector_product(factors, weight, zpow, cf, out);
}

// All ordered tuples ((a_1,b_1)..(a_r,b_r)), a_i + b_i >= 1, with the given
// remaining sums; the slow-path summation range.
void ordered_tuples(int k_rem, int l_rem, int r_rem, std::vector<std::pair<int, int>>& cur,
                    const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (r_rem == 0) {
        if (k_rem == 0 && l_rem == 0) emit(cur);
        return;
    }
    if (k_rem + l_rem < r_rem) return;
    for (int a = 0; a <= k_rem; ++a)
        for (int b = (a == 0 ? 1 : 0); b <= l_rem; ++b) {
            cur.emplace_back(a, b);
            ordered_tuples(k_rem - a, l_rem - b, r_rem - 1, cur, emit);
            cur.pop_back();
        }
}

enum class SeqMode { multiset, literal };

// Enumerate the letter sequences the symmetrization runs over, with the
// matching weight: all distinct arrangements weighted by prod(mult!) in
// multiset mode, every one of the k! permutations with weight 1 in literal
// mode. Calls emit(sequence) `count` times... (weight returned separately).
struct SeqSet {
    std::vector<std::vector<int>> seqs;
    Rational weight_each;
};

SeqSet sequences(const SymMonomial& m, SeqMode mode) {
    SeqSet out;
    if (mode == SeqMode::multiset) {
        std::vector<int> s = m;  // sorted already
        do {
            out.seqs.push_back(s);
        } while (std::next_permutation(s.begin(), s.end()));
        out.weight_each = multiset_weight(m);
    } else {
        std::vector<int> idx(m.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        do {
            std::vector<int> s(m.size());
            for (size_t i = 0; i < m.size(); ++i) s[i] = m[static_cast<size_t>(idx[i])];
            out.seqs.push_back(std::move(s));
        } while (std::next_permutation(idx.begin(), idx.end()));
        out.weight_each = Rational(1);
    }
    return out;
}

enum class TuplePath { canonical, ordered };

void star_bch_pair(const LieAlgebra& L, const SymMonomial& m1, const SymMonomial& m2,
                   const PolyZ& cf, SeqMode smode, TuplePath tpath, SymElement& out) {
    const int k = static_cast<int>(m1.size());
    const int l = static_cast<int>(m2.size());
    if (k == 0 || l == 0) {
        out.add(merged(m1, m2), cf);
        return;
    }
    SeqSet sx = sequences(m1, smode);
    SeqSet sy = sequences(m2, smode);
    const Rational sym_weight = sx.weight_each * sy.weight_each;

    auto run_tuple = [&](const std::vector<std::pair<int, int>>& tuple, const Rational& w) {
        for (const auto& [a, b] : tuple)
            if (bch_part(a, b).empty()) return;
        int n = k + l - static_cast<int>(tuple.size());
        for (const auto& s1 : sx.seqs)
            for (const auto& s2 : sy.seqs) eval_tuple(L, tuple, s1, s2, w, n, cf, out);
    };

    for (int r = 1; r <= k + l; ++r) {
        if (tpath == TuplePath::canonical) {
            for (const GIndex& J : g_indices(k, l, k + l - r))
                run_tuple(J.pairs, sym_weight / g_factorial(J));
        } else {
            Rational w = sym_weight / factorial(r);
            std::vector<std::pair<int, int>> cur;
            ordered_tuples(k, l, r, cur,
                           [&](const std::vector<std::pair<int, int>>& t) { run_tuple(t, w); });
        }
    }
}

SymElement star_bch_impl(const LieAlgebra& L, const SymElement& f, const SymElement& g,
                         SeqMode smode, TuplePath tpath) {
    check_letters(L, f);
    check_letters(L, g);
    SymElement out;
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms()) star_bch_pair(L, m1, m2, c1 * c2, smode, tpath, out);
    return out;
}

// Coefficient of z^n, as a constant-coefficient element.
SymElement z_coefficient(const SymElement& x, int n) {
    SymElement out;
    for (const auto& [m, c] : x.terms()) {
        Rational cn = c.coeff(n);
        if (!cn.is_zero()) out.add(m, PolyZ(cn));
    }
    return out;
}

}  // namespace

std::vector<GIndex> g_indices(int k, int l, int n) {
    std::vector<GIndex> out;
    const int r = k + l - n;
    if (r < 1 || n < 0) return out;
    std::vector<std::pair<int, int>> cur;
    // Pairs are chosen nondecreasing under key (a+b, a); each remaining pair
    // must consume at least as much as the current one, giving the prune.
    std::function<void(int, int, int, int, int)> rec = [&](int k_rem, int l_rem, int r_rem,
                                                           int min_s, int min_a) {
        if (r_rem == 0) {
            if (k_rem == 0 && l_rem == 0) out.push_back(GIndex{cur});
            return;
        }
        for (int a = 0; a <= k_rem; ++a)
            for (int b = (a == 0 ? 1 : 0); b <= l_rem; ++b) {
                if (a != 0 && b == 0 && a != 1) continue;  // (a,0) only as (1,0)
                if (a == 0 && b != 1) continue;            // (0,b) only as (0,1)
                int s = a + b;
                if (s < min_s || (s == min_s && a < min_a)) continue;
                if (k_rem - a + l_rem - b < (r_rem - 1) * s) continue;
                cur.emplace_back(a, b);
                rec(k_rem - a, l_rem - b, r_rem - 1, s, a);
                cur.pop_back();
            }
    };
    rec(k, l, r, 1, 0);
    return out;
}

Rational g_factorial(const GIndex& J) {
    Rational w(1);
    size_t i = 0;
    while (i < J.pairs.size()) {
        size_t j = i;
        while (j < J.pairs.size() && J.pairs[j] == J.pairs[i]) ++j;
        w = w * factorial(static_cast<int>(j - i));
        i = j;
    }
    return w;
}

SymElement star_pbw(const Enveloping& env, const SymElement& f, const SymElement& g) {
    check_letters(env.algebra(), f);
    check_letters(env.algebra(), g);
    if (f.top_degree() <= 0) return g.scaled(f.coeff({}));
    if (g.top_degree() <= 0) return f.scaled(g.coeff({}));
    return env.q_z_inv(env.u_mul(env.q_z(f), env.q_z(g)));
}

SymElement star_bch(const LieAlgebra& L, const SymElement& f, const SymElement& g) {
    return star_bch_impl(L, f, g, SeqMode::multiset, TuplePath::canonical);
}

SymElement star_bch_literal(const LieAlgebra& L, const SymElement& f, const SymElement& g) {
    return star_bch_impl(L, f, g, SeqMode::literal, TuplePath::canonical);
}

SymElement star_bch_slow(const LieAlgebra& L, const SymElement& f, const SymElement& g) {
    return star_bch_impl(L, f, g, SeqMode::multiset, TuplePath::ordered);
}

SymElement star_gutt_original(const Enveloping& env, const SymElement& f, const SymElement& g) {
    const LieAlgebra& L = env.algebra();
    check_letters(L, f);
    check_letters(L, g);
    SymElement out;
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms()) {
            const int k = static_cast<int>(m1.size());
            const int l = static_cast<int>(m2.size());
            PolyZ cf = c1 * c2;
            if (k == 0 || l == 0) {
                out.add(merged(m1, m2), cf);
                continue;
            }
            // Undeformed product: all parameter polynomials evaluated at 1.
            UElement u = env.u_mul(env.q_z(SymElement::monomial(m1)),
                                   env.q_z(SymElement::monomial(m2)));
            SymElement h = evaluate_z(env.q_z_inv(u), Rational(1));
            // Reinsert z by the degree drop: z^n on the degree-(k+l-n) piece.
            for (int d = 0; d <= k + l; ++d) {
                SymElement pd = project(h, d);
                if (pd.is_zero()) continue;
                out += pd.scaled(cf * PolyZ::monomial(Rational(1), k + l - d));
            }
        }
    return out;
}

SymElement star_linear(const LieAlgebra& L, const SymElement& f, const Vector& eta,
                       StarSide side) {
    check_letters(L, f);
    check_vector(L, eta);
    SymElement out;
    for (const auto& [m, cf] : f.terms()) {
        const int k = static_cast<int>(m.size());
        const Rational full_weight = multiset_weight(m);
        // Remaining multiplicities per distinct letter.
        std::vector<std::pair<int, int>> counts;
        for (size_t i = 0; i < m.size();) {
            size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            counts.emplace_back(m[i], static_cast<int>(j - i));
            i = j;
        }
        // Enumerate bracket letter sequences innermost-first, so the nested
        // bracket extends incrementally: v -> [e_x, v].
        std::function<void(int, const Vector&)> rec = [&](int j, const Vector& v) {
            Rational bj = side == StarSide::left ? bernoulli_star(j) : bernoulli(j);
            if (!bj.is_zero()) {
                Rational rest_fact(1);
                SymMonomial rest;
                for (const auto& [letter, cnt] : counts) {
                    rest_fact = rest_fact * factorial(cnt);
                    for (int t = 0; t < cnt; ++t) rest.push_back(letter);
                }
                std::sort(rest.begin(), rest.end());
                Rational coef = bj * full_weight / (factorial(j) * rest_fact);
                for (size_t c = 0; c < v.size(); ++c) {
                    if (v[c].is_zero()) continue;
                    SymMonomial mono = rest;
                    mono.push_back(static_cast<int>(c));
                    std::sort(mono.begin(), mono.end());
                    out.add(mono, cf * PolyZ::monomial(coef * v[c], j));
                }
            }
            if (j == k) return;
            for (auto& [letter, cnt] : counts) {
                if (cnt == 0) continue;
                Vector w = L.bracket(L.basis_vector(letter), v);
                if (vector_is_zero(w)) continue;
                --cnt;
                rec(j + 1, w);
                ++cnt;
            }
        };
        rec(0, eta);
    }
    return out;
}

SymElement c_n(const Enveloping& env, const SymElement& f, const SymElement& g, int n) {
    if (n < 0) throw std::invalid_argument("negative z-order");
    return z_coefficient(star_pbw(env, f, g), n);
}

SymElement star_vectors(const Enveloping& env, const std::vector<Vector>& xs) {
    if (xs.empty()) throw std::invalid_argument("star_vectors needs at least one vector");
    for (const Vector& x : xs) check_vector(env.algebra(), x);
    struct Item {
        int zpow;
        SymElement el;
    };
    std::vector<Item> items{{0, SymElement::from_vector(xs[0])}};
    for (size_t j = 1; j < xs.size(); ++j) {
        SymElement xj = SymElement::from_vector(xs[j]);
        std::vector<Item> next;
        for (const Item& it : items) {
            SymElement s = star_pbw(env, it.el, xj);
            for (int i = 0; i <= static_cast<int>(j); ++i) {
                SymElement ci = z_coefficient(s, i);
                if (!ci.is_zero()) next.push_back({it.zpow + i, std::move(ci)});
            }
        }
        items = std::move(next);
    }
    SymElement out;
    for (const Item& it : items) out += it.el.scaled(PolyZ::monomial(Rational(1), it.zpow));
    return out;
}

SymElement poisson_biderivation(const LieAlgebra& L, const SymElement& f, const SymElement& g) {
    check_letters(L, f);
    check_letters(L, g);
    SymElement out;
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms()) {
            PolyZ cf = c1 * c2;
            for (size_t i = 0; i < m1.size(); ++i)
                for (size_t j = 0; j < m2.size(); ++j) {
                    Vector br = L.bracket_basis(m1[i], m2[j]);
                    if (vector_is_zero(br)) continue;
                    SymMonomial rest;
                    rest.reserve(m1.size() + m2.size() - 2);
                    for (size_t t = 0; t < m1.size(); ++t)
                        if (t != i) rest.push_back(m1[t]);
                    for (size_t t = 0; t < m2.size(); ++t)
                        if (t != j) rest.push_back(m2[t]);
                    for (size_t c = 0; c < br.size(); ++c) {
                        if (br[c].is_zero()) continue;
                        SymMonomial mono = rest;
                        mono.push_back(static_cast<int>(c));
                        std::sort(mono.begin(), mono.end());
                        out.add(mono, cf.scaled(br[c]));
                    }
                }
        }
    return out;
}

bool poisson_check(const Enveloping& env, const SymElement& f, const SymElement& g) {
    SymElement lhs = c_n(env, f, g, 1);
    lhs -= c_n(env, g, f, 1);
    return lhs == poisson_biderivation(env.algebra(), f, g);
}

}  // namespace gutt
