#include "gutt/free_lie.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "gutt/special.hpp"

namespace gutt {

void BracketSeries::add(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

BracketSeries BracketSeries::content_part(int a, int b) const {
    BracketSeries out;
    for (const auto& [w, c] : t_) {
        int x = 0;
        for (char ch : w) x += (ch == 'X');
        if (x == a && static_cast<int>(w.size()) - x == b) out.add(w, c);
    }
    return out;
}

BracketSeries BracketSeries::degree_part(int n) const {
    BracketSeries out;
    for (const auto& [w, c] : t_)
        if (static_cast<int>(w.size()) == n) out.add(w, c);
    return out;
}

BracketSeries& BracketSeries::operator+=(const BracketSeries& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

void NCPoly::add(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Rational NCPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Rational(0) : it->second;
}

NCPoly NCPoly::degree_part(int n) const {
    NCPoly out;
    for (const auto& [w, c] : t_)
        if (static_cast<int>(w.size()) == n) out.add(w, c);
    return out;
}

NCPoly NCPoly::content_part(int a, int b) const {
    NCPoly out;
    for (const auto& [w, c] : t_) {
        int x = 0;
        for (char ch : w) x += (ch == 'X');
        if (x == a && static_cast<int>(w.size()) - x == b) out.add(w, c);
    }
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
}

NCPoly NCPoly::scaled(const Rational& s) const {
    NCPoly out;
    if (s.is_zero()) return out;
    for (const auto& [w, c] : t_) out.add(w, c * s);
    return out;
}

NCPoly NCPoly::mul_trunc(const NCPoly& a, const NCPoly& b, int maxlen) {
    NCPoly out;
    for (const auto& [wa, ca] : a.t_) {
        if (static_cast<int>(wa.size()) > maxlen) continue;
        for (const auto& [wb, cb] : b.t_) {
            if (static_cast<int>(wa.size() + wb.size()) > maxlen) continue;
            out.add(wa + wb, ca * cb);
        }
    }
    return out;
}

NCPoly expand_bracket(const Rational& c, const Word& w) {
    if (w.empty()) throw std::invalid_argument("expand_bracket: empty word");
    NCPoly acc;
    acc.add(w.substr(0, 1), c);
    for (size_t t = 1; t < w.size(); ++t) {
        const Word letter = w.substr(t, 1);
        NCPoly next;
        for (const auto& [u, cu] : acc.terms()) {
            next.add(u + letter, cu);
            next.add(letter + u, -cu);
        }
        acc = std::move(next);
    }
    return acc;
}

NCPoly expand_series(const BracketSeries& s) {
    NCPoly out;
    for (const auto& [w, c] : s.terms()) out += expand_bracket(c, w);
    return out;
}

NCPoly bch_associative(int order) {
    if (order < 1) throw std::invalid_argument("bch_associative: order must be positive");
    // A = exp(X) exp(Y) - 1, truncated
    NCPoly a;
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            if (i + j == 0) continue;
            a.add(Word(static_cast<size_t>(i), 'X') + Word(static_cast<size_t>(j), 'Y'),
                  Rational(1) / (factorial(i) * factorial(j)));
        }
    // log(1 + A) = sum (-1)^(m-1) A^m / m
    NCPoly out, apow = a;
    for (int m = 1; m <= order; ++m) {
        Rational coeff = Rational((m % 2) ? 1 : -1, m);
        out += apow.scaled(coeff);
        if (m < order) apow = NCPoly::mul_trunc(apow, a, order);
    }
    return out;
}

namespace {

// Run-length view of a two-letter word.
std::pair<Letter, std::vector<int>> run_encode(const Word& w) {
    std::vector<int> runs;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && w[i] == w[i - 1])
            ++runs.back();
        else
            runs.push_back(1);
    }
    return {w[0] == 'X' ? Letter::xi : Letter::eta, runs};
}

}  // namespace

BracketSeries bch_goldberg(int order) {
    if (order < 1) throw std::invalid_argument("bch_goldberg: order must be positive");
    BracketSeries out;
    for (int n = 1; n <= order; ++n) {
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            Word w;
            for (int i = 0; i < n; ++i) w.push_back(((mask >> i) & 1u) ? 'Y' : 'X');
            auto [first, runs] = run_encode(w);
            Rational g = goldberg_coeff(first, runs);
            if (!g.is_zero()) out.add(w, g / Rational(n));
        }
    }
    return out;
}

BracketSeries bch_dynkin(int order) {
    if (order < 1) throw std::invalid_argument("bch_dynkin: order must be positive");
    BracketSeries out;
    // DFS over sequences of pairs (n_i, m_i) with n_i + m_i >= 1, total <= order.
    struct Frame {
        Word word;
        Rational fact_prod;  // prod n_i! m_i!
        int total = 0;
        int k = 0;
    };
    std::vector<Frame> stack = {{Word(), Rational(1), 0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.k > 0) {
            Rational sign((f.k % 2) ? 1 : -1);
            Rational coeff = sign / (Rational(f.k) * Rational(f.total) * f.fact_prod);
            out.add(f.word, coeff);
        }
        for (int n = 0; f.total + n <= order; ++n)
            for (int m = (n == 0 ? 1 : 0); f.total + n + m <= order; ++m) {
                Frame g = f;
                g.word += Word(static_cast<size_t>(n), 'X') + Word(static_cast<size_t>(m), 'Y');
                g.fact_prod *= factorial(n) * factorial(m);
                g.total += n + m;
                ++g.k;
                stack.push_back(std::move(g));
            }
    }
    return out;
}

namespace {
std::mutex part_mutex;
std::map<std::pair<int, int>, BracketSeries> part_cache;  // guarded by part_mutex
}  // namespace

const BracketSeries& bch_part(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("bch_part: need a + b >= 1");
    std::lock_guard<std::mutex> lock(part_mutex);
    auto it = part_cache.find({a, b});
    if (it != part_cache.end()) return it->second;
    BracketSeries part = bch_goldberg(a + b).content_part(a, b);
    return part_cache.emplace(std::make_pair(a, b), std::move(part)).first->second;
}

Vector bch_tilde(int a, int b, const std::vector<Vector>& xs, const std::vector<Vector>& ys,
                 const LieAlgebra& L) {
    if (static_cast<int>(xs.size()) != a || static_cast<int>(ys.size()) != b)
        throw std::invalid_argument("bch_tilde: argument counts must match (a, b)");
    Vector out(static_cast<size_t>(L.dim()), Rational(0));
    for (const auto& [w, c] : bch_part(a, b).terms()) {
        size_t xi = 0, yi = 0;
        Vector acc = (w[0] == 'X') ? xs[xi++] : ys[yi++];
        for (size_t t = 1; t < w.size(); ++t)
            acc = L.bracket(acc, (w[t] == 'X') ? xs[xi++] : ys[yi++]);
        for (size_t k = 0; k < out.size(); ++k) out[k] += c * acc[k];
    }
    return out;
}

FirstOrderPair bch_first_order(const LieAlgebra& L, const Vector& xi, const Vector& eta,
                               int order) {
    if (order < 1 || order > 10) throw std::invalid_argument("bch_first_order: order in 1..10");
    FirstOrderPair out;
    out.closed.assign(static_cast<size_t>(L.dim()), Rational(0));
    out.expanded = out.closed;
    for (int n = 0; n <= order; ++n) {
        Vector ad = L.ad_power(xi, n, eta);
        Rational w = bernoulli_star(n) / factorial(n);
        for (size_t k = 0; k < ad.size(); ++k) out.closed[k] += w * ad[k];
        Vector t = bch_tilde(n, 1, std::vector<Vector>(static_cast<size_t>(n), xi), {eta}, L);
        for (size_t k = 0; k < t.size(); ++k) out.expanded[k] += t[k];
    }
    return out;
}

}  // namespace gutt
