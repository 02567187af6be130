#include "gutt/hopf.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "gutt/gutt_star.hpp"

namespace gutt {

namespace {

// Letter multiplicities of a sorted monomial.
std::vector<std::pair<int, int>> letter_counts(const SymMonomial& m) {
    std::vector<std::pair<int, int>> counts;
    for (size_t i = 0; i < m.size();) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        counts.emplace_back(m[i], static_cast<int>(j - i));
        i = j;
    }
    return counts;
}

}  // namespace

PolyZ TensorSquareElement::coeff(const SymMonomial& a, const SymMonomial& b) const {
    auto it = t_.find({a, b});
    return it == t_.end() ? PolyZ() : it->second;
}

void TensorSquareElement::add(const SymMonomial& a, const SymMonomial& b, const PolyZ& c) {
    if (c.is_zero()) return;
    Key k{a, b};
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(std::move(k), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

TensorSquareElement& TensorSquareElement::operator+=(const TensorSquareElement& o) {
    for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
    return *this;
}

TensorSquareElement TensorSquareElement::scaled(const PolyZ& c) const {
    TensorSquareElement out;
    for (const auto& [k, v] : t_) out.add(k.first, k.second, v * c);
    return out;
}

TensorSquareElement tensor_product(const SymElement& a, const SymElement& b) {
    TensorSquareElement out;
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) out.add(m1, m2, c1 * c2);
    return out;
}

TensorSquareElement flip(const TensorSquareElement& t) {
    TensorSquareElement out;
    for (const auto& [k, c] : t.terms()) out.add(k.second, k.first, c);
    return out;
}

TensorSquareElement coproduct(const SymElement& x) {
    TensorSquareElement out;
    for (const auto& [m, c] : x.terms()) {
        auto counts = letter_counts(m);
        // Choose how many copies of each letter go to the left leg.
        std::vector<int> pick(counts.size(), 0);
        std::function<void(size_t, const Rational&)> rec = [&](size_t i, const Rational& mult) {
            if (i == counts.size()) {
                SymMonomial left, right;
                for (size_t t = 0; t < counts.size(); ++t) {
                    for (int u = 0; u < pick[t]; ++u) left.push_back(counts[t].first);
                    for (int u = 0; u < counts[t].second - pick[t]; ++u)
                        right.push_back(counts[t].first);
                }
                out.add(left, right, c.scaled(mult));
                return;
            }
            for (int take = 0; take <= counts[i].second; ++take) {
                pick[i] = take;
                rec(i + 1, mult * binomial(counts[i].second, take));
            }
        };
        rec(0, Rational(1));
    }
    return out;
}

SymElement antipode(const SymElement& x) {
    SymElement out;
    for (const auto& [m, c] : x.terms())
        out.add(m, m.size() % 2 == 0 ? c : -c);
    return out;
}

PolyZ counit(const SymElement& x) { return x.coeff({}); }

TensorSquareElement tensor_star(const Enveloping& env, const TensorSquareElement& a,
                                const TensorSquareElement& b, const Rational& z0) {
    TensorSquareElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Rational c = (ca * cb).eval(z0);
            if (c.is_zero()) continue;
            SymElement left = evaluate_z(
                star_pbw(env, SymElement::monomial(ka.first), SymElement::monomial(kb.first)),
                z0);
            SymElement right = evaluate_z(
                star_pbw(env, SymElement::monomial(ka.second), SymElement::monomial(kb.second)),
                z0);
            for (const auto& [m1, c1] : left.terms())
                for (const auto& [m2, c2] : right.terms())
                    out.add(m1, m2, (c1 * c2).scaled(c));
        }
    return out;
}

bool check_counit_axioms(const SymElement& x) {
    TensorSquareElement t = coproduct(x);
    SymElement left, right;
    for (const auto& [k, c] : t.terms()) {
        if (k.first.empty()) left.add(k.second, c);
        if (k.second.empty()) right.add(k.first, c);
    }
    return left == x && right == x;
}

bool check_coassociativity(const SymElement& x) {
    using Key3 = std::tuple<SymMonomial, SymMonomial, SymMonomial>;
    std::map<Key3, PolyZ> lhs, rhs;
    auto add3 = [](std::map<Key3, PolyZ>& m, Key3 k, const PolyZ& c) {
        if (c.is_zero()) return;
        auto it = m.find(k);
        if (it == m.end()) {
            m.emplace(std::move(k), c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    };
    TensorSquareElement t = coproduct(x);
    for (const auto& [k, c] : t.terms()) {
        TensorSquareElement dl = coproduct(SymElement::monomial(k.first));
        for (const auto& [k2, c2] : dl.terms()) add3(lhs, {k2.first, k2.second, k.second}, c * c2);
        TensorSquareElement dr = coproduct(SymElement::monomial(k.second));
        for (const auto& [k2, c2] : dr.terms()) add3(rhs, {k.first, k2.first, k2.second}, c * c2);
    }
    return lhs == rhs;
}

bool check_cocommutativity(const SymElement& x) {
    TensorSquareElement t = coproduct(x);
    return flip(t) == t;
}

bool check_antipode_axiom(const Enveloping& env, const SymElement& x, const Rational& z0) {
    SymElement x0 = evaluate_z(x, z0);
    SymElement acc;
    TensorSquareElement dx = coproduct(x0);
    for (const auto& [k, c] : dx.terms()) {
        SymElement s = star_pbw(env, antipode(SymElement::monomial(k.first)),
                                SymElement::monomial(k.second));
        acc += s.scaled(c);
    }
    SymElement expect = SymElement::unit().scaled(counit(x0));
    return evaluate_z(acc, z0) == expect;
}

bool check_coproduct_morphism(const Enveloping& env, const SymElement& f, const SymElement& g,
                              const Rational& z0) {
    SymElement f0 = evaluate_z(f, z0);
    SymElement g0 = evaluate_z(g, z0);
    TensorSquareElement lhs = coproduct(evaluate_z(star_pbw(env, f0, g0), z0));
    TensorSquareElement rhs = tensor_star(env, coproduct(f0), coproduct(g0), z0);
    return lhs == rhs;
}

namespace {

using UTensor = std::map<std::pair<PBWWord, PBWWord>, PolyZ>;

void utensor_add(UTensor& t, PBWWord a, PBWWord b, const PolyZ& c) {
    if (c.is_zero()) return;
    std::pair<PBWWord, PBWWord> k{std::move(a), std::move(b)};
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(std::move(k), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

}  // namespace

bool coproduct_undeformed(const Enveloping& env, const SymMonomial& m) {
    // Route one: coproduct downstairs, then quantize both legs.
    UTensor lhs;
    TensorSquareElement dm = coproduct(SymElement::monomial(m));
    for (const auto& [k, c] : dm.terms()) {
        UElement u1 = env.q_z(SymElement::monomial(k.first));
        UElement u2 = env.q_z(SymElement::monomial(k.second));
        for (const auto& [w1, c1] : u1.terms())
            for (const auto& [w2, c2] : u2.terms()) utensor_add(lhs, w1, w2, c * c1 * c2);
    }
    // Route two: quantize, then expand the generator coproduct word by word,
    // multiplying (letter (x) 1 + 1 (x) letter) factors left to right.
    UTensor rhs;
    UElement um = env.q_z(SymElement::monomial(m));
    for (const auto& [w, c] : um.terms()) {
        UTensor cur;
        utensor_add(cur, {}, {}, PolyZ(Rational(1)));
        for (int letter : w) {
            UTensor next;
            UElement gen = UElement::word({letter});
            for (const auto& [k, kc] : cur) {
                UElement a = env.u_mul(UElement::word(k.first), gen);
                for (const auto& [wa, ca] : a.terms()) utensor_add(next, wa, k.second, kc * ca);
                UElement b = env.u_mul(UElement::word(k.second), gen);
                for (const auto& [wb, cb] : b.terms()) utensor_add(next, k.first, wb, kc * cb);
            }
            cur = std::move(next);
        }
        for (const auto& [k, kc] : cur) utensor_add(rhs, k.first, k.second, c * kc);
    }
    return lhs == rhs;
}

bool antipode_undeformed(const Enveloping& env, const SymMonomial& m) {
    UElement lhs = env.q_z(antipode(SymElement::monomial(m)));
    UElement rhs;
    UElement um = env.q_z(SymElement::monomial(m));
    for (const auto& [w, c] : um.terms()) {
        PBWWord rev(w.rbegin(), w.rend());
        UElement nf = env.normal_order(rev);
        Rational sign(w.size() % 2 == 0 ? 1 : -1);
        rhs += nf.scaled(c.scaled(sign));
    }
    return lhs == rhs;
}

bool HopfReport::all_pass() const {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}

std::string HopfReport::render() const {
    std::string out;
    for (const auto& l : lines) {
        out += l.pass ? "PASS " : "FAIL ";
        out += l.name;
        out += '\n';
    }
    return out;
}

HopfReport verify_hopf(const Enveloping& env, const SymElement& x, const Rational& z0) {
    HopfReport r;
    r.lines.push_back({check_counit_axioms(x), "counit-axioms"});
    r.lines.push_back({check_coassociativity(x), "coassociativity"});
    r.lines.push_back({check_cocommutativity(x), "cocommutativity"});
    r.lines.push_back({check_antipode_axiom(env, x, z0), "antipode-axiom"});
    r.lines.push_back({check_coproduct_morphism(env, x, x, z0), "coproduct-morphism"});
    return r;
}

}  // namespace gutt
