#include "gutt/sym_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace gutt {

SymElement SymElement::monomial(SymMonomial m, PolyZ c) {
    std::sort(m.begin(), m.end());
    SymElement out;
    out.add(m, c);
    return out;
}

SymElement SymElement::from_vector(const Vector& v) {
    SymElement out;
    for (size_t i = 0; i < v.size(); ++i)
        out.add({static_cast<int>(i)}, PolyZ(v[i]));
    return out;
}

PolyZ SymElement::coeff(const SymMonomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? PolyZ() : it->second;
}

int SymElement::top_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

void SymElement::add(const SymMonomial& m, const PolyZ& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

SymElement& SymElement::operator+=(const SymElement& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

SymElement SymElement::scaled(const PolyZ& c) const {
    SymElement out;
    if (c.is_zero()) return out;
    for (const auto& [m, p] : t_) out.add(m, p * c);
    return out;
}

SymElement sym_mul(const SymElement& a, const SymElement& b) {
    SymElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            SymMonomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out.add(m, ca * cb);
        }
    return out;
}

SymElement project(const SymElement& x, int n) {
    SymElement out;
    for (const auto& [m, c] : x.terms())
        if (static_cast<int>(m.size()) == n) out.add(m, c);
    return out;
}

SymElement evaluate_z(const SymElement& x, const Rational& z0) {
    SymElement out;
    for (const auto& [m, c] : x.terms()) out.add(m, PolyZ(c.eval(z0)));
    return out;
}

namespace {

std::string monomial_str(const SymMonomial& m, const LieAlgebra& L) {
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < m.size()) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!first) os << "*";
        first = false;
        os << L.label(m[i]);
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

std::string term_str(const Rational& c, int zpow, const SymMonomial& m, const LieAlgebra& L) {
    // caller has made c positive
    std::string head;
    if (!(c.is_one() && (zpow > 0 || !m.empty()))) {
        head = c.is_integer() ? c.str() : "(" + c.str() + ")";
    }
    if (zpow >= 1) {
        head += "z";
        if (zpow > 1) head += "^" + std::to_string(zpow);
    }
    if (!m.empty()) {
        if (!head.empty()) head += "*";
        head += monomial_str(m, L);
    }
    return head.empty() ? "1" : head;
}

}  // namespace

std::string render(const SymElement& x, const LieAlgebra& L) {
    if (x.is_zero()) return "0";
    // (degree desc, monomial lex asc, z-power asc)
    std::vector<std::tuple<int, SymMonomial, int, Rational>> items;
    for (const auto& [m, p] : x.terms())
        for (int k = 0; k <= p.degree(); ++k)
            if (!p.coeff(k).is_zero())
                items.emplace_back(-static_cast<int>(m.size()), m, k, p.coeff(k));
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
              });
    std::ostringstream os;
    bool first = true;
    for (const auto& [negdeg, m, k, c] : items) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        os << term_str(a, k, m, L);
    }
    return os.str();
}

}  // namespace gutt
