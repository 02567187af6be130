#include "gutt/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace gutt {

UniPoly UniPoly::monomial(Rational c, int k) {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v[static_cast<size_t>(k)] = std::move(c);
    return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    UniPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> v(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(int e) const {
    UniPoly r{Rational(1)};
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rational UniPoly::eval_abs(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].abs();
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c_[i].str();
            continue;
        }
        if (!c_[i].is_one()) os << "(" << c_[i].str() << ")";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Rational integrate_unit(const UniPoly& p) {
    Rational r(0);
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i) r += c[i] / Rational(static_cast<long>(i) + 1);
    return r;
}

}  // namespace gutt
