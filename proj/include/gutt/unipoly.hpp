#pragma once

#include <string>
#include <vector>

#include "gutt/rational.hpp"

namespace gutt {

// Dense exact univariate polynomial. Serves both the Goldberg variable t and
// the deformation parameter z. Invariant: trailing (highest-index)
// coefficient is nonzero; the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }
    // c * x^k
    static UniPoly monomial(Rational c, int k);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    UniPoly operator-() const;
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scaled(const Rational& s) const;
    UniPoly derivative() const;
    UniPoly pow(int e) const;
    Rational eval(const Rational& x) const;
    // Sum of |coefficient| * x^k; the |z|-evaluation used by seminorms.
    Rational eval_abs(const Rational& x) const;

    std::string str(const std::string& var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Exact integral over [0,1].
Rational integrate_unit(const UniPoly& p);

}  // namespace gutt
