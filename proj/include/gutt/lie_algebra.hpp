#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gutt/rational.hpp"

namespace gutt {

// Coordinate vector relative to an algebra's basis.
using Vector = std::vector<Rational>;

// First failed structural check, with the 1-based index tuple that failed.
struct Violation {
    std::string kind;  // "antisymmetry" | "jacobi" | "dimension"
    std::vector<int> indices;
    std::string message;
};

// One raw bracket assignment [e_i, e_j] = coeffs (0-based i, j).
struct BracketEntry {
    int i = 0;
    int j = 0;
    Vector coeffs;
};

// Finite-dimensional Lie algebra over Q by structure constants. Storage keeps
// c_{ij}^k for i < j only; antisymmetry supplies the rest, and [e_i, e_i] = 0.
// Basis order is the normal-ordering total order used by the enveloping algebra.
class LieAlgebra {
public:
    using BuildResult = std::variant<LieAlgebra, Violation>;

    static LieAlgebra abelian(int d);
    // dim 2n+1, [P_i, Q_i] = E, E central; n = 1 gives labels P, Q, E.
    static LieAlgebra heisenberg(int n);
    // Cyclic brackets [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
    static LieAlgebra so3();
    // Builds from raw entries (either triangle, redundant pairs allowed);
    // reports the first antisymmetry/Jacobi violation instead of constructing.
    static BuildResult from_entries(int dim, std::vector<std::string> labels,
                                    const std::vector<BracketEntry>& entries);

    int dim() const { return dim_; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> label_index(const std::string& name) const;

    // c_{ij}^k, 0-based, any i, j.
    Rational c(int i, int j, int k) const;
    Vector basis_vector(int i) const;
    Vector bracket_basis(int i, int j) const;  // [e_i, e_j]
    Vector bracket(const Vector& x, const Vector& y) const;
    // (ad_x)^n(y); n = 0 returns y.
    Vector ad_power(const Vector& x, int n, const Vector& y) const;

    // Jacobi check over all index triples; antisymmetry holds by storage and is
    // re-checked on raw input in from_entries.
    std::optional<Violation> validate() const;

    // Smallest N <= max_n with every (N+1)-letter nested basis bracket (all
    // bracketing shapes) equal to zero; nullopt when none exists in range.
    std::optional<int> nilpotency_index(int max_n) const;

private:
    LieAlgebra(int dim, std::vector<std::string> labels);
    size_t tri_index(int i, int j, int k) const;  // requires i < j
    void set_triangle(int i, int j, const Vector& coeffs);  // requires i < j

    int dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;  // (i<j, k) flattened
};

}  // namespace gutt
