#include "gutt/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace gutt {

namespace {

std::string tuple_str(const std::vector<int>& idx) {
    std::ostringstream os;
    os << "(";
    for (size_t t = 0; t < idx.size(); ++t) os << (t ? "," : "") << idx[t];
    os << ")";
    return os.str();
}

bool is_zero_vec(const Vector& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
    if (dim_ < 1) throw std::invalid_argument("LieAlgebra: dimension must be positive");
    if (static_cast<int>(labels_.size()) != dim_)
        throw std::invalid_argument("LieAlgebra: label count != dim");
    c_.assign(static_cast<size_t>(dim_) * dim_ * (dim_ - 1) / 2, Rational(0));
}

size_t LieAlgebra::tri_index(int i, int j, int k) const {
    // pair rank of (i,j) with i < j in lexicographic order
    size_t pair = static_cast<size_t>(i) * dim_ - static_cast<size_t>(i) * (i + 1) / 2 +
                  static_cast<size_t>(j - i - 1);
    return pair * dim_ + static_cast<size_t>(k);
}

void LieAlgebra::set_triangle(int i, int j, const Vector& coeffs) {
    for (int k = 0; k < dim_; ++k) c_[tri_index(i, j, k)] = coeffs[static_cast<size_t>(k)];
}

Rational LieAlgebra::c(int i, int j, int k) const {
    if (i == j) return Rational(0);
    if (i < j) return c_[tri_index(i, j, k)];
    return -c_[tri_index(j, i, k)];
}

std::optional<int> LieAlgebra::label_index(const std::string& name) const {
    for (int i = 0; i < dim_; ++i)
        if (labels_[static_cast<size_t>(i)] == name) return i;
    return std::nullopt;
}

Vector LieAlgebra::basis_vector(int i) const {
    Vector v(static_cast<size_t>(dim_), Rational(0));
    v[static_cast<size_t>(i)] = Rational(1);
    return v;
}

Vector LieAlgebra::bracket_basis(int i, int j) const {
    Vector v(static_cast<size_t>(dim_), Rational(0));
    for (int k = 0; k < dim_; ++k) v[static_cast<size_t>(k)] = c(i, j, k);
    return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw std::invalid_argument("bracket: dimension mismatch");
    Vector out(static_cast<size_t>(dim_), Rational(0));
    for (int i = 0; i < dim_; ++i) {
        if (x[static_cast<size_t>(i)].is_zero() && y[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = i + 1; j < dim_; ++j) {
            Rational w = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] -
                         x[static_cast<size_t>(j)] * y[static_cast<size_t>(i)];
            if (w.is_zero()) continue;
            for (int k = 0; k < dim_; ++k) {
                const Rational& s = c_[tri_index(i, j, k)];
                if (!s.is_zero()) out[static_cast<size_t>(k)] += w * s;
            }
        }
    }
    return out;
}

Vector LieAlgebra::ad_power(const Vector& x, int n, const Vector& y) const {
    if (n < 0) throw std::invalid_argument("ad_power: negative exponent");
    Vector out = y;
    for (int t = 0; t < n; ++t) out = bracket(x, out);
    return out;
}

std::optional<Violation> LieAlgebra::validate() const {
    // Jacobi for distinct i < j < k suffices: the Jacobiator of an
    // antisymmetric bracket vanishes identically on repeated arguments.
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k)
                for (int m = 0; m < dim_; ++m) {
                    Rational acc(0);
                    for (int l = 0; l < dim_; ++l)
                        acc += c(i, j, l) * c(l, k, m) + c(j, k, l) * c(l, i, m) +
                               c(k, i, l) * c(l, j, m);
                    if (!acc.is_zero()) {
                        std::vector<int> idx = {i + 1, j + 1, k + 1, m + 1};
                        return Violation{"jacobi", idx,
                                         "Jacobi identity fails at " + tuple_str(idx)};
                    }
                }
    return std::nullopt;
}

std::optional<int> LieAlgebra::nilpotency_index(int max_n) const {
    if (max_n < 1) throw std::invalid_argument("nilpotency_index: bound must be positive");
    // all_brackets[m] spans every m-letter nested basis bracket, m = 1-based.
    std::vector<std::vector<Vector>> by_len(static_cast<size_t>(max_n) + 2);
    for (int i = 0; i < dim_; ++i) by_len[1].push_back(basis_vector(i));
    for (int len = 2; len <= max_n + 1; ++len) {
        for (int a = 1; a < len; ++a)
            for (const auto& u : by_len[static_cast<size_t>(a)])
                for (const auto& v : by_len[static_cast<size_t>(len - a)]) {
                    Vector b = bracket(u, v);
                    if (!is_zero_vec(b)) by_len[static_cast<size_t>(len)].push_back(std::move(b));
                }
        if (by_len[static_cast<size_t>(len)].empty()) return len - 1;
    }
    return std::nullopt;
}

LieAlgebra LieAlgebra::abelian(int d) {
    std::vector<std::string> labels;
    for (int i = 1; i <= d; ++i) labels.push_back("x" + std::to_string(i));
    return LieAlgebra(d, std::move(labels));
}

LieAlgebra LieAlgebra::heisenberg(int n) {
    if (n < 1) throw std::invalid_argument("heisenberg: n must be positive");
    const int d = 2 * n + 1;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(n == 1 ? "P" : "P" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back(n == 1 ? "Q" : "Q" + std::to_string(i));
    labels.push_back("E");
    LieAlgebra L(d, std::move(labels));
    for (int i = 0; i < n; ++i) {
        Vector e(static_cast<size_t>(d), Rational(0));
        e[static_cast<size_t>(d - 1)] = Rational(1);
        L.set_triangle(i, n + i, e);  // [P_i, Q_i] = E
    }
    return L;
}

LieAlgebra LieAlgebra::so3() {
    LieAlgebra L(3, {"e1", "e2", "e3"});
    L.set_triangle(0, 1, {Rational(0), Rational(0), Rational(1)});   // [e1,e2] = e3
    L.set_triangle(1, 2, {Rational(1), Rational(0), Rational(0)});   // [e2,e3] = e1
    L.set_triangle(0, 2, {Rational(0), Rational(-1), Rational(0)});  // [e1,e3] = -e2
    return L;
}

LieAlgebra::BuildResult LieAlgebra::from_entries(int dim, std::vector<std::string> labels,
                                                 const std::vector<BracketEntry>& entries) {
    LieAlgebra L(dim, std::move(labels));
    // seen[i][j] marks explicitly provided pairs so redundant input is checked
    // against antisymmetry rather than silently overwritten.
    std::vector<std::vector<bool>> seen(static_cast<size_t>(dim),
                                        std::vector<bool>(static_cast<size_t>(dim), false));
    auto stored = [&](int i, int j, int k) { return L.c(i, j, k); };
    for (const auto& e : entries) {
        if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim ||
            static_cast<int>(e.coeffs.size()) != dim) {
            std::vector<int> idx = {e.i + 1, e.j + 1};
            return Violation{"dimension", idx, "bracket entry out of range at " + tuple_str(idx)};
        }
        if (e.i == e.j) {
            if (!is_zero_vec(e.coeffs)) {
                std::vector<int> idx = {e.i + 1, e.j + 1};
                return Violation{"antisymmetry", idx,
                                 "nonzero [e_i, e_i] at " + tuple_str(idx)};
            }
            continue;
        }
        const bool redundant = seen[static_cast<size_t>(e.i)][static_cast<size_t>(e.j)] ||
                               seen[static_cast<size_t>(e.j)][static_cast<size_t>(e.i)];
        if (redundant) {
            for (int k = 0; k < dim; ++k)
                if (stored(e.i, e.j, k) != e.coeffs[static_cast<size_t>(k)]) {
                    std::vector<int> idx = {e.i + 1, e.j + 1, k + 1};
                    return Violation{"antisymmetry", idx,
                                     "inconsistent redundant bracket at " + tuple_str(idx)};
                }
            continue;
        }
        if (e.i < e.j) {
            L.set_triangle(e.i, e.j, e.coeffs);
        } else {
            Vector neg = e.coeffs;
            for (auto& v : neg) v = -v;
            L.set_triangle(e.j, e.i, neg);
        }
        seen[static_cast<size_t>(e.i)][static_cast<size_t>(e.j)] = true;
    }
    if (auto bad = L.validate()) return *bad;
    return L;
}

}  // namespace gutt
