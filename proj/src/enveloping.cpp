#include "gutt/enveloping.hpp"

#include <algorithm>
#include <stdexcept>

namespace gutt {

UElement UElement::word(PBWWord w, PolyZ c) {
    if (!std::is_sorted(w.begin(), w.end()))
        throw std::invalid_argument("UElement::word: not a PBW word");
    UElement out;
    out.add(w, c);
    return out;
}

PolyZ UElement::coeff(const PBWWord& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? PolyZ() : it->second;
}

int UElement::top_degree() const {
    int d = -1;
    for (const auto& [w, c] : t_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

void UElement::add(const PBWWord& w, const PolyZ& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

UElement& UElement::operator+=(const UElement& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
}

UElement UElement::scaled(const PolyZ& c) const {
    UElement out;
    if (c.is_zero()) return out;
    for (const auto& [w, p] : t_) out.add(w, p * c);
    return out;
}

Matrix mat_identity(int n) {
    Matrix m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const size_t n = a.size(), p = b.size(), q = b.empty() ? 0 : b[0].size();
    Matrix out(n, std::vector<Rational>(q, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < p; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < q; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Matrix mat_scaled(const Matrix& a, const Rational& s) {
    Matrix out = a;
    for (auto& row : out)
        for (auto& v : row) v *= s;
    return out;
}

Matrix mat_commutator(const Matrix& a, const Matrix& b) {
    Matrix ab = mat_mul(a, b), ba = mat_mul(b, a);
    for (size_t i = 0; i < ab.size(); ++i)
        for (size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

const UElement& Enveloping::normal_order_ref(const std::vector<int>& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = order_cache_.find(w);
        if (it != order_cache_.end()) return it->second;
    }
    UElement result;
    size_t descent = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
            descent = i;
            break;
        }
    if (descent == w.size()) {
        result = UElement::word(w);
    } else {
        std::vector<int> swapped = w;
        std::swap(swapped[descent], swapped[descent + 1]);
        result = normal_order_ref(swapped);
        for (int k = 0; k < L_->dim(); ++k) {
            Rational ck = L_->c(w[descent], w[descent + 1], k);
            if (ck.is_zero()) continue;
            std::vector<int> contracted;
            contracted.reserve(w.size() - 1);
            contracted.insert(contracted.end(), w.begin(),
                              w.begin() + static_cast<long>(descent));
            contracted.push_back(k);
            contracted.insert(contracted.end(), w.begin() + static_cast<long>(descent) + 2,
                              w.end());
            result += normal_order_ref(contracted).scaled(PolyZ::monomial(ck, 1));
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return order_cache_.emplace(w, std::move(result)).first->second;
}

UElement Enveloping::normal_order(const std::vector<int>& w) const {
    for (int i : w)
        if (i < 0 || i >= L_->dim()) throw std::invalid_argument("normal_order: index out of range");
    return normal_order_ref(w);
}

UElement Enveloping::normal_order_random(const std::vector<int>& w, std::mt19937& rng) const {
    std::map<std::vector<int>, PolyZ> pending;
    pending.emplace(w, PolyZ(Rational(1)));
    auto put = [](std::map<std::vector<int>, PolyZ>& m, const std::vector<int>& key,
                  const PolyZ& c) {
        auto it = m.find(key);
        if (it == m.end()) {
            if (!c.is_zero()) m.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    };
    UElement done;
    while (!pending.empty()) {
        auto [v, coeff] = *pending.begin();
        pending.erase(pending.begin());
        std::vector<size_t> descents;
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] > v[i + 1]) descents.push_back(i);
        if (descents.empty()) {
            done.add(v, coeff);
            continue;
        }
        size_t pick = descents[std::uniform_int_distribution<size_t>(0, descents.size() - 1)(rng)];
        std::vector<int> swapped = v;
        std::swap(swapped[pick], swapped[pick + 1]);
        put(pending, swapped, coeff);
        for (int k = 0; k < L_->dim(); ++k) {
            Rational ck = L_->c(v[pick], v[pick + 1], k);
            if (ck.is_zero()) continue;
            std::vector<int> contracted;
            contracted.reserve(v.size() - 1);
            contracted.insert(contracted.end(), v.begin(), v.begin() + static_cast<long>(pick));
            contracted.push_back(k);
            contracted.insert(contracted.end(), v.begin() + static_cast<long>(pick) + 2, v.end());
            put(pending, contracted, coeff * PolyZ::monomial(ck, 1));
        }
    }
    return done;
}

UElement Enveloping::u_mul(const UElement& a, const UElement& b) const {
    UElement out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            std::vector<int> concat = wa;
            concat.insert(concat.end(), wb.begin(), wb.end());
            out += normal_order_ref(concat).scaled(ca * cb);
        }
    return out;
}

const UElement& Enveloping::q_z_mono(const SymMonomial& m) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = qz_cache_.find(m);
        if (it != qz_cache_.end()) return it->second;
    }
    UElement result;
    const int n = static_cast<int>(m.size());
    if (n <= 1) {
        result = UElement::word(m);
    } else {
        for (size_t i = 0; i < m.size(); ++i) {
            if (i > 0 && m[i] == m[i - 1]) continue;  // one term per distinct letter
            long mult = static_cast<long>(std::count(m.begin(), m.end(), m[i]));
            SymMonomial rest = m;
            rest.erase(rest.begin() + static_cast<long>(i));
            const UElement& sub = q_z_mono(rest);
            UElement term;
            for (const auto& [w, c] : sub.terms()) {
                std::vector<int> prepended;
                prepended.reserve(w.size() + 1);
                prepended.push_back(m[i]);
                prepended.insert(prepended.end(), w.begin(), w.end());
                term += normal_order_ref(prepended).scaled(c);
            }
            result += term.scaled(PolyZ(Rational(mult)));
        }
        result = result.scaled(PolyZ(Rational(1, n)));
    }
    std::lock_guard<std::mutex> lock(mu_);
    return qz_cache_.emplace(m, std::move(result)).first->second;
}

UElement Enveloping::q_z(const SymElement& x) const {
    UElement out;
    for (const auto& [m, c] : x.terms()) out += q_z_mono(m).scaled(c);
    return out;
}

const SymElement& Enveloping::q_z_inv_word(const PBWWord& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = qzinv_cache_.find(w);
        if (it != qzinv_cache_.end()) return it->second;
    }
    SymElement result = SymElement::monomial(w);
    UElement rest = q_z_mono(w) - UElement::word(w);
    if (rest.top_degree() >= static_cast<int>(w.size()))
        throw std::logic_error("q_z_inv: symmetrization map is not unitriangular");
    for (const auto& [u, c] : rest.terms()) result -= q_z_inv_word(u).scaled(c);
    std::lock_guard<std::mutex> lock(mu_);
    return qzinv_cache_.emplace(w, std::move(result)).first->second;
}

SymElement Enveloping::q_z_inv(const UElement& u) const {
    SymElement out;
    for (const auto& [w, c] : u.terms()) out += q_z_inv_word(w).scaled(c);
    return out;
}

bool is_lie_hom(const LieAlgebra& L1, const LieAlgebra& L2, const Matrix& phi) {
    if (static_cast<int>(phi.size()) != L2.dim()) return false;
    for (const auto& row : phi)
        if (static_cast<int>(row.size()) != L1.dim()) return false;
    auto column = [&](int i) {
        Vector v(static_cast<size_t>(L2.dim()), Rational(0));
        for (int k = 0; k < L2.dim(); ++k)
            v[static_cast<size_t>(k)] = phi[static_cast<size_t>(k)][static_cast<size_t>(i)];
        return v;
    };
    auto apply = [&](const Vector& x) {
        Vector v(static_cast<size_t>(L2.dim()), Rational(0));
        for (int k = 0; k < L2.dim(); ++k)
            for (int i = 0; i < L1.dim(); ++i)
                v[static_cast<size_t>(k)] +=
                    phi[static_cast<size_t>(k)][static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
        return v;
    };
    for (int i = 0; i < L1.dim(); ++i)
        for (int j = i + 1; j < L1.dim(); ++j) {
            Vector lhs = apply(L1.bracket_basis(i, j));
            Vector rhs = L2.bracket(column(i), column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

UElement lift_hom(const Enveloping& src, const Enveloping& dst, const Matrix& phi,
                  const UElement& a) {
    if (!is_lie_hom(src.algebra(), dst.algebra(), phi))
        throw std::invalid_argument("lift_hom: phi is not a Lie algebra homomorphism");
    const int dim1 = src.algebra().dim(), dim2 = dst.algebra().dim();
    std::vector<UElement> image(static_cast<size_t>(dim1));
    for (int i = 0; i < dim1; ++i) {
        UElement img;
        for (int k = 0; k < dim2; ++k)
            img.add({k}, PolyZ(phi[static_cast<size_t>(k)][static_cast<size_t>(i)]));
        image[static_cast<size_t>(i)] = std::move(img);
    }
    UElement out;
    for (const auto& [w, c] : a.terms()) {
        UElement prod = UElement::unit();
        for (int letter : w) prod = dst.u_mul(prod, image[static_cast<size_t>(letter)]);
        out += prod.scaled(c);
    }
    return out;
}

bool is_matrix_rep(const LieAlgebra& L, const std::vector<Matrix>& rho) {
    if (static_cast<int>(rho.size()) != L.dim()) return false;
    const size_t n = rho.empty() ? 0 : rho[0].size();
    for (const auto& m : rho) {
        if (m.size() != n) return false;
        for (const auto& row : m)
            if (row.size() != n) return false;
    }
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            Matrix lhs = mat_commutator(rho[static_cast<size_t>(i)], rho[static_cast<size_t>(j)]);
            Matrix rhs(n, std::vector<Rational>(n, Rational(0)));
            for (int k = 0; k < L.dim(); ++k) {
                Rational ck = L.c(i, j, k);
                if (ck.is_zero()) continue;
                for (size_t r = 0; r < n; ++r)
                    for (size_t s = 0; s < n; ++s)
                        rhs[r][s] += ck * rho[static_cast<size_t>(k)][r][s];
            }
            if (lhs != rhs) return false;
        }
    return true;
}

Matrix represent(const Enveloping& env, const std::vector<Matrix>& rho, const Rational& z0,
                 const SymElement& x) {
    if (z0.is_zero())
        throw std::invalid_argument("represent: z0 = 0 does not define the enveloping relation");
    if (!is_matrix_rep(env.algebra(), rho))
        throw std::invalid_argument("represent: rho is not a commutator representation");
    const size_t n = rho.empty() ? 1 : rho[0].size();
    std::vector<Matrix> gen;
    gen.reserve(rho.size());
    for (const auto& m : rho) gen.push_back(mat_scaled(m, z0));
    Matrix acc(n, std::vector<Rational>(n, Rational(0)));
    UElement u = env.q_z(x);
    for (const auto& [w, p] : u.terms()) {
        Rational scalar = p.eval(z0);
        if (scalar.is_zero()) continue;
        Matrix m = mat_identity(static_cast<int>(n));
        for (int letter : w) m = mat_mul(m, gen[static_cast<size_t>(letter)]);
        for (size_t r = 0; r < n; ++r)
            for (size_t s = 0; s < n; ++s) acc[r][s] += scalar * m[r][s];
    }
    return acc;
}

}  // namespace gutt
