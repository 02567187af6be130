#include "gutt/special.hpp"

#include <mutex>
#include <stdexcept>

namespace gutt {

namespace {
std::mutex bern_mutex;
std::vector<Rational> bern_table;  // guarded by bern_mutex

std::mutex gold_mutex;
std::vector<UniPoly> gold_table;  // G_{i+1} at index i; guarded by gold_mutex
}  // namespace

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(bern_mutex);
    if (bern_table.empty()) bern_table.emplace_back(1);
    while (static_cast<int>(bern_table.size()) <= n) {
        const int m = static_cast<int>(bern_table.size());
        Rational acc(0);
        for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * bern_table[k];
        bern_table.push_back(-acc / Rational(m + 1));
    }
    return bern_table[n];
}

Rational bernoulli_star(int n) {
    Rational b = bernoulli(n);
    return (n % 2 != 0) ? -b : b;
}

UniPoly goldberg_poly(int s) {
    if (s < 1) throw std::invalid_argument("goldberg_poly: index must be positive");
    std::lock_guard<std::mutex> lock(gold_mutex);
    if (gold_table.empty()) gold_table.emplace_back(Rational(1));
    while (static_cast<int>(gold_table.size()) < s) {
        const int m = static_cast<int>(gold_table.size()) + 1;
        UniPoly t_tm1 = UniPoly::variable() * (UniPoly::variable() - UniPoly(Rational(1)));
        gold_table.push_back((t_tm1 * gold_table.back()).derivative().scaled(Rational(1, m)));
    }
    return gold_table[s - 1];
}

Rational goldberg_coeff(Letter first, const std::vector<int>& runs) {
    if (runs.empty()) throw std::invalid_argument("goldberg_coeff: empty run list");
    const int m = static_cast<int>(runs.size());
    long n = 0;
    UniPoly prod{Rational(1)};
    for (int s : runs) {
        if (s < 1) throw std::invalid_argument("goldberg_coeff: runs must be positive");
        n += s;
        prod *= goldberg_poly(s);
    }
    UniPoly tm1 = UniPoly::variable() - UniPoly(Rational(1));
    Rational c = integrate_unit(UniPoly::variable().pow(m / 2) * tm1.pow((m - 1) / 2) * prod);
    if (first == Letter::eta && n % 2 == 0) c = -c;
    return c;
}

Rational thompson_sum(int n) {
    if (n < 1) throw std::invalid_argument("thompson_sum: length must be positive");
    if (n > 24) throw std::invalid_argument("thompson_sum: length too large");
    Rational total(0);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> runs;
        for (int i = 0; i < n; ++i) {
            const bool bit = (mask >> i) & 1u;
            if (i > 0 && bit == (((mask >> (i - 1)) & 1u) != 0))
                ++runs.back();
            else
                runs.push_back(1);
        }
        total += goldberg_coeff((mask & 1u) ? Letter::eta : Letter::xi, runs).abs();
    }
    return total;
}

Rational kks_kernel(int k, int s) {
    if (k < 0 || s < 0 || s > k) throw std::invalid_argument("kks_kernel: need 0 <= s <= k");
    Rational acc(0);
    for (int n = 0; n <= k; ++n) {
        Rational inner(0);
        for (int j = 0; j <= n; ++j) {
            long hits = 0;
            for (int l = 0; l <= k - n; ++l)
                if (l + j == s) ++hits;
            if (hits == 0) continue;
            Rational term = binomial(n, j) * Rational(hits);
            inner += (j % 2 != 0) ? -term : term;
        }
        acc += binomial(k + 1, n) * bernoulli_star(n) * inner;
    }
    return acc / Rational(k + 1);
}

bool carlitz_check(int k, int m) {
    Rational lhs(0), rhs(0);
    for (int j = 0; j <= k; ++j) lhs += binomial(k, j) * bernoulli(m + j);
    for (int i = 0; i <= m; ++i) rhs += binomial(m, i) * bernoulli(k + i);
    if (k % 2 != 0) lhs = -lhs;
    if (m % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace gutt
