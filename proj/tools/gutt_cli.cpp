// Batch front-end: load algebras from JSON, compute and render star
// products, emit growth tables, and run the verification suites.
//
// Exit codes: 0 success, 1 check failure, 2 usage/parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gutt/enveloping.hpp"
#include "gutt/free_lie.hpp"
#include "gutt/gutt_star.hpp"
#include "gutt/hopf.hpp"
#include "gutt/lie_algebra.hpp"
#include "gutt/rational.hpp"
#include "gutt/seminorm.hpp"
#include "gutt/special.hpp"
#include "gutt/sym_algebra.hpp"

using namespace gutt;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Algebra file loading
// ---------------------------------------------------------------------------

LieAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open algebra file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    try {
        int dim = j.at("dim").get<int>();
        auto labels = j.at("basis").get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) != dim)
            throw UsageError(path + ": basis size does not match dim");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != dim)
            throw UsageError(path + ": duplicate basis labels");
        auto index_of = [&](const std::string& name) {
            for (size_t k = 0; k < labels.size(); ++k)
                if (labels[k] == name) return static_cast<int>(k);
            throw UsageError(path + ": unknown basis label '" + name + "'");
        };
        std::vector<BracketEntry> entries;
        for (const auto& e : j.at("brackets")) {
            BracketEntry be;
            be.i = index_of(e.at("i").get<std::string>());
            be.j = index_of(e.at("j").get<std::string>());
            be.coeffs.assign(static_cast<size_t>(dim), Rational(0));
            for (const auto& [lbl, val] : e.at("result").items())
                be.coeffs[static_cast<size_t>(index_of(lbl))] =
                    Rational::parse(val.get<std::string>());
            entries.push_back(std::move(be));
        }
        auto built = LieAlgebra::from_entries(dim, labels, entries);
        if (const auto* v = std::get_if<Violation>(&built))
            throw UsageError(path + ": algebra validation failed: " + v->kind + ": " +
                             v->message);
        return std::get<LieAlgebra>(built);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Expression parsing: sums of scaled monomials `coeff*label^k*label^k...`
// ---------------------------------------------------------------------------

class ExprParser {
public:
    ExprParser(const std::string& s, const LieAlgebra& L) : s_(s), L_(L) {}

    SymElement parse() {
        SymElement out;
        skip_ws();
        if (eof()) fail("empty expression");
        bool negative = consume_sign();
        out += term(negative);
        skip_ws();
        while (!eof()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            out += term(c == '-');
            skip_ws();
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw UsageError("expression error at position " + std::to_string(pos_ + 1) + ": " +
                         why);
    }
    bool eof() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!eof() && s_[pos_] == ' ') ++pos_;
    }
    bool consume_sign() {
        if (!eof() && s_[pos_] == '-') {
            ++pos_;
            skip_ws();
            return true;
        }
        if (!eof() && s_[pos_] == '+') {
            ++pos_;
            skip_ws();
        }
        return false;
    }

    SymElement term(bool negative) {
        skip_ws();
        if (eof()) fail("expected a term");
        Rational coeff(1);
        SymMonomial m;
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coeff = rational();
            saw_factor = true;
        } else if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
            factor(m);
            saw_factor = true;
        } else {
            fail("expected a coefficient or basis label");
        }
        skip_ws();
        while (!eof() && s_[pos_] == '*') {
            ++pos_;
            skip_ws();
            if (eof() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                fail("expected a basis label after '*'");
            factor(m);
            skip_ws();
        }
        if (!saw_factor) fail("expected a term");
        std::sort(m.begin(), m.end());
        if (negative) coeff = Rational(0) - coeff;
        SymElement out;
        out.add(m, PolyZ(coeff));
        return out;
    }

    Rational rational() {
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        std::string text = s_.substr(start, pos_ - start);
        if (!eof() && s_[pos_] == '/') {
            ++pos_;
            size_t dstart = pos_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart == pos_) fail("expected a denominator");
            text += "/" + s_.substr(dstart, pos_ - dstart);
        }
        try {
            return Rational::parse(text);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    void factor(SymMonomial& m) {
        size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        auto idx = L_.label_index(name);
        if (!idx) {
            pos_ = start;
            fail("unknown basis label '" + name + "'");
        }
        int exp = 1;
        if (!eof() && s_[pos_] == '^') {
            ++pos_;
            size_t estart = pos_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (estart == pos_) fail("expected an exponent");
            exp = std::stoi(s_.substr(estart, pos_ - estart));
        }
        for (int k = 0; k < exp; ++k) m.push_back(*idx);
    }

    const std::string& s_;
    size_t pos_ = 0;
    const LieAlgebra& L_;
};

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

std::vector<SymMonomial> monomial_grid(int dim, int max_deg) {
    std::vector<SymMonomial> out{{}};
    std::vector<SymMonomial> layer{{}};
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<SymMonomial> next;
        for (const SymMonomial& m : layer)
            for (int v = m.empty() ? 0 : m.back(); v < dim; ++v) {
                SymMonomial n = m;
                n.push_back(v);
                next.push_back(n);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

SymElement random_element(std::mt19937& rng, int dim, int max_deg, int nterms = 3) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2), deg(0, max_deg),
        letter(0, dim - 1), zp(0, 1);
    SymElement out;
    for (int t = 0; t < nterms; ++t) {
        SymMonomial m;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m.push_back(letter(rng));
        std::sort(m.begin(), m.end());
        Rational c = Rational(num(rng)) / Rational(den(rng));
        if (c.is_zero()) c = Rational(1);
        out.add(m, PolyZ::monomial(c, zp(rng)));
    }
    return out;
}

bool heisenberg_shaped(const LieAlgebra& L) {
    if (L.dim() != 3) return false;
    auto zero = [](const Vector& v) {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    };
    return L.bracket_basis(0, 1) == L.basis_vector(2) && zero(L.bracket_basis(0, 2)) &&
           zero(L.bracket_basis(1, 2));
}

bool so3_shaped(const LieAlgebra& L) {
    if (L.dim() != 3) return false;
    return L.bracket_basis(0, 1) == L.basis_vector(2) &&
           L.bracket_basis(1, 2) == L.basis_vector(0) &&
           L.bracket_basis(2, 0) == L.basis_vector(1);
}

// Collects suite check lines; prints `<text> PASS|FAIL` as it goes.
struct SuiteOutput {
    bool all_pass = true;
    void line(bool pass, const std::string& text) {
        std::cout << text << (pass ? " PASS" : " FAIL") << "\n";
        all_pass = all_pass && pass;
    }
};

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int cmd_bernoulli(int nmax) {
    if (nmax < 0 || nmax > 30) throw UsageError("bernoulli: need 0 <= nmax <= 30");
    for (int n = 0; n <= nmax; ++n) std::cout << n << " " << bernoulli(n).str() << "\n";
    return 0;
}

void print_compositions(int n, Letter first, const std::string& name, std::vector<int>& runs) {
    if (n == 0) {
        std::string args;
        for (size_t i = 0; i < runs.size(); ++i) {
            if (i) args += ",";
            args += std::to_string(runs[i]);
        }
        std::cout << name << "(" << args << ") = " << goldberg_coeff(first, runs).str() << "\n";
        return;
    }
    for (int r = 1; r <= n; ++r) {
        runs.push_back(r);
        print_compositions(n - r, first, name, runs);
        runs.pop_back();
    }
}

int cmd_goldberg(int nmax) {
    if (nmax < 1 || nmax > 12) throw UsageError("goldberg: need 1 <= nmax <= 12");
    for (int n = 1; n <= nmax; ++n) {
        std::vector<int> runs;
        print_compositions(n, Letter::xi, "c_xi", runs);
        print_compositions(n, Letter::eta, "c_eta", runs);
    }
    return 0;
}

int cmd_bch(int order, const std::string& form) {
    auto print_series = [](const BracketSeries& s) {
        // Left-nested words start with the innermost pair; antisymmetry of
        // that pair merges mirror words ([YX...] = -[XY...]) so small orders
        // display in the familiar combined form.
        std::map<Word, Rational> canon;
        for (const auto& [w, c] : s.terms()) {
            Word k = w;
            Rational v = c;
            if (k.size() >= 2 && k[0] > k[1]) {
                std::swap(k[0], k[1]);
                v = Rational(0) - v;
            }
            Rational& slot = canon[k];
            slot = slot + v;
        }
        std::vector<std::pair<Word, Rational>> rows;
        for (const auto& [w, c] : canon)
            if (!c.is_zero()) rows.emplace_back(w, c);
        std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            return a.first.size() < b.first.size();
        });
        for (const auto& [w, c] : rows) {
            if (w.size() == 1)
                std::cout << c.str() << " " << w << "\n";
            else
                std::cout << c.str() << " [" << w << "]\n";
        }
    };
    if (form == "goldberg") {
        if (order < 1 || order > 6) throw UsageError("bch goldberg: need 1 <= order <= 6");
        print_series(bch_goldberg(order));
    } else if (form == "dynkin") {
        if (order < 1 || order > 5) throw UsageError("bch dynkin: need 1 <= order <= 5");
        print_series(bch_dynkin(order));
    } else if (form == "associative") {
        if (order < 1 || order > 8) throw UsageError("bch associative: need 1 <= order <= 8");
        NCPoly p = bch_associative(order);
        std::vector<std::pair<Word, Rational>> rows(p.terms().begin(), p.terms().end());
        std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            return a.first.size() < b.first.size();
        });
        for (const auto& [w, c] : rows)
            std::cout << c.str() << " " << (w.empty() ? "1" : w) << "\n";
    } else {
        throw UsageError("bch: form must be goldberg|dynkin|associative");
    }
    return 0;
}

int cmd_star(const std::string& spec_path, const std::string& f_expr, const std::string& g_expr,
             const std::string& z, bool verify) {
    LieAlgebra L = load_algebra(spec_path);
    Enveloping env(L);
    SymElement f = ExprParser(f_expr, L).parse();
    SymElement g = ExprParser(g_expr, L).parse();
    SymElement prod = star_pbw(env, f, g);
    bool agree = true;
    if (verify) {
        agree = prod == star_bch(L, f, g) && prod == star_gutt_original(env, f, g);
    }
    if (z != "formal") {
        Rational z0;
        try {
            z0 = Rational::parse(z);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--z: ") + e.what());
        }
        prod = evaluate_z(prod, z0);
    }
    std::cout << render(prod, L) << "\n";
    if (verify) {
        std::cout << "3-way agreement: " << (agree ? "OK" : "FAIL") << "\n";
        if (!agree) return kExitCheckFailure;
    }
    return 0;
}

int cmd_growth(const std::string& kind, double R, double eps, int kmax,
               const std::string& out_path) {
    GrowthTable t;
    try {
        if (kind == "heisenberg")
            t = heisenberg_counterexample(R, eps, kmax);
        else if (kind == "so3")
            t = so3_counterexample(R, eps, kmax);
        else
            throw UsageError("growth: kind must be heisenberg|so3");
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("growth: ") + e.what());
    }
    std::string csv = t.to_csv();
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("growth: cannot open output file: " + out_path);
        out << csv;
    }
    Report lb = growth_lower_bound_check(t, "growth-lower-bound");
    if (!lb.all_pass()) {
        std::cerr << lb.render();
        return kExitCheckFailure;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

void suite_bch(SuiteOutput& out) {
    {
        bool ok = bernoulli(0) == Rational(1);
        for (int n = 1; n <= 16; ++n) {
            Rational sum(0);
            for (int k = 0; k <= n; ++k) sum = sum + binomial(n + 1, k) * bernoulli(k);
            ok = ok && sum == Rational(0);
        }
        out.line(ok, "bernoulli recursion n<=16");
    }
    {
        bool ok = true;
        for (int s = 1; s <= 10; ++s) {
            Rational expect = bernoulli(s) / factorial(s);
            if (s % 2 == 1) expect = Rational(0) - expect;
            ok = ok && goldberg_coeff(Letter::xi, {1, s}) == expect;
        }
        out.line(ok, "goldberg_bernoulli s<=10");
    }
    for (int n = 1; n <= 8; ++n)
        out.line(thompson_sum(n) <= Rational(2), "thompson_sum n=" + std::to_string(n));
    out.line(expand_series(bch_goldberg(5)) == bch_associative(5),
             "bch goldberg_vs_associative order<=5");
    out.line(expand_series(bch_dynkin(4)) == bch_associative(4),
             "bch dynkin_vs_associative order<=4");
    {
        bool ok = true;
        for (int k = 0; k <= 10; ++k)
            for (int s = 0; s <= k; ++s)
                ok = ok && kks_kernel(k, s) == (s == 0 ? Rational(1) : Rational(0));
        out.line(ok, "kks_kernel k<=10");
    }
    {
        bool ok = true;
        for (int k = 0; k <= 8; ++k)
            for (int m = 0; m <= 8; ++m) ok = ok && carlitz_check(k, m);
        out.line(ok, "carlitz k,m<=8");
    }
}

void suite_star(SuiteOutput& out, const LieAlgebra& L, unsigned seed) {
    Enveloping env(L);
    {
        bool ok = true;
        auto grid = monomial_grid(L.dim(), 4);
        for (const auto& m1 : grid)
            for (const auto& m2 : grid) {
                if (static_cast<int>(m1.size() + m2.size()) > 4) continue;
                SymElement a = SymElement::monomial(m1);
                SymElement b = SymElement::monomial(m2);
                SymElement p = star_pbw(env, a, b);
                ok = ok && p == star_bch(L, a, b) && p == star_gutt_original(env, a, b);
            }
        out.line(ok, "three_way deg<=4");
    }
    std::mt19937 rng(seed);
    {
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            SymElement f = random_element(rng, L.dim(), 2);
            SymElement g = random_element(rng, L.dim(), 2);
            SymElement h = random_element(rng, L.dim(), 2);
            ok = ok && star_pbw(env, star_pbw(env, f, g), h) ==
                           star_pbw(env, f, star_pbw(env, g, h));
        }
        out.line(ok, "associativity samples=20");
    }
    {
        bool ok = true;
        SymElement one = SymElement::monomial({});
        for (int t = 0; t < 10; ++t) {
            SymElement f = random_element(rng, L.dim(), 3);
            ok = ok && star_pbw(env, one, f) == f && star_pbw(env, f, one) == f;
        }
        out.line(ok, "unit samples=10");
    }
    {
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            SymElement f = random_element(rng, L.dim(), 3);
            ok = ok && env.q_z_inv(env.q_z(f)) == f;
        }
        out.line(ok, "pbw_round_trip samples=10");
    }
}

void suite_hopf(SuiteOutput& out, const LieAlgebra& L, unsigned seed) {
    Enveloping env(L);
    std::mt19937 rng(seed);
    const std::vector<std::pair<Rational, std::string>> zs = {
        {Rational(0), "0"}, {Rational(1), "1"}, {Rational(2) / Rational(3), "2/3"}};
    for (const auto& [z0, ztxt] : zs) {
        SymElement x = random_element(rng, L.dim(), 3);
        HopfReport rep = verify_hopf(env, x, z0);
        for (const auto& l : rep.lines) out.line(l.pass, l.name + " z0=" + ztxt);
    }
}

void suite_seminorm(SuiteOutput& out, const LieAlgebra& L) {
    Enveloping env(L);
    BasisSeminorm p = BasisSeminorm::unit(L.dim());
    out.line(check_continuity_r1(env, p, Rational(1), 1.0, 4).all_pass(),
             "continuity R=1 deg<=4");
    {
        bool ok = true;
        for (int n = 0; n <= 2; ++n) ok = ok && cn_estimate_check(env, p, 1.0, n, 4).all_pass();
        out.line(ok, "cn_estimate n<=2 deg<=4");
    }
    out.line(hopf_bounds_check(p, 1.0, 6).all_pass(), "hopf_bounds R=1 deg<=6");
    if (heisenberg_shaped(L)) {
        GrowthTable t = heisenberg_counterexample(0.5, 0.1, 12);
        out.line(growth_lower_bound_check(t, "growth").all_pass(), "counterexample growth");
    } else if (so3_shaped(L)) {
        GrowthTable t = so3_counterexample(0.5, 0.2, 12);
        out.line(growth_lower_bound_check(t, "growth").all_pass(), "counterexample growth");
    }
}

int cmd_verify(const std::string& suite, const std::string& spec_path, unsigned seed) {
    LieAlgebra L = spec_path.empty() ? LieAlgebra::heisenberg(1) : load_algebra(spec_path);
    SuiteOutput out;
    if (suite == "bch") {
        suite_bch(out);
    } else if (suite == "star") {
        suite_star(out, L, seed);
    } else if (suite == "hopf") {
        suite_hopf(out, L, seed);
    } else if (suite == "seminorm") {
        suite_seminorm(out, L);
    } else if (suite == "all") {
        suite_bch(out);
        suite_star(out, L, seed);
        suite_hopf(out, L, seed);
        suite_seminorm(out, L);
    } else {
        throw UsageError("verify: suite must be all|bch|star|hopf|seminorm");
    }
    return out.all_pass ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact star products on symmetric algebras of Lie algebras"};
    app.require_subcommand(1);

    int nmax = 0;
    auto* sub_bernoulli = app.add_subcommand("bernoulli", "Print B_0..B_nmax, one `n p/q` row each");
    sub_bernoulli->add_option("nmax", nmax, "largest index (<= 30)")->required();

    int gmax = 0;
    auto* sub_goldberg =
        app.add_subcommand("goldberg", "Print word-coefficient values for all run patterns");
    sub_goldberg->add_option("nmax", gmax, "largest letter count (<= 12)")->required();

    int border = 0;
    std::string bform;
    auto* sub_bch = app.add_subcommand("bch", "Print the series in the chosen form");
    sub_bch->add_option("order", border, "truncation order")->required();
    sub_bch->add_option("form", bform, "goldberg|dynkin|associative")->required();

    std::string spec_path, f_expr, g_expr, z_flag = "formal";
    bool verify_flag = false;
    auto* sub_star = app.add_subcommand("star", "Star product of two expressions");
    sub_star->add_option("spec", spec_path, "algebra JSON file")->required();
    sub_star->add_option("f", f_expr, "left factor")->required();
    sub_star->add_option("g", g_expr, "right factor")->required();
    sub_star->add_option("--z", z_flag, "formal (default) or a rational value");
    sub_star->add_flag("--verify", verify_flag, "cross-check all three constructions");

    std::string vsuite, vspec;
    unsigned seed = 12345;
    auto* sub_verify = app.add_subcommand("verify", "Run a module verification suite");
    sub_verify->add_option("suite", vsuite, "all|bch|star|hopf|seminorm")->required();
    sub_verify->add_option("spec", vspec, "algebra JSON file (default: built-in heisenberg)");
    sub_verify->add_option("--seed", seed, "sampling seed");

    std::string gkind, gout;
    double gR = 0.5, geps = 0.1;
    int gkmax = 20;
    auto* sub_growth = app.add_subcommand("growth", "Emit a counterexample growth table as CSV");
    sub_growth->add_option("kind", gkind, "heisenberg|so3")->required();
    sub_growth->add_option("--R", gR, "growth exponent (default 0.5)");
    sub_growth->add_option("--eps", geps, "normalization exponent (default 0.1)");
    sub_growth->add_option("--kmax", gkmax, "number of rows (default 20)");
    sub_growth->add_option("--out", gout, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sub_bernoulli->parsed()) return cmd_bernoulli(nmax);
        if (sub_goldberg->parsed()) return cmd_goldberg(gmax);
        if (sub_bch->parsed()) return cmd_bch(border, bform);
        if (sub_star->parsed()) return cmd_star(spec_path, f_expr, g_expr, z_flag, verify_flag);
        if (sub_verify->parsed()) return cmd_verify(vsuite, vspec, seed);
        if (sub_growth->parsed()) return cmd_growth(gkind, gR, geps, gkmax, gout);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
