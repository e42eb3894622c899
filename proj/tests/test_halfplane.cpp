#include "support.hpp"

#include "ncr/halfplane.hpp"

#include <doctest.h>

using namespace ncr;
using namespace ncr::testing;

namespace {

ScalarExpr xn(unsigned e = 1) { return sv(reg().xi(4), e); }
ScalarExpr one_plus_xn2() { return ScalarExpr(1) + xn(2); }

// num(xi_n) (xi_n - i)^{-a} (xi_n + i)^{-b}, numerator of degree <= max_deg.
ScalarExpr rand_halfline(Rng& g, int a, int b, int max_deg, const std::vector<Var>& coeff_vars) {
    ScalarExpr num;
    for (int d = 0; d <= max_deg; ++d) {
        ScalarExpr c(rand_gq(g));
        if (!coeff_vars.empty() && uniform(g, 0, 1)) c *= rand_poly(g, coeff_vars);
        num += c * xn(static_cast<unsigned>(d));
    }
    if (num.is_zero()) num = ScalarExpr(1);
    return num * pole_power(1, a) * pole_power(-1, b);
}

// Solves M x = rhs over Q(i) by Gauss-Jordan elimination.
std::vector<GQ> solve(std::vector<std::vector<GQ>> M, std::vector<GQ> rhs) {
    std::size_t n = rhs.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (M[p][c] == GQ(0)) ++p;
        std::swap(M[p], M[c]);
        std::swap(rhs[p], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == GQ(0)) continue;
            GQ f = M[r][c] / M[c][c];
            for (std::size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    for (std::size_t c = 0; c < n; ++c) rhs[c] /= M[c][c];
    return rhs;
}

}  // namespace

TEST_SUITE("halfplane") {

TEST_CASE("partial fractions of 1/(1+xi_n^2)") {
    HalfLineScalar pf = partial_fractions(ScalarExpr(1) / one_plus_xn2());
    CHECK(pf.poly.is_zero());
    CHECK(pf.parts.size() == 2);
    CHECK(pf.parts.at({1, 1}) == ScalarExpr(GQ(1) / GQ(0, 2)));
    CHECK(pf.parts.at({-1, 1}) == -ScalarExpr(GQ(1) / GQ(0, 2)));
}

TEST_CASE("non-decaying input keeps its polynomial part") {
    HalfLineScalar pf = partial_fractions(xn(2) / one_plus_xn2());
    CHECK(pf.poly == ScalarExpr(1));
    CHECK(pf.parts.at({1, 1}) == ScalarExpr(GQ::frac(1, 2) * GQ::I()));
    CHECK(pf.parts.at({-1, 1}) == ScalarExpr(-GQ::frac(1, 2) * GQ::I()));
}

TEST_CASE("seven principal parts of 1/((xi_n-i)^5 (xi_n+i)^2)") {
    HalfLineScalar pf = partial_fractions(pole_power(1, 5) * pole_power(-1, 2));
    CHECK(pf.poly.is_zero());
    CHECK(pf.parts.size() == 7);

    // Clearing denominators: 1 = sum_m a_m (x-i)^{5-m} (x+i)^2 + sum_m b_m (x-i)^5 (x+i)^{2-m}.
    // Columns are the unknowns a_1..a_5, b_1, b_2; rows are coefficients of x^0..x^6.
    auto expand = [](int p, int q) {
        std::vector<GQ> c{GQ(1)};
        auto times = [&](GQ root) {
            std::vector<GQ> r(c.size() + 1);
            for (std::size_t k = 0; k < c.size(); ++k) {
                r[k + 1] += c[k];
                r[k] -= root * c[k];
            }
            c = r;
        };
        for (int k = 0; k < p; ++k) times(GQ::I());
        for (int k = 0; k < q; ++k) times(-GQ::I());
        c.resize(7);
        return c;
    };
    std::vector<std::vector<GQ>> cols;
    for (int m = 1; m <= 5; ++m) cols.push_back(expand(5 - m, 2));
    for (int m = 1; m <= 2; ++m) cols.push_back(expand(5, 2 - m));
    std::vector<std::vector<GQ>> M(7, std::vector<GQ>(7));
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) M[r][c] = cols[c][r];
    std::vector<GQ> rhs(7);
    rhs[0] = GQ(1);
    std::vector<GQ> x = solve(M, rhs);
    for (int m = 1; m <= 5; ++m) CHECK(pf.parts.at({1, m}) == ScalarExpr(x[m - 1]));
    for (int m = 1; m <= 2; ++m) CHECK(pf.parts.at({-1, m}) == ScalarExpr(x[4 + m]));
}

TEST_CASE("reassembly reproduces the input") {
    Rng g(31);
    std::vector<Var> vars{reg().X(1), reg().h1};
    for (int k = 0; k < 150; ++k) {
        int a = uniform(g, 0, 4), b = uniform(g, 0, 4);
        SymbolTerm t(CliffordExpr::mono(static_cast<CliffordMono>(uniform(g, 0, 15)), rand_halfline(g, a, b, a + b + 2, vars)) +
                         CliffordExpr(rand_halfline(g, b, a, 1, vars)),
                     true);
        CHECK(partial_fractions(t).reassemble() == t);
    }
}

TEST_CASE("pi_plus examples") {
    CHECK(pi_plus(SymbolTerm(CliffordExpr(pole_power(-1, 1)), true)).is_zero());
    CHECK(pi_plus(SymbolTerm(CliffordExpr(ScalarExpr(1) / one_plus_xn2()), true)).value() ==
          CliffordExpr(ScalarExpr(GQ::frac(-1, 2) * GQ::I()) * pole_power(1, 1)));

    // Tangential part of sigma_0 of nabla_X nabla_Y (D_T^*D_T)^{-1}.
    std::map<Var, ScalarExpr> tangential{{reg().X(4), ScalarExpr()}, {reg().Y(4), ScalarExpr()}};
    auto tan = [&](const ScalarExpr& e) { return e.subst(tangential); };
    ScalarExpr sum;
    for (int j = 1; j <= 3; ++j)
        for (int l = 1; l <= 3; ++l) sum += sv(reg().X(j)) * sv(reg().Y(l)) * sv(reg().xi(j)) * sv(reg().xi(l));

    SymbolTerm s0 = builtin_symbol(OperatorId::NablaInvSq).at(0).map(tan).restrict_unit();
    auto unit = [](const CliffordExpr& c) { return SymbolTerm(c).restrict_unit().value(); };
    CHECK(pi_plus(s0).value() == unit(CliffordExpr(ScalarExpr(GQ::frac(1, 2) * GQ::I()) * pole_power(1, 1) * sum)));

    SymbolTerm s1 = builtin_symbol(OperatorId::NablaInvDirac).at(1).map(tan).restrict_unit();
    CliffordExpr want = (ScalarExpr(-1) * pole_power(1, 1) * q(1, 2) * sum) * (c_xi_tan_x0() + I * c_dxn());
    CHECK(pi_plus(s1).value() == unit(want));
}

TEST_CASE("pi_prime examples") {
    CHECK(pi_prime(SymbolTerm(CliffordExpr(ScalarExpr(1) / one_plus_xn2()), true)) == CliffordExpr(q(1, 2)));
    CHECK(pi_prime(SymbolTerm(CliffordExpr(pole_power(-1, 1)), true)).is_zero());
    CHECK(pi_prime(SymbolTerm(CliffordExpr(pole_power(1, 1)), true)) == CliffordExpr(I));
    CHECK(pi_prime(SymbolTerm(CliffordExpr(pole_power(1, 3)), true)).is_zero());
}

TEST_CASE("projection identities on random inputs") {
    Rng g(32);
    std::vector<Var> vars{reg().X(2), reg().h1};
    for (int k = 0; k < 200; ++k) {
        int a = uniform(g, 0, 4), b = uniform(g, 0, 4);
        CliffordExpr v;
        for (int t = 0; t < 2; ++t)
            v += CliffordExpr::mono(static_cast<CliffordMono>(uniform(g, 0, 15)), rand_halfline(g, a, b, a + b + 1, vars));
        SymbolTerm t(v, true);
        SymbolTerm p = pi_plus(t);
        CHECK(pi_plus(p) == p);
        CHECK(p + pi_minus(t) == t);
        if (b > 0) {
            SymbolTerm lower(CliffordExpr(rand_halfline(g, 0, b, b - 1, vars)), true);
            CHECK(pi_plus(lower).is_zero());
            CHECK(pi_plus(lower * t) == pi_plus(lower * p));
        }
        // Decaying inputs only: numerator degree below the pole count.
        if (a + b >= 1) {
            SymbolTerm d(CliffordExpr(rand_halfline(g, a, b, a + b - 1, vars)), true);
            CHECK(pi_prime(pi_plus(d)) == pi_prime(d));
        }
    }
}

TEST_CASE("pi_plus commutes with multiplication by lower-half-plane functions") {
    Rng g(33);
    std::vector<Var> vars{reg().Y(1)};
    for (int k = 0; k < 100; ++k) {
        int a = uniform(g, 1, 3), b = uniform(g, 0, 3);
        SymbolTerm t(CliffordExpr(rand_halfline(g, a, b, a + b - 1, vars)), true);
        SymbolTerm m(CliffordExpr(rand_halfline(g, 0, uniform(g, 1, 3), 0, vars)), true);
        // m pi_plus(t) may carry -i parts; its pi_plus is the product's.
        CHECK(pi_plus(m * t) == pi_plus(m * pi_plus(t)));
    }
}

TEST_CASE("pi_plus commutes with the normal derivative") {
    Rng g(34);
    std::vector<Var> vars{reg().W, reg().X(1)};
    for (int k = 0; k < 100; ++k) {
        int a = uniform(g, 0, 3), b = uniform(g, 0, 3);
        SymbolTerm t(CliffordExpr::mono(static_cast<CliffordMono>(uniform(g, 0, 15)), rand_halfline(g, a, b, a + b + 1, vars)));
        Axis xn_axis{true, 4};
        CHECK(pi_plus(boundary_derivative(t, xn_axis)) == boundary_derivative(pi_plus(t), xn_axis));
    }
}

TEST_CASE("poles off the imaginary unit are rejected") {
    CHECK_THROWS_AS(partial_fractions(ScalarExpr(1) / (xn() - ScalarExpr(2))), std::invalid_argument);
    CHECK_THROWS_AS(pi_plus(SymbolTerm(CliffordExpr(ScalarExpr(1) / (xn(2) + ScalarExpr(4))), true)), std::invalid_argument);
    try {
        partial_fractions(ScalarExpr(1) / (xn() - ScalarExpr(2)));
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("xin") != std::string::npos);
    }
}

}
