#include "support.hpp"

#include "ncr/symbol.hpp"

#include <doctest.h>

#include <array>
#include <complex>

using namespace ncr;
using namespace ncr::testing;

namespace {

using C = std::complex<int>;
using M = std::array<std::array<C, 4>, 4>;

// The documented representation, written out independently of the library table.
M gamma(int a) {
    const C i(0, 1), o(0, 0), l(1, 0);
    std::array<std::array<C, 2>, 2> s[3] = {{{{o, l}, {l, o}}}, {{{o, -i}, {i, o}}}, {{{l, o}, {o, -l}}}};
    M g{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            C up = a == 4 ? (r == c ? l : o) : -i * s[a - 1][r][c];
            C down = a == 4 ? (r == c ? l : o) : i * s[a - 1][r][c];
            g[r][c + 2] = i * up;
            g[r + 2][c] = i * down;
        }
    return g;
}

M mul(const M& a, const M& b) {
    M r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("products of generators") {
    CHECK(CliffordExpr::gen(1) * CliffordExpr::gen(1) == CliffordExpr(-1));
    CHECK(CliffordExpr::gen(2) * CliffordExpr::gen(1) == -(CliffordExpr::gen(1) * CliffordExpr::gen(2)));
    CliffordExpr c = c_xi_tan_x0();
    CHECK(c * c == CliffordExpr(-(sv("xi1", 2) + sv("xi2", 2) + sv("xi3", 2))));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            CliffordExpr a = CliffordExpr::gen(i), b = CliffordExpr::gen(j);
            CHECK(a * b + b * a == CliffordExpr(i == j ? -2 : 0));
        }
}

TEST_CASE("trace functional") {
    CHECK(cl_trace(CliffordExpr(1)) == ScalarExpr(4));
    CHECK(cl_trace(CliffordExpr::gen(1) * CliffordExpr::gen(2)).is_zero());
    for (int m = 1; m < 16; ++m) CHECK(cl_trace(CliffordExpr::mono(static_cast<CliffordMono>(m))).is_zero());
    CliffordExpr ct = c_xi_tan_x0(), c4 = c_dxn(), dct = (q(1, 2) * sv("h1")) * ct;
    SymbolTerm t(CliffordExpr(cl_trace(c4 * ct * c4 * dct)));
    CHECK(t.restrict_unit().value() == CliffordExpr(ScalarExpr(-2) * sv("h1")));
    SymbolTerm z(CliffordExpr(cl_trace(ct * ct * c4 * dct)));
    CHECK(z.restrict_unit().value().is_zero());
}

TEST_CASE("trace is linear and cyclic") {
    Rng g(7);
    std::vector<Var> vars{reg().X(1), reg().h1, reg().xi(4)};
    for (int k = 0; k < 200; ++k) {
        CliffordExpr a = rand_clifford(g, vars), b = rand_clifford(g, vars), c = rand_clifford(g, vars);
        CHECK(cl_trace(a * b) == cl_trace(b * a));
        CHECK(cl_trace(a * b * c) == cl_trace(c * a * b));
        CHECK(cl_trace(a + b) == cl_trace(a) + cl_trace(b));
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("degree-three torsion term is traceless against c(xi')") {
    CHECK(cl_trace(torsion_u() * c_xi_tan_x0()).is_zero());
    CHECK(cl_trace(torsion_u()).is_zero());
    CHECK_FALSE(cl_trace(torsion_v() * c_xi_tan_x0()).is_zero());
}

TEST_CASE("cotangent vectors") {
    auto x = [](int j) { return sv(reg().xi(j)); };
    CHECK(cl_from_cotangent({x(1), x(2), x(3), ScalarExpr()}) == c_xi_tan_x0());
    CHECK(cl_from_cotangent({ScalarExpr(), ScalarExpr(), ScalarExpr(), ScalarExpr(1)}) == c_dxn());
    CHECK(cl_from_cotangent({ScalarExpr(), ScalarExpr(), ScalarExpr(), ScalarExpr()}).is_zero());
    CHECK_THROWS_AS(cl_from_cotangent({ScalarExpr(1)}), std::invalid_argument);
}

TEST_CASE("matrix oracle") {
    CHECK(matrix_oracle_trace(CliffordExpr(1), {}) == GQ(4));
    CHECK(matrix_oracle_trace(CliffordExpr::gen(1) + CliffordExpr::gen(2), {}) == GQ(0));
    M p = mul(mul(gamma(1), gamma(2)), mul(gamma(3), gamma(4)));
    C tr = p[0][0] + p[1][1] + p[2][2] + p[3][3];
    GQ top = matrix_oracle_trace(CliffordExpr::mono(0b1111), {});
    CHECK(top == GQ(tr.real(), tr.imag()));
    CHECK(top == GQ(0));
    for (int a = 1; a <= 4; ++a) {
        Mat4 lib = gamma_matrix(a);
        M mine = gamma(a);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(lib[r][c] == GQ(mine[r][c].real(), mine[r][c].imag()));
    }
    CHECK_THROWS_AS(matrix_oracle_trace(CliffordExpr(sv("h1")), {}), std::invalid_argument);
}

TEST_CASE("random expressions agree with the matrix oracle") {
    Rng g(8);
    std::vector<Var> vars{reg().X(1), reg().h1};
    for (int k = 0; k < 300; ++k) {
        CliffordExpr a = rand_clifford(g, vars) * rand_clifford(g, vars);
        auto p = rand_point(g);
        std::map<Var, GQ> b{{reg().X(1), p[reg().X(1)]}, {reg().h1, p[reg().h1]}};
        CHECK(cl_trace(a).eval(p) == matrix_oracle_trace(a, b));
    }
}

TEST_CASE("conjugation reverses products") {
    Rng g(9);
    std::vector<Var> vars{reg().X(2)};
    for (int k = 0; k < 100; ++k) {
        CliffordExpr a = rand_clifford(g, vars), b = rand_clifford(g, vars);
        CHECK((a * b).conjugate() == b.conjugate() * a.conjugate());
    }
}

TEST_CASE("monomial rendering") {
    CHECK(cl_mono_str(0b0101) == "c(e_1)c(e_3)");
    CHECK(c_xi_tan_x0().latex() == "c(\\xi')");
}

}
