#include "support.hpp"

#include "ncr/symbol.hpp"

#include <doctest.h>

using namespace ncr;
using namespace ncr::testing;

namespace {

ScalarExpr xy_quadratic() {
    ScalarExpr s;
    for (int j = 1; j <= 4; ++j)
        for (int l = 1; l <= 4; ++l) s += sv(reg().X(j)) * sv(reg().Y(l)) * sv(reg().xi(j)) * sv(reg().xi(l));
    return s;
}

SymbolTerm at_x0(const SymbolTerm& t) { return t.restrict_unit().eval_kappa(); }

ScalarExpr dilate(const ScalarExpr& e, long lambda) {
    std::map<Var, ScalarExpr> b;
    for (int j = 1; j <= 4; ++j) b[reg().xi(j)] = ScalarExpr(lambda) * sv(reg().xi(j));
    return e.subst(b);
}

GradedSymbol random_symbol(Rng& g, int top) {
    std::vector<Var> coeff_vars{reg().X(1), reg().W};
    CliffordExpr lead;
    for (int j = 1; j <= 4; ++j)
        lead += CliffordExpr::mono(static_cast<CliffordMono>(uniform(g, 0, 15)),
                                   ScalarExpr(rand_poly(g, coeff_vars, 2, 1)) * sv(reg().xi(j)));
    CliffordExpr next = rand_clifford(g, coeff_vars);
    return GradedSymbol("random", {{top, SymbolTerm(lead)}, {top - 1, SymbolTerm(next)}}, top - 1, true);
}

}  // namespace

TEST_SUITE("symbol") {

TEST_CASE("leading symbols") {
    CHECK(builtin_symbol(OperatorId::Dirac).at(1).value() == I * c_xi());
    CHECK(builtin_symbol(OperatorId::DiracAdj).at(1).value() == I * c_xi());
    CHECK(builtin_symbol(OperatorId::NablaXY).at(2).value() == CliffordExpr(-xy_quadratic()));
    CHECK(builtin_symbol(OperatorId::InvDirac).at(-1).value() == (I / xi_norm2()) * c_xi());
    CHECK(builtin_symbol(OperatorId::InvDiracSq).at(-2).value() == CliffordExpr(ScalarExpr(1) / xi_norm2()));
    CHECK(builtin_symbol(OperatorId::Dirac).at(3).is_zero());
}

TEST_CASE("sigma_0 of D_T minus sigma_0 of its adjoint") {
    // Term-by-term subtraction of the two zeroth-order symbols, each bracket
    // summand over its own indices.
    auto A = [](int i, int s, int t) {
        auto [v, sign] = reg().A(i, s, t);
        return sign ? ScalarExpr(sign) * sv(v) : ScalarExpr();
    };
    CliffordExpr want;
    for (int i = 1; i <= 4; ++i) {
        for (int t = 1; t <= 4; ++t) want -= A(i, i, t) * CliffordExpr::gen(t);
        for (int s = 1; s <= 4; ++s) {
            want += A(i, s, i) * CliffordExpr::gen(s);
            want -= A(i, s, s) * CliffordExpr::gen(i);
        }
        want += ScalarExpr(2) * A(i, i, i) * CliffordExpr::gen(i);
    }
    want = q(1, 2) * want;
    CliffordExpr diff = builtin_symbol(OperatorId::Dirac).at(0).value() - builtin_symbol(OperatorId::DiracAdj).at(0).value();
    CHECK(diff == want);
    CHECK(diff == ScalarExpr(2) * torsion_v());
}

TEST_CASE("order zero of nabla_X nabla_Y composed with the inverse Laplacian") {
    GradedSymbol c = compose(builtin_symbol(OperatorId::NablaXY), builtin_symbol(OperatorId::InvDiracSq), 0);
    CHECK(c.at(0).value() == CliffordExpr(-xy_quadratic() / xi_norm2()));
    CHECK(c.at(0) == builtin_symbol(OperatorId::NablaInvSq).at(0));
}

TEST_CASE("order -1 of the composition expands into three products") {
    GradedSymbol n = builtin_symbol(OperatorId::NablaXY), q2 = builtin_symbol(OperatorId::InvDiracSq);
    GradedSymbol c = compose(n, q2, -1);
    SymbolTerm manual = n.at(2) * q2.at(-3) + n.at(1) * q2.at(-2);
    for (int j = 1; j <= 4; ++j)
        manual = manual + boundary_derivative(n.at(2), {false, j}) *
                              (-I * boundary_derivative(q2.at(-2), {true, j}));
    CHECK(at_x0(c.at(-1)) == at_x0(manual));
}

TEST_CASE("parametrix identities") {
    auto unit_through = [](const GradedSymbol& c, int lowest) {
        for (int k = 0; k >= lowest; --k) CHECK(c.at(k).value() == CliffordExpr(k == 0 ? 1 : 0));
    };
    for (OperatorId id : {OperatorId::Dirac, OperatorId::DiracAdj}) {
        GradedSymbol P = builtin_symbol(id), Q = invert(P, -2);
        unit_through(compose(P, Q, -1), -1);
        unit_through(compose(Q, P, -1), -1);
        CHECK(Q.at(-1).value() == builtin_symbol(OperatorId::InvDirac).at(-1).value());
    }
    GradedSymbol dd = compose(builtin_symbol(OperatorId::DiracAdj), builtin_symbol(OperatorId::Dirac), 1);
    CHECK(dd.at(2).value() == CliffordExpr(xi_norm2()));
    GradedSymbol inv = invert(dd, -3);
    unit_through(compose(dd, inv, -1), -1);
    CHECK(inv.at(-2).value() == CliffordExpr(ScalarExpr(1) / xi_norm2()));
}

TEST_CASE("inverse of the cubic operator") {
    CliffordExpr want = (I / xi_norm2().pow(2)) * c_xi();
    CHECK(builtin_symbol(OperatorId::InvDiracCube).at(-3).value() == want);
    CHECK(recomputed_symbol(OperatorId::InvDiracCube).at(-3).value() == want);
}

TEST_CASE("printed and recomputed inverse Laplacian agree at order -2") {
    CHECK(at_x0(builtin_symbol(OperatorId::InvDiracSq).at(-2)) == at_x0(recomputed_symbol(OperatorId::InvDiracSq).at(-2)));
}

TEST_CASE("boundary derivative rule table") {
    SymbolTerm s2 = builtin_symbol(OperatorId::InvDiracSq).at(-2);
    for (int i = 1; i <= 3; ++i) CHECK(at_x0(boundary_derivative(s2, {true, i})).is_zero());
    ScalarExpr d = ScalarExpr(1) + sv("xin", 2);
    CHECK(at_x0(boundary_derivative(s2, {true, 4})).value() == CliffordExpr(-sv("h1") / d.pow(2)));

    SymbolTerm n0 = builtin_symbol(OperatorId::NablaInvSq).at(0);
    SymbolTerm got = at_x0(boundary_derivative(n0, {true, 4}));
    // X and Y are held fixed; their normal derivatives appear as separate dY atoms.
    SymbolTerm fixed = got.map([](const ScalarExpr& e) {
        std::map<Var, ScalarExpr> b;
        for (int l = 1; l <= 4; ++l)
            for (int j = 1; j <= 4; ++j) b[reg().dY(l, j)] = ScalarExpr();
        return e.subst(b);
    });
    SymbolTerm want = at_x0(SymbolTerm(CliffordExpr(xy_quadratic() * sv("h1") / xi_norm2().pow(2))));
    CHECK(fixed == want);

    CHECK(boundary_derivative(SymbolTerm(c_xi()), {true, 2}).evaluate_x0().is_zero());
    CHECK(boundary_derivative(SymbolTerm(CliffordExpr(xi_norm2())), {false, 4}).value() ==
          CliffordExpr(ScalarExpr(2) * sv("xin")));
}

TEST_CASE("homogeneity of unrestricted components") {
    for (OperatorId id : all_operators()) {
        GradedSymbol s = builtin_symbol(id);
        for (const auto& [k, t] : s.components()) {
            if (t.restricted()) continue;
            CAPTURE(operator_name(id));
            CAPTURE(k);
            ScalarExpr scale = k >= 0 ? ScalarExpr(3).pow(k) : ScalarExpr(1) / ScalarExpr(3).pow(-k);
            for (const auto& [m, c] : t.value().terms()) CHECK(dilate(c, 3) == scale * c);
        }
    }
}

TEST_CASE("composition is associative to truncation order") {
    Rng g(21);
    for (int k = 0; k < 20; ++k) {
        GradedSymbol P = random_symbol(g, 1), Q = random_symbol(g, 1), R = random_symbol(g, 0);
        int lowest = 1;  // top orders sum to 2; keep two orders
        GradedSymbol left = compose(compose(P, Q, lowest - R.top()), R, lowest);
        GradedSymbol right = compose(P, compose(Q, R, lowest - P.top()), lowest);
        for (int o = 2; o >= lowest; --o) CHECK(left.at(o).value() == right.at(o).value());
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(operator_from_name("Laplacian"), std::invalid_argument);
    CHECK(operator_from_name(operator_name(OperatorId::NablaInvDirac)) == OperatorId::NablaInvDirac);
    GradedSymbol Q = invert(builtin_symbol(OperatorId::Dirac), -2);
    CHECK_THROWS(Q.at(-3));
    CHECK_THROWS(compose(builtin_symbol(OperatorId::NablaXY), builtin_symbol(OperatorId::InvDiracSq), -3));
    GradedSymbol zero("zero", {{1, SymbolTerm(CliffordExpr())}}, 1, true);
    CHECK_THROWS(invert(zero, -1));
}

}
