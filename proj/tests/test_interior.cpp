#include "support.hpp"

#include "ncr/interior.hpp"

#include <doctest.h>

using namespace ncr;
using namespace ncr::testing;

namespace {

ScalarExpr scalar_part() {
    return q(-1, 4) * sv(reg().s_scal) - q(3, 2) * sv(reg().divV) + q(3, 2) * sv(reg().normT2) + q(9, 2) * sv(reg().normV2);
}

ScalarExpr zero_torsion(const ScalarExpr& e) {
    std::map<Var, ScalarExpr> b;
    for (Var v : reg().torsion_vars()) b[v] = ScalarExpr();
    return e.subst(b);
}

}  // namespace

TEST_SUITE("interior") {

TEST_CASE("trace of E") {
    CHECK(trace_E() == ScalarExpr(4) * scalar_part());
    EndomorphismE E = endomorphism_E();
    CHECK(E.scalar == scalar_part());
    CHECK(cl_trace(E.full()) == trace_E());
    for (const CliffordExpr* part : {&E.dT, &E.T_dot_V, &E.V_hook_T}) {
        CHECK(part->coeff(0).is_zero());
        CHECK(cl_trace(*part).is_zero());
        CHECK_FALSE(part->is_zero());
    }
    for (const Var v : trace_E().vars()) CHECK(reg().info(v).kind == VarKind::Geometric);
}

TEST_CASE("trace of each summand") {
    auto parts = trace_E_parts();
    REQUIRE(parts.size() == 4);
    ScalarExpr sum;
    for (const auto& p : parts) {
        CAPTURE(p.name);
        sum += p.value;
        if (p.name != "identity") CHECK(p.value.is_zero());
    }
    CHECK(sum == trace_E());
}

TEST_CASE("dT is a multiple of the top monomial") {
    CliffordExpr dT = endomorphism_E().dT;
    REQUIRE(dT.terms().size() == 1);
    CHECK(dT.terms().begin()->first == CliffordMono(0b1111));
    CHECK(dT.coeff(0b1111) == q(-3, 2) * sv(reg().dT4()));
}

TEST_CASE("curvature trace identities vanish") {
    auto ids = curvature_trace_identities();
    CHECK(ids.size() == 3);
    for (const auto& id : ids) {
        CAPTURE(id.name);
        CHECK(id.value.is_zero());
    }
    CHECK(curvature_functional().is_zero());
}

TEST_CASE("curvature contraction with a symmetric tensor vanishes") {
    // sum_{s,t} R_{abst} delta_{st} is zero by antisymmetry in (s, t).
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            ScalarExpr sum;
            for (int s = 1; s <= 4; ++s) {
                auto [v, sign] = reg().R(a, b, s, s);
                if (sign) sum += ScalarExpr(sign) * sv(v);
            }
            CHECK(sum.is_zero());
        }
}

TEST_CASE("connection form is traceless") {
    for (int a = 1; a <= 4; ++a) {
        CHECK(cl_trace(connection_form(a)).is_zero());
        for (int b = 1; b <= 4; ++b)
            CHECK(cl_trace(connection_form(a) * connection_form(b) - connection_form(b) * connection_form(a)).is_zero());
    }
}

TEST_CASE("sphere volume prefactor") {
    ScalarExpr pi = sv(reg().pi);
    CHECK(unit_sphere_volume(2) == ScalarExpr(2) * pi.pow(2));
    CHECK(unit_sphere_volume(1) == ScalarExpr(2) * pi);
    CHECK(unit_sphere_volume(3) == pi.pow(3));
    CHECK(unit_sphere_volume(4) == q(1, 3) * pi.pow(4));
}

TEST_CASE("Einstein functional density in dimension four") {
    ScalarExpr pi = sv(reg().pi), g = sv(reg().gVW), s = sv(reg().s_scal), ric = sv(reg().RicVW);
    ScalarExpr want = q(4, 3) * pi.pow(2) * (ric - q(1, 2) * s * g) + ScalarExpr(2) * scalar_part() * g;
    CHECK(einstein_functional_rhs(2) == want);
}

TEST_CASE("torsion-free degeneration") {
    CHECK(zero_torsion(trace_E()) == -sv(reg().s_scal));
    ScalarExpr pi = sv(reg().pi), g = sv(reg().gVW), s = sv(reg().s_scal), ric = sv(reg().RicVW);
    CHECK(zero_torsion(einstein_functional_rhs(2)) == q(4, 3) * pi.pow(2) * (ric - q(1, 2) * s * g) - q(1, 2) * s * g);
}

}
