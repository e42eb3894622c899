#include "ncr/interior.hpp"

#include "ncr/registry.hpp"

#include <stdexcept>

namespace ncr {

namespace {

const Registry& R() { return Registry::get(); }
ScalarExpr sv(Var v) { return ScalarExpr::var(v); }
ScalarExpr fr(long p, long q) { return ScalarExpr(GQ::frac(p, q)); }
CliffordExpr g(int j) { return CliffordExpr::gen(j); }

ScalarExpr tcoef(int a, int i, int j) {
    auto [v, s] = R().T(a, i, j);
    return s ? ScalarExpr(s) * sv(v) : ScalarExpr();
}

CliffordExpr c_V() {
    CliffordExpr c;
    for (int k = 1; k <= kDim; ++k) c += sv(R().V(k)) * g(k);
    return c;
}

ScalarExpr bracket() {
    const auto& r = R();
    return fr(-1, 4) * sv(r.s_scal) - fr(3, 2) * sv(r.divV) + fr(3, 2) * sv(r.normT2) + fr(9, 2) * sv(r.normV2);
}

// Components of the test vector fields X, Y.
ScalarExpr Xc(int a) { return sv(R().X(a)); }
ScalarExpr Yc(int b) { return sv(R().Y(b)); }

}  // namespace

CliffordExpr EndomorphismE::full() const { return CliffordExpr(scalar) + dT + T_dot_V + V_hook_T; }

EndomorphismE endomorphism_E() {
    EndomorphismE e;
    e.scalar = bracket();
    e.dT = (fr(-3, 2) * sv(R().dT4())) * (g(1) * g(2) * g(3) * g(4));
    CliffordExpr t3;
    for (int a = 1; a <= kDim; ++a)
        for (int i = a + 1; i <= kDim; ++i)
            for (int j = i + 1; j <= kDim; ++j) t3 += tcoef(a, i, j) * (g(a) * g(i) * g(j));
    e.T_dot_V = ScalarExpr(-9) * (t3 * c_V());
    CliffordExpr hook;
    for (int i = 1; i <= kDim; ++i)
        for (int j = i + 1; j <= kDim; ++j) {
            ScalarExpr c;
            for (int a = 1; a <= kDim; ++a) c += sv(R().V(a)) * tcoef(a, i, j);
            hook += c * (g(i) * g(j));
        }
    e.V_hook_T = ScalarExpr(-9) * hook;
    return e;
}

ScalarExpr trace_E() { return cl_trace(endomorphism_E().full()); }

std::vector<TracePart> trace_E_parts() {
    EndomorphismE e = endomorphism_E();
    return {{"identity", cl_trace(CliffordExpr(e.scalar))},
            {"dT", cl_trace(e.dT)},
            {"T.V", cl_trace(e.T_dot_V)},
            {"V_|T", cl_trace(e.V_hook_T)}};
}

CliffordExpr connection_form(int a) {
    const ScalarExpr w = fr(kDim - 1, 2);
    CliffordExpr t;
    for (int i = 1; i <= kDim; ++i)
        for (int j = i + 1; j <= kDim; ++j) t += tcoef(a, i, j) * (g(i) * g(j));
    return fr(3, 2) * t - w * (c_V() * g(a)) - CliffordExpr(w * sv(R().V(a)));
}

namespace {

// e_a applied to A(e_b) at x0; e_a(omega_st(e_b)) = R_abst / 2.
CliffordExpr derivative_of_connection(int a, int b) {
    const auto& r = R();
    const ScalarExpr w = fr(kDim - 1, 2);
    CliffordExpr out;
    for (int s = 1; s <= kDim; ++s)
        for (int t = 1; t <= kDim; ++t) {
            auto [v, sg] = r.R(a, b, s, t);
            if (sg) out += (fr(-1, 8) * ScalarExpr(sg) * sv(v)) * (g(s) * g(t));
        }
    for (int i = 1; i <= kDim; ++i)
        for (int j = i + 1; j <= kDim; ++j) {
            auto [v, sg] = r.DT(a, b, i, j);
            if (sg) out += (fr(3, 2) * ScalarExpr(sg) * sv(v)) * (g(i) * g(j));
        }
    for (int k = 1; k <= kDim; ++k) out -= (w * sv(r.dV(a, k))) * (g(k) * g(b));
    out -= CliffordExpr(w * sv(r.dV(a, b)));
    return out;
}

// A(Z) for a generic Z = sum_k X_k e_k, keeping the spin-connection term.
// omega_st(Z) is modeled by the antisymmetric stand-in sum_k X_k R_{k n s t}.
CliffordExpr connection_form_generic() {
    const auto& r = R();
    CliffordExpr sigma;
    for (int s = 1; s <= kDim; ++s)
        for (int t = 1; t <= kDim; ++t) {
            ScalarExpr om;
            for (int k = 1; k <= kDim; ++k) {
                auto [v, sg] = r.R(k, kDim, s, t);
                if (sg) om += ScalarExpr(sg) * Xc(k) * sv(v);
            }
            if (!om.is_zero()) sigma += (fr(-1, 4) * om) * (g(s) * g(t));
        }
    CliffordExpr rest;
    for (int k = 1; k <= kDim; ++k) rest += Xc(k) * connection_form(k);
    return sigma + rest;
}

}  // namespace

std::vector<IdentityCheck> curvature_trace_identities() {
    ScalarExpr d, comm;
    for (int a = 1; a <= kDim; ++a)
        for (int b = 1; b <= kDim; ++b) {
            ScalarExpr w = Xc(a) * Yc(b);
            d += w * cl_trace(derivative_of_connection(a, b));
            CliffordExpr A = connection_form(a), B = connection_form(b);
            comm += w * cl_trace(A * B - B * A);
        }
    return {{"Tr e_a(A(e_b))", d}, {"Tr [A(e_a), A(e_b)]", comm}, {"Tr A(Z)", cl_trace(connection_form_generic())}};
}

ScalarExpr curvature_functional() {
    ScalarExpr f;
    for (int a = 1; a <= kDim; ++a)
        for (int b = 1; b <= kDim; ++b) {
            ScalarExpr w = Xc(a) * Yc(b);
            CliffordExpr A = connection_form(a), B = connection_form(b);
            f += w * cl_trace(derivative_of_connection(a, b) - derivative_of_connection(b, a) + A * B - B * A);
        }
    // Tr A([e_a, e_b]) vanishes for every vector field argument.
    f -= cl_trace(connection_form_generic());
    return f;
}

ScalarExpr unit_sphere_volume(int m) {
    if (m < 1) throw std::invalid_argument("unit_sphere_volume: m must be positive");
    long gamma = 1;
    for (int i = 2; i < m; ++i) gamma *= i;
    return ScalarExpr(2) * sv(R().pi).pow(m) / ScalarExpr(gamma);
}

ScalarExpr einstein_functional_rhs(int m) {
    if (m < 1) throw std::invalid_argument("einstein_functional_rhs: m must be positive");
    const auto& r = R();
    ScalarExpr ups = unit_sphere_volume(m);
    ScalarExpr two_m = ScalarExpr(1);
    for (int i = 0; i < m; ++i) two_m *= ScalarExpr(2);
    ScalarExpr G = sv(r.RicVW) - fr(1, 2) * sv(r.s_scal) * sv(r.gVW);
    ScalarExpr trE = m == kDim / 2 ? trace_E() : two_m * bracket();
    ScalarExpr F = m == kDim / 2 ? curvature_functional() : ScalarExpr();
    return ups / ScalarExpr(6) * two_m * G + ups / ScalarExpr(2) * F + fr(1, 2) * trE * sv(r.gVW);
}

}  // namespace ncr
