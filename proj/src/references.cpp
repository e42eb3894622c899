#include "ncr/references.hpp"

#include "ncr/symbol.hpp"

#include <map>
#include <stdexcept>

namespace ncr {

namespace {

const Registry& R() { return Registry::get(); }
ScalarExpr sv(Var v) { return ScalarExpr::var(v); }
ScalarExpr fr(long p, long q) { return ScalarExpr(GQ::frac(p, q)); }
ScalarExpr cq(long re_p, long re_q, long im_p, long im_q) {
    return ScalarExpr(GQ(GQ::frac(re_p, re_q).re, GQ::frac(im_p, im_q).re));
}
const ScalarExpr I(GQ::I());

// Notation shared by the printed formulas.
struct Notation {
    ScalarExpr xn = sv(R().xi(4));
    ScalarExpr h = sv(R().h1);
    ScalarExpr pi = sv(R().pi);
    ScalarExpr om = sv(R().Om3);
    ScalarExpr gT = sv(R().gT);
    ScalarExpr pm = xn - I;
    ScalarExpr pp = xn + I;
    ScalarExpr q = ScalarExpr(1) + xn * xn;
    ScalarExpr XnYn = sv(R().X(4)) * sv(R().Y(4));
    ScalarExpr XndYn = sv(R().X(4)) * sv(R().dY(4, 4));
    ScalarExpr Stt, Sjn, Snl, Sfull, SA, SA_full;
    CliffordExpr ct = c_xi_tan_x0();
    CliffordExpr c4 = CliffordExpr::gen(4);
    CliffordExpr dct;
    CliffordExpr cxi;

    Notation() {
        const auto& r = R();
        ScalarExpr xx, yy;
        for (int j = 1; j <= 3; ++j) {
            ScalarExpr xj = sv(r.X(j)) * sv(r.xi(j)), yj = sv(r.Y(j)) * sv(r.xi(j));
            xx += xj;
            yy += yj;
            Sjn += xj * sv(r.Y(4));
            Snl += sv(r.X(4)) * yj;
        }
        Stt = xx * yy;
        Sfull = (xx + sv(r.X(4)) * xn) * (yy + sv(r.Y(4)) * xn);
        for (int i = 1; i <= 3; ++i) {
            auto [a, s] = r.A(i, i, 4);
            SA += ScalarExpr(s) * sv(a);
        }
        SA_full = SA;
        auto [a4, s4] = r.A(4, 4, 4);
        if (s4) SA_full += ScalarExpr(s4) * sv(a4);
        dct = (fr(1, 2) * h) * ct;
        cxi = ct + xn * c4;
    }
};

CliffordExpr unit(const CliffordExpr& c) { return SymbolTerm(c, false).restrict_unit().value(); }
CliffordExpr unit(const ScalarExpr& s) { return unit(CliffordExpr(s)); }

std::vector<Reference> build() {
    Notation n;
    const auto& r = R();
    std::vector<Reference> t;
    auto add = [&](std::string id, std::string anchor, std::string src, RefKind k, CliffordExpr v,
                   RefProjection p = RefProjection::Full) {
        t.push_back({std::move(id), std::move(anchor), std::move(src), k, p, std::move(v)});
    };
    using K = RefKind;

    // ------------------------------------------------------------ interior
    ScalarExpr ric = sv(r.RicVW), s = sv(r.s_scal), g = sv(r.gVW);
    ScalarExpr einstein = fr(4, 3) * n.pi.pow(2) * (ric - fr(1, 2) * s * g);
    ScalarExpr bracket = fr(-1, 4) * s - fr(3, 2) * sv(r.divV) + fr(3, 2) * sv(r.normT2) + fr(9, 2) * sv(r.normV2);
    add("T2.3/traceE", "trace of the endomorphism E, end of the interior proof",
        R"(\mathrm{Tr}^{S(TM)}(E)=2^{\frac{n}{2}}\Big(-\frac{1}{4}R^{g}-\frac{3}{2}div^{g}(V)+\frac{3}{2}\parallel T\parallel^{2}+\frac{9}{2}\parallel V\parallel^{2}\Big))",
        K::TraceE, CliffordExpr(ScalarExpr(4) * bracket));
    add("T2.3/interior", "Einstein functional with torsion, statement (n = 2m, specialized to m = 2)",
        R"(\frac{2^{m+1}\pi^{m}}{6\Gamma(m)}\int_{M}\big(Ric(V,W)-\frac{1}{2}sg(V,W)\big) vol_{g}+\int_{M}2^{m-1}\big( -\frac{1}{4}R^{g}-\frac{3}{2}div^{g}(V)+\frac{3}{2}\parallel T\parallel^{2}+\frac{9}{2}\parallel V\parallel^{2}\big)g(V,W) vol_{g})",
        K::Interior, CliffordExpr(einstein + ScalarExpr(2) * bracket * g));
    ScalarExpr printed_interior =
        einstein + (fr(-1, 2) * s - ScalarExpr(3) * sv(r.divV) + ScalarExpr(3) * sv(r.normT2) + ScalarExpr(9) * sv(r.normV2)) * g;
    const char* interior_src =
        R"(\frac{4\pi^{2}}{3}\int_{M}\Big(Ric(X,Y)-\frac{1}{2}sg(X,Y)\Big) vol_{g}+\int_{M}\Big( -\frac{1}{2}R^{g}-3div^{g}(X)+3\parallel T\parallel^{2}+9\parallel X\parallel^{2}\Big)g(X,Y) vol_{g})";
    add("T4.1/interior", "closed-manifold residue for the (D_T^*D_T)^{-1} pair", interior_src, K::Interior,
        CliffordExpr(printed_interior));
    add("T5.1/interior", "closed-manifold residue for the D_T^{-1}, (D_T^*D_TD_T^*)^{-1} pair", interior_src,
        K::Interior, CliffordExpr(printed_interior));

    // ------------------------------------------------------------ (D_T^*D_T)^{-1} pair: case values
    add("T4.6/a1", "case a)I, tangential x-derivative kills the second factor", R"(so $\Phi_1=0$)", K::CaseValue,
        CliffordExpr());
    add("T4.6/a2", "case a)II value",
        R"(\frac{13\pi^{2}}{24}\sum_{j=1}^{n-1}X_jY_jh'(0)dx'+\frac{13}{32}X_nY_n h'(0)\pi\Omega_3dx')", K::CaseValue,
        CliffordExpr(n.h * (fr(13, 24) * n.pi.pow(2) * n.gT + fr(13, 32) * n.XnYn * n.pi * n.om)));
    add("T4.6/a3", "case a)III value",
        R"(\frac{5\pi^{2}}{12}\sum_{j=1}^{n-1}X_jY_jh'(0)dx'+\frac{5i}{16}X_nY_n h'(0)\pi\Omega_3dx')", K::CaseValue,
        CliffordExpr(n.h * (fr(5, 12) * n.pi.pow(2) * n.gT + cq(0, 1, 5, 16) * n.XnYn * n.pi * n.om)));
    add("T4.6/b", "case b) value",
        R"(\frac{(1-5i)\pi^{2}}{12}\sum_{j=1}^{n-1}X_jY_jh'(0)dx'+\frac{11i}{16}X_nY_n h'(0)\pi\Omega_3dx')",
        K::CaseValue,
        CliffordExpr(n.h * (cq(1, 12, -5, 12) * n.pi.pow(2) * n.gT + cq(0, 1, 11, 16) * n.XnYn * n.pi * n.om)));
    add("T4.6/c", "case c) value",
        R"(\Big(\frac{5i-13}{6}\sum_{j=1}^{n-1}X_jY_j +\frac{3-96i}{8}X_nY_n \Big) h'(0)\pi^2dx'-X_n\frac{\partial Y_n}{\partial x_n}\frac{\pi}{2}\Omega_3dx')",
        K::CaseValue,
        CliffordExpr((cq(-13, 6, 5, 6) * n.gT + cq(3, 8, -12, 1) * n.XnYn) * n.h * n.pi.pow(2) -
                     fr(1, 2) * n.XndYn * n.pi * n.om));
    ScalarExpr t46 = cq(15, 32, -362, 32) * n.XnYn * n.h * n.pi * n.om + cq(-27, 24, 10, 24) * n.pi.pow(2) * n.gT * n.h -
                     fr(1, 2) * n.XndYn * n.pi * n.om;
    add("T4.6/total", "sum of the five case values as displayed",
        R"(\Phi=\sum_{i=1}^5\Phi_i= \frac{15-362i}{32}X_nY_nh'(0)\pi\Omega_3dx'+\frac{(10i-27)\pi^{2}}{24}g(X^T,Y^T) h'(0)  dx'-X_n\frac{\partial Y_n}{\partial x_n}\frac{\pi}{2}\Omega_3dx')",
        K::Total, CliffordExpr(t46));
    add("T4.6/theorem", "boundary integrand in the theorem statement",
        R"(\Big(\frac{15-362i}{32}X_nY_n\pi h'(0)-X_n\frac{\partial Y_n}{\partial x_n}\frac{\pi}{2}\Big) \Omega_3  +\frac{(10i-27)\pi^{2}}{24}g(X^T,Y^T) h'(0))",
        K::TheoremStatement, CliffordExpr(t46));

    // ------------------------------------------------------------ (D_T^*D_T)^{-1} pair: intermediates
    add("T4.6/a1:second.dx", "case a)I, tangential x-derivative of sigma_{-2}",
        R"(\partial_{x_i}\sigma_{-2}((D_{T}^{*}D_{T})^{-1})(x_0)=\partial_{x_i}(|\xi|^{-2})(x_0)=-\frac{\partial_{x_i}(|\xi|^{2})(x_0)}{|\xi|^4}=0)",
        K::Intermediate, CliffordExpr());
    add("T4.6/a2:second.final", "case a)II, second xi_n-derivative of sigma_{-2}",
        R"(\partial_{\xi_n}^2\sigma_{-2}((D_{T}^{*}D_{T})^{-1}))(x_0)=\partial_{\xi_n}^2(|\xi|^{-2})(x_0)=\frac{6\xi_n^2-2}{(1+\xi_n^2)^3})",
        K::Intermediate, unit((ScalarExpr(6) * n.xn.pow(2) - ScalarExpr(2)) / n.q.pow(3)));
    add("T4.6/a2:first.dx", "case a)II, x_n-derivative of sigma_0",
        R"(\partial_{x_n}(-\sum_{j,l=1}^nX_jY_l\xi_j\xi_l|\xi|^{-2})=\frac{\sum_{j,l=1}^nX_jY_l\xi_j\xi_lh'(0)|\xi'|^2}{(1+\xi_n^2)^2})",
        K::Intermediate, unit(n.Sfull * n.h / n.q.pow(2)));
    add("T4.6/a2:first.pi_plus", "case a)II, pi^+ of the x_n-derivative of sigma_0",
        R"(-\frac{i\xi_n}{4(\xi_n-i)^2}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_lh'(0)+\frac{2-i\xi_n}{4(\xi_n-i)^2}X_nY_nh'(0)-\frac{i}{4(\xi_n-i)^2}\sum_{j=1}^{n-1}X_jY_n\xi_j-\frac{i}{4(\xi_n-i)^2}\Sigma_{l=1}^{n-1}X_nY_l\xi_l)",
        K::Intermediate,
        unit(-I * n.xn / (ScalarExpr(4) * n.pm.pow(2)) * n.Stt * n.h +
             (ScalarExpr(2) - I * n.xn) / (ScalarExpr(4) * n.pm.pow(2)) * n.XnYn * n.h -
             I / (ScalarExpr(4) * n.pm.pow(2)) * (n.Sjn + n.Snl)));
    {
        ScalarExpr d = n.pm.pow(5) * n.pp.pow(3);
        ScalarExpr num = ScalarExpr(1) + n.xn * I - ScalarExpr(3) * n.xn.pow(3) * I - I;
        add("T4.6/a2:product.trace", "case a)II, trace of the product",
            R"(2\frac{1+\xi_ni-3\xi_n^3i-i}{(\xi_n-i)^5(\xi_n+i)^3}\Sigma_{j,l=1}^{n-1}X_jY_l\xi_j\xi_lh'(0)+2\frac{1+\xi_ni-3\xi_n^3i-i}{(\xi_n-i)^5(\xi_n+i)^3}X_nY_nh'(0)+2\frac{(1-3\xi_n^2)i}{(\xi_n-i)^5(\xi_n+i)^3}\Sigma_{j=1}^{n-1}X_jY_n\xi_j+2\frac{(1-3\xi_n^2)i}{(\xi_n-i)^5(\xi_n+i)^3}\Sigma_{l=1}^{n-1}X_nY_l\xi_l)",
            K::Intermediate,
            unit(ScalarExpr(2) * num / d * (n.Stt + n.XnYn) * n.h +
                 ScalarExpr(2) * (ScalarExpr(1) - ScalarExpr(3) * n.xn.pow(2)) * I / d * (n.Sjn + n.Snl)));
    }
    add("T4.6/a3:second.dx", "case a)III, x_n-derivative of sigma_{-2}",
        R"(\partial_{x_n}\sigma_{-2}(D_{T}^{*}D_{T})^{-1})(x_0)|_{|\xi'|=1}=-\frac{h'(0)}{(1+\xi_n^2)^2})", K::Intermediate,
        unit(-n.h / n.q.pow(2)));
    add("T4.6/a3:first.pi_plus", "case a)III, pi^+ of sigma_0",
        R"(\frac{i}{2(\xi_n-i)}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l-\frac{1}{2(\xi_n-i)}X_nY_n-\frac{1}{2(\xi_n-i)}\sum_{j=1}^{n-1}X_jY_n\xi_j-\frac{1}{2(\xi_n-i)}\sum_{l=1}^{n-1}X_nY_l\xi_l)",
        K::Intermediate,
        unit(I / (ScalarExpr(2) * n.pm) * n.Stt - n.XnYn / (ScalarExpr(2) * n.pm) - (n.Sjn + n.Snl) / (ScalarExpr(2) * n.pm)));
    add("T4.6/a3:ibp.first", "case a)III, second xi_n-derivative of pi^+ sigma_0",
        R"(\frac{i}{(\xi_n-i)^3}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l-\frac{1}{(\xi_n-i)^3}X_nY_n)", K::Intermediate,
        unit(I / n.pm.pow(3) * n.Stt - n.XnYn / n.pm.pow(3)));
    add("T4.6/a3:product.trace", "case a)III, trace of the product",
        R"(-4\frac{h'(0)i}{(\xi_n-i)^5(\xi_n+i)^2}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l+4\frac{h'(0)}{(\xi_n-i)^5(\xi_n+i)^2}X_nY_n)",
        K::Intermediate,
        unit(ScalarExpr(-4) * n.h * I / (n.pm.pow(5) * n.pp.pow(2)) * n.Stt +
             ScalarExpr(4) * n.h / (n.pm.pow(5) * n.pp.pow(2)) * n.XnYn));
    add("T4.6/b:ibp.second", "case b), printed sigma_{-3} of (D_T^*D_T)^{-1}",
        R"(-\frac{i}{(1+\xi_n^2)^2}\left(-\frac{1}{2}h'(0)\sum_{k<n}\xi_nc(e_k)c(e_n)+\frac{5}{2}h'(0)\xi_n\right)-\frac{2ih'(0)\xi_n}{(1+\xi_n^2)^3}-\big((u-v)\sqrt{-1}c(\xi)+\sqrt{-1}c(\xi)(u+v)\big)|\xi|^{-4})",
        K::Intermediate, builtin_symbol(OperatorId::InvDiracSq).at(-3).value());
    add("T4.6/b:ibp.first", "case b), xi_n-derivative of pi^+ sigma_0",
        R"(-\frac{i}{2(\xi_n-i)^2}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l-\frac{1}{2(\xi_n-i)^2}X_nY_n+\frac{1}{2(\xi_n-i)^2}\sum_{j=1}^{n-1}X_jY_n\xi_j+\frac{1}{2(\xi_n-i)^2}\sum_{l=1}^{n-1}X_nY_l\xi_l)",
        K::Intermediate,
        unit(-I / (ScalarExpr(2) * n.pm.pow(2)) * n.Stt - n.XnYn / (ScalarExpr(2) * n.pm.pow(2)) +
             (n.Sjn + n.Snl) / (ScalarExpr(2) * n.pm.pow(2))));
    add("T4.6/b:ibp.trace", "case b), trace after moving the xi_n-derivative",
        R"(-\frac{h'(0)(5\xi_n^2-5+4\xi_n)} {(\xi_n-i)^5(\xi_n+i)^3}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l+\frac{h'(0)i(5\xi_n^3-\xi_n)}{(\xi_n-i)^5(\xi_n+i)^3}X_nY_n)",
        K::Intermediate,
        unit(-n.h * (ScalarExpr(5) * n.xn.pow(2) - ScalarExpr(5) + ScalarExpr(4) * n.xn) / (n.pm.pow(5) * n.pp.pow(3)) * n.Stt +
             n.h * I * (ScalarExpr(5) * n.xn.pow(3) - n.xn) / (n.pm.pow(5) * n.pp.pow(3)) * n.XnYn));
    add("T4.6/c:second.final", "case c), xi_n-derivative of sigma_{-2}",
        R"(\partial_{\xi_n}\sigma_{-2}(D_{T}^{*}D_{T})^{-1})(x_0)|_{|\xi'|=1}=-\frac{2\xi_n}{(\xi_n^2+1)^2})", K::Intermediate,
        unit(ScalarExpr(-2) * n.xn / n.q.pow(2)));
    {
        CliffordExpr sk;
        for (int k = 1; k <= 3; ++k) sk += sv(r.xi(k)) * (CliffordExpr::gen(k) * n.c4);
        ScalarExpr c1 = n.h * (ScalarExpr(2) * n.xn.pow(2) - n.xn - ScalarExpr(2) * n.xn * I) / (n.pm.pow(4) * n.pp.pow(2)) * n.Stt;
        ScalarExpr c2 = n.h * (ScalarExpr(17) * n.xn * I - n.xn.pow(2) + ScalarExpr(4) * n.xn.pow(3) * I) /
                        (n.pm.pow(5) * n.pp.pow(2)) * n.Stt;
        add("T4.6/c:item1:product.trace", "case c), first item of sigma_{-1}, trace of the product",
            R"(\frac{h'(0)(2\xi_n^2-\xi_n-2\xi_ni)}{(\xi_n-i)^4(\xi_n+i)^2}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l\sum_{k<n}\xi_kc(e_k)c(e_n)+\frac{h'(0)(17\xi_ni-\xi_n^2+4\xi_n^3i)}{(\xi_n-i)^5(\xi_n+i)^2}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l)",
            K::Intermediate, unit(c1 * sk + CliffordExpr(c2)));
    }
    add("T4.6/c:check.trace_Tbar", "case c), trace of the torsion endomorphism",
        R"(\mathrm{Tr}(\overline{T}(X,\cdot,\cdot))=\mathrm{Tr}(\frac{3}{2}\sum_{ 1\leq i<j\leq n}T(X,e_{i},e_{j})c(e_{i})c (e_{j})-\frac{1}{2}c(V)c(X)-\frac{1}{2}\langle V, X \rangle)=0)",
        K::Intermediate, CliffordExpr());
    add("T4.6/c:item2:product.trace", "case c), second item of sigma_{-1}, trace of the product",
        R"(X_n\frac{\partial Y_n}{\partial x_n} \frac{-2\xi_n}{(\xi_n^2+1)^2})", K::Intermediate,
        unit(n.XndYn * ScalarExpr(-2) * n.xn / n.q.pow(2)));
    add("T4.6/c:item3:product.trace", "case c), third item of sigma_{-1}, trace of the product",
        R"(2iX_nY_nh'(0)\xi_n\times \frac{-2\xi_n}{(\xi_n^2+1)^2})", K::Intermediate,
        unit(ScalarExpr(2) * I * n.XnYn * n.h * n.xn * ScalarExpr(-2) * n.xn / n.q.pow(2)));

    // ------------------------------------------------------------ D_T^{-1} pair: case values
    add("T5.4/a1", "case a)I, tangential x-derivative kills the second factor", R"(so $\widetilde{\Phi}_1=0$)",
        K::CaseValue, CliffordExpr());
    add("T5.4/a2", "case a)II value",
        R"(- \frac{592}{3}\pi^{2}\sum_{j=1}^{n-1}X_jY_jh'(0)  dx'-\left(\frac{461}{4}+\frac{23}{4}i\right)X_nY_n h'(0)\pi\Omega_3dx')",
        K::CaseValue,
        CliffordExpr(n.h * (fr(-592, 3) * n.pi.pow(2) * n.gT - cq(461, 4, 23, 4) * n.XnYn * n.pi * n.om)));
    add("T5.4/a3", "case a)III value",
        R"(\frac{5 i\pi^{2}}{6}\sum_{j=1}^{n-1}X_jY_jh'(0) dx'+\frac{5i}{8}X_nY_n h'(0)\pi\Omega_3dx')", K::CaseValue,
        CliffordExpr(n.h * (cq(0, 1, 5, 6) * n.pi.pow(2) * n.gT + cq(0, 1, 5, 8) * n.XnYn * n.pi * n.om)));
    add("T5.4/b", "case b) value",
        R"(\Big(\frac{55\pi^{2}}{3}\sum_{j=1}^{n-1}X_jY_j+\frac{4-15i}{8}X_nY_n\pi\Omega_3\Big)h'(0)dx'+\Big(\frac{2\pi^{2}}{3}\sum_{j,l=1}^{n-1}X_{j}Y_l+\frac{3}{8}X_{n}Y_n\pi\Omega_3\Big)\sum_{i=1}^{n-1}A_{iin}dx')",
        K::CaseValue,
        CliffordExpr((fr(55, 3) * n.pi.pow(2) * n.gT + cq(4, 8, -15, 8) * n.XnYn * n.pi * n.om) * n.h +
                     (fr(2, 3) * n.pi.pow(2) * n.gT + fr(3, 8) * n.XnYn * n.pi * n.om) * n.SA));
    add("T5.4/c", "case c) value",
        R"(\Big(\big(-\frac{35}{3}+\frac{50}{3}i\big)\sum_{j=1}^{n-1}X_jY_j\pi^{2}+\big(5-\frac{137}{32}i\big)X_nY_n\pi\Omega_3\Big)h'(0)dx')",
        K::CaseValue,
        CliffordExpr((cq(-35, 3, 50, 3) * n.gT * n.pi.pow(2) + cq(5, 1, -137, 32) * n.XnYn * n.pi * n.om) * n.h));
    auto t54 = [&](long re_p, long re_q) {
        return (cq(re_p, re_q, -33, 32) * n.XnYn * n.pi * n.om + cq(-572, 3, 35, 2) * n.pi.pow(2) * n.gT) * n.h +
               (cq(3, 8, -3, 8) * n.XnYn * n.pi * n.om + cq(4, 6, 3, 6) * n.pi.pow(2) * n.gT) * n.SA_full;
    };
    add("T5.4/total", "sum of the five case values as displayed",
        R"(\left[\left(-\frac{2801}{12}-\frac{33i}{32}\right)X_nY_n\pi\Omega_3+\left(-\frac{572}{3}+\frac{35i}{2}\right)\pi^{2} g(X^T,Y^T)\right]h'(0)dx'+\Big(\frac{3}{8}-\frac{3i}{8})X_nY_n\pi\Omega_3+\frac{4+3i}{6}\pi^{2} g(X^T,Y^T)\Big)\sum_{i=1}^{n}A_{iin}dx')",
        K::Total, CliffordExpr(t54(-2801, 12)));
    add("T5.4/theorem", "boundary integrand in the theorem statement",
        R"(\Big((\frac{-2801}{24}-\frac{33i}{32})X_nY_n\pi\Omega_3+(\frac{35i}{2}-\frac{572}{3})\pi^{2 } g(X^T,Y^T)\Big )  h'(0)+\Big((\frac{3}{8}-\frac{3i}{8})X_nY_n\pi\Omega_3+\frac{4+3i}{6}\pi^{2} g(X^T,Y^T)\Big)\sum_{i=1}^{n} A_{iin})",
        K::TheoremStatement, CliffordExpr(t54(-2801, 24)));

    // ------------------------------------------------------------ D_T^{-1} pair: intermediates
    add("T5.4/a1:second.dx", "case a)I, tangential x-derivative of sigma_{-3}",
        R"(\partial_{x_i}\sigma_{-3}((D_{T}^{*}D_{T}D_{T}^{*})^{-1})(x_0)=\partial_{x_i}(\sqrt{-1}c(\xi)|\xi|^{-4})(x_0)=0)",
        K::Intermediate, CliffordExpr());
    add("T5.4/a2:second.final", "case a)II, second xi_n-derivative of sigma_{-3}",
        R"(\partial_{\xi_n}^2\sigma_{-3}((D_{T}^{*}D_{T}D_{T}^{*})^{-1})(x_0)=\sqrt{-1}\frac{(20\xi_n^2-4)c(\xi')+12(\xi^3-\xi)c(\mathrm{d}x_n)}{(1+\xi_n^2)^4})",
        K::Intermediate,
        unit((I / n.q.pow(4)) * ((ScalarExpr(20) * n.xn.pow(2) - ScalarExpr(4)) * n.ct +
                                 ScalarExpr(12) * (n.xn.pow(3) - n.xn) * n.c4)));
    add("T5.4/a2:first.dx", "case a)II, x_n-derivative of sigma_1",
        R"(\Sigma_{j,l=1}^nX_jY_l\xi_j\xi_l \left[ \frac{\partial_{x_n}c(\xi')}{1+\xi_n^2}+\frac{c(\xi)h'(0)|\xi'|^2}{(1+\xi_n^2)^2}\right])",
        K::Intermediate, unit(n.Sfull * (n.q.pow(-1) * n.dct + (n.h / n.q.pow(2)) * n.cxi)));
    {
        ScalarExpr s4 = ScalarExpr(4);
        CliffordExpr a = (I * n.Stt * n.h) * ((I / (s4 * n.pm)) * n.ct + n.pm.pow(-2) / s4 * (n.ct + I * n.c4));
        a -= (n.Stt / (ScalarExpr(2) * n.pm)) * n.dct;
        CliffordExpr inner = (ScalarExpr(1) / (ScalarExpr(2) * n.pm)) * n.dct +
                             n.h * ((-ScalarExpr(1) / (s4 * n.pm)) * (ScalarExpr(2) * I * n.ct - ScalarExpr(3) * n.c4) +
                                    ((I * n.pm + ScalarExpr(1)) / (s4 * n.pm.pow(2))) * (n.ct + I * n.c4));
        a -= (I * n.XnYn) * inner;
        CliffordExpr mixed = (I / (ScalarExpr(2) * n.pm)) * n.dct -
                             (I * n.h / (s4 * n.pm)) * (n.ct + ScalarExpr(2) * I * n.c4) -
                             ((I * n.pm + ScalarExpr(1)) / n.pm.pow(2)) * (I * n.ct - n.c4);
        a -= (n.Sjn + n.Snl) * mixed;
        add("T5.4/a2:first.pi_plus", "case a)II, pi^+ of the x_n-derivative of sigma_1",
            R"(\sqrt{-1}\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_lh'(0)|\xi'|^2\left[\frac{ic(\xi')}{4(\xi_n-i)}+\frac{c(\xi')+ic(\mathrm{d}x_n)}{4(\xi_n-i)^2}\right]-\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l\frac{\partial_{x_n}c(\xi')}{2(\xi_n-i)}-\sqrt{-1}X_nY_n\left\{\frac{\partial_{x_n}c(\xi')}{2(\xi_n-i)}+h'(0)|\xi'|\left[-\frac{2ic(\xi')-3c(\mathrm{d}x_n)}{4(\xi_n-i)}+\frac{[c(\xi')+ic(\mathrm{d}x_n)][i(\xi_n-i)+1]}{4(\xi_n-i)^2}\right]\right\}-\Sigma_{j=1}^{n-1}X_jY_n\xi_j\left[\sqrt{-1}\frac{\partial_{x_n}c(\xi')}{2(\xi_n-i)}-\frac{\sqrt{-1}h'(0)|\xi'|[c(\xi')+2ic(\mathrm{d}x_n)]}{4(\xi_n-i)}-\frac{[ic(\xi')-c(\mathrm{d}x_n)][i(\xi_n-i)+1]}{(\xi_n-i)^2}\right]-\Sigma_{l=1}^{n-1}X_nY_l\xi_l[\ldots])",
            K::Intermediate, unit(a));
    }
    {
        ScalarExpr d5 = n.pm.pow(5) * n.pp.pow(4), d6 = n.pm.pow(6) * n.pp.pow(4);
        ScalarExpr p = ScalarExpr(5) * n.xn.pow(2) - ScalarExpr(1);
        ScalarExpr c3 = n.xn.pow(3) - n.xn;
        ScalarExpr tt = ScalarExpr(8) * I * p / d5 + (ScalarExpr(4) * p + ScalarExpr(12) * I * c3) / d6;
        ScalarExpr nn = ((ScalarExpr(4) * I - ScalarExpr(4)) * (n.xn.pow(2) - ScalarExpr(1)) + ScalarExpr(48) * c3) / d5 -
                        (ScalarExpr(4) * p + ScalarExpr(12) * I * c3) / d6;
        ScalarExpr mix = ((ScalarExpr(6) - ScalarExpr(3) * I * n.h) * c3 - ScalarExpr(2) * I * p) / d5 +
                         (ScalarExpr(2) * p + ScalarExpr(6) * I * c3) / d6;
        add("T5.4/a2:product.trace", "case a)II, trace of the product",
            R"(\Sigma_{j,l=1}^{n-1}X_jY_l\xi_j\xi_lh'(0)\left[8i\frac{5\xi_n^2-1}{(\xi_n-i)^5(\xi_n+i)^4}+\frac{4(5\xi_n^2-1)+12i(\xi_n^3-\xi_n)}{(\xi_n-i)^6(\xi_n+i)^4}\right]+X_nY_nh'(0)\left[\frac{(4i-4)(\xi^2-1)+48(\xi_n^3-\xi_n)}{(\xi_n-i)^5(\xi_n+i)^4}-\frac{4(5\xi_n^2-1)+12i(\xi_n^3-\xi_n)}{(\xi_n-i)^6(\xi_n+i)^4}\right]+8\Sigma_{j=1}^{n-1}X_jY_n\xi_j\left[\frac{(6-3ih'(0))(\xi_n^3-\xi_n)-2i(5\xi_n^2-1)}{(\xi_n-i)^5(\xi_n+i)^4}+\frac{2(5\xi_n^2-1)+6i(\xi_n^3-\xi_n)}{(\xi_n-i)^6(\xi_n+i)^4}\right]+8\Sigma_{l=1}^{n-1}X_nY_l\xi_l[\ldots])",
            K::Intermediate,
            unit(n.Stt * n.h * tt + n.XnYn * n.h * nn + ScalarExpr(8) * (n.Sjn + n.Snl) * mix));
    }
    add("T5.4/a3:second.dx", "case a)III, x_n-derivative of sigma_{-3}",
        R"(\frac{\sqrt{-1}\partial_{x_n}[c(\xi')]}{(1+\xi_n^2)^4}-\frac{2\sqrt{-1}h'(0)c(\xi)|\xi'|^2_{g^{\partial M}}}{(1+\xi_n^2)^6})",
        K::Intermediate, unit((I / n.q.pow(4)) * n.dct - (ScalarExpr(2) * I * n.h / n.q.pow(6)) * n.cxi));
    add("T5.4/a3:first.pi_plus", "case a)III, pi^+ of sigma_1",
        R"(-\frac{c(\xi')+ic(\mathrm{d}x_n)}{2(\xi_n-i)}\Sigma_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l-\frac{c(\xi')+ic(\mathrm{d}x_n)}{2(\xi_n-i)}X_nY_n-\frac{ic(\xi')-c(\mathrm{d}x_n)}{2(\xi_n-i)}\Sigma_{j=1}^{n-1}X_jY_n\xi_j-\frac{ic(\xi')-c(\mathrm{d}x_n)}{2(\xi_n-i)}\Sigma_{l=1}^{n-1}X_nY_l\xi_l)",
        K::Intermediate,
        unit(-((n.Stt + n.XnYn) / (ScalarExpr(2) * n.pm)) * (n.ct + I * n.c4) -
             ((n.Sjn + n.Snl) / (ScalarExpr(2) * n.pm)) * (I * n.ct - n.c4)));
    add("T5.4/a3:ibp.first", "case a)III, second xi_n-derivative of pi^+ sigma_1",
        R"(-\frac{c(\xi')+ic(\mathrm{d}x_n)}{(\xi_n-i)^3}\Sigma_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l-\frac{c(\xi')+ic(\mathrm{d}x_n)}{(\xi_n-i)^3}X_nY_n)",
        K::Intermediate, unit(-((n.Stt + n.XnYn) / n.pm.pow(3)) * (n.ct + I * n.c4)));
    add("T5.4/a3:product.trace", "case a)III, trace of the product",
        R"(-2\frac{h'(0)}{(\xi_n-i)^5(\xi_n+i)^2}\Sigma_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l-2\frac{h'(0)}{(\xi_n-i)^5(\xi_n+i)^2}X_nY_n)",
        K::Intermediate, unit(ScalarExpr(-2) * n.h / (n.pm.pow(5) * n.pp.pow(2)) * (n.Stt + n.XnYn)));
    add("T5.4/b:second.final", "case b), xi_n-derivative of sigma_{-3}",
        R"(\frac{ic(\mathrm{d}x_n)}{(1+\xi_n^2)^2}-\frac{4\sqrt{-1}\xi_nc(\xi)}{(1+\xi_n^2)^3})", K::Intermediate,
        unit((I / n.q.pow(2)) * n.c4 - (ScalarExpr(4) * I * n.xn / n.q.pow(3)) * n.cxi));
    {
        CliffordExpr uv = torsion_u() + torsion_v();
        CliffordExpr p0 = spin_p0();
        CliffordExpr A1 = I * (n.ct * p0 * n.ct) + I * (n.c4 * ((fr(-3, 4) * n.h) * n.c4) * n.c4) + I * (n.ct * n.c4 * n.dct);
        CliffordExpr cp = n.ct + I * n.c4;
        CliffordExpr A2 = cp * p0 * cp + n.ct * n.c4 * n.dct - I * n.dct;
        CliffordExpr A3 = n.Stt * ((ScalarExpr(-2) - I * n.xn) * (n.ct * uv * n.ct) - I * (n.c4 * uv * n.ct) -
                                   I * (n.ct * uv * n.c4) - (I * n.xn) * (n.c4 * uv * n.c4)) +
                          n.XnYn * ((-I * n.xn) * (n.ct * uv * n.ct) - I * (n.c4 * uv * n.ct) - I * (n.ct * uv * n.c4) +
                                    n.c4 * uv * n.c4);
        ScalarExpr s4 = ScalarExpr(4);
        add("T5.4/b:check.pi_plus_A", "case b), pi^+ decomposition with the A_1, A_2, A_3 blocks",
            R"(\pi^+_{\xi_n}\left[\frac{c(\xi)\sigma_0(D_{T})(x_0)c(\xi)+c(\xi)c(dx_n)\partial_{x_n}[c(\xi')](x_0)}{(1+\xi_n^2)^2}\right]=-\frac{A_1}{4(\xi_n-i)}-\frac{A_2}{4(\xi_n-i)^2}+\frac{A_3}{4(\xi_n-i)^2})",
            K::Intermediate, unit(-(ScalarExpr(1) / (s4 * n.pm)) * A1 - n.pm.pow(-2) / s4 * A2 + n.pm.pow(-2) / s4 * A3));
        add("T5.4/b:check.pi_plus_cc4c", "case b), pi^+ of c(xi)c(dx_n)c(xi) over the cubed norm",
            R"(\pi^+_{\xi_n}\left[\frac{c(\xi)c(dx_n)c(\xi)}{(1+\xi_n)^3}(x_0)|_{|\xi'|=1}\right]=\frac{1}{2}\left[\frac{c(dx_n)}{4i(\xi_n-i)}+\frac{c(dx_n)-ic(\xi')}{8(\xi_n-i)^2}+\frac{3\xi_n-7i}{8(\xi_n-i)^3}[ic(\xi')-c(dx_n)]\right])",
            K::Intermediate,
            unit(fr(1, 2) * ((ScalarExpr(1) / (s4 * I * n.pm)) * n.c4 +
                             (ScalarExpr(1) / (ScalarExpr(8) * n.pm.pow(2))) * (n.c4 - I * n.ct) +
                             ((ScalarExpr(3) * n.xn - ScalarExpr(7) * I) / (ScalarExpr(8) * n.pm.pow(3))) * (I * n.ct - n.c4))));
    }
    {
        ScalarExpr TX, TY, yx, xx;
        for (int i = 1; i <= 3; ++i) {
            ScalarExpr tx, ty;
            for (int a = 1; a <= 4; ++a) {
                auto [v, sg] = r.T(a, i, 4);
                tx += ScalarExpr(sg) * sv(r.X(a)) * sv(v);
                ty += ScalarExpr(sg) * sv(r.Y(a)) * sv(v);
            }
            TX += tx * sv(r.xi(i));
            TY += ty * sv(r.xi(i));
            yx += sv(r.Y(i)) * sv(r.xi(i));
            xx += sv(r.X(i)) * sv(r.xi(i));
        }
        ScalarExpr d = n.pm * n.q.pow(3);
        ScalarExpr a = ScalarExpr(2) * I * n.xn / d;
        ScalarExpr b = (ScalarExpr(3) * n.xn.pow(2) - ScalarExpr(1)) / d;
        add("T5.4/b:check.trace_T", "case b), trace of the pi^+ torsion-form terms against the second factor",
            R"(\sum_{j=1}^{n-1}Y_j\xi_j \frac{2i\xi_n}{(\xi_n-i)(1+\xi_n^{2})^{3}} \sum_{i=1}^{n-1}T(X,e_{i},e_{n})\xi_i-\sum_{j=1}^{n-1}Y_j\xi_j \frac{3\xi_n^{2}-1}{2(\xi_n-i)(1+\xi_n^{2})^{3}}\sum_{i=1}^{n-1}T(X,e_{i},e_{n})\xi_i +\sum_{j=1}^{n-1}X_j\xi_j \frac{2i\xi_n}{(\xi_n-i)(1+\xi_n^{2})^{3}}\sum_{i=1}^{n-1}T(Y,e_{i},e_{n})\xi_i-\sum_j^{n-1}Y_j\xi_j \frac{3\xi_n^{2}-1}{(\xi_n-i)(1+\xi_n^{2})^{3}}\sum_{i=1}^{n-1}T(Y,e_{i},e_{n})\xi_i)",
            K::Intermediate, unit(yx * a * TX - yx * b / ScalarExpr(2) * TX + xx * a * TY - yx * b * TY));
    }
    add("T5.4/b:item1:value", "case b), torsion part of the first item of sigma_0",
        R"(\sum_{j,l=1}^{n-1}X_{j}Y_l\frac{2\pi^{2}}{3}\sum_{i=1}^{n-1}A_{iin} dx'+\frac{3}{8}X_{n}Y_n \sum_{i=1}^{n-1}A_{iin}\pi\Omega_3dx')",
        K::Intermediate, CliffordExpr((fr(2, 3) * n.pi.pow(2) * n.gT + fr(3, 8) * n.XnYn * n.pi * n.om) * n.SA),
        RefProjection::ATerms);
    add("T5.4/b:item2:product.trace", "case b), second item of sigma_0, trace of the product",
        R"(\mathrm{Tr} \left(\pi^+_{\xi_n}\Big(\sigma_{1}(\widetilde{\nabla}_{X}\widetilde{\nabla}_{Y})\sigma_{-1}(D_{T}^{-1})\Big)\times\partial_{\xi_n}\sigma_{-3}((D_{T}^{*}D_{T}D_{T}^{*})^{-1})\right)(x_0)=0)",
        K::Intermediate, CliffordExpr());
    add("T5.4/b:item3:value", "case b), third item of sigma_0",
        R"(\frac{7-15i}{8}X_{n}Y_n\pi h'(0)\Omega_3dx')", K::Intermediate,
        CliffordExpr(cq(7, 8, -15, 8) * n.XnYn * n.pi * n.h * n.om));
    add("T5.4/c:second.symbol", "case c), printed sigma_{-4} of (D_T^*D_TD_T^*)^{-1}",
        R"(\frac{1}{(\xi_n^2+1)^4}\left[\left(\frac{11}{2}\xi_n(1+\xi_n^2)+8i\xi_n\right)h'(0)c(\xi')+\left[-2i+6i\xi_n^2-\frac{7}{4}(1+\xi_n^2)+\frac{15}{4}\xi_n^2(1+\xi^2_n)\right]h'(0)c(\mathrm{d}x_n)-3i\xi_n(1+\xi^2_n)\partial_{x_n}c(\xi')+i(1+\xi^2_n)c(\xi')c(\mathrm{d}x_n)\partial_{x_n}c(\xi')\right]+\frac{c(\xi)(3u-v)|\xi|^2c(\xi)}{|\xi|^8})",
        K::Intermediate, SymbolTerm(builtin_symbol(OperatorId::InvDiracCube).at(-4)).eval_kappa().value());
    add("T5.4/c:ibp.first", "case c), xi_n-derivative of pi^+ sigma_1",
        R"(\frac{c(\xi')+ic(\mathrm{d}x_n)}{2(\xi_n-i)^2}\Sigma_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l-\frac{c(\xi')+ic(\mathrm{d}x_n)}{2(\xi_n-i)^2}X_nY_n+\frac{ic(\xi')-c(\mathrm{d}x_n)}{2(\xi_n-i)^2}\Sigma_{j=1}^{n}X_jY_n\xi_j+\frac{ic(\xi')-c(\mathrm{d}x_n)}{2(\xi_n-i)^2}\Sigma_{l=1}^{n}X_nY_l\xi_l)",
        K::Intermediate,
        unit(((n.Stt - n.XnYn) / (ScalarExpr(2) * n.pm.pow(2))) * (n.ct + I * n.c4) +
             ((n.Sjn + n.Snl) / (ScalarExpr(2) * n.pm.pow(2))) * (I * n.ct - n.c4)));
    add("T5.4/c:check.tr_cc_c4dc", "case c), first auxiliary trace",
        R"({\rm tr}[c(\xi')c(\xi')c(\mathrm{d}x_n)\partial_{x_n}c(\xi')]=0)", K::Intermediate, CliffordExpr());
    add("T5.4/c:check.tr_c4c_c4dc", "case c), second auxiliary trace",
        R"({\rm tr}[c(\mathrm{d}x_n)c(\xi')c(\mathrm{d}x_n)\partial_{x_n}c(\xi')]=-2h'(0))", K::Intermediate,
        CliffordExpr(ScalarExpr(-2) * n.h));
    {
        ScalarExpr tt = n.h *
                        (cq(7, 1, 6, 1) - cq(20, 1, -15, 1) * n.xn - cq(7, 1, -6, 1) * n.xn.pow(2) + ScalarExpr(15) * I * n.xn.pow(3)) /
                        (n.pm.pow(5) * n.pp.pow(4));
        ScalarExpr nn = ((ScalarExpr(3) * I - ScalarExpr(11)) * n.xn * (ScalarExpr(1) - n.xn.pow(2)) - ScalarExpr(16) * I * n.xn +
                         cq(13, 1, 7, 2) * n.q - ScalarExpr(16) - fr(15, 2) * n.xn.pow(2) * n.q) /
                        (n.pm.pow(2) * n.pp.pow(4));
        add("T5.4/c:geometric:ibp.trace", "case c), trace against the h'(0) part of sigma_{-4}",
            R"(\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l\frac{h'(0)(7+6i-(20-15i)\xi_n-(7-6i)\xi_n^2+15i\xi_n^3)}{(\xi_n-i)^5(\xi_n+i)^4}+X_nY_n\frac{(3i-11)\xi_n(1-\xi_n^2)-16i\xi_n+(13+\frac{7}{2}i)(1+\xi_n^2)-16-\frac{15}{2}\xi_n^2(1+\xi_n^2)}{(\xi_n-i)^2(\xi_n+i)^4})",
            K::Intermediate, unit(n.Stt * tt + n.XnYn * nn));
    }
    add("T5.4/c:torsion:ibp.trace", "case c), trace against the torsion part of sigma_{-4}",
        R"(\sum_{j,l=1}^{n-1}X_jY_l\xi_j\xi_l\frac{-3i\pi}{8}\sum_{i=1}^{n}A_{iin}+X_nY_n\frac{-3i\pi}{8}\sum_{i=1}^{n}A_{iin})",
        K::Intermediate, unit(cq(0, 1, -3, 8) * n.pi * n.SA_full * (n.Stt + n.XnYn)));
    return t;
}

}  // namespace

const std::vector<Reference>& reference_table() {
    static const std::vector<Reference> table = build();
    return table;
}

const Reference* lookup_reference(const std::string& id) {
    static const std::map<std::string, std::size_t> index = [] {
        std::map<std::string, std::size_t> m;
        const auto& t = reference_table();
        for (std::size_t i = 0; i < t.size(); ++i) m.emplace(t[i].id, i);
        return m;
    }();
    auto it = index.find(id);
    return it == index.end() ? nullptr : &reference_table()[it->second];
}

const Reference& find_reference(const std::string& id) {
    const Reference* r = lookup_reference(id);
    if (!r) throw std::invalid_argument("unknown reference: " + id);
    return *r;
}

std::string ref_kind_name(RefKind k) {
    switch (k) {
        case RefKind::CaseValue: return "case";
        case RefKind::Total: return "total";
        case RefKind::TheoremStatement: return "theorem";
        case RefKind::Intermediate: return "intermediate";
        case RefKind::Interior: return "interior";
        case RefKind::TraceE: return "traceE";
    }
    return "?";
}

}  // namespace ncr
