#include "ncr/symbol.hpp"

#include <array>
#include <stdexcept>

namespace ncr {

namespace {

const Registry& R() { return Registry::get(); }

ScalarExpr sv(Var v) { return ScalarExpr::var(v); }

ScalarExpr frac(long p, long q) { return ScalarExpr(GQ::frac(p, q)); }

const ScalarExpr& I() {
    static const ScalarExpr i(GQ::I());
    return i;
}

CliffordExpr g(int j) { return CliffordExpr::gen(j); }

}  // namespace

// ---------------------------------------------------------------- frame data

ScalarExpr xi_tan_norm2() {
    ScalarExpr s;
    for (int j = 1; j <= 3; ++j) s += sv(R().xi(j)).pow(2);
    return s;
}

ScalarExpr xi_norm2() { return sv(R().W).pow(2) * xi_tan_norm2() + sv(R().xi(4)).pow(2); }

CliffordExpr c_xi_tan() {
    CliffordExpr c;
    for (int j = 1; j <= 3; ++j) c += (sv(R().xi(j)) * sv(R().W)) * g(j);
    return c;
}

CliffordExpr c_xi_tan_x0() {
    CliffordExpr c;
    for (int j = 1; j <= 3; ++j) c += sv(R().xi(j)) * g(j);
    return c;
}

CliffordExpr c_dxn() { return g(4); }

CliffordExpr c_xi() { return c_xi_tan() + sv(R().xi(4)) * g(4); }

CliffordExpr torsion_u() {
    CliffordExpr u;
    for (int i = 1; i <= 4; ++i)
        for (int s = 1; s <= 4; ++s)
            for (int t = 1; t <= 4; ++t) {
                if (i == s || s == t || i == t) continue;
                auto [v, sign] = R().A(i, s, t);
                u += ScalarExpr(sign) * sv(v) * (g(i) * g(s) * g(t));
            }
    return frac(1, 4) * u;
}

CliffordExpr torsion_v() {
    // Each bracket summand runs over its own indices; A is antisymmetric in
    // its last two slots, so only the A_{iit} family survives.
    CliffordExpr v;
    for (int i = 1; i <= 4; ++i)
        for (int t = 1; t <= 4; ++t) {
            auto [a, sa] = R().A(i, i, t);
            if (sa) v -= ScalarExpr(sa) * sv(a) * g(t);
            auto [b, sb] = R().A(i, t, i);
            if (sb) v += ScalarExpr(sb) * sv(b) * g(t);
            auto [c, sc] = R().A(i, t, t);
            if (sc) v -= ScalarExpr(sc) * sv(c) * g(i);
        }
    for (int i = 1; i <= 4; ++i) {
        auto [d, sd] = R().A(i, i, i);
        if (sd) v += ScalarExpr(2 * sd) * sv(d) * g(i);
    }
    return frac(1, 4) * v;
}

CliffordExpr spin_p0() { return (frac(-3, 4) * sv(R().h1)) * g(4); }

CliffordExpr sigma0_dirac(bool adjoint) {
    CliffordExpr p = spin_p0() + torsion_u();
    return adjoint ? p - torsion_v() : p + torsion_v();
}

CliffordExpr spin_A(const std::vector<ScalarExpr>& Y) {
    CliffordExpr a;
    for (int i = 1; i <= 3; ++i) a += Y.at(i - 1) * (g(i) * g(4));
    return (frac(1, 4) * sv(R().h1)) * a;
}

CliffordExpr torsion_Tbar(const std::vector<ScalarExpr>& X) {
    CliffordExpr r;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            ScalarExpr tx;
            for (int a = 1; a <= 4; ++a) {
                auto [v, s] = R().T(a, i, j);
                tx += ScalarExpr(s) * X.at(a - 1) * sv(v);
            }
            r += (frac(3, 2) * tx) * (g(i) * g(j));
        }
    CliffordExpr cV, cX;
    ScalarExpr vx;
    for (int a = 1; a <= 4; ++a) {
        cV += sv(R().V(a)) * g(a);
        cX += X.at(a - 1) * g(a);
        vx += sv(R().V(a)) * X.at(a - 1);
    }
    return r - frac(1, 2) * (cV * cX) - CliffordExpr(frac(1, 2) * vx);
}

std::vector<ScalarExpr> field_X() {
    std::vector<ScalarExpr> x;
    for (int j = 1; j <= 4; ++j) x.push_back(sv(R().X(j)));
    return x;
}

std::vector<ScalarExpr> field_Y() {
    std::vector<ScalarExpr> y;
    for (int j = 1; j <= 4; ++j) y.push_back(sv(R().Y(j)));
    return y;
}

// ---------------------------------------------------------------- SymbolTerm

SymbolTerm operator+(const SymbolTerm& a, const SymbolTerm& b) {
    if (a.restricted_ == b.restricted_) return {a.value_ + b.value_, a.restricted_};
    SymbolTerm x = a.restrict_unit(), y = b.restrict_unit();
    return {x.value_ + y.value_, true};
}

SymbolTerm operator*(const SymbolTerm& a, const SymbolTerm& b) {
    if (!a.restricted_ && !b.restricted_) return {a.value_ * b.value_, false};
    SymbolTerm x = a.restrict_unit(), y = b.restrict_unit();
    return SymbolTerm(x.value_ * y.value_, false).restrict_unit();
}

SymbolTerm SymbolTerm::diff_xi(int j) const {
    if (restricted_ && j != kDim)
        throw std::invalid_argument("tangential xi-derivative of a term already restricted to |xi'| = 1");
    Var v = R().xi(j);
    return {value_.map([v](const ScalarExpr& e) { return e.diff(v); }), restricted_};
}

SymbolTerm SymbolTerm::diff_x(int j) const {
    if (restricted_) throw std::invalid_argument("x-derivative of a term already evaluated at x0");
    if (j < 1 || j > kDim) throw std::invalid_argument("x-derivative index out of range");
    if (j < kDim) return {};
    auto vs = value_.vars();
    if (vs.count(R().h1)) throw std::invalid_argument("x_n-derivative of h'(0): second derivative of h is not modeled");
    if (vs.count(R().kappa))
        throw std::invalid_argument("x_n-derivative of the frame atom d/dx_n c(xi'): not modeled");
    std::map<Var, Poly> d{{R().W, Poly::var(R().kappa)}};
    return {value_.map([&d](const ScalarExpr& e) { return e.derive(d); }), false};
}

SymbolTerm SymbolTerm::evaluate_x0() const {
    std::map<Var, ScalarExpr> b{{R().W, ScalarExpr(1)}};
    return {value_.map([&b](const ScalarExpr& e) { return e.subst(b); }), restricted_};
}

SymbolTerm SymbolTerm::restrict_unit() const {
    Var x3 = R().xi(3);
    Poly repl = Poly(1) - Poly::var(R().xi(1), 2) - Poly::var(R().xi(2), 2);
    std::map<Var, ScalarExpr> b{{R().W, ScalarExpr(1)}};
    return {value_.map([&](const ScalarExpr& e) { return e.subst(b).replace_square(x3, repl); }), true};
}

SymbolTerm SymbolTerm::eval_kappa() const {
    std::map<Var, ScalarExpr> b{{R().kappa, frac(1, 2) * sv(R().h1)}};
    return {value_.map([&b](const ScalarExpr& e) { return e.subst(b); }), restricted_};
}

SymbolTerm boundary_derivative(const SymbolTerm& t, Axis axis) {
    return axis.space ? t.diff_x(axis.j) : t.diff_xi(axis.j);
}

// ---------------------------------------------------------------- GradedSymbol

int GradedSymbol::top() const { return comps_.empty() ? low_ : comps_.rbegin()->first; }

SymbolTerm GradedSymbol::at(int k) const {
    auto it = comps_.find(k);
    if (it != comps_.end()) return it->second;
    if (!comps_.empty() && k > top()) return {};
    if (exact_ || k >= low_) return {};
    throw std::out_of_range("symbol " + name_ + " is not known at order " + std::to_string(k) +
                            " (truncated below order " + std::to_string(low_) + ")");
}

namespace {

using MultiIndex = std::array<int, kDim>;

void multi_indices(int total, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos == kDim - 1) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (int k = total; k >= 0; --k) {
        cur[pos] = k;
        multi_indices(total - k, pos + 1, cur, out);
    }
}

std::vector<MultiIndex> multi_indices(int total) {
    std::vector<MultiIndex> out;
    MultiIndex cur{};
    multi_indices(total, 0, cur, out);
    return out;
}

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

SymbolTerm diff_xi_multi(SymbolTerm t, const MultiIndex& a) {
    for (int j = 0; j < kDim && !t.is_zero(); ++j)
        for (int r = 0; r < a[j] && !t.is_zero(); ++r) t = t.diff_xi(j + 1);
    return t;
}

SymbolTerm diff_x_multi(SymbolTerm t, const MultiIndex& a) {
    for (int j = 0; j < kDim && !t.is_zero(); ++j)
        for (int r = 0; r < a[j] && !t.is_zero(); ++r) t = t.diff_x(j + 1);
    return t;
}

ScalarExpr compose_weight(const MultiIndex& a) {
    long den = 1;
    int s = 0;
    for (int k : a) {
        den *= factorial(k);
        s += k;
    }
    // (-i)^{|alpha|} / alpha!
    GQ w = (-GQ::I()).pow(static_cast<unsigned>(s)) / GQ(den);
    return ScalarExpr(w);
}

// Sum over a + b - |alpha| = m of (1/alpha!) d_xi^alpha P_a D_x^alpha Q_b,
// skipping the pair (skip_a, skip_b, alpha = 0).
SymbolTerm compose_order(const GradedSymbol& P, const std::map<int, SymbolTerm>& Q, int q_top, int q_low,
                         bool q_exact, const std::string& q_name, int m, int skip_a, int skip_b) {
    SymbolTerm sum;
    for (int a = P.top(); a >= m - q_top; --a) {
        for (int s = 0; m - a + s <= q_top && s <= 16; ++s) {
            int b = m - a + s;
            if (b < q_low && !q_exact) {
                if (!P.known(a) || !P.at(a).is_zero())
                    throw std::out_of_range("symbol " + q_name + " is not known at order " + std::to_string(b));
                continue;
            }
            auto qit = Q.find(b);
            if (qit == Q.end() || qit->second.is_zero()) continue;
            if (s == 0 && a == skip_a && b == skip_b) continue;
            SymbolTerm pa = P.at(a);
            if (pa.is_zero()) continue;
            for (auto& al : multi_indices(s)) {
                SymbolTerm dp = diff_xi_multi(pa, al);
                if (dp.is_zero()) continue;
                SymbolTerm dq = diff_x_multi(qit->second, al);
                if (dq.is_zero()) continue;
                sum = sum + compose_weight(al) * (dp * dq);
            }
        }
    }
    return sum;
}

}  // namespace

GradedSymbol compose(const GradedSymbol& P, const GradedSymbol& Q, int min_order) {
    std::map<int, SymbolTerm> out;
    int top = P.top() + Q.top();
    for (int m = top; m >= min_order; --m) {
        SymbolTerm t = compose_order(P, Q.components(), Q.top(), Q.low(), Q.exact(), Q.name(), m, 1 << 20, 1 << 20);
        out.emplace(m, t);
    }
    return GradedSymbol(P.name() + " o " + Q.name(), std::move(out), min_order, false);
}

CliffordExpr clifford_inverse(const CliffordExpr& x) {
    if (x.is_scalar()) {
        if (x.is_zero()) throw std::domain_error("leading symbol is zero");
        return CliffordExpr(ScalarExpr(1) / x.scalar_part());
    }
    CliffordExpr c = x.conjugate();
    CliffordExpr n = x * c;
    if (!n.is_scalar() || n.is_zero()) throw std::domain_error("leading symbol is not invertible by Clifford conjugation");
    return (ScalarExpr(1) / n.scalar_part()) * c;
}

GradedSymbol invert(const GradedSymbol& P, int min_order) {
    int m0 = P.top();
    SymbolTerm p = P.at(m0);
    SymbolTerm q0(clifford_inverse(p.value()), p.restricted());
    std::map<int, SymbolTerm> q{{-m0, q0}};
    std::string name = "(" + P.name() + ")^-1";
    for (int k = 1; -m0 - k >= min_order; ++k) {
        int b_new = -m0 - k;
        // Components of Q below b_new are not yet known; compose_order only
        // visits b >= b_new + 1 through the q map, and the (m0, b_new, 0) term is skipped.
        SymbolTerm s = compose_order(P, q, -m0, b_new, false, name, -k, m0, b_new);
        q.emplace(b_new, -(q0 * s));
    }
    return GradedSymbol(name, std::move(q), min_order, false);
}

// ---------------------------------------------------------------- operator library

std::vector<OperatorId> all_operators() {
    return {OperatorId::Dirac,       OperatorId::DiracAdj,     OperatorId::NablaXY,
            OperatorId::InvDiracSq,  OperatorId::InvDirac,     OperatorId::InvDiracAdj,
            OperatorId::InvDiracCube, OperatorId::NablaInvSq, OperatorId::NablaInvDirac};
}

std::string operator_name(OperatorId id) {
    switch (id) {
        case OperatorId::Dirac: return "D_T";
        case OperatorId::DiracAdj: return "D_T*";
        case OperatorId::NablaXY: return "nablaXnablaY";
        case OperatorId::InvDiracSq: return "(D_T*D_T)^-1";
        case OperatorId::InvDirac: return "D_T^-1";
        case OperatorId::InvDiracAdj: return "(D_T*)^-1";
        case OperatorId::InvDiracCube: return "(D_T*D_TD_T*)^-1";
        case OperatorId::NablaInvSq: return "nablaXnablaY(D_T*D_T)^-1";
        case OperatorId::NablaInvDirac: return "nablaXnablaYD_T^-1";
    }
    return "?";
}

OperatorId operator_from_name(const std::string& name) {
    for (auto id : all_operators())
        if (operator_name(id) == name) return id;
    throw std::invalid_argument("unknown operator id: " + name);
}

namespace {

SymbolTerm T(const CliffordExpr& c) { return SymbolTerm(c); }

ScalarExpr dot_xi(const std::vector<ScalarExpr>& X) {
    ScalarExpr s;
    for (int j = 1; j <= 4; ++j) s += X[j - 1] * sv(R().xi(j));
    return s;
}

GradedSymbol dirac(bool adjoint) {
    std::map<int, SymbolTerm> c{{1, T(I() * c_xi())}, {0, T(sigma0_dirac(adjoint))}};
    return GradedSymbol(adjoint ? "D_T*" : "D_T", std::move(c), 0, true);
}

GradedSymbol nabla_xy() {
    auto X = field_X(), Y = field_Y();
    ScalarExpr xx = dot_xi(X), yy = dot_xi(Y);
    ScalarExpr t1;
    for (int j = 1; j <= 4; ++j)
        for (int l = 1; l <= 4; ++l) t1 += X[j - 1] * sv(R().dY(l, j)) * sv(R().xi(l));
    // i X_j dY_l/dx_j i xi_l = -X_j dY_l/dx_j xi_l
    CliffordExpr s1 = CliffordExpr(-t1);
    CliffordExpr AY = spin_A(Y);
    s1 += (I() * xx) * AY;
    s1 += (I() * yy) * AY;
    s1 += (I() * yy) * torsion_Tbar(X);
    s1 += (I() * xx) * torsion_Tbar(Y);
    std::map<int, SymbolTerm> c{{2, T(CliffordExpr(-(xx * yy)))}, {1, T(s1)}};
    return GradedSymbol("nablaXnablaY", std::move(c), 1, false);
}

SymbolTerm inv_dirac_m2(bool adjoint) {
    SymbolTerm cx = T(c_xi());
    SymbolTerm n2 = T(CliffordExpr(xi_norm2()));
    ScalarExpr n = xi_norm2();
    SymbolTerm first = n.pow(-2) * (cx * T(sigma0_dirac(adjoint)) * cx);
    SymbolTerm bracket;
    for (int j = 1; j <= 4; ++j) {
        SymbolTerm cdx = cx.diff_xi(j);
        bracket = bracket + cdx * (cx.diff_x(j) * n2 - cx * n2.diff_x(j));
    }
    return first + n.pow(-3) * (cx * bracket);
}

SymbolTerm inv_sq_m3_printed(bool xi_k) {
    const auto& r = R();
    ScalarExpr h1 = sv(r.h1), xn = sv(r.xi(4));
    ScalarExpr q = ScalarExpr(1) + xn.pow(2);
    CliffordExpr sum;
    for (int k = 1; k <= 3; ++k) sum += (xi_k ? sv(r.xi(k)) : xn) * (g(k) * g(4));
    CliffordExpr inner = (frac(-1, 2) * h1) * sum + CliffordExpr(frac(5, 2) * h1 * xn);
    CliffordExpr cx = c_xi_tan_x0() + xn * g(4);
    CliffordExpr u = torsion_u(), v = torsion_v();
    CliffordExpr tors = (u - v) * (I() * cx) + (I() * cx) * (u + v);
    CliffordExpr val = (-I() / q.pow(2)) * inner - CliffordExpr(ScalarExpr(GQ(0, 2)) * h1 * xn / q.pow(3)) -
                       q.pow(-2) * tors;
    return SymbolTerm(val, false).restrict_unit();
}

SymbolTerm inv_cube_m4_printed() {
    const auto& r = R();
    ScalarExpr h1 = sv(r.h1), xn = sv(r.xi(4)), kap = sv(r.kappa);
    ScalarExpr q = ScalarExpr(1) + xn.pow(2);
    ScalarExpr i = I();
    CliffordExpr ct = c_xi_tan_x0();
    CliffordExpr dct = kap * ct;  // d/dx_n c(xi') at x0
    CliffordExpr br = ((frac(11, 2) * xn * q + ScalarExpr(8) * i * xn) * h1) * ct;
    br += ((ScalarExpr(-2) * i + ScalarExpr(6) * i * xn.pow(2) - frac(7, 4) * q + frac(15, 4) * xn.pow(2) * q) * h1) * g(4);
    br -= (ScalarExpr(3) * i * xn * q) * dct;
    br += (i * q) * (ct * g(4) * dct);
    CliffordExpr cx = ct + xn * g(4);
    CliffordExpr tors = cx * (ScalarExpr(3) * torsion_u() - torsion_v()) * cx;
    CliffordExpr val = q.pow(-4) * br + (q / q.pow(4)) * tors;
    return SymbolTerm(val, false).restrict_unit();
}

}  // namespace

GradedSymbol builtin_symbol(OperatorId id, const SymbolOptions& opts) {
    switch (id) {
        case OperatorId::Dirac: return dirac(false);
        case OperatorId::DiracAdj: return dirac(true);
        case OperatorId::NablaXY: return nabla_xy();
        case OperatorId::InvDiracSq: {
            std::map<int, SymbolTerm> c{{-2, T(CliffordExpr(xi_norm2().pow(-1)))}, {-3, inv_sq_m3_printed(opts.xi_k_variant)}};
            return GradedSymbol(operator_name(id), std::move(c), -3, false);
        }
        case OperatorId::InvDirac:
        case OperatorId::InvDiracAdj: {
            bool adj = id == OperatorId::InvDiracAdj;
            std::map<int, SymbolTerm> c{{-1, T((I() / xi_norm2()) * c_xi())}, {-2, inv_dirac_m2(adj)}};
            return GradedSymbol(operator_name(id), std::move(c), -2, false);
        }
        case OperatorId::InvDiracCube: {
            std::map<int, SymbolTerm> c{{-3, T((I() * xi_norm2().pow(-2)) * c_xi())}, {-4, inv_cube_m4_printed()}};
            return GradedSymbol(operator_name(id), std::move(c), -4, false);
        }
        case OperatorId::NablaInvSq: {
            GradedSymbol nab = nabla_xy();
            GradedSymbol inv = builtin_symbol(OperatorId::InvDiracSq, opts);
            ScalarExpr xx = dot_xi(field_X()), yy = dot_xi(field_Y());
            SymbolTerm s0 = T(CliffordExpr(-(xx * yy) / xi_norm2()));
            GradedSymbol c = compose(nab, inv, -1);
            std::map<int, SymbolTerm> m{{0, s0}, {-1, c.at(-1)}};
            return GradedSymbol(operator_name(id), std::move(m), -1, false);
        }
        case OperatorId::NablaInvDirac: {
            GradedSymbol nab = nabla_xy();
            GradedSymbol inv = builtin_symbol(OperatorId::InvDirac, opts);
            ScalarExpr xx = dot_xi(field_X()), yy = dot_xi(field_Y());
            SymbolTerm s1 = T((-I() * xx * yy / xi_norm2()) * c_xi());
            GradedSymbol c = compose(nab, inv, 0);
            std::map<int, SymbolTerm> m{{1, s1}, {0, c.at(0)}};
            return GradedSymbol(operator_name(id), std::move(m), 0, false);
        }
    }
    throw std::invalid_argument("unknown operator id");
}

GradedSymbol recomputed_symbol(OperatorId id) {
    switch (id) {
        case OperatorId::Dirac:
        case OperatorId::DiracAdj:
        case OperatorId::NablaXY: return builtin_symbol(id);
        case OperatorId::InvDiracSq: {
            GradedSymbol dd = compose(dirac(true), dirac(false), 1);
            GradedSymbol r = invert(dd, -3);
            return GradedSymbol(operator_name(id), r.components(), -3, false);
        }
        case OperatorId::InvDirac:
        case OperatorId::InvDiracAdj: {
            GradedSymbol r = invert(dirac(id == OperatorId::InvDiracAdj), -2);
            return GradedSymbol(operator_name(id), r.components(), -2, false);
        }
        case OperatorId::InvDiracCube: {
            GradedSymbol dd = compose(dirac(true), dirac(false), 1);
            GradedSymbol ddd = compose(dd, dirac(true), 2);
            GradedSymbol r = invert(ddd, -4);
            return GradedSymbol(operator_name(id), r.components(), -4, false);
        }
        case OperatorId::NablaInvSq: {
            GradedSymbol c = compose(nabla_xy(), recomputed_symbol(OperatorId::InvDiracSq), -1);
            std::map<int, SymbolTerm> m{{0, c.at(0)}, {-1, c.at(-1)}};
            return GradedSymbol(operator_name(id), std::move(m), -1, false);
        }
        case OperatorId::NablaInvDirac: {
            GradedSymbol c = compose(nabla_xy(), recomputed_symbol(OperatorId::InvDirac), 0);
            std::map<int, SymbolTerm> m{{1, c.at(1)}, {0, c.at(0)}};
            return GradedSymbol(operator_name(id), std::move(m), 0, false);
        }
    }
    throw std::invalid_argument("unknown operator id");
}

}  // namespace ncr
