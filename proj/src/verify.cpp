#include "ncr/verify.hpp"

#include "ncr/integration.hpp"
#include "ncr/interior.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace ncr {

namespace {

using Rng = std::mt19937_64;

const Registry& R() { return Registry::get(); }
ScalarExpr sv(Var v) { return ScalarExpr::var(v); }

int uniform(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

GQ rand_gq(Rng& g, bool complex = true) {
    GQ c = GQ::frac(uniform(g, -7, 7), uniform(g, 1, 5));
    if (complex) c.im = mpq_class(uniform(g, -7, 7), uniform(g, 1, 5)), c.im.canonicalize();
    return c;
}

// A few-term polynomial in the given variables.
ScalarExpr rand_poly(Rng& g, const std::vector<Var>& vars) {
    ScalarExpr s;
    int terms = uniform(g, 1, 3);
    for (int t = 0; t < terms; ++t) {
        ScalarExpr m(rand_gq(g));
        for (Var v : vars) {
            int e = uniform(g, 0, 2);
            if (e) m *= ScalarExpr::var(v, static_cast<unsigned>(e));
        }
        s += m;
    }
    return s;
}

CliffordExpr rand_clifford(Rng& g, const std::vector<Var>& vars) {
    CliffordExpr c;
    int terms = uniform(g, 1, 5);
    for (int t = 0; t < terms; ++t)
        c += CliffordExpr::mono(static_cast<CliffordMono>(uniform(g, 0, 15)), rand_poly(g, vars));
    return c;
}

std::vector<GQ> rand_point(Rng& g) {
    std::vector<GQ> p(R().size());
    for (auto& x : p) x = rand_gq(g);
    return p;
}

// (xi_n - i)^{-a} (xi_n + i)^{-b} times a polynomial of degree <= max_deg in xi_n.
ScalarExpr rand_halfline(Rng& g, int a, int b, int max_deg, const std::vector<Var>& coeff_vars) {
    Var xn = R().xi(kDim);
    ScalarExpr num;
    for (int d = 0; d <= max_deg; ++d) {
        ScalarExpr c(rand_gq(g));
        if (!coeff_vars.empty() && uniform(g, 0, 1)) c *= rand_poly(g, coeff_vars);
        num += c * ScalarExpr::var(xn, static_cast<unsigned>(d));
    }
    if (num.is_zero()) num = ScalarExpr(1);
    ScalarExpr den(1);
    if (a) den *= pole_power(1, a);
    if (b) den *= pole_power(-1, b);
    return num * den;
}

struct Tally {
    std::size_t failed = 0;
    std::string first;
    void fail(const std::string& what) {
        if (failed++ == 0) first = what;
    }
    SelfCheck check(const std::string& name, std::size_t total) const {
        std::ostringstream os;
        os << total - failed << "/" << total << " passed";
        if (failed) os << "; first failure: " << first;
        return {name, failed == 0, os.str()};
    }
};

SelfCheck exact_check(const std::string& name, const ScalarExpr& got, const ScalarExpr& want) {
    if (got == want) return {name, true, got.str()};
    return {name, false, "got " + got.str() + ", expected " + want.str()};
}

SelfCheck exact_check(const std::string& name, const CliffordExpr& got, const CliffordExpr& want) {
    if (got == want) return {name, true, got.str()};
    return {name, false, "got " + got.str() + ", expected " + want.str()};
}

std::map<Var, GQ> bind_exact(const std::vector<Var>& vars, const std::vector<GQ>& point) {
    std::map<Var, GQ> b;
    for (Var v : vars) b[v] = point.at(v);
    return b;
}

std::map<Var, Cplx> bind_complex(const std::vector<Var>& vars, const std::vector<GQ>& point) {
    std::map<Var, Cplx> b;
    for (Var v : vars) b[v] = Cplx(point.at(v).re.get_d(), point.at(v).im.get_d());
    b[R().pi] = Cplx(M_PI, 0.0);
    return b;
}

}  // namespace

bool Suite::passed() const {
    for (auto& c : checks)
        if (!c.passed) return false;
    return true;
}

Suite verify_clifford(const OracleCounts& n, std::uint64_t seed) {
    Suite s{"clifford", {}};
    Rng g(seed);

    Tally mono;
    for (int m = 0; m < (1 << kDim); ++m) {
        CliffordExpr e = CliffordExpr::mono(static_cast<CliffordMono>(m));
        ScalarExpr t = cl_trace(e);
        GQ oracle = matrix_oracle_trace(e, {});
        if (!t.is_const() || t.const_value() != oracle)
            mono.fail(cl_mono_str(static_cast<CliffordMono>(m)) + ": engine " + t.str() + ", matrix " + oracle.str());
    }
    s.checks.push_back(mono.check("monomial traces vs matrix oracle", 1u << kDim));

    Tally anti;
    for (int i = 1; i <= kDim; ++i)
        for (int j = 1; j <= kDim; ++j) {
            CliffordExpr a = CliffordExpr::gen(i), b = CliffordExpr::gen(j);
            CliffordExpr want(i == j ? -2 : 0);
            if (a * b + b * a != want) anti.fail("c(e_" + std::to_string(i) + "), c(e_" + std::to_string(j) + ")");
        }
    s.checks.push_back(anti.check("anticommutation", kDim * kDim));

    std::vector<Var> vars{R().lookup("X1"), R().lookup("Y2"), R().h1, R().xi(1)};
    Tally oracle, cyclic;
    for (std::size_t k = 0; k < n.clifford; ++k) {
        CliffordExpr a = rand_clifford(g, vars), b = rand_clifford(g, vars);
        CliffordExpr ab = a * b;
        ScalarExpr t = cl_trace(ab);
        if (t != cl_trace(b * a)) cyclic.fail("a = " + a.str() + ", b = " + b.str());
        auto point = rand_point(g);
        GQ want = matrix_oracle_trace(ab, bind_exact(vars, point));
        if (t.eval(point) != want) oracle.fail("a*b = " + ab.str());
    }
    s.checks.push_back(oracle.check("random traces vs matrix oracle", n.clifford));
    s.checks.push_back(cyclic.check("trace cyclicity", n.clifford));

    s.checks.push_back(exact_check("Tr(u c(xi')) = 0", cl_trace(torsion_u() * c_xi_tan_x0()), ScalarExpr()));
    CliffordExpr ct = c_xi_tan_x0(), c4 = c_dxn();
    SymbolTerm t(CliffordExpr(cl_trace(c4 * ct * c4 * ((GQ::frac(1, 2) * sv(R().h1)) * ct))));
    s.checks.push_back(exact_check("Tr[c(dx_n)c(xi')c(dx_n) d_xn c(xi')] at |xi'| = 1", t.restrict_unit().value(),
                                   CliffordExpr(ScalarExpr(-2) * sv(R().h1))));
    return s;
}

Suite verify_trace_identities() {
    Suite s{"trace identities", {}};
    for (auto& id : curvature_trace_identities()) s.checks.push_back(exact_check(id.name + " = 0", id.value, ScalarExpr()));
    const auto& r = R();
    ScalarExpr bracket = ScalarExpr(GQ::frac(-1, 4)) * sv(r.s_scal) - ScalarExpr(GQ::frac(3, 2)) * sv(r.divV) +
                         ScalarExpr(GQ::frac(3, 2)) * sv(r.normT2) + ScalarExpr(GQ::frac(9, 2)) * sv(r.normV2);
    s.checks.push_back(exact_check("Tr E = 2^{n/2} (scalar part)", trace_E(), ScalarExpr(4) * bracket));
    for (auto& p : trace_E_parts())
        if (p.name != "identity") s.checks.push_back(exact_check("Tr of the " + p.name + " part = 0", p.value, ScalarExpr()));
    TorsionSwitches off{false, false, false};
    s.checks.push_back(exact_check("Tr E without torsion = -s", apply_switches(trace_E(), off), -sv(r.s_scal)));
    return s;
}

Suite verify_halfplane(const OracleCounts& n, std::uint64_t seed) {
    Suite s{"halfplane", {}};
    Rng g(seed);
    const auto& r = R();
    Var xn = r.xi(kDim);
    const ScalarExpr I(GQ::I());

    // Tangential part of sigma_0 of nabla_X nabla_Y (D_T^* D_T)^{-1}.
    std::map<Var, ScalarExpr> tangential{{r.X(kDim), ScalarExpr()}, {r.Y(kDim), ScalarExpr()}};
    SymbolTerm s0 = builtin_symbol(OperatorId::NablaInvSq).at(0).restrict_unit().map(
        [&](const ScalarExpr& e) { return e.subst(tangential); });
    ScalarExpr xy;
    for (int j = 1; j < kDim; ++j)
        for (int l = 1; l < kDim; ++l) xy += sv(r.X(j)) * sv(r.Y(l)) * sv(r.xi(j)) * sv(r.xi(l));
    SymbolTerm want(CliffordExpr(I / (ScalarExpr(2) * (sv(xn) - I)) * xy));
    SymbolTerm got = pi_plus(s0);
    s.checks.push_back(exact_check("pi_plus tangential term", got.value(), want.restrict_unit().value()));

    // Contour definition: for Im z < 0, pi_plus h(z) = -1/(2 pi i) int h(t)/(t - z) dt.
    ScalarExpr h = s0.value().scalar_part();
    GQ z(mpq_class(1, 3), mpq_class(-1, 2));
    // The only enclosed pole is +i, so the integral is 2 pi i times its residue.
    ScalarExpr cauchy = -residue_by_derivative(h / (sv(xn) - ScalarExpr(z)));
    ScalarExpr at_z = got.value().scalar_part().subst({{xn, ScalarExpr(z)}});
    s.checks.push_back(exact_check("pi_plus vs Cauchy integral (exact)", cauchy, at_z));
    {
        std::vector<Var> vars;
        for (int j = 1; j < kDim; ++j) vars.insert(vars.end(), {r.X(j), r.Y(j), r.xi(j)});
        auto point = rand_point(g);
        auto b = bind_complex(vars, point);
        Cplx quad = numeric_contour_oracle(h / (sv(xn) - ScalarExpr(z)), b) / Cplx(0.0, -2.0 * M_PI);
        b[xn] = Cplx(z.re.get_d(), z.im.get_d());
        Cplx exact = eval_complex(got.value().scalar_part(), b);
        bool ok = std::abs(quad - exact) <= 1e-9 * std::max(1.0, std::abs(exact));
        std::ostringstream os;
        os << "quadrature " << quad << ", projection " << exact;
        s.checks.push_back({"pi_plus vs Cauchy integral (quadrature)", ok, os.str()});
    }

    std::vector<Var> vars{r.lookup("X1"), r.h1};
    Tally idem, split, minus_only, prime;
    std::size_t n_minus = 0, n_prime = 0;
    for (std::size_t k = 0; k < n.halfplane; ++k) {
        int a = uniform(g, 0, 4), b = uniform(g, 0, 4);
        if (a + b == 0) a = 1;
        CliffordExpr v;
        int monos = uniform(g, 1, 3);
        for (int m = 0; m < monos; ++m)
            v += CliffordExpr::mono(static_cast<CliffordMono>(uniform(g, 0, 15)), rand_halfline(g, a, b, a + b + 1, vars));
        SymbolTerm t(v, true);
        SymbolTerm p = pi_plus(t);
        if (pi_plus(p) != p) idem.fail(v.str());
        if (p + pi_minus(t) != t) split.fail(v.str());
        if (b > 0) {
            ++n_minus;
            SymbolTerm lower(CliffordExpr(rand_halfline(g, 0, b, b - 1, vars)), true);
            if (!pi_plus(lower).is_zero()) minus_only.fail(lower.value().str());
        }
        if (a + b >= 2) {
            ++n_prime;
            SymbolTerm dec(CliffordExpr(rand_halfline(g, a, b, a + b - 2, vars)), true);
            if (pi_prime(pi_plus(dec)) != pi_prime(dec)) prime.fail(dec.value().str());
        }
    }
    s.checks.push_back(idem.check("pi_plus idempotent", n.halfplane));
    s.checks.push_back(split.check("pi_plus + pi_minus = id", n.halfplane));
    s.checks.push_back(minus_only.check("pi_plus kills poles at -i", n_minus));
    s.checks.push_back(prime.check("pi_prime o pi_plus = pi_prime", n_prime));
    return s;
}

Suite verify_contour(const OracleCounts& n, std::uint64_t seed) {
    Suite s{"contour", {}};
    Rng g(seed);
    const auto& r = R();
    Var xn = r.xi(kDim);
    const ScalarExpr I(GQ::I()), pi = sv(r.pi);

    ScalarExpr f = pole_power(1, 5) * pole_power(-1, 2);
    ScalarExpr want = ScalarExpr(GQ(0, mpq_class(-5, 32))) * pi;
    s.checks.push_back(exact_check("int (xi_n-i)^-5 (xi_n+i)^-2 = -5 pi i/32", integrate_xi_n(f), want));
    s.checks.push_back(exact_check("derivative-formula residue oracle", ScalarExpr(2) * pi * I * residue_by_derivative(f), want));
    s.checks.push_back(exact_check("int 1/(1+xi_n^2) = pi", integrate_xi_n(ScalarExpr(1) / (ScalarExpr(1) + sv(xn).pow(2))), pi));

    Tally quad, res;
    std::size_t zeros = 0;
    std::map<Var, Cplx> b{{r.pi, Cplx(M_PI, 0.0)}};
    for (std::size_t k = 0; k < n.contour; ++k) {
        int a = uniform(g, 1, 4), c = uniform(g, 0, 4);
        if (a + c < 2) c = 2 - a;
        ScalarExpr e = rand_halfline(g, a, c, uniform(g, 0, a + c - 2), {});
        ScalarExpr exact = integrate_xi_n(e);
        if (ScalarExpr(2) * pi * I * residue_by_derivative(e) != exact) res.fail(e.str());
        Cplx x = eval_complex(exact, b), q = numeric_contour_oracle(e, b);
        // An exactly vanishing integral has no relative scale; it gets an absolute bound.
        double tol = exact.is_zero() ? 1e-9 : 1e-9 * std::abs(x);
        if (exact.is_zero()) ++zeros;
        if (std::abs(x - q) > tol) {
            std::ostringstream os;
            os << e.str() << ": exact " << x << ", quadrature " << q;
            quad.fail(os.str());
        }
    }
    SelfCheck qc = quad.check("exact vs quadrature, 1e-9 relative", n.contour);
    qc.detail += "; " + std::to_string(zeros) + " exact zeros";
    s.checks.push_back(qc);
    s.checks.push_back(res.check("residue theorem vs derivative formula", n.contour));
    return s;
}

Suite verify_sphere(const OracleCounts& n, std::uint64_t seed) {
    Suite s{"sphere", {}};
    const auto& r = R();
    ScalarExpr om = sv(r.Om3);
    Tally second;
    for (int j = 1; j < kDim; ++j)
        for (int l = 1; l < kDim; ++l) {
            ScalarExpr got = sphere_moment(sv(r.xi(j)) * sv(r.xi(l)));
            ScalarExpr want = j == l ? om / ScalarExpr(3) : ScalarExpr();
            if (got != want) second.fail("xi" + std::to_string(j) + " xi" + std::to_string(l) + " -> " + got.str());
        }
    s.checks.push_back(second.check("xi_j xi_l -> delta Omega_3/3", 9));
    s.checks.push_back(exact_check("1 -> Omega_3", sphere_moment(ScalarExpr(1)), om));
    s.checks.push_back(exact_check("xi_1^4 -> Omega_3/5", sphere_moment(sv(r.xi(1)).pow(4)), om / ScalarExpr(5)));

    Tally odd;
    std::size_t odd_total = 0;
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; a + b <= 5; ++b)
            for (unsigned c = 0; a + b + c <= 5; ++c) {
                if ((a + b + c) % 2 == 0) continue;
                ++odd_total;
                ScalarExpr m = sv(r.xi(1)).pow(a) * sv(r.xi(2)).pow(b) * sv(r.xi(3)).pow(c);
                if (!sphere_moment(m).is_zero()) odd.fail(m.str());
            }
    s.checks.push_back(odd.check("odd moments vanish", odd_total));

    Tally mc;
    std::vector<std::vector<unsigned>> ks{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {4, 0, 0}, {2, 2, 0}};
    for (std::size_t i = 0; i < ks.size(); ++i) {
        double exact = 4.0 * M_PI * sphere_moment_ratio(ks[i]).re.get_d();
        double est = 4.0 * M_PI * sphere_moment_monte_carlo(ks[i], n.sphere, seed + i);
        if (std::abs(est - exact) > 1e-3 * std::abs(exact)) {
            std::ostringstream os;
            os << "(" << ks[i][0] << "," << ks[i][1] << "," << ks[i][2] << "): exact " << exact << ", Monte Carlo " << est;
            mc.fail(os.str());
        }
    }
    s.checks.push_back(mc.check("Monte Carlo with Omega_3 = 4 pi, 1e-3 relative", ks.size()));
    return s;
}

Suite verify_parametrix() {
    Suite s{"parametrix", {}};
    auto identity = [&](const std::string& name, const GradedSymbol& P, const GradedSymbol& Q, int lowest) {
        Tally t;
        int total = 0;
        GradedSymbol c = compose(P, Q, lowest);
        for (int k = 0; k >= lowest; --k, ++total) {
            CliffordExpr want(k == 0 ? 1 : 0);
            if (c.at(k).value() != want) t.fail("order " + std::to_string(k) + ": " + c.at(k).value().str());
        }
        s.checks.push_back(t.check(name, static_cast<std::size_t>(total)));
    };
    for (OperatorId id : {OperatorId::Dirac, OperatorId::DiracAdj}) {
        GradedSymbol P = builtin_symbol(id), Q = invert(P, -2);
        identity("compose(" + operator_name(id) + ", invert)", P, Q, -1);
        identity("compose(invert, " + operator_name(id) + ")", Q, P, -1);
    }
    GradedSymbol dd = compose(builtin_symbol(OperatorId::DiracAdj), builtin_symbol(OperatorId::Dirac), 1);
    identity("compose(D_T^*D_T, invert)", dd, invert(dd, -3), -1);

    GradedSymbol printed = builtin_symbol(OperatorId::InvDiracSq), variant = builtin_symbol(OperatorId::InvDiracSq, {true});
    GradedSymbol recomputed = recomputed_symbol(OperatorId::InvDiracSq);
    auto x0 = [](const SymbolTerm& t) { return t.restrict_unit().eval_kappa().value(); };
    s.checks.push_back(exact_check("sigma_-2 of (D_T^*D_T)^{-1}: printed = recomputed", x0(printed.at(-2)), x0(recomputed.at(-2))));
    for (auto [name, sym] : {std::pair{"printed", &printed}, std::pair{"printed-xik", &variant}}) {
        CliffordExpr d = x0(sym->at(-3)) - x0(recomputed.at(-3));
        s.checks.push_back({std::string("sigma_-3 of (D_T^*D_T)^{-1}: ") + name + " - recomputed at x0", true,
                            d.is_zero() ? "0" : d.str()});
    }
    return s;
}

std::vector<Suite> run_oracle_suites(const OracleCounts& n, std::uint64_t seed) {
    return {verify_clifford(n, seed),     verify_trace_identities(), verify_halfplane(n, seed + 1),
            verify_contour(n, seed + 2), verify_sphere(n, seed + 3),  verify_parametrix()};
}

}  // namespace ncr
