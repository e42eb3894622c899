#include "ncr/integration.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace ncr {

namespace {

const Registry& R() { return Registry::get(); }

void require_decay(const ScalarExpr& r) {
    Var v = R().xi(4);
    if (r.num().degree(v) + 2 > r.den().degree(v))
        throw std::invalid_argument("integrand decays too slowly in xi_n (need order >= 2): " + r.str());
}

}  // namespace

ScalarExpr integrate_xi_n(const ScalarExpr& r) {
    if (r.is_zero()) return {};
    require_decay(r);
    HalfLineScalar h = partial_fractions(r);
    auto it = h.parts.find({+1, 1});
    if (it == h.parts.end()) return {};
    return ScalarExpr(GQ(0, 2)) * ScalarExpr::var(R().pi) * it->second;
}

CliffordExpr integrate_xi_n(const SymbolTerm& r) {
    return r.value().map([](const ScalarExpr& c) { return integrate_xi_n(c); });
}

ScalarExpr residue_by_derivative(const ScalarExpr& r) {
    Var v = R().xi(4);
    Poly lin = Poly::var(v) - Poly(GQ::I());
    Poly den = r.den(), q;
    int m = 0;
    while (exact_div(den, lin, q)) den = q, ++m;
    if (m == 0) return {};
    ScalarExpr f = r * ScalarExpr(lin.pow(static_cast<unsigned>(m)));
    GQ fact(1);
    for (int k = 1; k < m; ++k) {
        f = f.diff(v);
        fact *= GQ(k);
    }
    return f.subst({{v, ScalarExpr(GQ::I())}}) / ScalarExpr(fact);
}

GQ sphere_moment_ratio(const std::vector<unsigned>& k) {
    unsigned total = 0;
    mpq_class num(1), den(1);
    for (unsigned e : k) {
        if (e % 2) return GQ(0);
        total += e;
        for (unsigned f = e; f > 1; f -= 2) num *= (f - 1);  // (e-1)!!
    }
    const unsigned d = static_cast<unsigned>(k.size());
    for (unsigned s = 0; s < total / 2; ++s) den *= d + 2 * s;
    mpq_class r = num / den;
    r.canonicalize();
    return GQ(r);
}

ScalarExpr sphere_moment(const ScalarExpr& p) {
    const auto& reg = R();
    std::set<Var> tang{reg.xi(1), reg.xi(2), reg.xi(3)};
    if (p.has_var(reg.xi(4))) throw std::invalid_argument("sphere_moment: integrand depends on xi_n");
    for (Var v : tang)
        if (p.den().has_var(v)) throw std::invalid_argument("sphere_moment: integrand is not polynomial in xi'");
    Poly acc;
    for (auto& [m, c] : p.num().split(tang)) {
        std::vector<unsigned> k{m.exp(reg.xi(1)), m.exp(reg.xi(2)), m.exp(reg.xi(3))};
        GQ w = sphere_moment_ratio(k);
        if (!w.is_zero()) acc += c.scaled(w);
    }
    return ScalarExpr::make(acc * Poly::var(reg.Om3), p.den());
}

double sphere_moment_monte_carlo(const std::vector<unsigned>& k, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    double sum = 0.0;
    std::vector<double> x(k.size());
    for (std::size_t s = 0; s < samples; ++s) {
        double r2 = 0.0;
        for (auto& xi : x) {
            xi = n(rng);
            r2 += xi * xi;
        }
        double r = std::sqrt(r2), prod = 1.0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            double u = x[i] / r;
            for (unsigned e = 0; e < k[i]; ++e) prod *= u;
        }
        sum += prod;
    }
    return sum / static_cast<double>(samples);
}

Cplx eval_complex(const ScalarExpr& e, const std::map<Var, Cplx>& bindings) {
    auto ev = [&](const Poly& p) {
        Cplx s(0.0, 0.0);
        for (auto& t : p.terms()) {
            Cplx v(t.c.re.get_d(), t.c.im.get_d());
            for (std::size_t i = 0; i < t.m.size(); ++i) {
                auto it = bindings.find(t.m.var_at(i));
                if (it == bindings.end())
                    throw std::invalid_argument("unbound indeterminate: " + R().info(t.m.var_at(i)).name);
                v *= std::pow(it->second, static_cast<int>(t.m.exp_at(i)));
            }
            s += v;
        }
        return s;
    };
    return ev(e.num()) / ev(e.den());
}

Cplx numeric_contour_oracle(const ScalarExpr& r, const std::map<Var, Cplx>& bindings) {
    require_decay(r);
    Var v = R().xi(4);
    std::map<Var, Cplx> b = bindings;
    auto f = [&](double x, bool imag) {
        b[v] = Cplx(x, 0.0);
        Cplx y = eval_complex(r, b);
        return imag ? y.imag() : y.real();
    };
    using boost::math::quadrature::gauss_kronrod;
    const double inf = std::numeric_limits<double>::infinity();
    double err_re = 0, err_im = 0, l1_re = 0, l1_im = 0;
    double re = gauss_kronrod<double, 61>::integrate([&](double x) { return f(x, false); }, -inf, inf, 20, 1e-14, &err_re, &l1_re);
    double im = gauss_kronrod<double, 61>::integrate([&](double x) { return f(x, true); }, -inf, inf, 20, 1e-14, &err_im, &l1_im);
    double scale = std::max(1.0, l1_re + l1_im);
    if (!(err_re + err_im <= 1e-9 * scale)) throw std::runtime_error("numeric contour quadrature did not converge");
    return {re, im};
}

}  // namespace ncr
