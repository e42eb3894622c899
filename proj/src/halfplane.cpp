#include "ncr/halfplane.hpp"

#include <stdexcept>

namespace ncr {

namespace {

Var xin() { return Registry::get().xi(4); }

Poly linear(int pole) { return Poly::var(xin()) - Poly(GQ(0, pole)); }

// Coefficients t^0..t^{len-1} of (t + d)^{-e}.
std::vector<GQ> inverse_power_series(const GQ& d, int e, int len) {
    std::vector<GQ> c(len);
    GQ dinv = d.inv();
    GQ base = dinv.pow(static_cast<unsigned>(e));
    // binom(-e, k) = (-1)^k binom(e+k-1, k)
    GQ term = base;
    for (int k = 0; k < len; ++k) {
        c[k] = term;
        term = term * GQ(-(e + k)) / GQ(k + 1) * dinv;
    }
    return c;
}

// Truncated Taylor coefficients of num(xi_n) / (xi_n - other)^e around xi_n = pole.
std::vector<Poly> local_coeffs(const Poly& num, int pole, int other, int e, int len) {
    Poly shifted = num.subst(xin(), Poly::var(xin()) + Poly(GQ(0, pole)));
    auto sc = shifted.coeffs(xin());
    std::vector<GQ> ser = inverse_power_series(GQ(0, pole - other), e, len);
    std::vector<Poly> out(len);
    for (int j = 0; j < len; ++j)
        for (int k = 0; k <= j; ++k)
            if (k < static_cast<int>(sc.size())) out[j] += sc[k].scaled(ser[j - k]);
    return out;
}

}  // namespace

ScalarExpr pole_power(int pole, int m) { return ScalarExpr(linear(pole)).pow(-m); }

HalfLineScalar partial_fractions(const ScalarExpr& r) {
    HalfLineScalar out;
    if (r.is_zero()) return out;
    Var v = xin();
    Poly den = r.den();
    int a = 0, b = 0;
    Poly q;
    while (den.has_var(v) && exact_div(den, linear(+1), q)) den = q, ++a;
    while (den.has_var(v) && exact_div(den, linear(-1), q)) den = q, ++b;
    if (den.has_var(v))
        throw std::invalid_argument("pole away from +i/-i: denominator factor " + den.str());
    // r = num / (den * (xi_n - i)^a (xi_n + i)^b), den free of xi_n
    ScalarExpr rden = ScalarExpr(1) / ScalarExpr(den);
    Poly B = linear(+1).pow(a) * linear(-1).pow(b);
    Poly pq, rem;
    divmod_in(r.num(), B, v, pq, rem);
    if (!pq.is_zero()) out.poly = ScalarExpr(pq) * rden;
    if (rem.is_zero()) return out;
    if (a > 0) {
        auto c = local_coeffs(rem, +1, -1, b, a);
        for (int m = 1; m <= a; ++m)
            if (!c[a - m].is_zero()) out.parts[{+1, m}] = ScalarExpr(c[a - m]) * rden;
    }
    if (b > 0) {
        auto c = local_coeffs(rem, -1, +1, a, b);
        for (int m = 1; m <= b; ++m)
            if (!c[b - m].is_zero()) out.parts[{-1, m}] = ScalarExpr(c[b - m]) * rden;
    }
    return out;
}

HalfLineRational partial_fractions(const SymbolTerm& r) {
    HalfLineRational out;
    out.restricted = r.restricted();
    for (auto& [m, c] : r.value().terms()) {
        HalfLineScalar s = partial_fractions(c);
        for (auto& [k, v] : s.parts) out.parts[k] += CliffordExpr::mono(m, v);
        out.poly += CliffordExpr::mono(m, s.poly);
    }
    for (auto it = out.parts.begin(); it != out.parts.end();)
        it = it->second.is_zero() ? out.parts.erase(it) : std::next(it);
    return out;
}

SymbolTerm HalfLineRational::plus_part() const {
    CliffordExpr r;
    for (auto& [k, c] : parts)
        if (k.first > 0) r += pole_power(+1, k.second) * c;
    return {r, restricted};
}

SymbolTerm HalfLineRational::minus_part() const {
    CliffordExpr r = poly;
    for (auto& [k, c] : parts)
        if (k.first < 0) r += pole_power(-1, k.second) * c;
    return {r, restricted};
}

SymbolTerm HalfLineRational::reassemble() const { return plus_part() + minus_part(); }

SymbolTerm pi_plus(const SymbolTerm& r) { return partial_fractions(r).plus_part(); }

SymbolTerm pi_minus(const SymbolTerm& r) { return partial_fractions(r).minus_part(); }

CliffordExpr pi_prime(const SymbolTerm& r) {
    HalfLineRational h = partial_fractions(r);
    auto it = h.parts.find({+1, 1});
    if (it == h.parts.end()) return {};
    return ScalarExpr(GQ::I()) * it->second;
}

}  // namespace ncr
