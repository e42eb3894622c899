#pragma once

#include "ncr/clifford.hpp"

#include <random>
#include <vector>

namespace ncr::testing {

using Rng = std::mt19937_64;

inline const Registry& reg() { return Registry::get(); }
inline ScalarExpr sv(const std::string& name, unsigned e = 1) { return ScalarExpr::var(name, e); }
inline ScalarExpr sv(Var v, unsigned e = 1) { return ScalarExpr::var(v, e); }
inline ScalarExpr q(long p, long d = 1) { return ScalarExpr(GQ::frac(p, d)); }
inline ScalarExpr gi(long re, long im) { return ScalarExpr(GQ(re, im)); }
inline const ScalarExpr I{GQ::I()};

inline int uniform(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline GQ rand_gq(Rng& g) {
    mpq_class re(uniform(g, -9, 9), uniform(g, 1, 6)), im(uniform(g, -9, 9), uniform(g, 1, 6));
    re.canonicalize();
    im.canonicalize();
    return GQ(re, im);
}

inline Poly rand_poly(Rng& g, const std::vector<Var>& vars, int terms = 3, int max_exp = 2) {
    Poly p;
    int n = uniform(g, 1, terms);
    for (int t = 0; t < n; ++t) {
        Poly m(rand_gq(g));
        for (Var v : vars)
            if (int e = uniform(g, 0, max_exp)) m *= Poly::var(v, static_cast<unsigned>(e));
        p += m;
    }
    return p;
}

// A rational function with a nonzero denominator built from a few linear and quadratic factors.
inline ScalarExpr rand_rational(Rng& g, const std::vector<Var>& vars) {
    Poly den(1);
    int factors = uniform(g, 0, 2);
    for (int k = 0; k < factors; ++k) {
        Var v = vars[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(vars.size()) - 1))];
        Poly f = Poly::var(v, static_cast<unsigned>(uniform(g, 1, 2))) + Poly(GQ(uniform(g, 1, 4), uniform(g, 1, 3)));
        den *= f;
    }
    return ScalarExpr::make(rand_poly(g, vars), den);
}

inline std::vector<GQ> rand_point(Rng& g) {
    std::vector<GQ> p(reg().size());
    for (auto& x : p) x = rand_gq(g);
    return p;
}

inline CliffordExpr rand_clifford(Rng& g, const std::vector<Var>& vars) {
    CliffordExpr c;
    int n = uniform(g, 1, 4);
    for (int t = 0; t < n; ++t)
        c += CliffordExpr::mono(static_cast<CliffordMono>(uniform(g, 0, 15)), ScalarExpr(rand_poly(g, vars)));
    return c;
}

}  // namespace ncr::testing
