#include "support.hpp"

#include "ncr/integration.hpp"

#include <doctest.h>

#include <cmath>

using namespace ncr;
using namespace ncr::testing;

namespace {

ScalarExpr xn(unsigned e = 1) { return sv(reg().xi(4), e); }
ScalarExpr pi() { return sv(reg().pi); }
ScalarExpr om3() { return sv(reg().Om3); }
ScalarExpr xi(int j, unsigned e = 1) { return sv(reg().xi(j), e); }

// Moment of prod xi_j^{k_j} over S^2 divided by its area, from the Gamma-function formula.
double gamma_moment_ratio(const std::vector<unsigned>& k) {
    for (unsigned e : k)
        if (e % 2) return 0.0;
    double num = 1.0, beta = 0.0;
    for (unsigned e : k) {
        num *= std::tgamma((e + 1) / 2.0);
        beta += (e + 1) / 2.0;
    }
    double moment = 2.0 * num / std::tgamma(beta);
    double area = 2.0 * std::pow(M_PI, 1.5) / std::tgamma(1.5);
    return moment / area;
}

double to_double(const GQ& q) { return q.re.get_d(); }

ScalarExpr rand_tangential(Rng& g) {
    return ScalarExpr(rand_poly(g, {reg().xi(1), reg().xi(2), reg().xi(3)}, 4, 4));
}

}  // namespace

TEST_SUITE("integration") {

TEST_CASE("residue integrals") {
    CHECK(integrate_xi_n(ScalarExpr(1) / (ScalarExpr(1) + xn(2))) == pi());
    ScalarExpr r = pole_power(1, 5) * pole_power(-1, 2);
    CHECK(integrate_xi_n(r) == ScalarExpr(GQ::frac(-5, 32) * GQ::I()) * pi());
    CHECK(residue_by_derivative(r) * ScalarExpr(GQ(0, 2)) * pi() == integrate_xi_n(r));
    ScalarExpr s = (ScalarExpr(6) * xn(2) - ScalarExpr(2)) / (ScalarExpr(1) + xn(2)).pow(3);
    CHECK(integrate_xi_n(s).is_zero());
}

TEST_CASE("numeric contour oracle") {
    Cplx a = numeric_contour_oracle(ScalarExpr(1) / (ScalarExpr(1) + xn(2)), {});
    CHECK(std::abs(a - Cplx(M_PI, 0)) < 1e-9);
    Cplx b = numeric_contour_oracle(pole_power(1, 5) * pole_power(-1, 2), {});
    CHECK(std::abs(b - Cplx(0, -5 * M_PI / 32)) < 1e-9);
    CHECK(std::abs(b - Cplx(0, -0.4908738521234052)) < 1e-9);
    ScalarExpr s = (ScalarExpr(6) * xn(2) - ScalarExpr(2)) / (ScalarExpr(1) + xn(2)).pow(3);
    CHECK(std::abs(numeric_contour_oracle(s, {})) < 1e-9);
}

TEST_CASE("exact and numeric integrals agree with bound coefficients") {
    Rng g(41);
    Var h = reg().h1;
    for (int k = 0; k < 60; ++k) {
        int a = uniform(g, 1, 4), b = uniform(g, 1, 4);
        ScalarExpr num;
        for (int d = 0; d <= a + b - 2; ++d)
            num += ScalarExpr(rand_gq(g)) * (ScalarExpr(1) + ScalarExpr(uniform(g, 0, 2)) * sv(h)) * xn(static_cast<unsigned>(d));
        ScalarExpr r = num * pole_power(1, a) * pole_power(-1, b);
        std::map<Var, Cplx> bind{{h, Cplx(0.75, 0)}, {reg().pi, Cplx(M_PI, 0)}};
        Cplx exact = eval_complex(integrate_xi_n(r), bind);
        Cplx numeric = numeric_contour_oracle(r, {{h, Cplx(0.75, 0)}});
        CHECK(std::abs(exact - numeric) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("contour integration rejects bad integrands") {
    CHECK_THROWS_AS(integrate_xi_n(xn() / (ScalarExpr(1) + xn(2))), std::invalid_argument);
    CHECK_THROWS_AS(integrate_xi_n(ScalarExpr(1)), std::invalid_argument);
    CHECK_THROWS(integrate_xi_n(ScalarExpr(1) / (xn(2) + ScalarExpr(4))));
    CHECK_THROWS(integrate_xi_n(ScalarExpr(1) / xn(2)));
    CHECK_THROWS_AS(numeric_contour_oracle(sv("h1") / (ScalarExpr(1) + xn(2)), {}), std::invalid_argument);
}

TEST_CASE("sphere moments") {
    CHECK(sphere_moment(ScalarExpr(1)) == om3());
    for (int j = 1; j <= 3; ++j)
        for (int l = 1; l <= 3; ++l) CHECK(sphere_moment(xi(j) * xi(l)) == (j == l ? q(1, 3) * om3() : ScalarExpr()));
    CHECK(sphere_moment(xi(1, 4)) == q(1, 5) * om3());
    CHECK(sphere_moment(xi(1, 2) * xi(2, 2)) == q(1, 15) * om3());
    CHECK(sphere_moment(xi(1) * xi(2, 2)).is_zero());
    // Omega_3 = 4 pi gives 4 pi / 3 for xi_j^2.
    CHECK(sphere_moment(xi(2, 2)).subst({{reg().Om3, ScalarExpr(4) * pi()}}) == q(4, 3) * pi());
}

TEST_CASE("exact moments match the Gamma-function formula") {
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6 - a; ++b)
            for (unsigned c = 0; c <= 6 - a - b; ++c) {
                std::vector<unsigned> k{a, b, c};
                CHECK(to_double(sphere_moment_ratio(k)) == doctest::Approx(gamma_moment_ratio(k)).epsilon(1e-12));
            }
}

TEST_CASE("Monte Carlo agrees with the exact moments") {
    std::vector<unsigned> k{2, 0, 0};
    double mc = sphere_moment_monte_carlo(k, 10'000'000, 5);
    CHECK(std::abs(mc - 1.0 / 3.0) < 1e-3 / 3.0);
    std::vector<unsigned> k4{0, 4, 0};
    CHECK(std::abs(sphere_moment_monte_carlo(k4, 2'000'000, 6) - 0.2) < 2e-3);
}

TEST_CASE("sphere moment invariances") {
    Rng g(42);
    std::map<Var, ScalarExpr> cycle{{reg().xi(1), xi(2)}, {reg().xi(2), xi(3)}, {reg().xi(3), xi(1)}};
    std::map<Var, ScalarExpr> swap{{reg().xi(1), xi(2)}, {reg().xi(2), xi(1)}};
    for (int k = 0; k < 100; ++k) {
        ScalarExpr p = rand_tangential(g), r = rand_tangential(g);
        ScalarExpr m = sphere_moment(p);
        CHECK(sphere_moment(p + ScalarExpr(3) * r) == m + ScalarExpr(3) * sphere_moment(r));
        CHECK(sphere_moment(p.subst(cycle)) == m);
        CHECK(sphere_moment(p.subst(swap)) == m);
        int j = uniform(g, 1, 3);
        CHECK(sphere_moment(p.subst({{reg().xi(j), -xi(j)}})) == m);
    }
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; b <= 5 - a; ++b)
            for (unsigned c = 0; c <= 5 - a - b; ++c)
                if ((a + b + c) % 2) CHECK(sphere_moment(xi(1, a) * xi(2, b) * xi(3, c)).is_zero());
}

TEST_CASE("sphere moment rejects normal and rational input") {
    CHECK_THROWS_AS(sphere_moment(xn()), std::invalid_argument);
    CHECK_THROWS_AS(sphere_moment(ScalarExpr(1) / (ScalarExpr(1) + xi(1, 2))), std::invalid_argument);
}

}
