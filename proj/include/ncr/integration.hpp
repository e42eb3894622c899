#pragma once

#include "ncr/halfplane.hpp"

#include <complex>
#include <cstdint>
#include <map>

namespace ncr {

// Integral over the real xi_n line by closing upward: 2 pi i Res_{+i}.
// Requires decay of order at least 2 in xi_n. The result carries the
// indeterminate pi.
ScalarExpr integrate_xi_n(const ScalarExpr& r);
CliffordExpr integrate_xi_n(const SymbolTerm& r);

// Residue at +i by (1/(m-1)!) d^{m-1}/dxi_n^{m-1}[(xi_n - i)^m r] at xi_n = i.
ScalarExpr residue_by_derivative(const ScalarExpr& r);

// Integral of a polynomial in xi_1..xi_{n-1} over the unit sphere, in units
// of the total volume Omega_3.
ScalarExpr sphere_moment(const ScalarExpr& p);
// Exact moment of xi_1^k1 xi_2^k2 xi_3^k3 divided by Omega_3.
GQ sphere_moment_ratio(const std::vector<unsigned>& k);
double sphere_moment_monte_carlo(const std::vector<unsigned>& k, std::size_t samples, std::uint64_t seed);

using Cplx = std::complex<double>;
Cplx eval_complex(const ScalarExpr& e, const std::map<Var, Cplx>& bindings);
// Numeric quadrature over the real xi_n line; all other variables bound.
Cplx numeric_contour_oracle(const ScalarExpr& r, const std::map<Var, Cplx>& bindings);

}  // namespace ncr
