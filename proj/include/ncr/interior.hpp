#pragma once

#include "ncr/clifford.hpp"

#include <string>
#include <vector>

namespace ncr {

// Zeroth-order part E of the torsion Laplacian, Delta_T = Delta + E, in n = 4.
struct EndomorphismE {
    ScalarExpr scalar;       // coefficient of the identity
    CliffordExpr dT;         // -3/2 dT
    CliffordExpr T_dot_V;    // -9 T.V
    CliffordExpr V_hook_T;   // -9 V _| T
    CliffordExpr full() const;
};

EndomorphismE endomorphism_E();
ScalarExpr trace_E();

struct TracePart {
    std::string name;
    ScalarExpr value;
};
// Trace of each summand of E separately.
std::vector<TracePart> trace_E_parts();

// The connection form A(e_a) of the torsion connection at x0 in normal
// coordinates (the spin-connection part vanishes there).
CliffordExpr connection_form(int a);

struct IdentityCheck {
    std::string name;
    ScalarExpr value;  // expected to be zero
};
// Traces that make the curvature contribution F(X, Y) vanish, each contracted
// with X^a Y^b and summed over a, b.
std::vector<IdentityCheck> curvature_trace_identities();
ScalarExpr curvature_functional();  // sum_{a,b} X^a Y^b Tr F_{ab}

// 2 pi^m / Gamma(m): volume of the unit sphere S^{2m-1}.
ScalarExpr unit_sphere_volume(int m);

// Right-hand side of the Einstein functional with torsion in dimension n = 2m,
// as the integrand against vol_g. m = 2 uses the Clifford engine for Tr E.
ScalarExpr einstein_functional_rhs(int m);

}  // namespace ncr
