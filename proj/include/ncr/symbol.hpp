#pragma once

#include "ncr/clifford.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncr {

// Frame model at the boundary point: the tangential coframe carries the factor
// W = sqrt(h(x_n)); W = 1 at x0 and d/dx_n W = kappa, which equals h'(0)/2 there.
ScalarExpr xi_norm2();          // |xi|^2 = W^2 (xi1^2+xi2^2+xi3^2) + xin^2
ScalarExpr xi_tan_norm2();      // |xi'|^2 = xi1^2+xi2^2+xi3^2
CliffordExpr c_xi();            // c(xi)
CliffordExpr c_xi_tan();        // c(xi') = sum_{j<n} xi_j W c(e_j)
CliffordExpr c_xi_tan_x0();     // c(xi') with W = 1
CliffordExpr c_dxn();           // c(e_n)

CliffordExpr torsion_u();
CliffordExpr torsion_v();
CliffordExpr spin_p0();                          // spin-connection part of sigma_0(D_T) at x0
CliffordExpr sigma0_dirac(bool adjoint);         // sigma_0(D_T) or sigma_0(D_T^*)
CliffordExpr spin_A(const std::vector<ScalarExpr>& Y);  // A(Y) at x0
CliffordExpr torsion_Tbar(const std::vector<ScalarExpr>& X);
std::vector<ScalarExpr> field_X();
std::vector<ScalarExpr> field_Y();

// One homogeneous component. A restricted term has been evaluated at x0 with
// |xi'| = 1 imposed; it admits only xi_n derivatives.
class SymbolTerm {
public:
    SymbolTerm() = default;
    SymbolTerm(CliffordExpr v, bool restricted = false) : value_(std::move(v)), restricted_(restricted) {}

    const CliffordExpr& value() const { return value_; }
    bool restricted() const { return restricted_; }
    bool is_zero() const { return value_.is_zero(); }

    SymbolTerm operator-() const { return {-value_, restricted_}; }
    friend SymbolTerm operator+(const SymbolTerm& a, const SymbolTerm& b);
    friend SymbolTerm operator-(const SymbolTerm& a, const SymbolTerm& b) { return a + (-b); }
    friend SymbolTerm operator*(const SymbolTerm& a, const SymbolTerm& b);
    friend SymbolTerm operator*(const ScalarExpr& s, const SymbolTerm& a) { return {s * a.value_, a.restricted_}; }
    friend bool operator==(const SymbolTerm& a, const SymbolTerm& b) {
        return a.restricted_ == b.restricted_ && a.value_ == b.value_;
    }

    SymbolTerm diff_xi(int j) const;
    SymbolTerm diff_x(int j) const;
    SymbolTerm evaluate_x0() const;   // W -> 1
    SymbolTerm restrict_unit() const;  // evaluate_x0 and |xi'| = 1
    SymbolTerm eval_kappa() const;     // kappa -> h'(0)/2
    SymbolTerm map(const std::function<ScalarExpr(const ScalarExpr&)>& f) const { return {value_.map(f), restricted_}; }

private:
    CliffordExpr value_;
    bool restricted_ = false;
};

struct Axis {
    bool space;  // true: x_j, false: xi_j
    int j;       // 1..n
};
SymbolTerm boundary_derivative(const SymbolTerm& t, Axis axis);

class GradedSymbol {
public:
    GradedSymbol() = default;
    GradedSymbol(std::string name, std::map<int, SymbolTerm> comps, int low, bool exact)
        : name_(std::move(name)), comps_(std::move(comps)), low_(low), exact_(exact) {}

    const std::string& name() const { return name_; }
    const std::map<int, SymbolTerm>& components() const { return comps_; }
    int top() const;
    int low() const { return low_; }
    bool exact() const { return exact_; }
    bool known(int k) const { return exact_ || k >= low_ || k > top(); }
    // Component of order k; zero above the top order; throws when k is below
    // the truncation depth of an inexact symbol.
    SymbolTerm at(int k) const;

private:
    std::string name_;
    std::map<int, SymbolTerm> comps_;
    int low_ = 0;
    bool exact_ = false;
};

GradedSymbol compose(const GradedSymbol& P, const GradedSymbol& Q, int min_order);
GradedSymbol invert(const GradedSymbol& P, int min_order);
// Two-sided inverse of a Clifford element whose Clifford conjugate product is scalar.
CliffordExpr clifford_inverse(const CliffordExpr& x);

enum class OperatorId {
    Dirac,
    DiracAdj,
    NablaXY,
    InvDiracSq,      // (D_T^* D_T)^{-1}
    InvDirac,        // D_T^{-1}
    InvDiracAdj,     // (D_T^*)^{-1}
    InvDiracCube,    // (D_T^* D_T D_T^*)^{-1}
    NablaInvSq,      // nabla_X nabla_Y (D_T^* D_T)^{-1}
    NablaInvDirac,   // nabla_X nabla_Y D_T^{-1}
};

struct SymbolOptions {
    // Use xi_k instead of the printed xi_n inside the sum over c(e_k)c(e_n) of
    // the order -3 component of (D_T^* D_T)^{-1}.
    bool xi_k_variant = false;
};

std::vector<OperatorId> all_operators();
std::string operator_name(OperatorId id);
OperatorId operator_from_name(const std::string& name);  // throws std::invalid_argument
GradedSymbol builtin_symbol(OperatorId id, const SymbolOptions& opts = {});
// Same operator rebuilt from D_T, D_T^* and nabla_X nabla_Y through compose/invert.
GradedSymbol recomputed_symbol(OperatorId id);

}  // namespace ncr
