#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ncr {

using Var = std::uint16_t;

enum class VarKind { CotangentTangential, CotangentNormal, Geometric, Transcendental };

struct VarInfo {
    std::string name;   // canonical text token, e.g. "xin", "A[1,2,4]"
    std::string latex;  // e.g. "\xi_{n}", "A_{124}"
    VarKind kind;
    bool torsion;       // set to zero by the zero-torsion specialization
};

// Frozen table of formal indeterminates. The index of a variable is its
// position in the monomial order (earlier = larger in graded lex).
class Registry {
public:
    static const Registry& get();

    std::size_t size() const { return vars_.size(); }
    const VarInfo& info(Var v) const { return vars_.at(v); }
    // Throws std::invalid_argument for unknown names.
    Var lookup(const std::string& name) const;
    bool contains(const std::string& name) const;

    Var xi(int j) const;  // j = 1..4, 4 is the normal direction
    Var X(int j) const;
    Var Y(int j) const;
    Var dY(int l, int j) const;  // dY(4,4) is dYn = dY_n/dx_n
    Var V(int k) const;
    Var dV(int a, int k) const;
    Var dT4() const;             // coefficient of the top-degree 4-form dT
    // Antisymmetric families: returns (variable, sign); sign 0 means the
    // entry vanishes identically (repeated antisymmetric index).
    std::pair<Var, int> A(int i, int s, int t) const;
    std::pair<Var, int> T(int a, int i, int j) const;
    std::pair<Var, int> R(int a, int b, int s, int t) const;
    std::pair<Var, int> DT(int a, int b, int i, int j) const;

    Var h1, W, kappa, gT, s_scal, RicVW, divV, normT2, normV2, gVW, pi, Om3;

    std::vector<Var> torsion_vars() const;

private:
    Registry();
    Var add(std::string name, std::string latex, VarKind kind, bool torsion = false);
    std::vector<VarInfo> vars_;
    Var xi_[4]{}, X_[4]{}, Y_[4]{}, dY_[4][4]{}, V_[4]{}, dV_[4][4]{};
    Var A_[4][4][4]{}, T_[4][4][4]{}, R_[4][4][4][4]{}, DT_[4][4][4][4]{};
    Var dT4_{};
};

}  // namespace ncr
