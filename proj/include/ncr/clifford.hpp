#pragma once

#include "ncr/scalar.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ncr {

constexpr int kDim = 4;

// Canonical Clifford monomial c(e_{i1})...c(e_{ik}), i1 < ... < ik, as a bitmask
// (bit j-1 set for e_j).
using CliffordMono = std::uint8_t;

// Sign of the product of two canonical monomials under c(e_i)^2 = -1.
int cl_mono_sign(CliffordMono a, CliffordMono b);

class CliffordExpr {
public:
    CliffordExpr() = default;
    CliffordExpr(const ScalarExpr& s);
    CliffordExpr(long c) : CliffordExpr(ScalarExpr(c)) {}
    static CliffordExpr gen(int j);  // c(e_j), j = 1..n
    static CliffordExpr mono(CliffordMono m, const ScalarExpr& c = ScalarExpr(1));

    const std::map<CliffordMono, ScalarExpr>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
    ScalarExpr coeff(CliffordMono m) const;
    ScalarExpr scalar_part() const { return coeff(0); }
    std::set<Var> vars() const;

    CliffordExpr operator-() const;
    CliffordExpr& operator+=(const CliffordExpr& o);
    CliffordExpr& operator-=(const CliffordExpr& o);
    friend CliffordExpr operator+(CliffordExpr a, const CliffordExpr& b) { return a += b; }
    friend CliffordExpr operator-(CliffordExpr a, const CliffordExpr& b) { return a -= b; }
    friend CliffordExpr operator*(const CliffordExpr& a, const CliffordExpr& b);
    friend CliffordExpr operator*(const ScalarExpr& s, const CliffordExpr& a);
    friend CliffordExpr operator*(const CliffordExpr& a, const ScalarExpr& s) { return s * a; }
    friend bool operator==(const CliffordExpr& a, const CliffordExpr& b);
    friend bool operator!=(const CliffordExpr& a, const CliffordExpr& b) { return !(a == b); }

    // Reverses the generator order and negates each generator.
    CliffordExpr conjugate() const;
    CliffordExpr map(const std::function<ScalarExpr(const ScalarExpr&)>& f) const;

    std::string str() const;
    std::string latex() const;
    nlohmann::json to_json() const;
    static CliffordExpr from_json(const nlohmann::json& j);

private:
    std::map<CliffordMono, ScalarExpr> t_;
};

CliffordExpr cl_mul(const CliffordExpr& a, const CliffordExpr& b);
// Coefficient of the identity times 2^{n/2}.
ScalarExpr cl_trace(const CliffordExpr& a);
// Sum coeffs[j] c(e_{j+1}); throws on a length other than n.
CliffordExpr cl_from_cotangent(const std::vector<ScalarExpr>& coeffs);
std::string cl_mono_str(CliffordMono m);

// Fixed 4x4 representation: gamma_a = i Gamma_a with
// Gamma_k = [[0, -i sigma_k], [i sigma_k, 0]] (k = 1,2,3), Gamma_4 = [[0, I], [I, 0]].
using Mat4 = std::array<std::array<GQ, 4>, 4>;
Mat4 gamma_matrix(int j);
Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 mono_matrix(CliffordMono m);
// Throws std::invalid_argument if a coefficient uses an unbound variable.
GQ matrix_oracle_trace(const CliffordExpr& a, const std::map<Var, GQ>& bindings);

}  // namespace ncr
