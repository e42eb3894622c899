#pragma once

#include "ncr/poly.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace ncr {

// Rational function num/den over Q(i). Canonical: den monic, gcd(num, den) = 1,
// zero is 0/1.
class ScalarExpr {
public:
    ScalarExpr() : den_(1) {}
    ScalarExpr(long c) : num_(c), den_(1) {}
    ScalarExpr(const GQ& c) : num_(c), den_(1) {}
    ScalarExpr(Poly p) : num_(std::move(p)), den_(1) {}
    // Normalizes; throws std::domain_error on a zero denominator.
    static ScalarExpr make(const Poly& num, const Poly& den);
    static ScalarExpr var(Var v, unsigned e = 1) { return ScalarExpr(Poly::var(v, e)); }
    static ScalarExpr var(const std::string& name, unsigned e = 1);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_const(); }
    bool is_const() const { return num_.is_const() && den_.is_const(); }
    GQ const_value() const { return num_.const_value(); }
    std::set<Var> vars() const;
    bool has_var(Var v) const { return num_.has_var(v) || den_.has_var(v); }

    ScalarExpr operator-() const;
    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    ScalarExpr& operator*=(const ScalarExpr& o);
    ScalarExpr& operator/=(const ScalarExpr& o);
    friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
    friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
    friend ScalarExpr operator*(ScalarExpr a, const ScalarExpr& b) { return a *= b; }
    friend ScalarExpr operator/(ScalarExpr a, const ScalarExpr& b) { return a /= b; }
    ScalarExpr pow(int e) const;
    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }

    ScalarExpr diff(Var v) const;
    // Derivation sending each variable v to d.at(v); absent variables go to 0.
    ScalarExpr derive(const std::map<Var, Poly>& d) const;
    // Simultaneous substitution followed by normalization.
    ScalarExpr subst(const std::map<Var, ScalarExpr>& b) const;
    // Replace every v^2 by `repl` in numerator and denominator.
    ScalarExpr replace_square(Var v, const Poly& repl) const;
    // Throws std::domain_error if the denominator vanishes at the point.
    GQ eval(const std::vector<GQ>& point) const;

    std::string str() const;    // canonical text, parseable by parse_scalar
    std::string latex() const;
    nlohmann::json to_json() const;
    static ScalarExpr from_json(const nlohmann::json& j);

private:
    Poly num_, den_;
};

ScalarExpr parse_scalar(const std::string& text);

Poly poly_subst_many(const Poly& p, const std::map<Var, Poly>& b);
std::string latex_poly(const Poly& p);
std::string latex_coeff_mono(const GQ& c, const Mono& m, bool first);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace ncr
