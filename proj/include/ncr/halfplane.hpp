#pragma once

#include "ncr/symbol.hpp"

#include <map>
#include <utility>

namespace ncr {

// Partial-fraction form of a rational function of xi_n whose poles lie at +i and -i:
// sum over (pole, m) of coeff / (xi_n - pole)^m plus a polynomial part in xi_n.
// Pole key: +1 for +i, -1 for -i. Coefficients are free of xi_n.
struct HalfLineScalar {
    std::map<std::pair<int, int>, ScalarExpr> parts;
    ScalarExpr poly;
};

struct HalfLineRational {
    std::map<std::pair<int, int>, CliffordExpr> parts;
    CliffordExpr poly;
    bool restricted = false;

    SymbolTerm reassemble() const;
    SymbolTerm plus_part() const;   // principal parts at +i
    SymbolTerm minus_part() const;  // principal parts at -i plus the polynomial part
};

// Throws std::invalid_argument naming the offending factor if a pole lies elsewhere.
HalfLineScalar partial_fractions(const ScalarExpr& r);
HalfLineRational partial_fractions(const SymbolTerm& r);

SymbolTerm pi_plus(const SymbolTerm& r);
SymbolTerm pi_minus(const SymbolTerm& r);
// i times the residue at +i.
CliffordExpr pi_prime(const SymbolTerm& r);

ScalarExpr pole_power(int pole, int m);  // (xi_n - pole*i)^{-m}

}  // namespace ncr
