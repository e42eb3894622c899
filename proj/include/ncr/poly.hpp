#pragma once

#include "ncr/gauss.hpp"
#include "ncr/registry.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ncr {

// Sparse power product. Entries are (var << 16 | exp), sorted by var.
class Mono {
public:
    Mono() = default;
    static Mono var(Var v, unsigned e = 1);

    unsigned degree() const { return deg_; }
    unsigned exp(Var v) const;
    bool is_one() const { return e_.empty(); }
    std::size_t size() const { return e_.size(); }
    Var var_at(std::size_t i) const { return static_cast<Var>(e_[i] >> 16); }
    unsigned exp_at(std::size_t i) const { return e_[i] & 0xffffu; }

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;  // this | o
    Mono operator/(const Mono& o) const;  // requires o | this
    Mono without(Var v) const;
    Mono only(const std::set<Var>& vs) const;
    Mono except(const std::set<Var>& vs) const;

    friend bool operator==(const Mono& a, const Mono& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.e_ != b.e_; }

private:
    std::vector<std::uint32_t> e_;
    unsigned deg_ = 0;
    friend int mono_cmp(const Mono&, const Mono&);
    friend Mono mono_from_entries(std::vector<std::uint32_t>);
};

// Graded lexicographic comparison over registry order: >0 if a > b.
int mono_cmp(const Mono& a, const Mono& b);

struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

struct Term {
    Mono m;
    GQ c;
};

// Polynomial over Q(i); terms kept in strictly decreasing monomial order.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const GQ& c);
    static Poly var(Var v, unsigned e = 1);
    static Poly monomial(const Mono& m, const GQ& c);
    static Poly from_terms(std::vector<Term> terms);  // any order, duplicates summed

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_const() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    GQ const_value() const;  // requires is_const()
    const Term& lead() const { return t_.front(); }
    unsigned total_degree() const;
    unsigned degree(Var v) const;
    std::set<Var> vars() const;
    bool has_var(Var v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const GQ& c) const;
    Poly mul_mono(const Mono& m, const GQ& c) const;
    Poly pow(unsigned e) const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly diff(Var v) const;
    // Coefficients with respect to v: result[k] is the coefficient of v^k.
    std::vector<Poly> coeffs(Var v) const;
    static Poly from_coeffs(Var v, const std::vector<Poly>& cs);
    // Group by the part of each monomial in `vs`; values are free of `vs`.
    std::map<Mono, Poly, MonoGreater> split(const std::set<Var>& vs) const;

    Poly monic() const;  // leading coefficient 1 (zero stays zero)
    GQ eval(const std::vector<GQ>& point) const;  // point indexed by Var
    // Replace v by a polynomial.
    Poly subst(Var v, const Poly& p) const;

    std::string str() const;

private:
    std::vector<Term> t_;
    void add_scaled(const Poly& o, const GQ& s);
};

// Exact division; returns false if b does not divide a.
bool exact_div(const Poly& a, const Poly& b, Poly& q);
Poly div_or_throw(const Poly& a, const Poly& b);
// Monic greatest common divisor (gcd(0,0) = 0).
Poly gcd(const Poly& a, const Poly& b);
// Univariate-in-v division with remainder; b must have a constant leading coefficient in v.
void divmod_in(const Poly& a, const Poly& b, Var v, Poly& q, Poly& r);

}  // namespace ncr
