#include "ncr/poly.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace ncr {

std::string GQ::str() const {
    auto q = [](const mpq_class& x) { return x.get_str(); };
    if (sgn(im) == 0) return q(re);
    std::string ims;
    if (im == 1) ims = "i";
    else if (im == -1) ims = "-i";
    else ims = q(im) + "*i";
    if (sgn(re) == 0) return ims;
    std::string s = "(" + q(re);
    s += (sgn(im) > 0 ? "+" : "");
    return s + ims + ")";
}

// ---------------------------------------------------------------- Mono

Mono mono_from_entries(std::vector<std::uint32_t> e) {
    Mono m;
    m.e_ = std::move(e);
    m.deg_ = 0;
    for (auto x : m.e_) m.deg_ += x & 0xffffu;
    return m;
}

Mono Mono::var(Var v, unsigned e) {
    if (e == 0) return Mono();
    return mono_from_entries({(static_cast<std::uint32_t>(v) << 16) | e});
}

unsigned Mono::exp(Var v) const {
    for (auto x : e_)
        if ((x >> 16) == v) return x & 0xffffu;
    return 0;
}

Mono Mono::operator*(const Mono& o) const {
    std::vector<std::uint32_t> r;
    r.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
        auto vi = e_[i] >> 16, vj = o.e_[j] >> 16;
        if (vi < vj) r.push_back(e_[i++]);
        else if (vj < vi) r.push_back(o.e_[j++]);
        else {
            r.push_back((vi << 16) | ((e_[i] & 0xffffu) + (o.e_[j] & 0xffffu)));
            ++i, ++j;
        }
    }
    while (i < e_.size()) r.push_back(e_[i++]);
    while (j < o.e_.size()) r.push_back(o.e_[j++]);
    Mono m;
    m.e_ = std::move(r);
    m.deg_ = deg_ + o.deg_;
    return m;
}

bool Mono::divides(const Mono& o) const {
    std::size_t j = 0;
    for (auto x : e_) {
        auto v = x >> 16;
        while (j < o.e_.size() && (o.e_[j] >> 16) < v) ++j;
        if (j == o.e_.size() || (o.e_[j] >> 16) != v || (o.e_[j] & 0xffffu) < (x & 0xffffu)) return false;
    }
    return true;
}

Mono Mono::operator/(const Mono& o) const {
    std::vector<std::uint32_t> r;
    std::size_t j = 0;
    for (auto x : e_) {
        auto v = x >> 16;
        unsigned e = x & 0xffffu;
        if (j < o.e_.size() && (o.e_[j] >> 16) == v) {
            unsigned f = o.e_[j] & 0xffffu;
            if (f > e) throw std::logic_error("monomial division not exact");
            e -= f;
            ++j;
        }
        if (e) r.push_back((v << 16) | e);
    }
    if (j != o.e_.size()) throw std::logic_error("monomial division not exact");
    return mono_from_entries(std::move(r));
}

Mono Mono::without(Var v) const {
    std::vector<std::uint32_t> r;
    for (auto x : e_)
        if ((x >> 16) != v) r.push_back(x);
    return mono_from_entries(std::move(r));
}

Mono Mono::only(const std::set<Var>& vs) const {
    std::vector<std::uint32_t> r;
    for (auto x : e_)
        if (vs.count(static_cast<Var>(x >> 16))) r.push_back(x);
    return mono_from_entries(std::move(r));
}

Mono Mono::except(const std::set<Var>& vs) const {
    std::vector<std::uint32_t> r;
    for (auto x : e_)
        if (!vs.count(static_cast<Var>(x >> 16))) r.push_back(x);
    return mono_from_entries(std::move(r));
}

int mono_cmp(const Mono& a, const Mono& b) {
    if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
    std::size_t n = std::min(a.e_.size(), b.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto x = a.e_[i], y = b.e_[i];
        if (x == y) continue;
        auto vx = x >> 16, vy = y >> 16;
        if (vx != vy) return vx < vy ? 1 : -1;
        return (x & 0xffffu) > (y & 0xffffu) ? 1 : -1;
    }
    if (a.e_.size() != b.e_.size()) return a.e_.size() > b.e_.size() ? 1 : -1;
    return 0;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) : Poly(GQ(c)) {}

Poly::Poly(const GQ& c) {
    if (!c.is_zero()) t_.push_back({Mono(), c});
}

Poly Poly::var(Var v, unsigned e) { return monomial(Mono::var(v, e), GQ(1)); }

Poly Poly::monomial(const Mono& m, const GQ& c) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return mono_cmp(a.m, b.m) > 0; });
    Poly p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m) p.t_.back().c += t.c;
        else {
            if (!p.t_.empty() && p.t_.back().c.is_zero()) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().c.is_zero()) p.t_.pop_back();
    return p;
}

GQ Poly::const_value() const {
    if (t_.empty()) return GQ(0);
    if (!t_[0].m.is_one() || t_.size() != 1) throw std::logic_error("polynomial is not constant");
    return t_[0].c;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& t : t_) d = std::max(d, t.m.degree());
    return d;
}

unsigned Poly::degree(Var v) const {
    unsigned d = 0;
    for (auto& t : t_) d = std::max(d, t.m.exp(v));
    return d;
}

std::set<Var> Poly::vars() const {
    std::set<Var> s;
    for (auto& t : t_)
        for (std::size_t i = 0; i < t.m.size(); ++i) s.insert(t.m.var_at(i));
    return s;
}

bool Poly::has_var(Var v) const {
    for (auto& t : t_)
        if (t.m.exp(v)) return true;
    return false;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

void Poly::add_scaled(const Poly& o, const GQ& s) {
    std::vector<Term> r;
    r.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        int c;
        if (i == t_.size()) c = -1;
        else if (j == o.t_.size()) c = 1;
        else c = mono_cmp(t_[i].m, o.t_[j].m);
        if (c > 0) r.push_back(std::move(t_[i++]));
        else if (c < 0) {
            r.push_back({o.t_[j].m, o.t_[j].c * s});
            ++j;
        } else {
            GQ v = t_[i].c + o.t_[j].c * s;
            if (!v.is_zero()) r.push_back({std::move(t_[i].m), std::move(v)});
            ++i, ++j;
        }
    }
    t_ = std::move(r);
}

Poly& Poly::operator+=(const Poly& o) {
    add_scaled(o, GQ(1));
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    add_scaled(o, GQ(-1));
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    const Poly& s = a.t_.size() <= b.t_.size() ? a : b;
    const Poly& l = a.t_.size() <= b.t_.size() ? b : a;
    if (s.t_.size() == 1) return l.mul_mono(s.t_[0].m, s.t_[0].c);
    std::vector<Term> r;
    r.reserve(s.t_.size() * l.t_.size());
    for (auto& x : s.t_)
        for (auto& y : l.t_) r.push_back({x.m * y.m, x.c * y.c});
    return Poly::from_terms(std::move(r));
}

Poly Poly::scaled(const GQ& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

Poly Poly::mul_mono(const Mono& m, const GQ& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

Poly Poly::diff(Var v) const {
    std::vector<Term> r;
    for (auto& t : t_) {
        unsigned e = t.m.exp(v);
        if (!e) continue;
        r.push_back({t.m / Mono::var(v), t.c * GQ(static_cast<long>(e))});
    }
    return from_terms(std::move(r));
}

std::vector<Poly> Poly::coeffs(Var v) const {
    std::vector<std::vector<Term>> parts(degree(v) + 1);
    for (auto& t : t_) {
        unsigned e = t.m.exp(v);
        parts[e].push_back({t.m.without(v), t.c});
    }
    std::vector<Poly> r;
    r.reserve(parts.size());
    for (auto& p : parts) r.push_back(from_terms(std::move(p)));
    return r;
}

Poly Poly::from_coeffs(Var v, const std::vector<Poly>& cs) {
    std::vector<Term> r;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        Mono m = Mono::var(v, static_cast<unsigned>(k));
        for (auto& t : cs[k].t_) r.push_back({t.m * m, t.c});
    }
    return from_terms(std::move(r));
}

std::map<Mono, Poly, MonoGreater> Poly::split(const std::set<Var>& vs) const {
    std::map<Mono, std::vector<Term>, MonoGreater> g;
    for (auto& t : t_) g[t.m.only(vs)].push_back({t.m.except(vs), t.c});
    std::map<Mono, Poly, MonoGreater> r;
    for (auto& [m, ts] : g) r.emplace(m, from_terms(std::move(ts)));
    return r;
}

Poly Poly::monic() const {
    if (t_.empty() || t_[0].c.is_one()) return *this;
    return scaled(t_[0].c.inv());
}

GQ Poly::eval(const std::vector<GQ>& point) const {
    GQ s(0);
    for (auto& t : t_) {
        GQ v = t.c;
        for (std::size_t i = 0; i < t.m.size(); ++i) v *= point.at(t.m.var_at(i)).pow(t.m.exp_at(i));
        s += v;
    }
    return s;
}

Poly Poly::subst(Var v, const Poly& p) const {
    if (!has_var(v)) return *this;
    std::vector<Poly> powers{Poly(1)};
    Poly r;
    for (auto& t : t_) {
        unsigned e = t.m.exp(v);
        while (powers.size() <= e) powers.push_back(powers.back() * p);
        r += powers[e].mul_mono(t.m.without(v), t.c);
    }
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    const auto& reg = Registry::get();
    std::string s;
    bool first = true;
    for (auto& t : t_) {
        std::string mono;
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            if (!mono.empty()) mono += "*";
            mono += reg.info(t.m.var_at(i)).name;
            if (t.m.exp_at(i) > 1) mono += "^" + std::to_string(t.m.exp_at(i));
        }
        GQ c = t.c;
        bool neg = false;
        if (c.is_real() && sgn(c.re) < 0) neg = true;
        else if (sgn(c.re) == 0 && sgn(c.im) < 0) neg = true;
        if (neg) c = -c;
        std::string cs;
        if (mono.empty()) cs = c.str();
        else if (c.is_one()) cs = mono;
        else cs = c.str() + "*" + mono;
        if (first) s += (neg ? "-" : "") + cs;
        else s += (neg ? " - " : " + ") + cs;
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------- division and gcd

bool exact_div(const Poly& a, const Poly& b, Poly& q) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    q = Poly();
    if (a.is_zero()) return true;
    if (b.is_const()) {
        q = a.scaled(b.const_value().inv());
        return true;
    }
    const Term& lb = b.lead();
    GQ inv = lb.c.inv();
    Poly r = a;
    std::vector<Term> qt;
    while (!r.is_zero()) {
        const Term& lr = r.lead();
        if (!lb.m.divides(lr.m)) return false;
        Mono m = lr.m / lb.m;
        GQ c = lr.c * inv;
        qt.push_back({m, c});
        r -= b.mul_mono(m, c);
    }
    q = Poly::from_terms(std::move(qt));
    return true;
}

Poly div_or_throw(const Poly& a, const Poly& b) {
    Poly q;
    if (!exact_div(a, b, q)) throw std::logic_error("inexact polynomial division");
    return q;
}

void divmod_in(const Poly& a, const Poly& b, Var v, Poly& q, Poly& r) {
    auto bc = b.coeffs(v);
    while (!bc.empty() && bc.back().is_zero()) bc.pop_back();
    if (bc.empty()) throw std::domain_error("division by zero polynomial");
    if (!bc.back().is_const()) throw std::logic_error("divmod_in: leading coefficient not constant");
    GQ inv = bc.back().const_value().inv();
    std::size_t db = bc.size() - 1;
    auto ac = a.coeffs(v);
    std::vector<Poly> qc(ac.size() > db ? ac.size() - db : 0);
    for (std::size_t k = ac.size(); k-- > db;) {
        if (ac[k].is_zero()) continue;
        Poly f = ac[k].scaled(inv);
        qc[k - db] = f;
        for (std::size_t s = 0; s <= db; ++s) ac[k - db + s] -= f * bc[s];
    }
    q = Poly::from_coeffs(v, qc);
    ac.resize(std::min(ac.size(), db));
    r = Poly::from_coeffs(v, ac);
}

namespace {

Poly pseudo_rem(const Poly& a, const Poly& b, Var v) {
    auto bc = b.coeffs(v);
    std::size_t db = bc.size() - 1;
    const Poly& lb = bc.back();
    auto ac = a.coeffs(v);
    while (ac.size() > db && !ac.empty()) {
        if (ac.back().is_zero()) {
            ac.pop_back();
            continue;
        }
        Poly la = ac.back();
        std::size_t shift = ac.size() - 1 - db;
        for (auto& c : ac) c = c * lb;
        for (std::size_t s = 0; s <= db; ++s) ac[shift + s] -= la * bc[s];
        ac.pop_back();
    }
    return Poly::from_coeffs(v, ac);
}

Poly content_in(const Poly& p, Var v) {
    Poly g;
    for (auto& c : p.coeffs(v)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_const()) return Poly(1);
    }
    return g;
}

Poly univariate_gcd(Poly a, Poly b, Var v) {
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    while (!b.is_zero()) {
        Poly q, r;
        divmod_in(a, b.monic(), v, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly monomial_gcd(const Term& t, const Poly& p) {
    // Largest power product dividing both the monomial and every term of p.
    Mono g = t.m;
    for (auto& s : p.terms()) {
        Mono r;
        for (std::size_t i = 0; i < g.size(); ++i) {
            unsigned e = std::min(g.exp_at(i), s.m.exp(g.var_at(i)));
            if (e) r = r * Mono::var(g.var_at(i), e);
        }
        g = r;
        if (g.is_one()) break;
    }
    return Poly::monomial(g, GQ(1));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_const() || b.is_const()) return Poly(1);
    if (a.terms().size() == 1) return monomial_gcd(a.lead(), b);
    if (b.terms().size() == 1) return monomial_gcd(b.lead(), a);
    if (a == b) return a.monic();

    auto va = a.vars(), vb = b.vars();
    std::set<Var> only_a, only_b;
    std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::inserter(only_a, only_a.begin()));
    std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::inserter(only_b, only_b.begin()));
    if (!only_a.empty() || !only_b.empty()) {
        // The gcd is free of variables that occur in only one argument.
        Poly g = only_a.empty() ? a : b;
        const Poly& other = only_a.empty() ? b : a;
        const auto& drop = only_a.empty() ? only_b : only_a;
        if (!only_a.empty() && !only_b.empty()) {
            Poly ga;
            for (auto& [m, c] : a.split(only_a)) {
                ga = gcd(ga, c);
                if (ga.is_const()) return Poly(1);
            }
            Poly gb;
            for (auto& [m, c] : b.split(only_b)) {
                gb = gcd(gb, c);
                if (gb.is_const()) return Poly(1);
            }
            return gcd(ga, gb);
        }
        for (auto& [m, c] : other.split(drop)) {
            g = gcd(g, c);
            if (g.is_const()) return Poly(1);
        }
        return g.monic();
    }

    if (va.size() == 1) return univariate_gcd(a, b, *va.begin());

    // Main variable: the one with the smallest combined degree.
    Var x = *va.begin();
    unsigned best = ~0u;
    for (Var v : va) {
        unsigned d = a.degree(v) + b.degree(v);
        if (d < best) best = d, x = v;
    }
    Poly ca = content_in(a, x), cb = content_in(b, x);
    Poly c = gcd(ca, cb);
    Poly p = div_or_throw(a, ca), q = div_or_throw(b, cb);
    if (p.degree(x) < q.degree(x)) std::swap(p, q);
    while (true) {
        if (q.degree(x) == 0) {
            p = Poly(1);
            break;
        }
        Poly r = pseudo_rem(p, q, x);
        if (r.is_zero()) {
            p = q;
            break;
        }
        if (r.degree(x) == 0) {
            p = Poly(1);
            break;
        }
        r = div_or_throw(r, content_in(r, x));
        p = std::move(q);
        q = std::move(r);
    }
    return (c * p).monic();
}

}  // namespace ncr
