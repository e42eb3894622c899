#include "ncr/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ncr {

ScalarExpr ScalarExpr::make(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    ScalarExpr r;
    if (num.is_zero()) return r;
    if (den.is_const()) {
        r.num_ = num.scaled(den.const_value().inv());
        return r;
    }
    Poly g = gcd(num, den);
    Poly n = num, d = den;
    if (!g.is_const()) {
        n = div_or_throw(num, g);
        d = div_or_throw(den, g);
    }
    GQ lc = d.lead().c;
    if (!lc.is_one()) {
        GQ inv = lc.inv();
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

ScalarExpr ScalarExpr::var(const std::string& name, unsigned e) { return var(Registry::get().lookup(name), e); }

std::set<Var> ScalarExpr::vars() const {
    auto s = num_.vars();
    for (Var v : den_.vars()) s.insert(v);
    return s;
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_poly() && o.is_poly()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) return *this = make(num_ + o.num_, den_);
    Poly g = gcd(den_, o.den_);
    Poly a = div_or_throw(den_, g), b = div_or_throw(o.den_, g);
    return *this = make(num_ * b + o.num_ * a, den_ * b);
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) { return *this += -o; }

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& o) {
    if (is_zero() || o.is_zero()) return *this = ScalarExpr();
    if (is_poly() && o.is_poly()) {
        num_ = num_ * o.num_;
        return *this;
    }
    Poly g1 = o.is_poly() ? Poly(1) : gcd(num_, o.den_);
    Poly g2 = is_poly() ? Poly(1) : gcd(o.num_, den_);
    Poly n = div_or_throw(num_, g1) * div_or_throw(o.num_, g2);
    Poly d = div_or_throw(den_, g2) * div_or_throw(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    if (den_.is_const()) {
        num_ = num_.scaled(den_.const_value().inv());
        den_ = Poly(1);
    }
    return *this;
}

ScalarExpr& ScalarExpr::operator/=(const ScalarExpr& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return *this *= make(o.den_, o.num_);
}

ScalarExpr ScalarExpr::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("negative power of zero");
        return make(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    }
    ScalarExpr r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

ScalarExpr ScalarExpr::diff(Var v) const { return derive({{v, Poly(1)}}); }

ScalarExpr ScalarExpr::derive(const std::map<Var, Poly>& d) const {
    auto apply = [&](const Poly& p) {
        Poly r;
        for (auto& [v, dv] : d)
            if (!dv.is_zero() && p.has_var(v)) r += p.diff(v) * dv;
        return r;
    };
    Poly dn = apply(num_);
    if (is_poly()) return ScalarExpr(std::move(dn));
    Poly dd = apply(den_);
    if (dd.is_zero()) return make(dn, den_);
    return make(dn * den_ - num_ * dd, den_ * den_);
}

Poly poly_subst_many(const Poly& p, const std::map<Var, Poly>& b) {
    std::map<std::pair<Var, unsigned>, Poly> cache;
    auto power = [&](Var v, unsigned e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, b.at(v).pow(e)).first->second;
    };
    Poly r;
    std::vector<Term> untouched;
    for (auto& t : p.terms()) {
        Mono rest;
        Poly f(1);
        bool hit = false;
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            Var v = t.m.var_at(i);
            if (b.count(v)) {
                f = f * power(v, t.m.exp_at(i));
                hit = true;
            } else {
                rest = rest * Mono::var(v, t.m.exp_at(i));
            }
        }
        if (!hit) untouched.push_back(t);
        else r += f.mul_mono(rest, t.c);
    }
    return r + Poly::from_terms(std::move(untouched));
}

ScalarExpr ScalarExpr::subst(const std::map<Var, ScalarExpr>& b) const {
    bool touches = false;
    for (auto& [v, e] : b)
        if (has_var(v)) touches = true;
    if (!touches) return *this;
    bool polys = std::all_of(b.begin(), b.end(), [](auto& kv) { return kv.second.is_poly(); });
    if (polys) {
        std::map<Var, Poly> pb;
        for (auto& [v, e] : b) pb.emplace(v, e.num_);
        return make(poly_subst_many(num_, pb), poly_subst_many(den_, pb));
    }
    auto eval_poly = [&](const Poly& p) {
        ScalarExpr r;
        for (auto& t : p.terms()) {
            ScalarExpr f(t.c);
            Mono rest;
            for (std::size_t i = 0; i < t.m.size(); ++i) {
                Var v = t.m.var_at(i);
                auto it = b.find(v);
                if (it != b.end()) f *= it->second.pow(static_cast<int>(t.m.exp_at(i)));
                else rest = rest * Mono::var(v, t.m.exp_at(i));
            }
            r += f * ScalarExpr(Poly::monomial(rest, GQ(1)));
        }
        return r;
    };
    ScalarExpr d = eval_poly(den_);
    if (d.is_zero()) throw std::domain_error("substitution produces a zero denominator");
    return eval_poly(num_) / d;
}

ScalarExpr ScalarExpr::replace_square(Var v, const Poly& repl) const {
    auto red = [&](const Poly& p) {
        if (p.degree(v) < 2) return p;
        std::vector<Poly> pw{Poly(1)};
        Poly r;
        for (auto& t : p.terms()) {
            unsigned e = t.m.exp(v);
            while (pw.size() <= e / 2) pw.push_back(pw.back() * repl);
            r += pw[e / 2].mul_mono(t.m.without(v) * Mono::var(v, e % 2), t.c);
        }
        return r;
    };
    if (num_.degree(v) < 2 && den_.degree(v) < 2) return *this;
    return make(red(num_), red(den_));
}

GQ ScalarExpr::eval(const std::vector<GQ>& point) const {
    GQ d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

// ---------------------------------------------------------------- text

std::string ScalarExpr::str() const {
    if (is_poly()) return num_.str();
    auto wrap = [](const Poly& p) {
        std::string s = p.str();
        return p.terms().size() > 1 || s[0] == '-' || s.find('*') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

namespace {

std::string qlatex_abs(const mpq_class& q, const std::string& extra) {
    mpz_class p = abs(q.get_num()), d = q.get_den();
    std::string n = (p == 1 && !extra.empty()) ? extra : p.get_str() + extra;
    if (d == 1) return n;
    return "\\frac{" + n + "}{" + d.get_str() + "}";
}

bool is_negative(const GQ& c) { return sgn(c.re) < 0 || (sgn(c.re) == 0 && sgn(c.im) < 0); }

int latex_group(Var v) {
    const auto& r = Registry::get();
    if (v == r.gT || v == r.gVW || v == r.RicVW) return 0;
    return 1;
}

}  // namespace

std::string latex_coeff_mono(const GQ& c0, const Mono& m, bool first) {
    const auto& reg = Registry::get();
    GQ c = c0;
    bool neg = is_negative(c);
    if (neg) c = -c;
    std::string trans;
    std::vector<Var> rest;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Var v = m.var_at(i);
        if (reg.info(v).kind == VarKind::Transcendental) {
            trans += reg.info(v).latex;
            if (m.exp_at(i) > 1) trans += "^{" + std::to_string(m.exp_at(i)) + "}";
        } else {
            rest.push_back(v);
        }
    }
    std::stable_sort(rest.begin(), rest.end(), [](Var a, Var b) { return latex_group(a) < latex_group(b); });
    std::string head;
    if (c.is_real()) {
        if (c.is_one()) head = trans;
        else head = qlatex_abs(c.re, trans);
    } else if (sgn(c.re) == 0) {
        head = qlatex_abs(c.im, "i" + trans);
    } else {
        head = "\\left(" + qlatex_abs(c.re, "") + (sgn(c.im) < 0 ? "-" : "+") + qlatex_abs(c.im, "i") + "\\right)" + trans;
    }
    std::vector<std::string> parts;
    if (!head.empty()) parts.push_back(head);
    for (Var v : rest) {
        std::string f = reg.info(v).latex;
        unsigned e = m.exp(v);
        if (e > 1) f += "^{" + std::to_string(e) + "}";
        parts.push_back(f);
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += " ";
        s += parts[i];
    }
    if (s.empty()) s = "1";
    if (first) return (neg ? "-" : "") + s;
    return (neg ? "-" : "+") + s;
}

std::string latex_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : p.terms()) {
        s += latex_coeff_mono(t.c, t.m, first);
        first = false;
    }
    return s;
}

std::string ScalarExpr::latex() const {
    if (is_poly()) return latex_poly(num_);
    return "\\frac{" + latex_poly(num_) + "}{" + latex_poly(den_) + "}";
}

// ---------------------------------------------------------------- json

nlohmann::json poly_to_json(const Poly& p) {
    const auto& reg = Registry::get();
    nlohmann::json a = nlohmann::json::array();
    for (auto& t : p.terms()) {
        nlohmann::json m = nlohmann::json::array();
        for (std::size_t i = 0; i < t.m.size(); ++i) m.push_back({reg.info(t.m.var_at(i)).name, t.m.exp_at(i)});
        a.push_back({{"re", t.c.re.get_str()}, {"im", t.c.im.get_str()}, {"mono", m}});
    }
    return a;
}

Poly poly_from_json(const nlohmann::json& j) {
    const auto& reg = Registry::get();
    std::vector<Term> ts;
    for (auto& t : j) {
        Mono m;
        for (auto& f : t.at("mono")) m = m * Mono::var(reg.lookup(f.at(0).get<std::string>()), f.at(1).get<unsigned>());
        mpq_class re(t.at("re").get<std::string>()), im(t.at("im").get<std::string>());
        re.canonicalize();
        im.canonicalize();
        ts.push_back({m, GQ(re, im)});
    }
    return Poly::from_terms(std::move(ts));
}

nlohmann::json ScalarExpr::to_json() const {
    return {{"text", str()}, {"num", poly_to_json(num_)}, {"den", poly_to_json(den_)}};
}

ScalarExpr ScalarExpr::from_json(const nlohmann::json& j) { return make(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ScalarExpr parse() {
        ScalarExpr e = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(p_) + ": " + why + " in \"" + s_ + "\"");
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }

    ScalarExpr expr() {
        ScalarExpr r = term();
        while (true) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    ScalarExpr term() {
        ScalarExpr r = unary();
        while (true) {
            if (eat('*')) r *= unary();
            else if (eat('/')) r /= unary();
            else return r;
        }
    }
    ScalarExpr unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    ScalarExpr power() {
        ScalarExpr b = atom();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            std::size_t st = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (st == p_) fail("expected integer exponent");
            int e = std::stoi(s_.substr(st, p_ - st));
            b = b.pow(neg ? -e : e);
        }
        return b;
    }
    ScalarExpr atom() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end of input");
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            ScalarExpr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            mpz_class z(s_.substr(st, p_ - st));
            return ScalarExpr(GQ(mpq_class(z)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = p_;
            while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
            if (p_ < s_.size() && s_[p_] == '[') {
                while (p_ < s_.size() && s_[p_] != ']') ++p_;
                if (p_ == s_.size()) fail("unterminated index");
                ++p_;
            }
            std::string name = s_.substr(st, p_ - st);
            name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
            if (name == "i") return ScalarExpr(GQ::I());
            const auto& reg = Registry::get();
            if (!reg.contains(name)) fail("unknown indeterminate '" + name + "'");
            return ScalarExpr::var(reg.lookup(name));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

ScalarExpr parse_scalar(const std::string& text) { return Parser(text).parse(); }

}  // namespace ncr
