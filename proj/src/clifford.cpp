#include "ncr/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace ncr {

int cl_mono_sign(CliffordMono a, CliffordMono b) {
    int swaps = 0;
    for (int j = 0; j < kDim; ++j)
        if (b & (1u << j)) swaps += std::popcount(static_cast<unsigned>(a >> (j + 1)));
    swaps += std::popcount(static_cast<unsigned>(a & b));
    return (swaps & 1) ? -1 : 1;
}

CliffordExpr::CliffordExpr(const ScalarExpr& s) {
    if (!s.is_zero()) t_.emplace(0, s);
}

CliffordExpr CliffordExpr::gen(int j) {
    if (j < 1 || j > kDim) throw std::invalid_argument("generator index out of range");
    return mono(static_cast<CliffordMono>(1u << (j - 1)));
}

CliffordExpr CliffordExpr::mono(CliffordMono m, const ScalarExpr& c) {
    CliffordExpr r;
    if (!c.is_zero()) r.t_.emplace(m, c);
    return r;
}

ScalarExpr CliffordExpr::coeff(CliffordMono m) const {
    auto it = t_.find(m);
    return it == t_.end() ? ScalarExpr() : it->second;
}

std::set<Var> CliffordExpr::vars() const {
    std::set<Var> s;
    for (auto& [m, c] : t_)
        for (Var v : c.vars()) s.insert(v);
    return s;
}

CliffordExpr CliffordExpr::operator-() const {
    CliffordExpr r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

CliffordExpr& CliffordExpr::operator+=(const CliffordExpr& o) {
    for (auto& [m, c] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end()) t_.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

CliffordExpr& CliffordExpr::operator-=(const CliffordExpr& o) { return *this += -o; }

CliffordExpr operator*(const CliffordExpr& a, const CliffordExpr& b) {
    CliffordExpr r;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) {
            ScalarExpr c = ca * cb;
            if (cl_mono_sign(ma, mb) < 0) c = -c;
            r += CliffordExpr::mono(static_cast<CliffordMono>(ma ^ mb), c);
        }
    return r;
}

CliffordExpr operator*(const ScalarExpr& s, const CliffordExpr& a) {
    CliffordExpr r;
    if (s.is_zero()) return r;
    for (auto& [m, c] : a.t_) r.t_.emplace(m, s * c);
    return r;
}

bool operator==(const CliffordExpr& a, const CliffordExpr& b) { return a.t_ == b.t_; }

CliffordExpr CliffordExpr::conjugate() const {
    CliffordExpr r;
    for (auto& [m, c] : t_) {
        int k = std::popcount(static_cast<unsigned>(m));
        // reversal contributes (-1)^{k(k-1)/2}, negation (-1)^k
        int e = k * (k - 1) / 2 + k;
        r.t_.emplace(m, (e & 1) ? -c : c);
    }
    return r;
}

CliffordExpr CliffordExpr::map(const std::function<ScalarExpr(const ScalarExpr&)>& f) const {
    CliffordExpr r;
    for (auto& [m, c] : t_) {
        ScalarExpr v = f(c);
        if (!v.is_zero()) r.t_.emplace(m, std::move(v));
    }
    return r;
}

std::string cl_mono_str(CliffordMono m) {
    if (m == 0) return "1";
    std::string s;
    for (int j = 0; j < kDim; ++j)
        if (m & (1u << j)) s += "c(e_" + std::to_string(j + 1) + ")";
    return s;
}

std::string CliffordExpr::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : t_) {
        if (!s.empty()) s += " + ";
        if (m == 0) s += "(" + c.str() + ")";
        else s += "(" + c.str() + ")*" + cl_mono_str(m);
    }
    return s;
}

namespace {

std::string latex_factor(const Poly& p, const std::string& what) {
    if (p.terms().size() == 1) {
        const Term& t = p.lead();
        if (t.m.is_one() && t.c.is_one()) return "+" + what;
        if (t.m.is_one() && t.c == GQ(-1)) return "-" + what;
        return latex_coeff_mono(t.c, t.m, false) + " " + what;
    }
    return "+\\left(" + latex_poly(p) + "\\right)" + what;
}

}  // namespace

std::string CliffordExpr::latex() const {
    if (t_.empty()) return "0";
    const auto& reg = Registry::get();
    // Common denominator of all coefficients.
    Poly den(1);
    for (auto& [m, c] : t_) den = div_or_throw(den * c.den(), gcd(den, c.den()));
    std::map<CliffordMono, Poly> num;
    for (auto& [m, c] : t_) num[m] = c.num() * div_or_throw(den, c.den());

    std::string s;
    auto take = [&](CliffordMono m) {
        auto it = num.find(m);
        if (it == num.end()) return Poly();
        Poly p = it->second;
        num.erase(it);
        return p;
    };
    // c(xi') = sum_{j<n} xi_j c(e_j)
    {
        auto f1 = num.find(1), f2 = num.find(2), f3 = num.find(4);
        if (f1 != num.end() && f2 != num.end() && f3 != num.end()) {
            Poly p;
            if (exact_div(f1->second, Poly::var(reg.xi(1)), p) && p * Poly::var(reg.xi(2)) == f2->second &&
                p * Poly::var(reg.xi(3)) == f3->second && !p.has_var(reg.xi(1))) {
                s += latex_factor(p, "c(\\xi')");
                take(1), take(2), take(4);
            }
        }
    }
    if (num.count(8)) s += latex_factor(take(8), "c(dx_{n})");
    for (auto& [m, p] : num) {
        if (m == 0) {
            std::string v = latex_poly(p);
            s += (v[0] == '-' ? "" : "+") + v;
            continue;
        }
        std::string w;
        for (int j = 0; j < kDim; ++j)
            if (m & (1u << j)) w += "c(e_{" + std::to_string(j + 1) + "})";
        s += latex_factor(p, w);
    }
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (den.is_const()) return s;
    return "\\frac{" + s + "}{" + latex_poly(den) + "}";
}

nlohmann::json CliffordExpr::to_json() const {
    nlohmann::json a = nlohmann::json::array();
    for (auto& [m, c] : t_) a.push_back({{"mono", cl_mono_str(m)}, {"mask", m}, {"coeff", c.to_json()}});
    return a;
}

CliffordExpr CliffordExpr::from_json(const nlohmann::json& j) {
    CliffordExpr r;
    for (auto& t : j) r += mono(t.at("mask").get<CliffordMono>(), ScalarExpr::from_json(t.at("coeff")));
    return r;
}

CliffordExpr cl_mul(const CliffordExpr& a, const CliffordExpr& b) { return a * b; }

ScalarExpr cl_trace(const CliffordExpr& a) { return ScalarExpr(1L << (kDim / 2)) * a.scalar_part(); }

CliffordExpr cl_from_cotangent(const std::vector<ScalarExpr>& coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(kDim))
        throw std::invalid_argument("cotangent vector must have " + std::to_string(kDim) + " components");
    CliffordExpr r;
    for (int j = 0; j < kDim; ++j) r += coeffs[j] * CliffordExpr::gen(j + 1);
    return r;
}

// ---------------------------------------------------------------- matrix oracle

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            GQ s(0);
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

Mat4 gamma_matrix(int j) {
    const GQ I = GQ::I();
    // Pauli matrices
    std::array<std::array<GQ, 2>, 2> sig[3] = {
        {{{GQ(0), GQ(1)}, {GQ(1), GQ(0)}}},
        {{{GQ(0), -I}, {I, GQ(0)}}},
        {{{GQ(1), GQ(0)}, {GQ(0), GQ(-1)}}},
    };
    Mat4 G{};
    if (j >= 1 && j <= 3) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                G[a][b + 2] = -I * sig[j - 1][a][b];
                G[a + 2][b] = I * sig[j - 1][a][b];
            }
    } else if (j == 4) {
        for (int a = 0; a < 2; ++a) G[a][a + 2] = G[a + 2][a] = GQ(1);
    } else {
        throw std::invalid_argument("gamma index out of range");
    }
    for (auto& row : G)
        for (auto& x : row) x *= I;
    return G;
}

Mat4 mono_matrix(CliffordMono m) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i) r[i][i] = GQ(1);
    for (int j = 0; j < kDim; ++j)
        if (m & (1u << j)) r = mat_mul(r, gamma_matrix(j + 1));
    return r;
}

GQ matrix_oracle_trace(const CliffordExpr& a, const std::map<Var, GQ>& bindings) {
    const auto& reg = Registry::get();
    std::vector<GQ> point(reg.size());
    for (Var v : a.vars()) {
        auto it = bindings.find(v);
        if (it == bindings.end()) throw std::invalid_argument("unbound indeterminate: " + reg.info(v).name);
        point[v] = it->second;
    }
    GQ tr(0);
    for (auto& [m, c] : a.terms()) {
        Mat4 M = mono_matrix(m);
        GQ diag = M[0][0] + M[1][1] + M[2][2] + M[3][3];
        tr += diag * c.eval(point);
    }
    return tr;
}

}  // namespace ncr
