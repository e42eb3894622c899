#include "ncr/registry.hpp"

#include <stdexcept>
#include <unordered_map>

namespace ncr {

namespace {

std::string idx(std::initializer_list<int> ix) {
    std::string s = "[";
    bool first = true;
    for (int i : ix) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "]";
}

std::string sub(std::initializer_list<int> ix) {
    std::string s = "{";
    for (int i : ix) s += std::to_string(i);
    return s + "}";
}

const std::unordered_map<std::string, Var>& name_index(const std::vector<VarInfo>& vars) {
    static const std::unordered_map<std::string, Var> m = [&] {
        std::unordered_map<std::string, Var> r;
        for (std::size_t i = 0; i < vars.size(); ++i) r.emplace(vars[i].name, static_cast<Var>(i));
        return r;
    }();
    return m;
}

}  // namespace

const Registry& Registry::get() {
    static const Registry r;
    return r;
}

Var Registry::add(std::string name, std::string latex, VarKind kind, bool torsion) {
    vars_.push_back({std::move(name), std::move(latex), kind, torsion});
    return static_cast<Var>(vars_.size() - 1);
}

Registry::Registry() {
    using K = VarKind;
    for (int j = 1; j <= 3; ++j)
        xi_[j - 1] = add("xi" + std::to_string(j), "\\xi_{" + std::to_string(j) + "}", K::CotangentTangential);
    xi_[3] = add("xin", "\\xi_{n}", K::CotangentNormal);
    h1 = add("h1", "h'(0)", K::Geometric);
    for (int j = 1; j <= 4; ++j)
        X_[j - 1] = add("X" + std::to_string(j), j == 4 ? "X_{n}" : "X_{" + std::to_string(j) + "}", K::Geometric);
    for (int j = 1; j <= 4; ++j)
        Y_[j - 1] = add("Y" + std::to_string(j), j == 4 ? "Y_{n}" : "Y_{" + std::to_string(j) + "}", K::Geometric);
    dY_[3][3] = add("dYn", "\\frac{\\partial Y_{n}}{\\partial x_{n}}", K::Geometric);
    for (int i = 1; i <= 4; ++i)
        for (int s = 1; s <= 4; ++s)
            for (int t = s + 1; t <= 4; ++t)
                A_[i - 1][s - 1][t - 1] = add("A" + idx({i, s, t}), "A_" + sub({i, s, t}), K::Geometric, true);
    for (int a = 1; a <= 4; ++a)
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                T_[a - 1][i - 1][j - 1] = add("T" + idx({a, i, j}), "T_" + sub({a, i, j}), K::Geometric, true);
    for (int k = 1; k <= 4; ++k) V_[k - 1] = add("V" + idx({k}), "V_{" + std::to_string(k) + "}", K::Geometric, true);
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int s = 1; s <= 4; ++s)
                for (int t = s + 1; t <= 4; ++t)
                    R_[a - 1][b - 1][s - 1][t - 1] = add("R" + idx({a, b, s, t}), "R_" + sub({a, b, s, t}), K::Geometric);
    s_scal = add("s", "s", K::Geometric);
    RicVW = add("RicVW", "Ric(X,Y)", K::Geometric);
    divV = add("divV", "\\mathrm{div}(X)", K::Geometric, true);
    normT2 = add("normT2", "\\|T\\|^{2}", K::Geometric, true);
    normV2 = add("normV2", "\\|X\\|^{2}", K::Geometric, true);
    gVW = add("gVW", "g(X,Y)", K::Geometric);
    pi = add("pi", "\\pi", K::Transcendental);
    Om3 = add("Om3", "\\Omega_{3}", K::Transcendental);

    // Auxiliary atoms beyond the core list.
    W = add("W", "W", K::Geometric);
    kappa = add("kappa", "\\kappa", K::Geometric);
    gT = add("gT", "g(X^{T},Y^{T})", K::Geometric);
    for (int l = 1; l <= 4; ++l)
        for (int j = 1; j <= 4; ++j)
            if (!(l == 4 && j == 4))
                dY_[l - 1][j - 1] =
                    add("dY" + idx({l, j}), "\\partial_{" + std::to_string(j) + "}Y_{" + std::to_string(l) + "}", K::Geometric);
    dT4_ = add("dT[1,2,3,4]", "(dT)_{1234}", K::Geometric, true);
    for (int a = 1; a <= 4; ++a)
        for (int k = 1; k <= 4; ++k)
            dV_[a - 1][k - 1] = add("dV" + idx({a, k}), "e_{" + std::to_string(a) + "}(V_{" + std::to_string(k) + "})",
                                    K::Geometric, true);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int i = 1; i <= 4; ++i)
                for (int j = i + 1; j <= 4; ++j)
                    DT_[a - 1][b - 1][i - 1][j - 1] =
                        add("DT" + idx({a, b, i, j}), "e_{" + std::to_string(a) + "}(T_" + sub({b, i, j}) + ")",
                            K::Geometric, true);
    name_index(vars_);
}

Var Registry::lookup(const std::string& name) const {
    const auto& m = name_index(vars_);
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown indeterminate: " + name);
    return it->second;
}

bool Registry::contains(const std::string& name) const { return name_index(vars_).count(name) != 0; }

static void check(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("frame index out of range: " + std::to_string(i));
}

Var Registry::xi(int j) const { check(j); return xi_[j - 1]; }
Var Registry::X(int j) const { check(j); return X_[j - 1]; }
Var Registry::Y(int j) const { check(j); return Y_[j - 1]; }
Var Registry::dY(int l, int j) const { check(l); check(j); return dY_[l - 1][j - 1]; }
Var Registry::V(int k) const { check(k); return V_[k - 1]; }
Var Registry::dV(int a, int k) const { check(a); check(k); return dV_[a - 1][k - 1]; }
Var Registry::dT4() const { return dT4_; }

std::pair<Var, int> Registry::A(int i, int s, int t) const {
    check(i); check(s); check(t);
    if (s == t) return {0, 0};
    if (s < t) return {A_[i - 1][s - 1][t - 1], 1};
    return {A_[i - 1][t - 1][s - 1], -1};
}

std::pair<Var, int> Registry::T(int a, int i, int j) const {
    check(a); check(i); check(j);
    if (i == j) return {0, 0};
    if (i < j) return {T_[a - 1][i - 1][j - 1], 1};
    return {T_[a - 1][j - 1][i - 1], -1};
}

std::pair<Var, int> Registry::R(int a, int b, int s, int t) const {
    check(a); check(b); check(s); check(t);
    if (a == b || s == t) return {0, 0};
    int sign = 1;
    if (a > b) { std::swap(a, b); sign = -sign; }
    if (s > t) { std::swap(s, t); sign = -sign; }
    return {R_[a - 1][b - 1][s - 1][t - 1], sign};
}

std::pair<Var, int> Registry::DT(int a, int b, int i, int j) const {
    check(a); check(b); check(i); check(j);
    if (i == j) return {0, 0};
    if (i < j) return {DT_[a - 1][b - 1][i - 1][j - 1], 1};
    return {DT_[a - 1][b - 1][j - 1][i - 1], -1};
}

std::vector<Var> Registry::torsion_vars() const {
    std::vector<Var> r;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].torsion) r.push_back(static_cast<Var>(i));
    return r;
}

}  // namespace ncr
