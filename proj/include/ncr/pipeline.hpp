#pragma once

#include "ncr/integration.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ncr {

enum class TheoremId { T2_3, T4_1, T4_6, T5_1, T5_4 };

std::string theorem_name(TheoremId t);               // "T4.6"
TheoremId theorem_from_name(const std::string& s);    // throws std::invalid_argument
std::vector<TheoremId> all_theorems();
bool is_boundary_theorem(TheoremId t);

struct CaseSpec {
    TheoremId theorem;
    std::string id;  // "a1", "a2", "a3", "b", "c"
    int r, l, k, j, alpha;
};

// r + l - k - j - |alpha| - 1; every boundary case has value -n.
int case_constraint(const CaseSpec& c);
// (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!) for |alpha| <= 1.
GQ case_prefactor(const CaseSpec& c);
std::vector<CaseSpec> enumerate_cases(TheoremId t);
// All (r, l, k, j, |alpha|) with r, l bounded by the factor orders that satisfy the
// constraint, found by exhaustive scan inside a box of the given radius.
std::vector<CaseSpec> scan_cases(TheoremId t, int radius = 8);

enum class SymbolSource { Printed, PrintedXiK, Recomputed };
std::string symbol_source_name(SymbolSource s);
SymbolSource symbol_source_from_name(const std::string& s);

struct TorsionSwitches {
    bool A = true, T = true, V = true;
    bool all_on() const { return A && T && V; }
};

// Indeterminates set to zero when the corresponding switch is off.
std::set<Var> switched_off_vars(const TorsionSwitches& sw);
ScalarExpr apply_switches(const ScalarExpr& e, const TorsionSwitches& sw);
CliffordExpr apply_switches(const CliffordExpr& e, const TorsionSwitches& sw);

struct PipelineOptions {
    SymbolSource symbols = SymbolSource::Printed;
    TorsionSwitches torsion;
    std::uint64_t seed = 1;  // numeric self-check bindings
};

enum class VerdictKind { Match, MatchModuloOdd, Mismatch, PaperSilent };
std::string verdict_name(VerdictKind v);

struct Verdict {
    VerdictKind kind = VerdictKind::PaperSilent;
    CliffordExpr delta;  // engine - reference when mismatched
};

struct TrailStep {
    std::string key;    // e.g. "first.pi_plus", "item2:product.trace"
    std::string op;     // primitive that produced it
    CliffordExpr value;
    std::optional<std::string> reference;
    Verdict verdict;
};

struct SelfCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PhiReport {
    CaseSpec spec;
    std::string id;  // "T4.6/a2"
    ScalarExpr value;
    std::optional<std::string> reference;
    Verdict verdict;
    std::vector<TrailStep> trail;
    std::vector<SelfCheck> checks;
};

struct TotalReport {
    TheoremId theorem;
    ScalarExpr value;
    ScalarExpr sum_of_cases;
    std::vector<std::pair<std::string, Verdict>> verdicts;  // reference id -> verdict
};

// The two factors of the boundary term of a theorem.
struct FactorPair {
    GradedSymbol first, second;
    // Parts of the composite first factor: its leading symbol P and the inner inverse Q.
    GradedSymbol outer, inner;
};
FactorPair boundary_factors(TheoremId t, SymbolSource s);

PhiReport compute_case_term(const CaseSpec& c, const PipelineOptions& opts = {});
TotalReport total_boundary_term(TheoremId t, const std::vector<PhiReport>& cases, const PipelineOptions& opts = {});
ScalarExpr interior_term(TheoremId t, const TorsionSwitches& sw = {});

// Rewrites X1*Y1 as gT - X2*Y2 - X3*Y3 until no monomial contains both.
ScalarExpr tangential_contraction(const ScalarExpr& e);
// Omega_3 -> 4 pi.
ScalarExpr subst_omega3(const ScalarExpr& e);
CliffordExpr subst_omega3(const CliffordExpr& e);

// Compare an engine value with a reference value after Omega_3 -> 4 pi and
// the tangential contraction. Scalars that differ only by terms whose
// tangential sphere moments vanish get MatchModuloOdd. The reported delta
// keeps Omega_3.
Verdict compare_values(const CliffordExpr& engine, const CliffordExpr& reference);
// The sphere average over |xi'| = 1 applied coefficientwise in xi_n.
ScalarExpr sphere_average(const ScalarExpr& e);

}  // namespace ncr
