#pragma once

#include "ncr/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ncr {

enum class OutputFormat { Text, Latex, Json };
std::string format_name(OutputFormat f);
OutputFormat format_from_name(const std::string& s);  // throws std::invalid_argument

struct RunConfig {
    std::string theorem = "all";  // T2.3, T4.1, T4.6, T5.1, T5.4 or all
    std::string case_filter;      // empty: every case
    TorsionSwitches torsion;
    SymbolSource symbols = SymbolSource::Printed;
    OutputFormat format = OutputFormat::Text;
    bool subst_omega3 = false;
    OracleCounts samples;
    std::uint64_t seed = 1;
    int jobs = 0;  // worker threads for the case fan-out; 0 picks the hardware count

    // Throws std::invalid_argument on an unknown theorem, case or symbol source.
    void validate() const;
    std::vector<TheoremId> theorems() const;
};

// Flat "key = value" document; '#' starts a comment. Keys mirror RunConfig:
// theorem, case, torsion.A, torsion.T, torsion.V, torsion (all three),
// symbols, format, subst_omega3, seed, jobs, samples.clifford,
// samples.halfplane, samples.contour, samples.sphere.
// Throws std::invalid_argument on unknown keys or malformed values.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
std::string config_to_text(const RunConfig& c);

struct ReportRow {
    std::string id;    // "T4.6/a2"
    std::string kind;  // case, total, theorem, sum-check, interior, traceE
    CliffordExpr engine_value;
    std::optional<CliffordExpr> reference_value;
    std::string reference_source;  // printed formula, verbatim
    Verdict verdict;
    std::vector<TrailStep> trail;
    std::vector<SelfCheck> checks;
};

struct Report {
    RunConfig config;
    std::vector<ReportRow> rows;    // cases, interior terms, trace of E
    std::vector<ReportRow> totals;  // boundary totals and theorem statements
    std::vector<SelfCheck> checks;  // run-level self-checks
    bool self_checks_passed() const;
    // 0 when every self-check passed, whatever the reference verdicts.
    int exit_code() const { return self_checks_passed() ? 0 : 1; }
    // Failing self-checks, one per line.
    std::string diagnostics() const;
};

Report run_computation(const RunConfig& config);

// Exact comparison against a shipped reference; throws std::invalid_argument
// for an unknown id.
Verdict compare_with_reference(const CliffordExpr& expr, const std::string& reference_id);

std::string emit(const ScalarExpr& e, OutputFormat f);
std::string emit(const CliffordExpr& e, OutputFormat f);
// Inverses of emit(., OutputFormat::Json).
ScalarExpr parse_scalar_json(const std::string& text);
CliffordExpr parse_clifford_json(const std::string& text);

nlohmann::json report_to_json(const Report& r);
std::string emit_report(const Report& r, OutputFormat f);

}  // namespace ncr
