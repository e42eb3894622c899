#include "support.hpp"

#include "ncr/references.hpp"
#include "ncr/report.hpp"

#include <doctest.h>

using namespace ncr;
using namespace ncr::testing;

namespace {

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

RunConfig t46(const std::string& case_filter = "") {
    RunConfig c;
    c.theorem = "T4.6";
    c.case_filter = case_filter;
    c.jobs = 1;
    return c;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("config parsing") {
    RunConfig c = parse_config(
        "# comment line\n"
        "theorem = T5.4\n"
        "case = b   # trailing comment\n"
        "torsion = off\n"
        "torsion.V = on\n"
        "symbols = printed-xik\n"
        "format = latex\n"
        "subst_omega3 = on\n"
        "seed = 42\n"
        "samples.sphere = 1000\n");
    CHECK(c.theorem == "T5.4");
    CHECK(c.case_filter == "b");
    CHECK_FALSE(c.torsion.A);
    CHECK_FALSE(c.torsion.T);
    CHECK(c.torsion.V);
    CHECK(c.symbols == SymbolSource::PrintedXiK);
    CHECK(c.format == OutputFormat::Latex);
    CHECK(c.subst_omega3);
    CHECK(c.seed == 42);
    CHECK(c.samples.sphere == 1000);
    CHECK(c.samples.clifford == OracleCounts{}.clifford);

    RunConfig back = parse_config(config_to_text(c));
    CHECK(config_to_text(back) == config_to_text(c));

    CHECK(parse_config("").theorem == "all");
    RunConfig base = t46();
    CHECK(parse_config("seed = 3", base).theorem == "T4.6");
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("theorem T4.6"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("colour = blue"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("theorem = T9.9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("theorem = T4.6\ncase = z"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("theorem = T4.1\ncase = a1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("torsion = maybe"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("seed = -4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("format = pdf"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("symbols = guessed"), std::invalid_argument);
    CHECK_THROWS_AS(load_config("/nonexistent/run.conf"), std::invalid_argument);
}

TEST_CASE("emit examples") {
    ScalarExpr v = q(13, 24) * sv("pi", 2) * sv("gT") * sv("h1");
    CHECK(emit(v, OutputFormat::Latex) == "\\frac{13\\pi^{2}}{24} g(X^{T},Y^{T}) h'(0)");
    CHECK(emit(ScalarExpr(), OutputFormat::Latex) == "0");
    CHECK(emit(ScalarExpr(), OutputFormat::Text) == "0");
    CliffordExpr c = (ScalarExpr(1) / (sv("xin") - I)) * c_xi_tan_x0();
    CHECK(emit(c, OutputFormat::Latex) == "\\frac{c(\\xi')}{\\xi_{n}-i}");
    CHECK(parse_scalar(emit(v, OutputFormat::Text)) == v);
}

TEST_CASE("JSON round trip") {
    Rng g(51);
    std::vector<Var> vars{reg().X(1), reg().xi(4), reg().h1, reg().A(1, 2, 3).first, reg().Om3};
    for (int k = 0; k < 200; ++k) {
        ScalarExpr s = rand_rational(g, vars);
        CHECK(parse_scalar_json(emit(s, OutputFormat::Json)) == s);
        CliffordExpr c = rand_clifford(g, vars) * CliffordExpr(rand_rational(g, vars));
        CHECK(parse_clifford_json(emit(c, OutputFormat::Json)) == c);
    }
}

TEST_CASE("comparison against the reference table") {
    CHECK_THROWS_AS(compare_with_reference(CliffordExpr(), "T9.9/a1"), std::invalid_argument);
    CHECK(compare_with_reference(CliffordExpr(), "T4.6/a1").kind == VerdictKind::Match);
    for (const Reference& r : reference_table()) {
        CAPTURE(r.id);
        CHECK(compare_with_reference(r.value, r.id).kind == VerdictKind::Match);
    }
    const Reference& a2 = find_reference("T4.6/a2");
    ScalarExpr extra = sv("pi") * sv("Om3");
    Verdict v = compare_values(a2.value, a2.value + CliffordExpr(extra));
    CHECK(v.kind == VerdictKind::Mismatch);
    CHECK(v.delta == CliffordExpr(-extra));
}

TEST_CASE("single case run") {
    Report r = run_computation(t46("a1"));
    REQUIRE(r.rows.size() == 1);
    CHECK(r.totals.empty());
    CHECK(r.exit_code() == 0);
    CHECK(r.rows[0].verdict.kind == VerdictKind::Match);
    CHECK(contains(emit_report(r, OutputFormat::Text), "T4.6/a1 = 0, verdict: match"));
}

TEST_CASE("five rows and totals") {
    RunConfig c = t46();
    Report r = run_computation(c);
    CHECK(r.rows.size() == 5);
    CHECK_FALSE(r.totals.empty());
    CHECK(r.self_checks_passed());
    CHECK(r.diagnostics().empty());
    for (const auto& row : r.rows) CHECK(row.kind == "case");
    bool total = false;
    for (const auto& row : r.totals) total |= row.id == "T4.6/total";
    CHECK(total);

    std::string json = emit_report(r, OutputFormat::Json);
    auto j = nlohmann::json::parse(json);
    CHECK(j["meta"]["theorem"] == "T4.6");
    CHECK(j["rows"].size() == 5);
    for (const auto& row : j["rows"]) {
        CHECK(row.contains("engine_value"));
        CHECK(row.contains("reference_value"));
        CHECK(row.contains("verdict"));
        CHECK(row.contains("trail"));
        CHECK(parse_clifford_json(row["engine_value"].dump()) == CliffordExpr::from_json(row["engine_value"]));
    }
    CHECK(contains(emit_report(r, OutputFormat::Latex), "\\section*"));

    // Deterministic across runs and thread counts.
    RunConfig threaded = c;
    threaded.jobs = 3;
    CHECK(emit_report(run_computation(threaded), OutputFormat::Json) == json);
    CHECK(emit_report(run_computation(c), OutputFormat::Text) == emit_report(r, OutputFormat::Text));
}

TEST_CASE("torsion off and the Omega_3 substitution") {
    RunConfig c = t46();
    c.torsion = {false, false, false};
    c.subst_omega3 = true;
    Report r = run_computation(c);
    CHECK(r.exit_code() == 0);
    for (const auto* rows : {&r.rows, &r.totals})
        for (const auto& row : *rows) {
            CAPTURE(row.id);
            for (Var v : row.engine_value.vars()) {
                CHECK(v != reg().Om3);
                CHECK_FALSE(reg().info(v).torsion);
            }
        }
    CHECK(contains(emit_report(r, OutputFormat::Text), "# torsion.A = off"));
}

TEST_CASE("interior theorems") {
    RunConfig c;
    c.theorem = "T2.3";
    Report r = run_computation(c);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].id == "T2.3/traceE");
    CHECK(r.rows[0].verdict.kind == VerdictKind::Match);
    CHECK(r.rows[1].verdict.kind == VerdictKind::Match);
    CHECK(r.exit_code() == 0);
    c.theorem = "T4.1";
    CHECK(run_computation(c).rows.at(0).verdict.kind == VerdictKind::Match);
}

TEST_CASE("format names") {
    for (OutputFormat f : {OutputFormat::Text, OutputFormat::Latex, OutputFormat::Json})
        CHECK(format_from_name(format_name(f)) == f);
    CHECK_THROWS_AS(format_from_name("yaml"), std::invalid_argument);
}

}
