// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
#include "ncr/interior.hpp"
#include "ncr/report.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace ncr;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void report(int n, const std::string& title, Outcome& o) {
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " --" << o.detail.str() << std::endl;
}

void suite_summary(Outcome& o, const Suite& s) {
    std::size_t ok = 0;
    for (const auto& c : s.checks) {
        ok += c.passed;
        o.require(c.passed, s.name + ": " + c.name + ": " + c.detail);
    }
    o.detail << " " << s.name << " " << ok << "/" << s.checks.size();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool has_torsion(const CliffordExpr& e) {
    for (Var v : e.vars())
        if (Registry::get().info(v).torsion) return true;
    return false;
}

void boundary_contract(Outcome& o, const Report& r, const std::string& theorem, bool primitives_ok) {
    const ReportRow* first = nullptr;
    std::size_t cases = 0, mismatches = 0;
    for (const auto& row : r.rows) {
        if (row.id.rfind(theorem + "/", 0) != 0) continue;
        ++cases;
        if (row.id == theorem + "/a1") first = &row;
        o.require(row.reference_value.has_value(), row.id + " has no reference");
        if (row.verdict.kind == VerdictKind::Mismatch) {
            ++mismatches;
            o.require(!row.trail.empty(), row.id + " mismatch without a trail");
            o.require(!row.verdict.delta.is_zero(), row.id + " mismatch without a delta");
        }
        for (const auto& c : row.checks) o.require(c.passed, row.id + ": " + c.name);
    }
    o.require(cases == 5, "expected five case rows");
    o.require(first && first->engine_value.is_zero(), "first case is not 0");
    o.require(first && first->verdict.kind == VerdictKind::Match, "first case verdict");
    bool total = false;
    for (const auto& row : r.totals)
        if (row.id == theorem + "/total") total = true;
    o.require(total, "no total row");
    o.require(primitives_ok, "criteria 1-5 must hold for the trail primitives");
    o.detail << " " << cases << " cases, " << mismatches << " mismatch rows with trails";
}

}  // namespace

int main() {
    const std::uint64_t seed = 1;
    OracleCounts counts;

    auto timed = [](auto f) {
        auto t0 = std::chrono::steady_clock::now();
        auto v = f();
        return std::pair(std::move(v), seconds_since(t0));
    };

    bool primitives_ok = true;
    {
        Outcome o;
        suite_summary(o, verify_clifford(counts, seed));
        report(1, "Clifford traces against the matrix oracle", o);
        primitives_ok &= o.pass;
    }
    {
        Outcome o;
        suite_summary(o, verify_trace_identities());
        o.require(trace_E() == ScalarExpr(4) * endomorphism_E().scalar, "trace of E");
        report(2, "trace identities and the trace of E", o);
        primitives_ok &= o.pass;
    }
    {
        Outcome o;
        suite_summary(o, verify_halfplane(counts, seed + 1));
        report(3, "pi_plus regression and projection identities", o);
        primitives_ok &= o.pass;
    }
    {
        Outcome o;
        suite_summary(o, verify_contour(counts, seed + 2));
        report(4, "contour integrals against quadrature and the derivative formula", o);
        primitives_ok &= o.pass;
    }
    {
        Outcome o;
        suite_summary(o, verify_sphere(counts, seed + 3));
        report(5, "sphere moments", o);
        primitives_ok &= o.pass;
    }

    RunConfig all;
    all.seed = seed;
    auto [full, full_s] = timed([&] { return run_computation(all); });
    {
        RunConfig t46;
        t46.theorem = "T4.6";
        auto [r, s] = timed([&] { return run_computation(t46); });
        Outcome o;
        boundary_contract(o, full, "T4.6", primitives_ok);
        o.require(r.exit_code() == 0, "self-checks of the T4.6 run");
        o.require(s < 60.0, "five-case run exceeds 60 s");
        char buf[64];
        std::snprintf(buf, sizeof buf, "; five-case run %.1f s", s);
        o.detail << buf;
        report(6, "first boundary theorem: verdicts and trails", o);
    }
    {
        Outcome o;
        boundary_contract(o, full, "T5.4", primitives_ok);
        o.require(full.exit_code() == 0, "self-checks of the full run");
        char buf[64];
        std::snprintf(buf, sizeof buf, "; full run %.1f s", full_s);
        o.detail << buf;
        report(7, "second boundary theorem: verdicts and trails", o);
    }
    {
        Outcome o;
        Suite p = verify_parametrix();
        suite_summary(o, p);
        for (const auto& c : p.checks)
            if (c.name.find("sigma_-3") != std::string::npos) o.detail << "\n      " << c.name << ": " << c.detail;
        report(8, "parametrix identities and the printed order -3 symbol", o);
    }
    {
        RunConfig off = all;
        off.torsion = {false, false, false};
        Report r = run_computation(off);
        Outcome o;
        o.require(r.exit_code() == 0, "self-checks of the torsion-free run");
        std::size_t rows = 0;
        for (const auto* rs : {&r.rows, &r.totals})
            for (const auto& row : *rs) {
                ++rows;
                o.require(!has_torsion(row.engine_value), row.id + " keeps a torsion monomial");
            }
        ScalarExpr tr = apply_switches(trace_E(), off.torsion);
        o.require(tr == -ScalarExpr::var(Registry::get().s_scal), "Tr E is not -s");
        o.detail << " " << rows << " rows free of A, T, V; Tr E = " << tr.str();
        report(9, "zero-torsion degeneration", o);
    }
    {
        Outcome o;
        std::string a = emit_report(full, OutputFormat::Json);
        std::string b = emit_report(run_computation(all), OutputFormat::Json);
        o.require(a == b, "JSON reports differ");
        RunConfig text = all;
        text.theorem = "T4.6";
        o.require(emit_report(run_computation(text), OutputFormat::Text) == emit_report(run_computation(text), OutputFormat::Text),
                  "text reports differ");
        o.detail << " " << a.size() << " bytes identical";
        report(10, "determinism", o);
    }

    std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : std::string("acceptance: all criteria passed"))
              << std::endl;
    return failures ? 1 : 0;
}
