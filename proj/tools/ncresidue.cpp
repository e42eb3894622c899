#include "ncr/references.hpp"
#include "ncr/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ncr;

namespace {

constexpr int kUsageError = 2;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write '" + path + "'");
    f << text;
}

struct Flags {
    std::string config, theorem, case_filter, format, symbols, out;
    bool no_torsion = false, subst_omega3 = false;
    std::uint64_t seed = 0;
    int jobs = 0;
};

RunConfig build_config(const Flags& f, const CLI::App& sub) {
    RunConfig c = f.config.empty() ? RunConfig{} : load_config(f.config);
    if (sub.count("--theorem")) c.theorem = f.theorem;
    if (sub.count("--case")) c.case_filter = f.case_filter;
    if (sub.count("--format")) c.format = format_from_name(f.format);
    if (sub.count("--symbols")) c.symbols = symbol_source_from_name(f.symbols);
    if (sub.count("--seed")) c.seed = f.seed;
    if (sub.count("--jobs")) c.jobs = f.jobs;
    if (f.no_torsion) c.torsion = TorsionSwitches{false, false, false};
    if (f.subst_omega3) c.subst_omega3 = true;
    c.validate();
    return c;
}

int cmd_run(const Flags& f, const CLI::App& sub) {
    RunConfig c = build_config(f, sub);
    Report r = run_computation(c);
    write_output(emit_report(r, c.format), f.out);
    if (r.exit_code() != 0) std::cerr << r.diagnostics();
    return r.exit_code();
}

int cmd_verify(const Flags& f, const CLI::App& sub) {
    RunConfig c = build_config(f, sub);
    std::vector<Suite> suites = run_oracle_suites(c.samples, c.seed);
    bool ok = true;
    std::string text;
    if (c.format == OutputFormat::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (auto& s : suites) {
            nlohmann::json checks = nlohmann::json::array();
            for (auto& ch : s.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
            j.push_back({{"suite", s.name}, {"passed", s.passed()}, {"checks", checks}});
            ok = ok && s.passed();
        }
        text = j.dump(2) + "\n";
    } else {
        for (auto& s : suites) {
            text += s.name + ": " + (s.passed() ? "pass" : "FAIL") + "\n";
            for (auto& ch : s.checks) text += std::string("  ") + (ch.passed ? "ok   " : "FAIL ") + ch.name + ": " + ch.detail + "\n";
            ok = ok && s.passed();
        }
    }
    write_output(text, f.out);
    return ok ? 0 : 1;
}

int cmd_list() {
    std::cout << "theorems:\n";
    for (TheoremId t : all_theorems()) {
        std::cout << "  " << theorem_name(t) << (is_boundary_theorem(t) ? "  (boundary)" : "  (interior)") << "\n";
        if (!is_boundary_theorem(t)) continue;
        for (auto& c : enumerate_cases(t))
            std::cout << "    " << c.id << "  r=" << c.r << " l=" << c.l << " k=" << c.k << " j=" << c.j << " |alpha|=" << c.alpha
                      << "\n";
    }
    std::cout << "symbol sources: printed, printed-xik, recomputed\n";
    std::cout << "references:\n";
    for (auto& r : reference_table()) std::cout << "  " << r.id << "  [" << ref_kind_name(r.kind) << "]  " << r.anchor << "\n";
    return 0;
}

void add_run_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "flat key = value config file");
    sub->add_option("--seed", f.seed, "seed for the numeric self-checks");
    sub->add_option("--format", f.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
    sub->add_option("--out", f.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact boundary and interior residue terms for Dirac operators with torsion"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* run = app.add_subcommand("run", "compute the selected theorems and compare with the printed values");
    add_run_flags(run, f);
    run->add_option("--theorem", f.theorem, "T2.3, T4.1, T4.6, T5.1, T5.4 or all");
    run->add_option("--case", f.case_filter, "a1, a2, a3, b or c");
    run->add_option("--symbols", f.symbols, "printed, printed-xik or recomputed");
    run->add_option("--jobs", f.jobs, "worker threads for the cases (0: hardware count)");
    run->add_flag("--no-torsion", f.no_torsion, "set A, T and V to zero");
    run->add_flag("--subst-omega3", f.subst_omega3, "render Omega_3 as 4 pi");

    CLI::App* verify = app.add_subcommand("verify", "run the oracle and property suites");
    add_run_flags(verify, f);

    app.add_subcommand("list", "list theorems, cases and references");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsageError;
    }
    try {
        if (run->parsed()) return cmd_run(f, *run);
        if (verify->parsed()) return cmd_verify(f, *verify);
        return cmd_list();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
}
