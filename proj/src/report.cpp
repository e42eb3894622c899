#include "ncr/report.hpp"

#include "ncr/interior.hpp"
#include "ncr/references.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ncr {

namespace {

const std::vector<std::string> kTheoremChoices{"T2.3", "T4.1", "T4.6", "T5.1", "T5.4", "all"};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& key, const std::string& v) {
    std::string l = v;
    std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (l == "on" || l == "true" || l == "yes" || l == "1") return true;
    if (l == "off" || l == "false" || l == "no" || l == "0") return false;
    throw std::invalid_argument("config key '" + key + "': expected on/off, got '" + v + "'");
}

std::uint64_t parse_count(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
        n = std::stoull(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size() || v[0] == '-')
        throw std::invalid_argument("config key '" + key + "': expected a non-negative integer, got '" + v + "'");
    return n;
}

std::string on_off(bool b) { return b ? "on" : "off"; }

void substitute_row(ReportRow& r) {
    r.engine_value = subst_omega3(r.engine_value);
    if (r.reference_value) r.reference_value = subst_omega3(*r.reference_value);
    r.verdict.delta = subst_omega3(r.verdict.delta);
    for (auto& s : r.trail) {
        s.value = subst_omega3(s.value);
        s.verdict.delta = subst_omega3(s.verdict.delta);
    }
}

ReportRow reference_row(const std::string& id, const CliffordExpr& engine, const TorsionSwitches& sw) {
    const Reference& ref = find_reference(id);
    ReportRow row;
    row.id = id;
    row.kind = ref_kind_name(ref.kind);
    row.engine_value = engine;
    row.reference_value = apply_switches(ref.value, sw);
    row.reference_source = ref.source;
    row.verdict = compare_values(engine, *row.reference_value);
    return row;
}

ReportRow case_row(const PhiReport& p, const TorsionSwitches& sw) {
    ReportRow row;
    row.id = p.id;
    row.kind = "case";
    row.engine_value = CliffordExpr(p.value);
    if (p.reference) {
        const Reference& ref = find_reference(*p.reference);
        row.reference_value = apply_switches(ref.value, sw);
        row.reference_source = ref.source;
    }
    row.verdict = p.verdict;
    row.trail = p.trail;
    row.checks = p.checks;
    return row;
}

// Runs every case, fanning out over worker threads; results keep case order.
std::vector<PhiReport> run_cases(const std::vector<CaseSpec>& cases, const PipelineOptions& opts, int jobs) {
    std::vector<PhiReport> out(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
            try {
                out[i] = compute_case_term(cases[i], opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t n = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    n = std::min(n, cases.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!errors[i]) continue;
        out[i].spec = cases[i];
        out[i].id = theorem_name(cases[i].theorem) + "/" + cases[i].id;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const std::exception& e) {
            out[i].checks.push_back({"computation", false, e.what()});
        }
    }
    return out;
}

void run_boundary(Report& rep, TheoremId t, const PipelineOptions& opts) {
    const RunConfig& c = rep.config;
    std::string name = theorem_name(t);

    auto listed = enumerate_cases(t), scanned = scan_cases(t);
    auto key = [](const CaseSpec& s) { return std::tuple(s.id, s.r, s.l, s.k, s.j, s.alpha); };
    auto by_key = [&](const CaseSpec& a, const CaseSpec& b) { return key(a) < key(b); };
    std::sort(scanned.begin(), scanned.end(), by_key);
    auto sorted_listed = listed;
    std::sort(sorted_listed.begin(), sorted_listed.end(), by_key);
    bool same = sorted_listed.size() == scanned.size() &&
                std::equal(sorted_listed.begin(), sorted_listed.end(), scanned.begin(), [&](auto& a, auto& b) { return key(a) == key(b); });
    rep.checks.push_back({name + " case scan reproduces the five cases", same,
                          std::to_string(scanned.size()) + " tuples satisfy the constraint"});

    std::vector<CaseSpec> cases;
    for (auto& s : listed)
        if (c.case_filter.empty() || s.id == c.case_filter) cases.push_back(s);
    std::vector<PhiReport> phis = run_cases(cases, opts, c.jobs);
    for (auto& p : phis) rep.rows.push_back(case_row(p, c.torsion));
    if (!c.case_filter.empty()) return;

    TotalReport tr = total_boundary_term(t, phis, opts);
    ScalarExpr sum;
    for (auto& p : phis) sum += p.value;
    rep.checks.push_back({name + " total equals the sum of the case values", tangential_contraction(sum) == tr.value,
                          tr.value.str()});
    const std::string prefix = "printed case sum vs ";
    for (auto& [id, verdict] : tr.verdicts) {
        bool printed_sum = id.rfind(prefix, 0) == 0;
        std::string ref_id = printed_sum ? id.substr(prefix.size()) : id;
        const Reference& ref = find_reference(ref_id);
        ReportRow row;
        row.id = id;
        row.kind = printed_sum ? "sum-check" : ref_kind_name(ref.kind);
        row.engine_value = CliffordExpr(printed_sum ? tr.sum_of_cases : tr.value);
        row.reference_value = apply_switches(ref.value, c.torsion);
        row.reference_source = ref.source;
        row.verdict = verdict;
        rep.totals.push_back(std::move(row));
    }
}

void run_trace(Report& rep) {
    const TorsionSwitches& sw = rep.config.torsion;
    ReportRow row = reference_row("T2.3/traceE", CliffordExpr(apply_switches(trace_E(), sw)), sw);
    for (auto& p : trace_E_parts())
        if (p.name != "identity") row.checks.push_back({"Tr of the " + p.name + " part vanishes", p.value.is_zero(), p.value.str()});
    for (auto& id : curvature_trace_identities())
        row.checks.push_back({id.name + " vanishes", id.value.is_zero(), id.value.str()});
    rep.rows.push_back(std::move(row));
}

// ---------------------------------------------------------------- rendering

nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j{{"kind", verdict_name(v.kind)}};
    if (v.kind == VerdictKind::Mismatch || v.kind == VerdictKind::MatchModuloOdd) j["delta"] = v.delta.to_json();
    return j;
}

nlohmann::json checks_json(const std::vector<SelfCheck>& cs) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& c : cs) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return a;
}

nlohmann::json row_json(const ReportRow& r) {
    nlohmann::json j{{"id", r.id}, {"kind", r.kind}, {"engine_value", r.engine_value.to_json()}};
    j["reference_value"] = r.reference_value ? r.reference_value->to_json() : nlohmann::json(nullptr);
    j["reference_source"] = r.reference_source;
    j["verdict"] = verdict_json(r.verdict);
    nlohmann::json trail = nlohmann::json::array();
    for (auto& s : r.trail) {
        nlohmann::json t{{"key", s.key}, {"op", s.op}, {"value", s.value.to_json()}};
        t["reference"] = s.reference ? nlohmann::json(*s.reference) : nlohmann::json(nullptr);
        t["verdict"] = verdict_json(s.verdict);
        trail.push_back(std::move(t));
    }
    j["trail"] = std::move(trail);
    j["checks"] = checks_json(r.checks);
    return j;
}

std::string count_line(const std::vector<SelfCheck>& cs) {
    std::size_t ok = std::count_if(cs.begin(), cs.end(), [](auto& c) { return c.passed; });
    return std::to_string(ok) + "/" + std::to_string(cs.size()) + " passed";
}

void text_row(std::ostream& os, const ReportRow& r) {
    os << r.id << " = " << r.engine_value.str() << ", verdict: " << verdict_name(r.verdict.kind) << "\n";
    if (r.reference_value) os << "  reference: " << r.reference_value->str() << "\n";
    if (!r.reference_source.empty()) os << "  printed:   " << r.reference_source << "\n";
    if (r.verdict.kind == VerdictKind::Mismatch || r.verdict.kind == VerdictKind::MatchModuloOdd)
        os << "  delta:     " << r.verdict.delta.str() << "\n";
    if (!r.trail.empty()) {
        os << "  trail:\n";
        for (auto& s : r.trail) {
            os << "    " << s.key << " [" << s.op << "] = " << s.value.str();
            if (s.reference) os << "  {" << *s.reference << ": " << verdict_name(s.verdict.kind) << "}";
            os << "\n";
        }
    }
    if (!r.checks.empty()) {
        os << "  checks: " << count_line(r.checks) << "\n";
        for (auto& c : r.checks)
            if (!c.passed) os << "    FAILED " << c.name << ": " << c.detail << "\n";
    }
}

std::string tex_text(const std::string& s) {
    std::string o;
    for (char ch : s) {
        if (ch == '_' || ch == '&' || ch == '%' || ch == '#' || ch == '$' || ch == '{' || ch == '}') o += '\\';
        o += ch;
    }
    return o;
}

void latex_row(std::ostream& os, const ReportRow& r) {
    os << "\\paragraph{" << tex_text(r.id) << "} verdict: " << verdict_name(r.verdict.kind) << ".\n";
    os << "\\[ " << r.engine_value.latex() << " \\]\n";
    if (r.reference_value) os << "reference:\n\\[ " << r.reference_value->latex() << " \\]\n";
    if (r.verdict.kind == VerdictKind::Mismatch || r.verdict.kind == VerdictKind::MatchModuloOdd)
        os << "difference:\n\\[ " << r.verdict.delta.latex() << " \\]\n";
    if (!r.trail.empty()) {
        os << "\\begin{itemize}\n";
        for (auto& s : r.trail) {
            os << "\\item \\texttt{" << tex_text(s.key) << "} (" << tex_text(s.op) << "): $" << s.value.latex() << "$";
            if (s.reference) os << " -- " << verdict_name(s.verdict.kind);
            os << "\n";
        }
        os << "\\end{itemize}\n";
    }
    if (!r.checks.empty()) os << "self-checks: " << count_line(r.checks) << ".\n";
    os << "\n";
}

}  // namespace

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Latex: return "latex";
        case OutputFormat::Json: return "json";
    }
    return "text";
}

OutputFormat format_from_name(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "latex") return OutputFormat::Latex;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected text, latex or json)");
}

void RunConfig::validate() const {
    if (std::find(kTheoremChoices.begin(), kTheoremChoices.end(), theorem) == kTheoremChoices.end())
        throw std::invalid_argument("unknown theorem '" + theorem + "'");
    if (!case_filter.empty()) {
        bool boundary = false, found = false;
        for (TheoremId t : theorems()) {
            if (!is_boundary_theorem(t)) continue;
            boundary = true;
            for (auto& c : enumerate_cases(t)) found = found || c.id == case_filter;
        }
        if (!boundary) throw std::invalid_argument("a case filter needs a boundary theorem (T4.6 or T5.4)");
        if (!found) throw std::invalid_argument("unknown case '" + case_filter + "'");
    }
}

std::vector<TheoremId> RunConfig::theorems() const {
    if (theorem == "all") return all_theorems();
    return {theorem_from_name(theorem)};
}

RunConfig parse_config(const std::string& text, RunConfig c) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        if (k == "theorem") c.theorem = v;
        else if (k == "case") c.case_filter = v;
        else if (k == "torsion") c.torsion.A = c.torsion.T = c.torsion.V = parse_bool(k, v);
        else if (k == "torsion.A") c.torsion.A = parse_bool(k, v);
        else if (k == "torsion.T") c.torsion.T = parse_bool(k, v);
        else if (k == "torsion.V") c.torsion.V = parse_bool(k, v);
        else if (k == "symbols") c.symbols = symbol_source_from_name(v);
        else if (k == "format") c.format = format_from_name(v);
        else if (k == "subst_omega3") c.subst_omega3 = parse_bool(k, v);
        else if (k == "seed") c.seed = parse_count(k, v);
        else if (k == "jobs") c.jobs = static_cast<int>(parse_count(k, v));
        else if (k == "samples.clifford") c.samples.clifford = parse_count(k, v);
        else if (k == "samples.halfplane") c.samples.halfplane = parse_count(k, v);
        else if (k == "samples.contour") c.samples.contour = parse_count(k, v);
        else if (k == "samples.sphere") c.samples.sphere = parse_count(k, v);
        else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + k + "'");
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::string config_to_text(const RunConfig& c) {
    std::ostringstream os;
    os << "theorem = " << c.theorem << "\n";
    if (!c.case_filter.empty()) os << "case = " << c.case_filter << "\n";
    os << "torsion.A = " << on_off(c.torsion.A) << "\n"
       << "torsion.T = " << on_off(c.torsion.T) << "\n"
       << "torsion.V = " << on_off(c.torsion.V) << "\n"
       << "symbols = " << symbol_source_name(c.symbols) << "\n"
       << "format = " << format_name(c.format) << "\n"
       << "subst_omega3 = " << on_off(c.subst_omega3) << "\n"
       << "seed = " << c.seed << "\n"
       << "samples.clifford = " << c.samples.clifford << "\n"
       << "samples.halfplane = " << c.samples.halfplane << "\n"
       << "samples.contour = " << c.samples.contour << "\n"
       << "samples.sphere = " << c.samples.sphere << "\n";
    return os.str();
}

bool Report::self_checks_passed() const {
    auto ok = [](const std::vector<SelfCheck>& cs) {
        return std::all_of(cs.begin(), cs.end(), [](auto& c) { return c.passed; });
    };
    if (!ok(checks)) return false;
    for (auto* rs : {&rows, &totals})
        for (auto& r : *rs)
            if (!ok(r.checks)) return false;
    return true;
}

std::string Report::diagnostics() const {
    std::ostringstream os;
    for (auto& c : checks)
        if (!c.passed) os << "self-check failed: " << c.name << ": " << c.detail << "\n";
    for (auto* rs : {&rows, &totals})
        for (auto& r : *rs)
            for (auto& c : r.checks)
                if (!c.passed) os << "self-check failed: " << r.id << ": " << c.name << ": " << c.detail << "\n";
    return os.str();
}

Report run_computation(const RunConfig& config) {
    config.validate();
    Report rep;
    rep.config = config;
    PipelineOptions opts;
    opts.symbols = config.symbols;
    opts.torsion = config.torsion;
    opts.seed = config.seed;
    for (TheoremId t : config.theorems()) {
        std::string name = theorem_name(t);
        switch (t) {
            case TheoremId::T2_3:
                run_trace(rep);
                rep.rows.push_back(reference_row("T2.3/interior",
                                                 CliffordExpr(apply_switches(einstein_functional_rhs(2), config.torsion)),
                                                 config.torsion));
                break;
            case TheoremId::T4_1:
            case TheoremId::T5_1:
                rep.rows.push_back(reference_row(name + "/interior", CliffordExpr(interior_term(t, config.torsion)), config.torsion));
                break;
            case TheoremId::T4_6:
            case TheoremId::T5_4: run_boundary(rep, t, opts); break;
        }
    }
    if (config.subst_omega3) {
        for (auto& r : rep.rows) substitute_row(r);
        for (auto& r : rep.totals) substitute_row(r);
    }
    return rep;
}

Verdict compare_with_reference(const CliffordExpr& expr, const std::string& reference_id) {
    return compare_values(expr, find_reference(reference_id).value);
}

std::string emit(const ScalarExpr& e, OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return e.str();
        case OutputFormat::Latex: return e.latex();
        case OutputFormat::Json: return e.to_json().dump();
    }
    return e.str();
}

std::string emit(const CliffordExpr& e, OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return e.str();
        case OutputFormat::Latex: return e.latex();
        case OutputFormat::Json: return e.to_json().dump();
    }
    return e.str();
}

ScalarExpr parse_scalar_json(const std::string& text) { return ScalarExpr::from_json(nlohmann::json::parse(text)); }
CliffordExpr parse_clifford_json(const std::string& text) { return CliffordExpr::from_json(nlohmann::json::parse(text)); }

nlohmann::json report_to_json(const Report& r) {
    const RunConfig& c = r.config;
    nlohmann::json meta{{"tool", "ncresidue"},
                        {"theorem", c.theorem},
                        {"case", c.case_filter},
                        {"torsion", {{"A", c.torsion.A}, {"T", c.torsion.T}, {"V", c.torsion.V}}},
                        {"symbols", symbol_source_name(c.symbols)},
                        {"subst_omega3", c.subst_omega3},
                        {"seed", c.seed},
                        {"self_checks_passed", r.self_checks_passed()},
                        {"checks", checks_json(r.checks)}};
    nlohmann::json rows = nlohmann::json::array(), totals = nlohmann::json::array();
    for (auto& row : r.rows) rows.push_back(row_json(row));
    for (auto& row : r.totals) totals.push_back(row_json(row));
    return {{"meta", std::move(meta)}, {"rows", std::move(rows)}, {"totals", std::move(totals)}};
}

std::string emit_report(const Report& r, OutputFormat f) {
    std::ostringstream os;
    const RunConfig& c = r.config;
    switch (f) {
        case OutputFormat::Json: return report_to_json(r).dump() + "\n";
        case OutputFormat::Text: {
            std::istringstream lines(config_to_text(c));
            for (std::string l; std::getline(lines, l);) os << "# " << l << "\n";
            os << "\n";
            for (auto& row : r.rows) text_row(os, row), os << "\n";
            if (!r.totals.empty()) os << "== totals ==\n\n";
            for (auto& row : r.totals) text_row(os, row), os << "\n";
            os << "run self-checks: " << count_line(r.checks) << "\n";
            for (auto& ch : r.checks)
                if (!ch.passed) os << "  FAILED " << ch.name << ": " << ch.detail << "\n";
            os << "status: " << (r.self_checks_passed() ? "all self-checks passed" : "SELF-CHECK FAILURE") << "\n";
            return os.str();
        }
        case OutputFormat::Latex: {
            std::istringstream lines(config_to_text(c));
            for (std::string l; std::getline(lines, l);) os << "% " << l << "\n";
            os << "\\section*{Engine values}\n\n";
            for (auto& row : r.rows) latex_row(os, row);
            if (!r.totals.empty()) os << "\\section*{Totals}\n\n";
            for (auto& row : r.totals) latex_row(os, row);
            os << "Run self-checks: " << count_line(r.checks) << ".\n";
            return os.str();
        }
    }
    return {};
}

}  // namespace ncr
