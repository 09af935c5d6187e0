// radolab: count, minimize, and certify monochromatic solutions of linear
// equations over [n] and Z_m under two-colorings.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rado/analysis.hpp"
#include "rado/colorings.hpp"
#include "rado/equation.hpp"
#include "rado/fourier.hpp"
#include "rado/parallel.hpp"
#include "rado/search.hpp"
#include "rado/solutions.hpp"
#include "rado/verify.hpp"

using json = nlohmann::ordered_json;
using namespace rado;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitBudget = 4;

std::string g_command_line;

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("RADO_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_threads();
}

std::string six_decimals(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

json rational_json(const Rational& r) {
    return json{{"num", r.num}, {"den", r.den}, {"text", r.str()}, {"decimal", six_decimals(r.to_double())}};
}

json report_header() {
    return json{{"report_v", 1}, {"command", g_command_line}};
}

void emit(const json& body, std::chrono::steady_clock::time_point t0) {
    std::cout << body.dump(2) << "\n";
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "wall-time: " << six_decimals(secs) << " s\n";
}

Domain domain_from_flags(std::int64_t n, std::int64_t zm) {
    if ((n > 0) == (zm > 0))
        throw CLI::ValidationError("domain", "give exactly one of --n or --zm");
    return n > 0 ? Domain::interval(n) : Domain::cyclic(zm);
}

Coloring load_coloring_file(const Domain& d, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file '" + path + "'");
    std::string line;
    std::getline(in, line);
    return Coloring::from_line(d, line);
}

// sources: schur | point | altprefix:C | blocks:SPEC | random:SEED |
//          lift:M:FILE | file:PATH (or a bare path)
Coloring make_coloring(const Domain& d, const std::string& source) {
    auto need_interval = [&](const std::string& what) {
        if (!d.is_interval())
            throw std::invalid_argument(what + " colorings are defined over intervals; use --n");
    };
    if (source == "schur") {
        need_interval("schur");
        return schur_coloring(d.size);
    }
    if (source == "point") {
        if (d.is_interval())
            throw std::invalid_argument("point colorings are cyclic; use --zm or lift:m:FILE");
        return point_coloring_cyclic(d.size);
    }
    if (source.rfind("altprefix:", 0) == 0) {
        need_interval("alternating-prefix");
        return alternating_prefix_coloring(d.size, std::stoll(source.substr(10)));
    }
    if (source.rfind("blocks:", 0) == 0) {
        need_interval("block");
        return block_coloring(d.size, parse_block_spec(source.substr(7)));
    }
    if (source.rfind("random:", 0) == 0) {
        return random_coloring(d, std::stoull(source.substr(7)));
    }
    if (source.rfind("lift:", 0) == 0) {
        need_interval("lifted");
        std::string rest = source.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("lift source needs the form lift:m:FILE");
        std::int64_t m = std::stoll(rest.substr(0, colon));
        Coloring f = load_coloring_file(Domain::cyclic(m), rest.substr(colon + 1));
        return lift_from_cyclic(f, d.size);
    }
    if (source.rfind("file:", 0) == 0) return load_coloring_file(d, source.substr(5));
    return load_coloring_file(d, source);
}

json domain_json(const Domain& d) {
    return json{{"kind", d.is_interval() ? "interval" : "cyclic"}, {"size", d.size}};
}

json stats_json(const SolutionStats& st) {
    return json{{"total", st.total},
                {"monochromatic", st.monochromatic},
                {"red", st.red},
                {"blue", st.blue},
                {"proportion", rational_json(st.proportion)}};
}

json spectrum_json(const Spectrum& F) {
    json coeffs = json::array();
    for (std::int64_t xi = 0; xi < F.m; ++xi) {
        const auto& c = F.coefficients[static_cast<std::size_t>(xi)];
        coeffs.push_back(json::array({xi, c.real(), c.imag()}));
    }
    return json{{"m", F.m}, {"coefficients", coeffs}};
}

int cmd_count(const std::string& eq_text, std::int64_t n, std::int64_t zm, const std::string& source) {
    auto t0 = std::chrono::steady_clock::now();
    LinearEquation eq = parse_equation(eq_text);
    Domain d = domain_from_flags(n, zm);
    Coloring f = make_coloring(d, source);
    SolutionStats st = count_stats(eq, f);
    json body = report_header();
    body["equation"] = eq.str();
    body["domain"] = domain_json(d);
    body["coloring_source"] = source;
    body["stats"] = stats_json(st);
    emit(body, t0);
    return 0;
}

int cmd_min(const std::string& eq_text, std::int64_t n, std::int64_t zm, std::int64_t budget, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    LinearEquation eq = parse_equation(eq_text);
    Domain d = domain_from_flags(n, zm);
    MinMuResult r = exact_min_mu(eq, d, budget, threads);
    json body = report_header();
    body["equation"] = eq.str();
    body["domain"] = domain_json(d);
    body["budget"] = budget;
    body["exact"] = r.exact;
    body["total"] = r.total;
    body["min_monochromatic"] = r.min_monochromatic;
    body["min_mu"] = rational_json(r.mu);
    body["witness"] = r.witness.to_line();
    emit(body, t0);
    return r.exact ? 0 : kExitBudget;
}

int cmd_classify(const std::string& eq_text, std::int64_t n) {
    auto t0 = std::chrono::steady_clock::now();
    LinearEquation eq = parse_equation(eq_text);
    Verdict v = predict_commonness(eq);
    json body = report_header();
    body["equation"] = eq.str();
    body["prediction"] = commonness_name(v.predicted_common);
    if (v.branch) {
        body["branch"] = branch_name(*v.branch);
        body["normalized"] = json::array({v.normalized[0], v.normalized[1], v.normalized[2]});
        body["solvable_over_interval"] = v.solvable_over_interval;
    }
    if (v.certificate) {
        json cert;
        cert["description"] = v.certificate->describe();
        if (v.certificate->is_spectrum()) {
            const auto [a, b, c] = v.normalized;
            cert["spectrum"] = spectrum_json(v.certificate->spectrum);
            cert["deviation"] = deviation(a, b, v.certificate->spectrum);
        } else if (n > 0) {
            cert["coloring"] = v.certificate->materialize(n).to_line();
        }
        body["certificate"] = cert;
    }
    emit(body, t0);
    return 0;
}

int cmd_search(const std::string& eq_text, const SearchConfig& cfg, int threads, const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    LinearEquation eq = parse_equation(eq_text);
    LocalSearchResult r = local_search(eq, cfg, threads);
    json body = report_header();
    body["equation"] = eq.str();
    body["n"] = cfg.n;
    body["seed"] = cfg.seed;
    body["restarts"] = cfg.restarts;
    body["max_passes"] = cfg.max_passes;
    body["monochromatic"] = r.monochromatic;
    body["total"] = r.total;
    body["mu"] = rational_json(r.mu);
    body["trace"] = json{{"best_restart_flips", r.flips}, {"total_flips", r.total_flips}};
    body["witness"] = r.witness.to_line();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << r.witness.to_line() << "\n";
        body["witness_file"] = out_path;
    }
    emit(body, t0);
    return 0;
}

int cmd_scan(const std::string& eq_text, const std::string& range, std::int64_t budget, int threads,
             const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    LinearEquation eq = parse_equation(eq_text);
    auto dots = range.find("..");
    std::vector<std::int64_t> ns;
    if (dots == std::string::npos) {
        ns.push_back(std::stoll(range));
    } else {
        std::int64_t lo = std::stoll(range.substr(0, dots));
        std::int64_t hi = std::stoll(range.substr(dots + 2));
        if (lo < 1 || hi < lo) throw std::invalid_argument("bad range '" + range + "'");
        for (std::int64_t n = lo; n <= hi; ++n) ns.push_back(n);
    }
    auto rows = lower_bound_scan(eq, ns, budget, threads);
    std::string csv = scan_to_csv(rows);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << csv;
        std::cerr << "csv written to " << out_path << "\n";
    }
    json body = report_header();
    body["equation"] = eq.str();
    body["budget"] = budget;
    body["csv"] = csv;
    json ratios = json::array();
    for (const auto& row : rows) ratios.push_back(json::array({row.n, row.mono_over_n2}));
    body["mono_over_n2"] = ratios;
    emit(body, t0);
    return 0;
}

int cmd_spectrum(const std::string& eq_text) {
    auto t0 = std::chrono::steady_clock::now();
    LinearEquation eq = parse_equation(eq_text);
    if (eq.k() != 3) throw std::invalid_argument("spectrum construction needs a 3-term equation");
    auto norm = normalize_three_term(eq);
    Spectrum F = construct_uncommon_spectrum(norm[0], norm[1], norm[2]);
    json body = report_header();
    body["equation"] = eq.str();
    body["normalized"] = json::array({norm[0], norm[1], norm[2]});
    body["spectrum"] = spectrum_json(F);
    body["deviation"] = deviation(norm[0], norm[1], F);
    body["expected_mu"] = mu_expected_fourier(norm[0], norm[1], F);
    emit(body, t0);
    return 0;
}

int cmd_verify(const std::string& suite, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    auto results = verify::run_suite(suite, threads);
    bool all = true;
    json checks = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    json body = report_header();
    body["suite"] = suite;
    body["pass"] = all;
    body["checks"] = checks;
    emit(body, t0);
    return all ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) {
        if (i) g_command_line += " ";
        g_command_line += argv[i];
    }

    CLI::App app{"monochromatic solution counting and minimization for linear equations"};
    app.require_subcommand(1);
    int threads_flag = 0;
    app.add_option("--threads", threads_flag, "worker threads (default: RADO_LAB_THREADS or all cores)");

    std::string eq_text, coloring_source, range, out_path, suite;
    std::int64_t n = 0, zm = 0, budget = std::int64_t{1} << 26;
    SearchConfig cfg;

    auto* count = app.add_subcommand("count", "count monochromatic solutions under a coloring");
    count->add_option("equation", eq_text)->required();
    count->add_option("--n", n, "interval domain [n]");
    count->add_option("--zm", zm, "cyclic domain Z_m");
    count->add_option("--coloring", coloring_source, "schur | point | altprefix:C | blocks:SPEC | random:SEED | lift:M:FILE | file:PATH")->required();

    auto* min = app.add_subcommand("min", "exhaustive minimum of the monochromatic proportion");
    min->add_option("equation", eq_text)->required();
    min->add_option("--n", n);
    min->add_option("--zm", zm);
    min->add_option("--budget", budget, "max colorings to evaluate");

    auto* classify = app.add_subcommand("classify", "case split and commonness prediction");
    classify->add_option("equation", eq_text)->required();
    classify->add_option("--n", n, "materialize the certificate coloring at this n");

    auto* search = app.add_subcommand("search", "local-search minimization over colorings of [n]");
    search->add_option("equation", eq_text)->required();
    search->add_option("--n", cfg.n)->required();
    search->add_option("--seed", cfg.seed);
    search->add_option("--restarts", cfg.restarts);
    search->add_option("--max-passes", cfg.max_passes);
    search->add_option("--out", out_path, "write the best witness line here");

    auto* scan = app.add_subcommand("scan", "minimum monochromatic counts over a range of n");
    scan->add_option("equation", eq_text)->required();
    scan->add_option("--n", range, "single n or range lo..hi")->required();
    scan->add_option("--budget", budget, "max colorings per n for the exhaustive path");
    scan->add_option("--out", out_path, "write the CSV here");

    auto* spectrum = app.add_subcommand("spectrum", "uncommonness spectrum for a 3-term equation");
    spectrum->add_option("equation", eq_text)->required();

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "schur | residual-221 | residual-2x2ycz | fourier | additive | l-decomposition | classify-all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    int threads = resolve_threads(threads_flag);
    try {
        if (*count) return cmd_count(eq_text, n, zm, coloring_source);
        if (*min) return cmd_min(eq_text, n, zm, budget, threads);
        if (*classify) return cmd_classify(eq_text, n);
        if (*search) return cmd_search(eq_text, cfg, threads, out_path);
        if (*scan) return cmd_scan(eq_text, range, budget, threads, out_path);
        if (*spectrum) return cmd_spectrum(eq_text);
        if (*verify) return cmd_verify(suite, threads);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
