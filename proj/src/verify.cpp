#include "rado/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "rado/analysis.hpp"
#include "rado/colorings.hpp"
#include "rado/fourier.hpp"
#include "rado/parallel.hpp"
#include "rado/search.hpp"
#include "rado/solutions.hpp"

namespace rado::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << x;
    return os.str();
}

CheckResult near(const std::string& name, double value, double target, double tol) {
    CheckResult r;
    r.name = name;
    r.pass = std::abs(value - target) <= tol;
    r.detail = fmt(value) + " vs " + fmt(target) + " +- " + fmt(tol);
    return r;
}

CheckResult within_percent(const std::string& name, double value, double target, double pct) {
    CheckResult r;
    r.name = name;
    r.pass = std::abs(value - target) <= pct / 100.0 * std::abs(target);
    r.detail = fmt(value) + " vs " + fmt(target) + " +- " + fmt(pct) + "%";
    return r;
}

CheckResult boolean(const std::string& name, bool pass, const std::string& detail) {
    return CheckResult{name, pass, detail};
}

}  // namespace

std::vector<CheckResult> suite_schur() {
    auto t0 = Clock::now();
    const std::int64_t n = 11000;
    LinearEquation schur({1, 1, -1});
    SolutionStats st = count_stats(schur, schur_coloring(n));
    double runtime = seconds_since(t0);
    std::vector<CheckResult> out;
    out.push_back(near("schur: mu at n=11000", st.proportion.to_double(), 2.0 / 11.0, 0.005));
    out.push_back(boolean("schur: runtime < 5 s", runtime < 5.0, fmt(runtime) + " s"));
    return out;
}

std::vector<CheckResult> suite_residual_2x2ycz() {
    std::vector<CheckResult> out;
    for (std::int64_t c : {3, 5, 7}) {
        const std::int64_t n = 9000;
        LinearEquation eq({2, -2, c});
        SolutionStats st = count_stats(eq, alternating_prefix_coloring(n, c));
        double n2 = static_cast<double>(n) * static_cast<double>(n);
        std::string tag = "2x-2y+" + std::to_string(c) + "z: ";
        out.push_back(near(tag + "mu", st.proportion.to_double(), 1.0 / static_cast<double>(c * c), 0.005));
        out.push_back(within_percent(tag + "mono ~ n^2/(2c^3)", static_cast<double>(st.monochromatic),
                                     n2 / (2.0 * static_cast<double>(c * c * c)), 2.0));
        out.push_back(within_percent(tag + "total ~ n^2/(2c)", static_cast<double>(st.total),
                                     n2 / (2.0 * static_cast<double>(c)), 2.0));
    }
    {
        const std::int64_t n = 8000;
        LinearEquation eq({2, -2, 1});
        Coloring f = alternating_prefix_coloring(n, 1);
        SolutionStats st = count_stats(eq, f);
        double n2 = static_cast<double>(n) * static_cast<double>(n);
        out.push_back(near("2x-2y+z: mu", st.proportion.to_double(), 5.0 / 24.0, 0.005));
        out.push_back(within_percent("2x-2y+z: blue ~ 27n^2/512", static_cast<double>(st.blue),
                                     27.0 * n2 / 512.0, 2.0));
        // red solutions split by whether y crosses the 3n/4 boundary
        const std::int64_t boundary = 3 * n / 4;
        std::int64_t red_outer = 0, red_inner = 0;
        for_each_solution(eq, f.domain, [&](const std::vector<std::int64_t>& x) {
            if (f.at(x[0]) != kRed || f.at(x[1]) != kRed || f.at(x[2]) != kRed) return;
            (x[1] > boundary ? red_outer : red_inner) += 1;
        });
        out.push_back(within_percent("2x-2y+z: red (y past 3n/4) ~ n^2/64",
                                     static_cast<double>(red_outer), n2 / 64.0, 2.0));
        out.push_back(within_percent("2x-2y+z: red (y below 3n/4) ~ 5n^2/512",
                                     static_cast<double>(red_inner), 5.0 * n2 / 512.0, 2.0));
        out.push_back(within_percent("2x-2y+z: total ~ 3n^2/8", static_cast<double>(st.total),
                                     3.0 * n2 / 8.0, 1.0));
    }
    return out;
}

std::vector<CheckResult> suite_residual_221() {
    std::vector<CheckResult> out;
    LinearEquation eq({2, -1, 2});
    {
        const std::int64_t n = 8000;
        SolutionStats st = count_stats(eq, three_block_coloring(n));
        out.push_back(near("2x-y+2z: mu at n=8000", st.proportion.to_double(), 1.0 / 64.0, 0.002));
    }
    {
        const std::int64_t n = 800;
        LReport r = l_statistic(eq, three_block_coloring(n));
        out.push_back(near("2x-y+2z: L/n^2 at n=800", r.normalized.to_double(), -15.0 / 128.0, 0.005));
        out.push_back(boolean("2x-y+2z: 4*mono = total + L",
                              4 * r.monochromatic == r.total + r.L,
                              "4*" + std::to_string(r.monochromatic) + " vs " + std::to_string(r.total) +
                                  " + " + std::to_string(r.L)));
        double n2 = static_cast<double>(n) * static_cast<double>(n);
        out.push_back(within_percent("2x-y+2z: total ~ n^2/8", static_cast<double>(r.total), n2 / 8.0, 1.0));
    }
    return out;
}

std::vector<CheckResult> suite_l_decomposition() {
    std::vector<CheckResult> out;
    const std::int64_t n = 800;
    LReport r = l_decomposition_221(n, three_block_coloring(n));
    const auto& lc = *r.per_case;
    out.push_back(boolean("decomposition: L1 = L2", lc[0] == lc[1],
                          std::to_string(lc[0]) + " vs " + std::to_string(lc[1])));
    out.push_back(boolean("decomposition: L3 = L5", lc[2] == lc[4],
                          std::to_string(lc[2]) + " vs " + std::to_string(lc[4])));
    out.push_back(boolean("decomposition: L4 = L6 = 0", lc[3] == 0 && lc[5] == 0,
                          std::to_string(lc[3]) + ", " + std::to_string(lc[5])));
    out.push_back(boolean("decomposition: |L - (2L1+L3)| <= 6n", r.decomposition_gap <= 6 * n,
                          "gap " + std::to_string(r.decomposition_gap) + " vs " + std::to_string(6 * n)));
    out.push_back(boolean("decomposition: mono = total/4 + L/4",
                          4 * r.monochromatic == r.total + r.L,
                          std::to_string(r.monochromatic) + " vs (" + std::to_string(r.total) + " + " +
                              std::to_string(r.L) + ")/4"));
    return out;
}

std::vector<CheckResult> suite_fourier() {
    auto t0 = Clock::now();
    std::vector<CheckResult> out;
    std::int64_t cases = 0, equal_freq_cases = 0;
    bool all_hermitian = true, all_mass = true, all_negative = true, all_range = true;
    bool all_formula = true, all_equal_freq = true, all_below_quarter = true;
    double worst_formula_gap = 0.0;
    for (std::int64_t m = 3; m <= 12; ++m) {
        for (std::int64_t a = -(m - 1); a <= m - 1; ++a) {
            if (a == 0) continue;
            for (std::int64_t b = -(m - 1); b <= m - 1; ++b) {
                if (b == 0) continue;
                std::int64_t c = -m;
                if (std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), m) != 1) continue;
                if (std::gcd(a < 0 ? -a : a, m) != 1 && std::gcd(b < 0 ? -b : b, m) != 1) continue;
                if (((a + b) % m + m) % m == 0) continue;
                ++cases;
                Spectrum F = construct_uncommon_spectrum(a, b, c);
                all_hermitian = all_hermitian && F.is_hermitian(1e-12);
                all_mass = all_mass && F.offzero_abs_sum() <= 0.5 + 1e-12;
                double dev = deviation(a, b, F);
                all_negative = all_negative && dev < 0.0;
                ProbColoring f = [&] {
                    try {
                        return idft(F, true);
                    } catch (const std::exception&) {
                        all_range = false;
                        return idft(F, false);
                    }
                }();
                double via_formula = mu_expected_fourier(a, b, F);
                double via_direct = expected_mu_direct(LinearEquation({a, b, c}), f);
                worst_formula_gap = std::max(worst_formula_gap, std::abs(via_formula - via_direct));
                all_formula = all_formula && std::abs(via_formula - via_direct) <= 1e-10;
                all_below_quarter = all_below_quarter && via_formula < 0.25;
                if (((a - b) % m + m) % m == 0) {
                    ++equal_freq_cases;
                    all_equal_freq = all_equal_freq && std::abs(dev - (-0.125)) <= 1e-12;
                }
            }
        }
    }
    double runtime = seconds_since(t0);
    out.push_back(boolean("fourier: scan coverage (3 <= |c| <= 12)", cases > 0,
                          std::to_string(cases) + " equations, " + std::to_string(equal_freq_cases) +
                              " with a = b mod m"));
    out.push_back(boolean("fourier: spectra Hermitian", all_hermitian, ""));
    out.push_back(boolean("fourier: off-zero mass <= 1/2", all_mass, ""));
    out.push_back(boolean("fourier: deviation < 0", all_negative, ""));
    out.push_back(boolean("fourier: inversion within [0,1]", all_range, ""));
    out.push_back(boolean("fourier: formula = direct oracle to 1e-10", all_formula,
                          "worst gap " + fmt(worst_formula_gap)));
    out.push_back(boolean("fourier: expected mu < 1/4", all_below_quarter, ""));
    out.push_back(boolean("fourier: deviation -1/8 when a = b mod m", all_equal_freq, ""));
    out.push_back(boolean("fourier: runtime < 10 s", runtime < 10.0, fmt(runtime) + " s"));
    return out;
}

std::vector<CheckResult> suite_high_gcd() {
    std::vector<CheckResult> out;
    SolutionStats cyc = count_stats(LinearEquation({3, 2, 3}), point_coloring_cyclic(3));
    out.push_back(boolean("high-gcd: mu = 1/9 exactly over Z_3",
                          cyc.proportion == Rational{1, 9}, cyc.proportion.str()));
    // over [n] the solvable representative of the class mod 3 is 3x+2y-3z=0
    SolutionStats lifted =
        count_stats(LinearEquation({3, 2, -3}), lift_from_cyclic(point_coloring_cyclic(3), 3000));
    out.push_back(near("high-gcd: lifted mu at n=3000", lifted.proportion.to_double(), 1.0 / 9.0, 0.01));
    return out;
}

std::vector<CheckResult> suite_additive(int threads) {
    auto t0 = Clock::now();
    std::vector<CheckResult> out;
    bool all_above = true;
    std::string detail;
    for (std::int64_t n = 6; n <= 14; ++n) {
        MinMuResult r = additive_tuple_check(4, n, std::int64_t{1} << 40, threads);
        bool ok = r.exact && r.mu >= Rational{1, 8};
        all_above = all_above && ok;
        detail += std::to_string(n) + ":" + r.mu.str() + " ";
    }
    double runtime = seconds_since(t0);
    out.push_back(boolean("additive: min mu >= 1/8 for k=4, n in 6..14", all_above, detail));
    out.push_back(boolean("additive: runtime < 5 min", runtime < 300.0, fmt(runtime) + " s"));
    return out;
}

std::vector<CheckResult> suite_classify_all(int threads) {
    std::vector<CheckResult> out;

    // every reduced triple in [-10,10]^3 gets exactly one branch
    std::vector<std::array<std::int64_t, 3>> reduced;
    for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = -10; b <= 10; ++b)
            for (std::int64_t c = -10; c <= 10; ++c) {
                if (a == 0 || b == 0 || c == 0) continue;
                if (std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c) != 1) continue;
                reduced.push_back({a, b, c});
            }
    std::int64_t assigned = 0;
    std::map<std::string, std::int64_t> by_branch;
    // deduplicate the certificate checks by canonical form
    std::map<std::array<std::int64_t, 3>, Verdict> classes;
    for (const auto& t : reduced) {
        Verdict v = classify_three_term(LinearEquation({t[0], t[1], t[2]}));
        if (v.branch) {
            ++assigned;
            ++by_branch[branch_name(*v.branch)];
        }
        auto key = v.normalized;
        classes.emplace(key, std::move(v));
    }
    std::string census;
    for (const auto& [name, count] : by_branch) census += name + ":" + std::to_string(count) + " ";
    out.push_back(boolean("classify: every reduced triple assigned",
                          assigned == static_cast<std::int64_t>(reduced.size()),
                          std::to_string(assigned) + "/" + std::to_string(reduced.size()) + "  " + census));

    // attached certificates: colorings reach mu < 1/4 - 0.01 at n = 5000,
    // spectra have negative deviation over Z_m
    const std::int64_t n = 5000;
    std::vector<const Verdict*> work;
    for (const auto& [key, v] : classes)
        if (v.certificate) work.push_back(&v);
    std::vector<std::uint8_t> ok(work.size(), 0);
    std::vector<double> values(work.size(), 0.0);
    parallel_chunks(static_cast<std::int64_t>(work.size()), threads,
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t i = begin; i < end; ++i) {
                            const Verdict& v = *work[static_cast<std::size_t>(i)];
                            const auto [a, b, c] = v.normalized;
                            if (v.certificate->is_spectrum()) {
                                double dev = deviation(a, b, v.certificate->spectrum);
                                values[static_cast<std::size_t>(i)] = dev;
                                ok[static_cast<std::size_t>(i)] = dev < 0.0;
                            } else {
                                LinearEquation eq({a, b, c});
                                SolutionStats st = count_stats(eq, v.certificate->materialize(n));
                                double mu = st.proportion.to_double();
                                values[static_cast<std::size_t>(i)] = mu;
                                ok[static_cast<std::size_t>(i)] = st.total > 0 && mu < 0.25 - 0.01;
                            }
                        }
                    });
    std::int64_t passed = 0;
    std::string worst;
    double worst_mu = -1.0;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (ok[i]) ++passed;
        if (!work[i]->certificate->is_spectrum() && values[i] > worst_mu) {
            worst_mu = values[i];
            const auto& nm = work[i]->normalized;
            worst = "[" + std::to_string(nm[0]) + "," + std::to_string(nm[1]) + "," +
                    std::to_string(nm[2]) + "] mu=" + fmt(values[i]);
        }
    }
    out.push_back(boolean("classify: certificates valid (mu < 0.24 at n=5000, deviation < 0)",
                          passed == static_cast<std::int64_t>(work.size()),
                          std::to_string(passed) + "/" + std::to_string(work.size()) +
                              " classes, worst coloring " + worst));
    return out;
}

std::vector<CheckResult> suite_properties(int threads) {
    std::vector<CheckResult> out;

    {  // transform round trip at 1e-12
        bool ok = true;
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            std::int64_t m = 2 + static_cast<std::int64_t>(detail::splitmix64(900 + trial) % 255);
            std::vector<double> vals(static_cast<std::size_t>(m));
            for (std::int64_t t = 0; t < m; ++t)
                vals[static_cast<std::size_t>(t)] =
                    static_cast<double>(detail::splitmix64(trial * 1009 + t) >> 11) * 0x1.0p-53;
            ProbColoring f(m, vals);
            ProbColoring g = idft(dft(f), true);
            for (std::int64_t t = 0; t < m; ++t)
                worst = std::max(worst, std::abs(f.values[static_cast<std::size_t>(t)] -
                                                 g.values[static_cast<std::size_t>(t)]));
        }
        ok = worst <= 1e-12;
        out.push_back(boolean("properties: idft(dft(f)) = f to 1e-12 (m <= 256)", ok,
                              "worst " + fmt(worst)));
    }
    {  // complement symmetry
        bool ok = true;
        LinearEquation eqs[] = {LinearEquation({1, 1, -1}), LinearEquation({2, -1, 2}),
                                LinearEquation({1, 2, -4})};
        for (const auto& eq : eqs) {
            for (int s = 0; s < 20; ++s) {
                Coloring f = random_coloring(Domain::interval(40), 7000 + s);
                SolutionStats a = count_stats(eq, f), b = count_stats(eq, f.complement());
                ok = ok && a.monochromatic == b.monochromatic && a.red == b.blue && a.blue == b.red;
            }
        }
        out.push_back(boolean("properties: complement symmetry", ok, ""));
    }
    {  // exhaustive minimum sandwiched by random colorings and local search
        LinearEquation schur({1, 1, -1});
        const std::int64_t n = 14;
        MinMuResult exact = exact_min_mu(schur, Domain::interval(n), std::int64_t{1} << 30, threads);
        bool ok = exact.exact;
        for (int s = 0; s < 100; ++s) {
            SolutionStats st = count_stats(schur, random_coloring(Domain::interval(n), 40 + s));
            ok = ok && exact.mu <= st.proportion;
        }
        SearchConfig cfg;
        cfg.seed = 99;
        cfg.restarts = 8;
        cfg.n = n;
        LocalSearchResult ls = local_search(schur, cfg, threads);
        ok = ok && exact.mu <= ls.mu;
        out.push_back(boolean("properties: exact minimum sandwich at n=14", ok,
                              "exact " + exact.mu.str() + ", search " + ls.mu.str()));
    }
    {  // robust sumset at threshold 1 is the plain sumset
        bool ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            std::set<std::int64_t> a;
            for (int i = 0; i < 50; ++i)
                if (detail::splitmix64(trial * 131 + i) & 1)
                    a.insert(static_cast<std::int64_t>(i + 1));
            std::set<std::int64_t> plain;
            for (std::int64_t x : a)
                for (std::int64_t y : a) plain.insert(x + y);
            ok = ok && robust_sum_set(a, 1) == plain;
        }
        out.push_back(boolean("properties: robust_sum_set(A, 1) = A + A", ok, ""));
    }
    {  // incremental flip counters match recounts
        bool ok = true;
        LinearEquation eq({2, -1, 2});
        FlipEngine engine(eq, 200);
        engine.set_coloring(random_coloring(Domain::interval(200), 5));
        for (int i = 0; i < 200; ++i) {
            std::int64_t t = 1 + static_cast<std::int64_t>(detail::splitmix64(300 + i) % 200);
            engine.flip(t);
            ok = ok && engine.monochromatic() == engine.recount();
        }
        out.push_back(boolean("properties: incremental flip counts = recounts", ok, ""));
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"schur",    "residual-221",    "residual-2x2ycz", "fourier",
            "additive", "l-decomposition", "classify-all"};
}

std::vector<CheckResult> run_suite(const std::string& name, int threads) {
    if (name == "schur") return suite_schur();
    if (name == "residual-221") return suite_residual_221();
    if (name == "residual-2x2ycz") return suite_residual_2x2ycz();
    if (name == "fourier") return suite_fourier();
    if (name == "additive") return suite_additive(threads);
    if (name == "l-decomposition") return suite_l_decomposition();
    if (name == "classify-all") {
        auto out = suite_classify_all(threads);
        for (CheckResult& r : suite_high_gcd()) out.push_back(std::move(r));
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace rado::verify
