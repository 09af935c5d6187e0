#include "rado/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rado/search.hpp"

namespace rado {

LReport l_statistic(const LinearEquation& eq, const Coloring& f) {
    if (eq.k() != 3) throw std::invalid_argument("L statistic is defined for 3-term equations");
    if (!f.domain.is_interval()) throw std::invalid_argument("L statistic runs over interval colorings");
    const std::int64_t n = f.domain.size;
    const std::int8_t* colors = f.values.data();
    LReport r;
    for_each_solution(eq, f.domain, [&](const std::vector<std::int64_t>& x) {
        int ci = colors[x[0] - 1], cj = colors[x[1] - 1], ck = colors[x[2] - 1];
        r.L += ci * cj + ci * ck + cj * ck;
        ++r.total;
        r.monochromatic += (ci == cj && cj == ck) ? 1 : 0;
    });
    r.normalized = Rational{r.L, n * n};
    return r;
}

LReport l_decomposition_221(std::int64_t n, const Coloring& f) {
    if (!f.domain.is_interval() || f.domain.size != n)
        throw std::invalid_argument("decomposition needs a coloring of [n]");
    const std::int8_t* c = f.values.data();
    auto color = [&](std::int64_t t) -> std::int64_t { return c[t - 1]; };

    // cases 1/2, roles (x,z) and (z,x): 1 <= 2i + 2j <= n
    std::int64_t l1 = 0;
    for (std::int64_t i = 1; 2 * i + 2 * (i + 1) <= n; ++i) {
        std::int64_t jmax = (n - 2 * i) / 2;
        std::int64_t row = 0;
        for (std::int64_t j = i + 1; j <= jmax; ++j) row += color(j);
        l1 += color(i) * row;
    }
    // cases 3/5, roles (x,y) and (z,y): 2 <= j - 2i <= 2n, parity dropped
    std::int64_t l3 = 0;
    for (std::int64_t i = 1; 2 * i + 2 <= n; ++i) {
        std::int64_t row = 0;
        for (std::int64_t j = 2 * i + 2; j <= n; ++j) row += color(j);
        l3 += color(i) * row;
    }
    // cases 4/6, roles (y,x) and (y,z): 2 <= i - 2j forces i > j, empty

    LReport r = l_statistic(LinearEquation({2, -1, 2}), f);
    r.per_case = {l1, l1, l3, 0, l3, 0};
    std::int64_t est = 2 * l1 + l3;
    r.decomposition_gap = est > r.L ? est - r.L : r.L - est;
    return r;
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::FourierCase: return "FourierCase";
        case Branch::HighGcd: return "HighGcd";
        case Branch::SchurFamily_x_plus_by_eq_z: return "SchurFamily_x_plus_by_eq_z";
        case Branch::AdditiveTranslate_ax_by_abz: return "AdditiveTranslate_ax_by_abz";
        case Branch::Residual_2x2ycz: return "Residual_2x2ycz";
        case Branch::Residual_2xy2z: return "Residual_2xy2z";
        case Branch::Schur: return "Schur";
    }
    return "?";
}

std::string commonness_name(Commonness c) {
    switch (c) {
        case Commonness::UncommonProved: return "uncommon-proved";
        case Commonness::UncommonConjectured: return "uncommon-conjectured";
        case Commonness::CommonConjectured: return "common-conjectured";
        case Commonness::CommonProved: return "common-proved";
    }
    return "?";
}

Coloring Certificate::materialize(std::int64_t n) const {
    switch (kind) {
        case Kind::CyclicColoring: return lift_from_cyclic(cyclic, n);
        case Kind::Blocks: return block_coloring(n, blocks);
        case Kind::AlternatingPrefix: return alternating_prefix_coloring(n, altprefix_c);
        case Kind::SpectrumZm: break;
    }
    throw std::logic_error("spectrum certificates do not materialize as interval colorings");
}

std::string Certificate::describe() const {
    switch (kind) {
        case Kind::SpectrumZm:
            return "spectrum over Z_" + std::to_string(spectrum.m);
        case Kind::CyclicColoring:
            return "coloring of Z_" + std::to_string(cyclic.domain.size) + " (" + cyclic.to_line() +
                   "), lifted";
        case Kind::Blocks: {
            std::string s = "blocks ";
            for (std::size_t j = 0; j < blocks.colors.size(); ++j) {
                if (j) s += ",";
                s += blocks.colors[j] == kBlue ? "blue" : "red";
                if (j < blocks.breakpoints.size()) s += ":" + blocks.breakpoints[j].str();
            }
            return s;
        }
        case Kind::AlternatingPrefix:
            return "alternating prefix, c = " + std::to_string(altprefix_c);
    }
    return "?";
}

std::array<std::int64_t, 3> normalize_three_term(const LinearEquation& eq) {
    if (eq.k() != 3) throw std::invalid_argument("normalization is for 3-term equations");
    const auto& v = eq.coefficients;
    std::int64_t maxabs = 0;
    for (std::int64_t x : v) maxabs = std::max(maxabs, x < 0 ? -x : x);
    std::array<int, 3> idx{0, 1, 2};
    bool found = false;
    std::array<std::int64_t, 3> best{};
    do {
        for (int sign : {1, -1}) {
            std::array<std::int64_t, 3> cand{sign * v[static_cast<std::size_t>(idx[0])],
                                             sign * v[static_cast<std::size_t>(idx[1])],
                                             sign * v[static_cast<std::size_t>(idx[2])]};
            if (cand[2] >= 0 || -cand[2] != maxabs) continue;
            std::int64_t a0 = cand[0] < 0 ? -cand[0] : cand[0];
            std::int64_t a1 = cand[1] < 0 ? -cand[1] : cand[1];
            if (a0 > a1) continue;
            if (!found || cand < best) {
                best = cand;
                found = true;
            }
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

namespace {

bool mixed_signs(const LinearEquation& eq) {
    bool pos = false, neg = false;
    for (std::int64_t c : eq.coefficients) (c > 0 ? pos : neg) = true;
    return pos && neg;
}

Certificate spectrum_certificate(std::int64_t a, std::int64_t b, std::int64_t c) {
    Certificate cert;
    cert.kind = Certificate::Kind::SpectrumZm;
    cert.spectrum = construct_uncommon_spectrum(a, b, c);
    return cert;
}

Certificate cyclic_certificate(std::int64_t g) {
    Certificate cert;
    cert.kind = Certificate::Kind::CyclicColoring;
    cert.cyclic = point_coloring_cyclic(g);
    return cert;
}

Certificate blocks_certificate(std::initializer_list<Rational> breaks, std::initializer_list<std::int8_t> colors) {
    Certificate cert;
    cert.kind = Certificate::Kind::Blocks;
    cert.blocks = BlockSpec{breaks, colors};
    return cert;
}

Certificate altprefix_certificate(std::int64_t c) {
    Certificate cert;
    cert.kind = Certificate::Kind::AlternatingPrefix;
    cert.altprefix_c = c;
    return cert;
}

}  // namespace

Verdict classify_three_term(const LinearEquation& eq) {
    if (eq.k() != 3) throw std::invalid_argument("classification handles 3-term equations");
    if (!eq.is_reduced()) throw std::invalid_argument("equation must be fully reduced");

    Verdict v;
    v.normalized = normalize_three_term(eq);
    v.solvable_over_interval = mixed_signs(eq);
    v.predicted_common = Commonness::UncommonProved;
    const auto [a, b, c] = v.normalized;
    const std::int64_t m = -c;
    const std::int64_t absa = a < 0 ? -a : a;
    const std::int64_t absb = b < 0 ? -b : b;
    const bool attach = v.solvable_over_interval;

    // transform construction applies under its three assumptions
    if (m > absa && m > absb && (std::gcd(absa, m) == 1 || std::gcd(absb, m) == 1) &&
        ((a + b) % m + m) % m != 0) {
        v.branch = Branch::FourierCase;
        v.certificate = spectrum_certificate(a, b, c);
        return v;
    }

    // a pair of coefficients with a common factor >= 3
    std::int64_t g = std::max({std::gcd(absa, absb), std::gcd(absa, m), std::gcd(absb, m)});
    if (g >= 3) {
        v.branch = Branch::HighGcd;
        if (attach) v.certificate = cyclic_certificate(g);
        return v;
    }

    // canceling pair {w, -w}; reduced, so |w| <= 2 here
    std::array<std::int64_t, 3> t{a, b, c};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j || t[static_cast<std::size_t>(i)] != -t[static_cast<std::size_t>(j)]) continue;
            std::int64_t w = t[static_cast<std::size_t>(i)] < 0 ? -t[static_cast<std::size_t>(i)]
                                                                : t[static_cast<std::size_t>(i)];
            std::int64_t third = t[static_cast<std::size_t>(3 - i - j)];
            std::int64_t c0 = third < 0 ? -third : third;
            if (w == 2) {
                v.branch = Branch::Residual_2x2ycz;
                if (attach) v.certificate = altprefix_certificate(c0);
            } else if (c0 == 1) {
                v.branch = Branch::Schur;
                if (attach)
                    v.certificate = blocks_certificate({Rational{4, 11}, Rational{10, 11}},
                                                       {kBlue, kRed, kBlue});
            } else {
                v.branch = Branch::SchurFamily_x_plus_by_eq_z;
            }
            return v;
        }
    }

    // a + b = +-m: the translated-sum family ax + by = (a+b)z
    if ((a > 0 && b > 0 && a + b == m) || (a < 0 && b < 0 && a + b == -m)) {
        v.branch = Branch::AdditiveTranslate_ax_by_abz;
        return v;
    }

    // leftover shapes: |coefficients| is {2,2,1} or {1,1,1}
    std::array<std::int64_t, 3> mags{absa, absb, m};
    std::sort(mags.begin(), mags.end());
    if (mags == std::array<std::int64_t, 3>{1, 2, 2}) {
        v.branch = Branch::Residual_2xy2z;
        if (attach)
            v.certificate = blocks_certificate({Rational{1, 8}, Rational{1, 2}}, {kBlue, kRed, kBlue});
        return v;
    }
    v.branch = Branch::Schur;
    if (attach)
        v.certificate = blocks_certificate({Rational{4, 11}, Rational{10, 11}}, {kBlue, kRed, kBlue});
    return v;
}

Verdict predict_commonness(const LinearEquation& eq) {
    const int k = eq.k();
    if (k == 3 && eq.is_reduced()) return classify_three_term(eq);
    Verdict v;
    v.solvable_over_interval = mixed_signs(eq);
    if (k % 2 == 0) {
        if (has_canceling_partition(eq))
            v.predicted_common = eq.is_additive_tuple() ? Commonness::CommonProved
                                                        : Commonness::CommonConjectured;
        else
            v.predicted_common = Commonness::UncommonProved;
    } else {
        v.predicted_common = k == 3 ? Commonness::UncommonProved : Commonness::UncommonConjectured;
    }
    return v;
}

MinMuResult additive_tuple_check(int k, std::int64_t n, std::int64_t budget, int threads) {
    MinMuResult res = exact_min_mu(additive_tuple_equation(k), Domain::interval(n), budget, threads);
    Rational baseline{1, std::int64_t{1} << (k - 1)};
    if (res.exact && res.mu < baseline)
        throw std::logic_error("additive tuple minimum fell below 2^(1-k) at n = " + std::to_string(n));
    return res;
}

std::set<std::int64_t> robust_sum_set(const std::set<std::int64_t>& a, std::int64_t threshold) {
    if (threshold < 1) throw std::invalid_argument("representation threshold must be positive");
    std::map<std::int64_t, std::int64_t> reps;
    for (std::int64_t x : a)
        for (std::int64_t y : a) ++reps[x + y];
    std::set<std::int64_t> out;
    for (const auto& [s, r] : reps)
        if (r >= threshold) out.insert(s);
    return out;
}

std::vector<ScanRow> lower_bound_scan(const LinearEquation& eq, const std::vector<std::int64_t>& ns,
                                      std::int64_t budget, int threads) {
    std::vector<ScanRow> rows;
    rows.reserve(ns.size());
    for (std::int64_t n : ns) {
        ScanRow row;
        row.n = n;
        bool exhaustive = n <= 62 && n >= 1 && (std::int64_t{1} << (n - 1)) <= budget;
        if (exhaustive) {
            MinMuResult r = exact_min_mu(eq, Domain::interval(n), budget, threads);
            row.total = r.total;
            row.min_mono = r.min_monochromatic;
            row.min_mu = r.mu;
            row.exact = r.exact;
        } else {
            SearchConfig cfg;
            cfg.seed = 0xdab5 + static_cast<std::uint64_t>(n);
            cfg.restarts = 10;
            cfg.n = n;
            LocalSearchResult r = local_search(eq, cfg, threads);
            row.total = r.total;
            row.min_mono = r.monochromatic;
            row.min_mu = r.mu;
            row.exact = false;
        }
        row.mono_over_n2 = static_cast<double>(row.min_mono) / (static_cast<double>(n) * static_cast<double>(n));
        rows.push_back(row);
    }
    return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "n,total,min_mono,min_mu_num,min_mu_den,exact_flag\n";
    for (const ScanRow& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.total) + "," + std::to_string(r.min_mono) +
               "," + std::to_string(r.min_mu.num) + "," + std::to_string(r.min_mu.den) + "," +
               (r.exact ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace rado
