#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "rado/analysis.hpp"
#include "rado/solutions.hpp"

using namespace rado;

TEST_CASE("L is 3x the total under a constant coloring") {
    LinearEquation eq({2, -1, 2});
    LReport r = l_statistic(eq, Coloring::constant(Domain::interval(60), kRed));
    CHECK(r.L == 3 * r.total);
    CHECK(r.monochromatic == r.total);
}

TEST_CASE("counting identity 4*mono = total + L on random inputs") {
    int cases = 0;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        std::uint64_t h = detail::splitmix64(trial);
        auto pick = [&](int shift) {
            std::int64_t v = static_cast<std::int64_t>((h >> shift) % 11) - 5;
            return v == 0 ? 1 : v;
        };
        LinearEquation eq({pick(0), pick(8), pick(16)});
        std::int64_t n = 5 + static_cast<std::int64_t>((h >> 24) % 56);
        Coloring f = random_coloring(Domain::interval(n), trial);
        LReport r = l_statistic(eq, f);
        REQUIRE(4 * r.monochromatic == r.total + r.L);
        cases += r.total > 0;
    }
    CHECK(cases > 400);  // plenty of the random equations actually have solutions
}

TEST_CASE("L agrees with a from-scratch recount") {
    LinearEquation eq({2, -1, 2});
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Coloring f = random_coloring(Domain::interval(60), seed);
        std::int64_t slow = 0;
        for (const auto& x : oracles::slow_enumerate(eq, f.domain)) {
            int ci = f.at(x[0]), cj = f.at(x[1]), ck = f.at(x[2]);
            slow += ci * cj + ci * ck + cj * ck;
        }
        CHECK(l_statistic(eq, f).L == slow);
    }
}

TEST_CASE("three-block coloring drives L/n^2 toward -15/128") {
    const std::int64_t n = 800;
    LReport r = l_statistic(LinearEquation({2, -1, 2}), three_block_coloring(n));
    CHECK(std::abs(r.normalized.to_double() - (-15.0 / 128.0)) <= 0.01);
    CHECK(4 * r.monochromatic == r.total + r.L);
}

TEST_CASE("decomposition equalities and reconstruction slack") {
    for (std::int64_t n : {80, 160, 320, 800}) {
        LReport r = l_decomposition_221(n, three_block_coloring(n));
        const auto& lc = *r.per_case;
        CHECK(lc[0] == lc[1]);
        CHECK(lc[2] == lc[4]);
        CHECK(lc[3] == 0);
        CHECK(lc[5] == 0);
        CHECK(r.decomposition_gap <= 6 * n);
        if (n == 800) CHECK(r.decomposition_gap <= 5 * n);
    }
}

TEST_CASE("decomposition cases match region brute force under all-red") {
    const std::int64_t n = 100;
    Coloring f = Coloring::constant(Domain::interval(n), kRed);
    LReport r = l_decomposition_221(n, f);
    std::int64_t l1 = 0, l3 = 0, l4 = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = i + 1; j <= n; ++j) {
            std::int64_t prod = f.at(i) * f.at(j);
            if (1 <= 2 * i + 2 * j && 2 * i + 2 * j <= n) l1 += prod;
            if (2 <= j - 2 * i && j - 2 * i <= 2 * n) l3 += prod;
            if (2 <= i - 2 * j && i - 2 * j <= 2 * n) l4 += prod;
        }
    }
    CHECK((*r.per_case)[0] == l1);
    CHECK((*r.per_case)[2] == l3);
    CHECK((*r.per_case)[3] == l4);
    CHECK(l4 == 0);
}

TEST_CASE("decomposition also holds under mixed colorings") {
    const std::int64_t n = 120;
    Coloring f = random_coloring(Domain::interval(n), 17);
    LReport r = l_decomposition_221(n, f);
    std::int64_t l1 = 0, l3 = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i + 1; j <= n; ++j) {
            std::int64_t prod = f.at(i) * f.at(j);
            if (2 * i + 2 * j <= n) l1 += prod;
            if (j >= 2 * i + 2) l3 += prod;
        }
    CHECK((*r.per_case)[0] == l1);
    CHECK((*r.per_case)[2] == l3);
}

TEST_CASE("normalization is invariant over the equivalence class") {
    auto norm = normalize_three_term(LinearEquation({2, -1, 2}));
    CHECK(norm == normalize_three_term(LinearEquation({-1, 2, 2})));
    CHECK(norm == normalize_three_term(LinearEquation({-2, 1, -2})));
    CHECK(norm == normalize_three_term(LinearEquation({2, 2, -1})));
    CHECK(norm[2] == -2);
    CHECK(std::abs(norm[0]) <= std::abs(norm[1]));
}

TEST_CASE("classification of the named equations") {
    Verdict schur = classify_three_term(LinearEquation({1, 1, -1}));
    CHECK(*schur.branch == Branch::Schur);
    CHECK(schur.certificate);
    CHECK(schur.certificate->materialize(11).to_line() == "BBBBRRRRRRB");
    CHECK(schur.predicted_common == Commonness::UncommonProved);

    Verdict high = classify_three_term(LinearEquation({3, 2, 3}));
    CHECK(*high.branch == Branch::HighGcd);
    CHECK_FALSE(high.solvable_over_interval);
    CHECK_FALSE(high.certificate);  // no interval solutions to certify against

    Verdict high_mixed = classify_three_term(LinearEquation({3, 2, -3}));
    CHECK(*high_mixed.branch == Branch::HighGcd);
    CHECK(high_mixed.certificate);
    CHECK(high_mixed.certificate->cyclic.to_line() == "BRR");

    Verdict res = classify_three_term(LinearEquation({2, -2, 3}));
    CHECK(*res.branch == Branch::Residual_2x2ycz);
    CHECK(res.certificate);
    CHECK(res.certificate->kind == Certificate::Kind::AlternatingPrefix);
    CHECK(res.certificate->altprefix_c == 3);

    Verdict res1 = classify_three_term(LinearEquation({2, -2, 1}));
    CHECK(*res1.branch == Branch::Residual_2x2ycz);
    CHECK(res1.certificate->altprefix_c == 1);

    Verdict r221 = classify_three_term(LinearEquation({2, -1, 2}));
    CHECK(*r221.branch == Branch::Residual_2xy2z);
    CHECK(r221.certificate->kind == Certificate::Kind::Blocks);

    Verdict fourier = classify_three_term(LinearEquation({1, 2, -5}));
    CHECK(*fourier.branch == Branch::FourierCase);
    CHECK(fourier.certificate->is_spectrum());

    Verdict translate = classify_three_term(LinearEquation({2, 3, -5}));
    CHECK(*translate.branch == Branch::AdditiveTranslate_ax_by_abz);
    CHECK_FALSE(translate.certificate);

    Verdict family = classify_three_term(LinearEquation({1, -1, 5}));
    CHECK(*family.branch == Branch::SchurFamily_x_plus_by_eq_z);
    CHECK_FALSE(family.certificate);

    CHECK_THROWS_AS(classify_three_term(LinearEquation({2, -2, 4})), std::invalid_argument);
}

TEST_CASE("all-positive shapes still receive a branch") {
    Verdict ones = classify_three_term(LinearEquation({1, 1, 1}));
    CHECK(*ones.branch == Branch::Schur);
    CHECK_FALSE(ones.solvable_over_interval);
    CHECK_FALSE(ones.certificate);

    Verdict twos = classify_three_term(LinearEquation({2, 2, 1}));
    CHECK(*twos.branch == Branch::Residual_2xy2z);
    CHECK_FALSE(twos.certificate);
}

TEST_CASE("branch census over coefficients in [-10, 10]") {
    // hand-counted per class: Schur = 6 arrangements of {1,1,-1} plus the 2
    // all-ones triples; Residual_2xy2z = 6 of {2,2,-1} plus 6 of {2,2,1};
    // Residual_2x2ycz = 12 per odd |c| in {1,3,5,7,9}; SchurFamily = 12 per
    // |c| in {2..10}; AdditiveTranslate = 24 per coprime {a,b,a+b} shape
    // with a < b (15 shapes) plus 12 for {1,1,2}
    std::map<Branch, std::int64_t> census;
    std::int64_t reduced = 0;
    for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = -10; b <= 10; ++b)
            for (std::int64_t c = -10; c <= 10; ++c) {
                if (a == 0 || b == 0 || c == 0) continue;
                LinearEquation eq({a, b, c});
                if (!eq.is_reduced()) continue;
                ++reduced;
                ++census[*classify_three_term(eq).branch];
            }
    CHECK(reduced == 6728);
    CHECK(census[Branch::Schur] == 8);
    CHECK(census[Branch::Residual_2xy2z] == 12);
    CHECK(census[Branch::Residual_2x2ycz] == 60);
    CHECK(census[Branch::SchurFamily_x_plus_by_eq_z] == 108);
    CHECK(census[Branch::AdditiveTranslate_ax_by_abz] == 372);
    CHECK(census[Branch::FourierCase] + census[Branch::HighGcd] == 6728 - 8 - 12 - 60 - 108 - 372);
}

TEST_CASE("commonness predictions") {
    CHECK(predict_commonness(LinearEquation({1, 1, -1, -1})).predicted_common ==
          Commonness::CommonProved);
    CHECK(predict_commonness(LinearEquation({1, 2, -1, -2})).predicted_common ==
          Commonness::CommonConjectured);
    CHECK(predict_commonness(LinearEquation({1, 1, -3})).predicted_common ==
          Commonness::UncommonProved);
    CHECK(predict_commonness(LinearEquation({1, 2, -4, 8})).predicted_common ==
          Commonness::UncommonProved);
    CHECK(predict_commonness(LinearEquation({1, 2, 3, -6, 5})).predicted_common ==
          Commonness::UncommonConjectured);
    // reduced 3-term predictions carry the branch and certificate along
    Verdict v = predict_commonness(LinearEquation({1, 1, -3}));
    CHECK(v.branch);
    CHECK(*v.branch == Branch::FourierCase);
}

TEST_CASE("additive tuple minima") {
    MinMuResult r8 = additive_tuple_check(4, 8);
    CHECK(r8.exact);
    CHECK(r8.mu == Rational{15, 86});
    CHECK(r8.mu >= Rational{1, 8});

    MinMuResult r12a = additive_tuple_check(4, 12);
    MinMuResult r12b = additive_tuple_check(4, 12);
    CHECK(r12a.mu == Rational{45, 289});
    CHECK(r12a.mu == r12b.mu);
    CHECK(r12a.witness.to_line() == r12b.witness.to_line());

    // k = 2 is the diagonal x = y; every coloring is fully monochromatic
    MinMuResult r2 = additive_tuple_check(2, 10);
    CHECK(r2.mu == Rational{1, 1});
}

TEST_CASE("robust sumsets") {
    std::set<std::int64_t> digits;
    for (std::int64_t v = 0; v <= 9; ++v) digits.insert(v);
    std::set<std::int64_t> expect;
    for (std::int64_t s = 4; s <= 14; ++s) expect.insert(s);
    CHECK(robust_sum_set(digits, 5) == expect);

    // threshold 1 is the plain sumset
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        std::set<std::int64_t> a;
        for (std::int64_t v = 1; v <= 50; ++v)
            if (detail::splitmix64(trial * 53 + static_cast<std::uint64_t>(v)) & 1) a.insert(v);
        std::set<std::int64_t> plain;
        for (std::int64_t x : a)
            for (std::int64_t y : a) plain.insert(x + y);
        REQUIRE(robust_sum_set(a, 1) == plain);
    }

    std::set<std::int64_t> evens{0, 2, 4, 6, 8, 10};
    for (std::int64_t s : robust_sum_set(evens, 2)) CHECK(s % 2 == 0);
}

TEST_CASE("lower bound scans") {
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 8; n <= 16; ++n) ns.push_back(n);

    // x + y = 3z: [8] still has an avoiding coloring (e.g. R = {1,3,4,7}),
    // from 9 on every coloring hits a monochromatic solution
    auto rows = lower_bound_scan(LinearEquation({1, 1, -3}), ns);
    for (const auto& row : rows) {
        CHECK(row.exact);
        if (row.n == 8) CHECK(row.min_mono == 0);
        else CHECK(row.min_mono > 0);
    }

    auto schur_rows = lower_bound_scan(LinearEquation({1, 1, -1}), ns);
    LReport block = l_statistic(LinearEquation({1, 1, -1}), schur_coloring(11));
    for (const auto& row : schur_rows) {
        CHECK(row.exact);
        // the minimum can never beat a concrete witness coloring
        if (row.n == 11) CHECK(row.min_mu <= Rational{block.monochromatic, block.total});
    }

    // the proportion sequence is reported, not asserted; surface any dip
    for (std::size_t i = 1; i < schur_rows.size(); ++i) {
        if (schur_rows[i].min_mu < schur_rows[i - 1].min_mu) {
            MESSAGE("minimum proportion dips between n = ", schur_rows[i - 1].n, " and n = ",
                    schur_rows[i].n, ": ", schur_rows[i - 1].min_mu.str(), " -> ",
                    schur_rows[i].min_mu.str());
        }
    }
}

TEST_CASE("scan CSV format") {
    auto rows = lower_bound_scan(LinearEquation({1, 1, -1}), {5, 6});
    std::string csv = scan_to_csv(rows);
    CHECK(csv == "n,total,min_mono,min_mu_num,min_mu_den,exact_flag\n5,10,1,1,10,1\n6,15,1,1,15,1\n");
}
