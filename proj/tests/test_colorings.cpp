#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rado/colorings.hpp"
#include "rado/solutions.hpp"

using namespace rado;

TEST_CASE("block colorings at the named breakpoints") {
    CHECK(schur_coloring(11).to_line() == "BBBBRRRRRRB");
    CHECK(three_block_coloring(8).to_line() == "BRRRBBBB");
    BlockSpec all_red{{}, {kRed}};
    CHECK(block_coloring(4, all_red).to_line() == "RRRR");
    // scaling by the breakpoint denominator reproduces the pattern exactly
    CHECK(schur_coloring(22).to_line() == "BBBBBBBBRRRRRRRRRRRRBB");
    CHECK(three_block_coloring(16).to_line() == "BBRRRRRRBBBBBBBB");
}

TEST_CASE("block spec text form") {
    BlockSpec spec = parse_block_spec("blue:4/11,red:10/11,blue");
    CHECK(block_coloring(11, spec).to_line() == schur_coloring(11).to_line());
    CHECK_THROWS_AS(parse_block_spec("blue:4/11,red:2/11,blue"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_spec("blue:4/11,red:10/11"), ParseError);
    CHECK_THROWS_AS(parse_block_spec("teal:1/2,red"), ParseError);
}

TEST_CASE("tiny n never errors, blocks may vanish") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        Coloring f = schur_coloring(n);
        CHECK(static_cast<std::int64_t>(f.values.size()) == n);
    }
    CHECK(schur_coloring(1).to_line() == "B");  // both breakpoints floor to 0
}

TEST_CASE("alternating prefix colorings") {
    CHECK(alternating_prefix_coloring(8, 1).to_line() == "RBRBRBRR");
    Coloring f = alternating_prefix_coloring(9, 3);
    for (std::int64_t t = 1; t <= 9; ++t) {
        bool blue = t == 2 || t == 4 || t == 6;
        CHECK(f.at(t) == (blue ? kBlue : kRed));
    }
    CHECK(alternating_prefix_coloring(1, 5).to_line() == "R");
    CHECK_THROWS_AS(alternating_prefix_coloring(10, 2), std::invalid_argument);
    CHECK_THROWS_AS(alternating_prefix_coloring(10, 0), std::invalid_argument);
}

TEST_CASE("alternating prefix colors at most floor(alpha*n/2) elements blue") {
    for (std::int64_t n : {5, 8, 13, 40, 101}) {
        for (std::int64_t c : {1, 3, 5, 9}) {
            Coloring f = alternating_prefix_coloring(n, c);
            std::int64_t blues = 0;
            for (std::int8_t v : f.values) blues += v == kBlue;
            std::int64_t boundary = c == 1 ? 3 * n / 4 : 2 * n / c;
            CHECK(blues <= boundary / 2);
        }
    }
}

TEST_CASE("point colorings") {
    CHECK(point_coloring_cyclic(3).to_line() == "BRR");
    CHECK(point_coloring_cyclic(1).to_line() == "B");
    CHECK(point_coloring_cyclic(9).to_line() == "BRRRRRRRR");
}

TEST_CASE("lifting composes with reduction mod m") {
    Coloring parity(Domain::cyclic(2), {kBlue, kRed});
    CHECK(lift_from_cyclic(parity, 5).to_line() == "RBRBR");
    CHECK(lift_from_cyclic(point_coloring_cyclic(3), 7).to_line() == "RRBRRBR");
    CHECK_THROWS_AS(lift_from_cyclic(schur_coloring(5), 10), std::invalid_argument);
}

TEST_CASE("lifting preserves monochromaticity of projected tuples") {
    LinearEquation eq({1, 1, -3});
    const std::int64_t m = 4, n = 40;
    Coloring f = random_coloring(Domain::cyclic(m), 11);
    Coloring lifted = lift_from_cyclic(f, n);
    for (const auto& x : enumerate_solutions(eq, Domain::interval(n))) {
        bool mono_lifted = lifted.at(x[0]) == lifted.at(x[1]) && lifted.at(x[1]) == lifted.at(x[2]);
        bool mono_proj = f.at(x[0] % m) == f.at(x[1] % m) && f.at(x[1] % m) == f.at(x[2] % m);
        REQUIRE(mono_lifted == mono_proj);
    }
}

TEST_CASE("lifted proportions approach the cyclic proportion") {
    LinearEquation eq({1, 1, -3});
    for (std::uint64_t seed : {2u, 9u}) {
        Coloring f = random_coloring(Domain::cyclic(5), seed);
        SolutionStats cyc = count_stats(eq, f);
        if (cyc.total == 0) continue;
        double target = cyc.proportion.to_double();
        double gap30 = std::abs(count_stats(eq, lift_from_cyclic(f, 30)).proportion.to_double() - target);
        double gap60 = std::abs(count_stats(eq, lift_from_cyclic(f, 60)).proportion.to_double() - target);
        CHECK(gap60 <= gap30 + 0.02);
        CHECK(gap60 <= 0.15);
    }
}

TEST_CASE("random colorings are reproducible") {
    Coloring a = random_coloring(Domain::interval(500), 42);
    Coloring b = random_coloring(Domain::interval(500), 42);
    CHECK(a.values == b.values);
    Coloring c = random_coloring(Domain::interval(500), 43);
    CHECK(a.values != c.values);
}

TEST_CASE("random colorings sit near the 1/4 baseline for Schur triples") {
    const std::int64_t n = 10000;
    const double total = static_cast<double>(n) * (n - 1) / 2.0;
    double sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Coloring f = random_coloring(Domain::interval(n), seed);
        sum += static_cast<double>(oracles::schur_mono(f)) / total;
    }
    CHECK(std::abs(sum / 50.0 - 0.25) <= 0.01);
}

TEST_CASE("random colorings sit near the 1/8 baseline for additive 4-tuples") {
    const std::int64_t n = 10000;
    const double total = static_cast<double>(oracles::additive4_total(n));
    double sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Coloring f = random_coloring(Domain::interval(n), seed);
        sum += static_cast<double>(oracles::additive4_mono(f)) / total;
    }
    CHECK(std::abs(sum / 50.0 -  0.125) <= 0.01);
}

TEST_CASE("bit-row pair counting agrees with the library counters") {
    LinearEquation schur({1, 1, -1});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Coloring f = random_coloring(Domain::interval(83), seed);
        CHECK(oracles::schur_mono(f) == count_stats(schur, f).monochromatic);
    }
    LinearEquation add4({1, 1, -1, -1});
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Coloring f = random_coloring(Domain::interval(21), seed);
        CHECK(oracles::additive4_mono(f) == count_stats(add4, f).monochromatic);
    }
}
