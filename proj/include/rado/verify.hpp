#pragma once

#include <string>
#include <vector>

namespace rado::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Each suite pins the numeric targets and tolerances in code and returns one
// result per check.

/// Schur triples under the 4n/11 - 10n/11 coloring: mu = 2/11 +- 0.005 at
/// n = 11000, within a 5 s budget.
std::vector<CheckResult> suite_schur();

/// 2x - 2y + cz under alternating-prefix colorings: for c in {3,5,7} at
/// n = 9000, mu = 1/c^2 +- 0.005, mono = n^2/(2c^3) +- 2%, total = n^2/(2c)
/// +- 2%; for c = 1 at n = 8000, mu = 5/24 +- 0.005 with the blue/red
/// component counts 27n^2/512, n^2/64, 5n^2/512 (+- 2%) and total 3n^2/8
/// (+- 1%).
std::vector<CheckResult> suite_residual_2x2ycz();

/// 2x - y + 2z under the three-block coloring: mu = 1/64 +- 0.002 at
/// n = 8000; L/n^2 = -15/128 +- 0.005 at n = 800; 4*mono = total + L exact;
/// total = n^2/8 +- 1%.
std::vector<CheckResult> suite_residual_221();

/// Spectrum construction scan over all reduced (a, b, c) with 3 <= |c| <= 12
/// meeting the construction's assumptions: Hermitian, off-zero mass <= 1/2,
/// negative deviation, inversion in [0,1], transform formula equal to the
/// direct enumeration to 1e-10, and deviation exactly -1/8 when a = b mod m.
/// Budget 10 s.
std::vector<CheckResult> suite_fourier();

/// 3x + 2y + 3z = 0 with the point coloring: mu = 1/9 exactly over Z_3 and
/// 1/9 +- 0.01 lifted to n = 3000.
std::vector<CheckResult> suite_high_gcd();

/// Additive tuples k = 4: exhaustive minima over n in {6..14} all at least
/// 1/8. Budget 5 min.
std::vector<CheckResult> suite_additive(int threads = 1);

/// L decomposition for 2x - y + 2z at n = 800: case equalities, the
/// 2*L1 + L3 reconstruction within 6n, and the counting chain
/// mono = total/4 + L/4.
std::vector<CheckResult> suite_l_decomposition();

/// Every reduced 3-term equation with coefficients in [-10,10]\{0} receives
/// a branch; attached coloring certificates reach mu < 1/4 - 0.01 at
/// n = 5000 and spectrum certificates have negative deviation.
std::vector<CheckResult> suite_classify_all(int threads = 1);

/// Cross-module property checks: transform round trip at 1e-12, complement
/// symmetry, exhaustive minima sandwiched by random colorings and local
/// search, robust sumsets at threshold 1, incremental flip counters.
std::vector<CheckResult> suite_properties(int threads = 1);

/// Suites exposed by the CLI: schur, residual-221, residual-2x2ycz, fourier,
/// additive, l-decomposition, classify-all.
std::vector<CheckResult> run_suite(const std::string& name, int threads = 1);

std::vector<std::string> suite_names();

}  // namespace rado::verify
