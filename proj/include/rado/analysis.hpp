#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rado/colorings.hpp"
#include "rado/domain.hpp"
#include "rado/equation.hpp"
#include "rado/fourier.hpp"
#include "rado/rational.hpp"
#include "rado/solutions.hpp"

namespace rado {

/// The pair-product statistic L = sum over solutions (i, j, k) of
/// f(i)f(j) + f(i)f(k) + f(j)f(k). Satisfies 4*mono = total + L exactly.
struct LReport {
    std::int64_t L = 0;
    std::int64_t total = 0;
    std::int64_t monochromatic = 0;
    /// For the 2x - y + 2z decomposition: per-case sums L1..L6.
    std::optional<std::array<std::int64_t, 6>> per_case;
    Rational normalized{0, 1};  // L / n^2
    /// |L - (2*L1 + L3)| when per_case is present.
    std::int64_t decomposition_gap = 0;
};

LReport l_statistic(const LinearEquation& eq, const Coloring& f);

/// Case-by-case decomposition of L for 2x - y + 2z = 0 over [n]. The six
/// cases are the role assignments of an ordered pair i < j inside a solution:
///   1: (x,z)  2: (z,x)   -- restriction 1 <= 2i + 2j <= n
///   3: (x,y)  5: (z,y)   -- restriction 2 <= j - 2i <= 2n (parity dropped,
///                           each contributes L_r / 2)
///   4: (y,x)  6: (y,z)   -- restriction 2 <= i - 2j <= 2n, empty for i < j
/// Checks L1 = L2, L3 = L5, L4 = L6 = 0 and reports the gap between the
/// exact L and 2*L1 + L3.
LReport l_decomposition_221(std::int64_t n, const Coloring& f);

enum class Branch {
    FourierCase,
    HighGcd,
    SchurFamily_x_plus_by_eq_z,
    AdditiveTranslate_ax_by_abz,
    Residual_2x2ycz,
    Residual_2xy2z,
    Schur,
};

std::string branch_name(Branch b);

enum class Commonness {
    UncommonProved,
    UncommonConjectured,
    CommonConjectured,
    CommonProved,
};

std::string commonness_name(Commonness c);

/// A certificate that an equation admits colorings below the random
/// baseline: either a spectrum over Z_m (negative deviation) or a family of
/// interval colorings parameterized by n.
struct Certificate {
    enum class Kind { SpectrumZm, CyclicColoring, Blocks, AlternatingPrefix };
    Kind kind = Kind::Blocks;
    Spectrum spectrum;        // Kind::SpectrumZm
    Coloring cyclic;          // Kind::CyclicColoring, lifted on demand
    BlockSpec blocks;         // Kind::Blocks
    std::int64_t altprefix_c = 1;  // Kind::AlternatingPrefix

    bool is_spectrum() const { return kind == Kind::SpectrumZm; }
    /// Concrete coloring of [n] (coloring-family kinds only).
    Coloring materialize(std::int64_t n) const;
    std::string describe() const;
};

struct Verdict {
    /// Case-split branch; set for reduced 3-term equations only.
    std::optional<Branch> branch;
    Commonness predicted_common = Commonness::UncommonProved;
    std::optional<Certificate> certificate;
    /// Canonical form used for the case split: |c| maximal, c < 0, |a| <= |b|.
    std::array<std::int64_t, 3> normalized{0, 0, 0};
    /// False when all coefficients share a sign, so no solutions exist in [n]
    /// and no coloring certificate is attached.
    bool solvable_over_interval = true;
};

/// Canonical representative of a 3-term equation under variable permutation
/// and global sign flip.
std::array<std::int64_t, 3> normalize_three_term(const LinearEquation& eq);

/// Assigns every reduced 3-term equation to exactly one branch, with a
/// certificate where one is constructed:
///   FourierCase        spectrum over Z_|c| with negative deviation
///   HighGcd            point coloring of Z_g, g = largest pair gcd (>= 3)
///   Residual_2x2ycz    alternating-prefix coloring (odd c)
///   Residual_2xy2z     three-block n/8 - n/2 coloring
///   Schur              the 4n/11 - 10n/11 block coloring
///   SchurFamily / AdditiveTranslate   no certificate attached
/// Throws std::invalid_argument unless gcd of the coefficients is 1.
Verdict classify_three_term(const LinearEquation& eq);

/// Commonness prediction for any equation: common iff k is even and the
/// coefficients admit a canceling partition (proved only for additive
/// tuples); even k without one is uncommon; k = 3 is uncommon; other odd k
/// conjectured uncommon. Reduced 3-term equations also get their branch and
/// certificate.
Verdict predict_commonness(const LinearEquation& eq);

/// Exhaustive minimum of the monochromatic proportion for the additive tuple
/// equation with k terms over [n]; throws std::logic_error if the result
/// ever drops below 2^(1-k).
MinMuResult additive_tuple_check(int k, std::int64_t n,
                                 std::int64_t budget = std::int64_t{1} << 26, int threads = 1);

/// Sums a1 + a2 over ordered pairs of A whose sum has at least `threshold`
/// ordered representations. threshold = 1 yields the plain sumset A + A.
std::set<std::int64_t> robust_sum_set(const std::set<std::int64_t>& a, std::int64_t threshold);

struct ScanRow {
    std::int64_t n = 0;
    std::int64_t total = 0;
    std::int64_t min_mono = 0;
    Rational min_mu{0, 1};
    bool exact = true;
    double mono_over_n2 = 0.0;
};

/// Minimum monochromatic count and proportion per n: exhaustive when
/// 2^(n-1) fits the budget, otherwise best-found via local search (flagged).
std::vector<ScanRow> lower_bound_scan(const LinearEquation& eq, const std::vector<std::int64_t>& ns,
                                      std::int64_t budget = std::int64_t{1} << 26, int threads = 1);

/// CSV rendering with header n,total,min_mono,min_mu_num,min_mu_den,exact_flag.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace rado
