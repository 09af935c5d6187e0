#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rado/domain.hpp"
#include "rado/equation.hpp"
#include "rado/rational.hpp"

namespace rado {

/// Exact counts for one (equation, coloring) pair.
struct SolutionStats {
    std::int64_t total = 0;
    std::int64_t monochromatic = 0;
    std::int64_t red = 0;
    std::int64_t blue = 0;
    Rational proportion{0, 1};  // monochromatic / total; 0/1 when total = 0
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

/// Solutions u of a*u = r (mod md), md >= 1, as a residue class u0 + step*Z
/// with 0 <= u0 < step. Empty optional when the congruence has none.
struct ResidueClass {
    std::int64_t u0;
    std::int64_t step;
};
std::optional<ResidueClass> solve_congruence(std::int64_t a, std::int64_t r, std::int64_t md);

/// Visits all (u, v) in [1, n]^2 with A*u + C*v = R, u ascending.
template <typename Fn>
void for_each_pair_interval(std::int64_t A, std::int64_t C, std::int64_t R, std::int64_t n, Fn&& fn) {
    const std::int64_t md = C < 0 ? -C : C;
    auto cls = solve_congruence(A, R, md);
    if (!cls) return;
    std::int64_t step = cls->step;
    std::int64_t u1 = cls->u0 == 0 ? step : cls->u0;
    if (u1 > n) return;
    std::int64_t v1 = (R - A * u1) / C;
    std::int64_t dv = -(A / std::gcd(A < 0 ? -A : A, md)) * (md / C);
    // j-window where both u and v stay in range
    std::int64_t jmax = (n - u1) / step;
    std::int64_t jlo = 0, jhi = jmax;
    if (dv > 0) {
        jlo = std::max<std::int64_t>(0, ceil_div(1 - v1, dv));
        jhi = std::min(jmax, floor_div(n - v1, dv));
    } else {
        jlo = std::max<std::int64_t>(0, ceil_div(n - v1, dv));
        jhi = std::min(jmax, floor_div(1 - v1, dv));
    }
    std::int64_t u = u1 + jlo * step;
    std::int64_t v = v1 + jlo * dv;
    for (std::int64_t j = jlo; j <= jhi; ++j, u += step, v += dv) fn(u, v);
}

}  // namespace detail

/// Visits every ordered solution tuple of `eq` over `d`, in lexicographic
/// order, passing a reused buffer to `fn`. Over intervals the equation is
/// exact; over Z_m it is read modulo m.
template <typename Fn>
void for_each_solution(const LinearEquation& eq, const Domain& d, Fn&& fn) {
    const int k = eq.k();
    if (k < 2) throw std::invalid_argument("equation needs at least 2 terms");
    const auto& a = eq.coefficients;
    std::vector<std::int64_t> x(static_cast<std::size_t>(k));
    if (d.is_interval()) {
        const std::int64_t n = d.size;
        const std::int64_t A = a[static_cast<std::size_t>(k - 2)];
        const std::int64_t C = a[static_cast<std::size_t>(k - 1)];
        // odometer over the first k-2 coordinates; the last two come from a
        // two-variable linear Diophantine walk
        std::vector<std::int64_t> prefix(static_cast<std::size_t>(k - 2), 1);
        while (true) {
            std::int64_t s = 0;
            for (int i = 0; i < k - 2; ++i) s += a[static_cast<std::size_t>(i)] * prefix[static_cast<std::size_t>(i)];
            for (int i = 0; i < k - 2; ++i) x[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i)];
            detail::for_each_pair_interval(A, C, -s, n, [&](std::int64_t u, std::int64_t v) {
                x[static_cast<std::size_t>(k - 2)] = u;
                x[static_cast<std::size_t>(k - 1)] = v;
                fn(const_cast<const std::vector<std::int64_t>&>(x));
            });
            int pos = k - 3;
            while (pos >= 0 && prefix[static_cast<std::size_t>(pos)] == n) {
                prefix[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++prefix[static_cast<std::size_t>(pos)];
        }
    } else {
        const std::int64_t m = d.size;
        const std::int64_t ak = a[static_cast<std::size_t>(k - 1)];
        std::vector<std::int64_t> prefix(static_cast<std::size_t>(k - 1), 0);
        while (true) {
            std::int64_t s = 0;
            for (int i = 0; i < k - 1; ++i) s += a[static_cast<std::size_t>(i)] * prefix[static_cast<std::size_t>(i)];
            for (int i = 0; i < k - 1; ++i) x[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i)];
            auto cls = detail::solve_congruence(ak, -s, m);
            if (cls) {
                for (std::int64_t v = cls->u0; v < m; v += cls->step) {
                    x[static_cast<std::size_t>(k - 1)] = v;
                    fn(const_cast<const std::vector<std::int64_t>&>(x));
                }
            }
            int pos = k - 2;
            while (pos >= 0 && prefix[static_cast<std::size_t>(pos)] == m - 1) {
                prefix[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++prefix[static_cast<std::size_t>(pos)];
        }
    }
}

/// Materializes the solution stream (small domains only).
std::vector<std::vector<std::int64_t>> enumerate_solutions(const LinearEquation& eq, const Domain& d);

std::int64_t count_solutions(const LinearEquation& eq, const Domain& d);

/// Exact monochromatic counts of `eq` under `f`, over f's own domain.
SolutionStats count_stats(const LinearEquation& eq, const Coloring& f);

/// Result of an exhaustive minimization over all two-colorings.
struct MinMuResult {
    Rational mu{0, 1};
    Coloring witness;
    std::int64_t total = 0;
    std::int64_t min_monochromatic = 0;
    bool exact = true;  // false when the coloring budget ran out
    std::int64_t colorings_tested = 0;
};

/// Global minimum of the monochromatic proportion over all 2^size colorings,
/// scanning only colorings with the first element red (complement symmetry).
/// Ties break toward the lexicographically smallest witness line. When
/// 2^(size-1) exceeds `budget`, returns the best over the first `budget`
/// colorings with exact=false.
/// Throws std::domain_error when the equation has no solutions over `d`.
MinMuResult exact_min_mu(const LinearEquation& eq, const Domain& d,
                         std::int64_t budget = std::int64_t{1} << 26, int threads = 1);

}  // namespace rado
