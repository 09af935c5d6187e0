#include "rado/solutions.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "rado/parallel.hpp"

namespace rado {

namespace detail {

namespace {
// x with a*x + m*y = gcd(a, m), a, m >= 0
std::int64_t ext_gcd_x(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = a, r = m, old_x = 1, x = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
    }
    return old_x;
}
}  // namespace

std::optional<ResidueClass> solve_congruence(std::int64_t a, std::int64_t r, std::int64_t md) {
    if (md == 1) return ResidueClass{0, 1};
    std::int64_t aa = ((a % md) + md) % md;
    std::int64_t rr = ((r % md) + md) % md;
    if (aa == 0) {
        if (rr != 0) return std::nullopt;
        return ResidueClass{0, 1};
    }
    std::int64_t g = std::gcd(aa, md);
    if (rr % g != 0) return std::nullopt;
    std::int64_t md1 = md / g;
    if (md1 == 1) return ResidueClass{0, 1};
    std::int64_t inv = ext_gcd_x(aa / g, md1) % md1;
    if (inv < 0) inv += md1;
    std::int64_t u0 = static_cast<std::int64_t>(
        static_cast<__int128>(rr / g) % md1 * inv % md1);
    return ResidueClass{u0, md1};
}

}  // namespace detail

std::vector<std::vector<std::int64_t>> enumerate_solutions(const LinearEquation& eq, const Domain& d) {
    std::vector<std::vector<std::int64_t>> out;
    for_each_solution(eq, d, [&](const std::vector<std::int64_t>& x) { out.push_back(x); });
    return out;
}

std::int64_t count_solutions(const LinearEquation& eq, const Domain& d) {
    std::int64_t total = 0;
    for_each_solution(eq, d, [&](const std::vector<std::int64_t>&) { ++total; });
    return total;
}

SolutionStats count_stats(const LinearEquation& eq, const Coloring& f) {
    SolutionStats st;
    const std::int64_t base = f.domain.first();
    const std::int8_t* colors = f.values.data();
    const int k = eq.k();
    for_each_solution(eq, f.domain, [&](const std::vector<std::int64_t>& x) {
        ++st.total;
        std::int8_t c0 = colors[x[0] - base];
        for (int i = 1; i < k; ++i) {
            if (colors[x[static_cast<std::size_t>(i)] - base] != c0) return;
        }
        ++st.monochromatic;
        if (c0 == kRed) ++st.red;
        else ++st.blue;
    });
    st.proportion = st.total == 0 ? Rational{0, 1} : Rational{st.monochromatic, st.total};
    return st;
}

namespace {

// Witness-line order: element t is bit (t - first); blue sorts before red at
// the earliest differing element.
bool mask_line_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    int t = std::countr_zero(diff);
    return ((a >> t) & 1) == 0;
}

Coloring mask_to_coloring(const Domain& d, std::uint64_t mask) {
    std::vector<std::int8_t> vals(static_cast<std::size_t>(d.size));
    for (std::int64_t i = 0; i < d.size; ++i)
        vals[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? kRed : kBlue;
    return Coloring(d, std::move(vals));
}

}  // namespace

MinMuResult exact_min_mu(const LinearEquation& eq, const Domain& d, std::int64_t budget, int threads) {
    if (d.size > 62) throw std::invalid_argument("exhaustive search limited to domains of size <= 62");
    if (budget < 1) throw std::invalid_argument("budget must be positive");

    // one bitmask of element positions per solution
    std::vector<std::uint64_t> sol_masks;
    for_each_solution(eq, d, [&](const std::vector<std::int64_t>& x) {
        std::uint64_t m = 0;
        for (std::int64_t v : x) m |= std::uint64_t{1} << (v - d.first());
        sol_masks.push_back(m);
    });
    if (sol_masks.empty()) throw std::domain_error("equation has no solutions over this domain");

    const std::int64_t space = std::int64_t{1} << (d.size - 1);
    const bool exact = space <= budget;
    const std::int64_t to_test = exact ? space : budget;

    struct Best {
        std::int64_t mono = -1;
        std::uint64_t mask = 0;
    };
    std::vector<Best> by_chunk(static_cast<std::size_t>(std::max(1, threads)));

    parallel_chunks(to_test, threads, [&](int chunk, std::int64_t begin, std::int64_t end) {
        Best best;
        for (std::int64_t c = begin; c < end; ++c) {
            // first element fixed red
            std::uint64_t red = (static_cast<std::uint64_t>(c) << 1) | 1u;
            std::int64_t mono = 0;
            for (std::uint64_t sm : sol_masks) {
                std::uint64_t r = red & sm;
                mono += (r == sm) | (r == 0);
            }
            if (best.mono < 0 || mono < best.mono ||
                (mono == best.mono && mask_line_less(red, best.mask))) {
                best.mono = mono;
                best.mask = red;
            }
        }
        by_chunk[static_cast<std::size_t>(chunk)] = best;
    });

    Best best;
    for (const Best& b : by_chunk) {
        if (b.mono < 0) continue;
        if (best.mono < 0 || b.mono < best.mono ||
            (b.mono == best.mono && mask_line_less(b.mask, best.mask))) {
            best = b;
        }
    }

    MinMuResult res;
    res.total = static_cast<std::int64_t>(sol_masks.size());
    res.min_monochromatic = best.mono;
    res.mu = Rational{best.mono, res.total};
    res.witness = mask_to_coloring(d, best.mask);
    res.exact = exact;
    res.colorings_tested = to_test;
    return res;
}

}  // namespace rado
