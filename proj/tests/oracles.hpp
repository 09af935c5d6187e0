// Independent brute-force oracles for the test suite. Everything here is
// deliberately naive and stays off the library's counting paths.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "rado/domain.hpp"
#include "rado/equation.hpp"

namespace oracles {

using rado::Coloring;
using rado::Domain;
using rado::LinearEquation;

// full odometer over D^k, checking the equation on every tuple
inline std::vector<std::vector<std::int64_t>> slow_enumerate(const LinearEquation& eq, const Domain& d) {
    const int k = eq.k();
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> x(static_cast<std::size_t>(k), d.first());
    while (true) {
        std::int64_t s = 0;
        for (int i = 0; i < k; ++i) s += eq.coefficients[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        bool solves = d.is_interval() ? s == 0 : ((s % d.size) + d.size) % d.size == 0;
        if (solves) out.push_back(x);
        int pos = k - 1;
        while (pos >= 0 && x[static_cast<std::size_t>(pos)] == d.last()) {
            x[static_cast<std::size_t>(pos)] = d.first();
            --pos;
        }
        if (pos < 0) break;
        ++x[static_cast<std::size_t>(pos)];
    }
    return out;
}

struct SlowStats {
    std::int64_t total = 0, mono = 0, red = 0, blue = 0;
};

inline SlowStats slow_stats(const LinearEquation& eq, const Coloring& f) {
    SlowStats st;
    for (const auto& x : slow_enumerate(eq, f.domain)) {
        ++st.total;
        bool all_red = true, all_blue = true;
        for (std::int64_t v : x) {
            (f.at(v) == rado::kRed ? all_blue : all_red) = false;
        }
        if (all_red) ++st.red;
        if (all_blue) ++st.blue;
    }
    st.mono = st.red + st.blue;
    return st;
}

// bit rows over [1..n] for correlation counting at large n
struct BitRow {
    std::int64_t n = 0;
    std::vector<std::uint64_t> w;

    explicit BitRow(std::int64_t size) : n(size), w(static_cast<std::size_t>((size + 63) / 64), 0) {}

    void set(std::int64_t t) { w[static_cast<std::size_t>((t - 1) >> 6)] |= std::uint64_t{1} << ((t - 1) & 63); }
    bool get(std::int64_t t) const {
        return (w[static_cast<std::size_t>((t - 1) >> 6)] >> ((t - 1) & 63)) & 1;
    }
};

// popcount(a & (b >> shift)); negative shifts move b the other way
inline std::int64_t and_popcount_shifted(const BitRow& a, const BitRow& b, std::int64_t shift) {
    if (shift < 0) return and_popcount_shifted(b, a, -shift);
    std::size_t wshift = static_cast<std::size_t>(shift >> 6);
    int bshift = static_cast<int>(shift & 63);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < a.w.size() && i + wshift < b.w.size(); ++i) {
        std::uint64_t lo = b.w[i + wshift] >> bshift;
        std::uint64_t hi = (bshift != 0 && i + wshift + 1 < b.w.size())
                               ? b.w[i + wshift + 1] << (64 - bshift)
                               : 0;
        count += std::popcount(a.w[i] & (lo | hi));
    }
    return count;
}

inline BitRow color_row(const Coloring& f, std::int8_t color) {
    BitRow row(f.domain.size);
    for (std::int64_t t = 1; t <= f.domain.size; ++t)
        if (f.at(t) == color) row.set(t);
    return row;
}

inline BitRow reversed(const BitRow& a) {
    BitRow rev(a.n);
    for (std::int64_t t = 1; t <= a.n; ++t)
        if (a.get(t)) rev.set(a.n + 1 - t);
    return rev;
}

// #{x : x in A, s - x in A} = ordered representations of s as a + a'
inline std::int64_t pair_reps(const BitRow& a, const BitRow& a_rev, std::int64_t s) {
    return and_popcount_shifted(a, a_rev, a.n + 1 - s);
}

// monochromatic Schur triples (x, y, x+y), ordered, via representation counts
inline std::int64_t schur_mono(const Coloring& f) {
    BitRow red = color_row(f, rado::kRed), blue = color_row(f, rado::kBlue);
    BitRow red_rev = reversed(red), blue_rev = reversed(blue);
    std::int64_t mono = 0;
    for (std::int64_t z = 2; z <= f.domain.size; ++z) {
        if (f.at(z) == rado::kRed) mono += pair_reps(red, red_rev, z);
        else mono += pair_reps(blue, blue_rev, z);
    }
    return mono;
}

// monochromatic solutions of x + y = z + w, ordered, via representation counts
inline std::int64_t additive4_mono(const Coloring& f) {
    BitRow red = color_row(f, rado::kRed), blue = color_row(f, rado::kBlue);
    BitRow red_rev = reversed(red), blue_rev = reversed(blue);
    std::int64_t mono = 0;
    for (std::int64_t s = 2; s <= 2 * f.domain.size; ++s) {
        std::int64_t r = pair_reps(red, red_rev, s), b = pair_reps(blue, blue_rev, s);
        mono += r * r + b * b;
    }
    return mono;
}

inline std::int64_t additive4_total(std::int64_t n) { return (2 * n * n * n + n) / 3; }

}  // namespace oracles
