#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rado {

/// Where equation inputs live: the interval [n] = {1..n} or the cyclic
/// group Z_m = {0..m-1} (equations read modulo m).
struct Domain {
    enum class Kind { Interval, Cyclic };

    Kind kind = Kind::Interval;
    std::int64_t size = 1;

    static Domain interval(std::int64_t n) {
        if (n < 1) throw std::invalid_argument("interval domain needs n >= 1");
        return Domain{Kind::Interval, n};
    }
    static Domain cyclic(std::int64_t m) {
        if (m < 1) throw std::invalid_argument("cyclic domain needs m >= 1");
        return Domain{Kind::Cyclic, m};
    }

    bool is_interval() const { return kind == Kind::Interval; }

    /// First element as an integer: 1 for intervals, 0 for residues.
    std::int64_t first() const { return is_interval() ? 1 : 0; }
    std::int64_t last() const { return is_interval() ? size : size - 1; }

    friend bool operator==(const Domain& a, const Domain& b) {
        return a.kind == b.kind && a.size == b.size;
    }
};

inline constexpr std::int8_t kBlue = -1;
inline constexpr std::int8_t kRed = +1;

/// Two-coloring of a domain; values are -1 (blue) or +1 (red), stored in
/// element order (1..n for intervals, residues 0..m-1 for cyclic groups).
struct Coloring {
    Domain domain;
    std::vector<std::int8_t> values;

    Coloring() = default;
    Coloring(Domain d, std::vector<std::int8_t> vals) : domain(d), values(std::move(vals)) {
        if (static_cast<std::int64_t>(values.size()) != domain.size)
            throw std::invalid_argument("coloring length does not match domain size");
        for (std::int8_t v : values)
            if (v != kBlue && v != kRed) throw std::invalid_argument("coloring values must be -1 or +1");
    }

    static Coloring constant(Domain d, std::int8_t color) {
        return Coloring(d, std::vector<std::int8_t>(static_cast<std::size_t>(d.size), color));
    }

    /// Color of element t (1-based for intervals, residue for cyclic).
    std::int8_t at(std::int64_t t) const { return values[static_cast<std::size_t>(t - domain.first())]; }

    Coloring complement() const {
        Coloring c = *this;
        for (auto& v : c.values) v = static_cast<std::int8_t>(-v);
        return c;
    }

    /// One line of 'R'/'B' characters in element order.
    std::string to_line() const;
    static Coloring from_line(Domain d, const std::string& line);
};

}  // namespace rado
