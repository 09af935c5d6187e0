#include "rado/colorings.hpp"

#include <algorithm>

#include "rado/equation.hpp"

namespace rado {

std::string Coloring::to_line() const {
    std::string s;
    s.reserve(values.size());
    for (std::int8_t v : values) s += v == kRed ? 'R' : 'B';
    return s;
}

Coloring Coloring::from_line(Domain d, const std::string& line) {
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' ||
                                trimmed.back() == ' ' || trimmed.back() == '\t'))
        trimmed.pop_back();
    if (static_cast<std::int64_t>(trimmed.size()) != d.size)
        throw std::invalid_argument("coloring line has " + std::to_string(trimmed.size()) +
                                    " characters, domain has " + std::to_string(d.size));
    std::vector<std::int8_t> vals;
    vals.reserve(trimmed.size());
    for (std::size_t i = 0; i < trimmed.size(); ++i) {
        char ch = trimmed[i];
        if (ch == 'R' || ch == 'r') vals.push_back(kRed);
        else if (ch == 'B' || ch == 'b') vals.push_back(kBlue);
        else throw ParseError("coloring characters must be 'R' or 'B'", i + 1);
    }
    return Coloring(d, std::move(vals));
}

void BlockSpec::validate() const {
    if (colors.size() != breakpoints.size() + 1)
        throw std::invalid_argument("block spec needs one more color than breakpoints");
    Rational prev{0, 1};
    for (const Rational& b : breakpoints) {
        if (!(prev < b)) throw std::invalid_argument("block breakpoints must be strictly increasing");
        if (b > Rational{1, 1}) throw std::invalid_argument("block breakpoints must lie in [0, 1]");
        prev = b;
    }
    for (std::int8_t c : colors)
        if (c != kRed && c != kBlue) throw std::invalid_argument("block colors must be red or blue");
}

namespace {

Rational parse_fraction(const std::string& s, std::size_t col0) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational{std::stoll(s), 1};
        return Rational{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::exception&) {
        throw ParseError("bad fraction '" + s + "'", col0);
    }
}

std::int8_t parse_color_word(const std::string& w, std::size_t col0) {
    if (w == "blue" || w == "B" || w == "b") return kBlue;
    if (w == "red" || w == "R" || w == "r") return kRed;
    throw ParseError("unknown color '" + w + "'", col0);
}

}  // namespace

BlockSpec parse_block_spec(const std::string& text) {
    // "blue:4/11,red:10/11,blue" -- the last block has no breakpoint
    BlockSpec spec;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty()) throw ParseError("empty block entry", pos + 1);
        auto colon = part.find(':');
        if (colon == std::string::npos) {
            spec.colors.push_back(parse_color_word(part, pos + 1));
            if (comma != std::string::npos)
                throw ParseError("only the last block may omit its breakpoint", comma + 1);
            break;
        }
        spec.colors.push_back(parse_color_word(part.substr(0, colon), pos + 1));
        spec.breakpoints.push_back(parse_fraction(part.substr(colon + 1), pos + colon + 2));
        if (comma == std::string::npos)
            throw ParseError("last block must omit its breakpoint", text.size());
        pos = comma + 1;
    }
    spec.validate();
    return spec;
}

Coloring block_coloring(std::int64_t n, const BlockSpec& spec) {
    spec.validate();
    if (n < 1) throw std::invalid_argument("block coloring needs n >= 1");
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n));
    std::int64_t begin = 0;  // block j covers (begin, end]
    for (std::size_t j = 0; j < spec.colors.size(); ++j) {
        std::int64_t end;
        if (j < spec.breakpoints.size()) {
            const Rational& b = spec.breakpoints[j];
            end = (b.num * n) / b.den;  // floor; num, den > 0
        } else {
            end = n;
        }
        end = std::clamp<std::int64_t>(end, 0, n);
        for (std::int64_t t = begin + 1; t <= end; ++t)
            vals[static_cast<std::size_t>(t - 1)] = spec.colors[j];
        begin = std::max(begin, end);
    }
    return Coloring(Domain::interval(n), std::move(vals));
}

Coloring schur_coloring(std::int64_t n) {
    BlockSpec spec{{Rational{4, 11}, Rational{10, 11}}, {kBlue, kRed, kBlue}};
    return block_coloring(n, spec);
}

Coloring three_block_coloring(std::int64_t n) {
    BlockSpec spec{{Rational{1, 8}, Rational{1, 2}}, {kBlue, kRed, kBlue}};
    return block_coloring(n, spec);
}

Coloring alternating_prefix_coloring(std::int64_t n, std::int64_t c) {
    if (n < 1) throw std::invalid_argument("alternating prefix needs n >= 1");
    if (c < 1 || c % 2 == 0)
        throw std::invalid_argument("alternating prefix boundary needs odd c >= 1");
    // boundary floor(alpha * n), alpha = 3/4 for c = 1 and 2/c for c >= 3
    std::int64_t boundary = c == 1 ? (3 * n) / 4 : (2 * n) / c;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n), kRed);
    for (std::int64_t t = 2; t <= boundary; t += 2) vals[static_cast<std::size_t>(t - 1)] = kBlue;
    return Coloring(Domain::interval(n), std::move(vals));
}

Coloring point_coloring_cyclic(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("point coloring needs m >= 1");
    std::vector<std::int8_t> vals(static_cast<std::size_t>(m), kRed);
    vals[0] = kBlue;
    return Coloring(Domain::cyclic(m), std::move(vals));
}

Coloring lift_from_cyclic(const Coloring& f, std::int64_t n) {
    if (f.domain.is_interval()) throw std::invalid_argument("lift needs a cyclic coloring");
    if (n < 1) throw std::invalid_argument("lift needs n >= 1");
    const std::int64_t m = f.domain.size;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n));
    for (std::int64_t t = 1; t <= n; ++t)
        vals[static_cast<std::size_t>(t - 1)] = f.values[static_cast<std::size_t>(t % m)];
    return Coloring(Domain::interval(n), std::move(vals));
}

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace detail

Coloring random_coloring(const Domain& d, std::uint64_t seed) {
    std::vector<std::int8_t> vals(static_cast<std::size_t>(d.size));
    for (std::int64_t i = 0; i < d.size; ++i) {
        std::uint64_t r = detail::splitmix64(seed + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ull);
        vals[static_cast<std::size_t>(i)] = (r >> 63) ? kRed : kBlue;
    }
    return Coloring(d, std::move(vals));
}

}  // namespace rado
