#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rado/domain.hpp"
#include "rado/rational.hpp"

namespace rado {

/// Piecewise-constant coloring of [n] described by rational breakpoints.
/// Block j covers (floor(b_{j-1} * n), floor(b_j * n)] with b_0 = 0 and the
/// final breakpoint implicitly 1; `colors` has one entry per block.
struct BlockSpec {
    std::vector<Rational> breakpoints;
    std::vector<std::int8_t> colors;

    void validate() const;
};

/// Text form "blue:4/11,red:10/11,blue" (last block runs to 1).
BlockSpec parse_block_spec(const std::string& text);

Coloring block_coloring(std::int64_t n, const BlockSpec& spec);

/// The 4n/11 - 10n/11 blue/red/blue coloring that minimizes monochromatic
/// Schur triples.
Coloring schur_coloring(std::int64_t n);

/// Three-block blue/red/blue coloring with breakpoints n/8 and n/2.
Coloring three_block_coloring(std::int64_t n);

/// Blue on even t up to the boundary floor(alpha*n), red elsewhere, with
/// alpha = 3/4 for c = 1 and alpha = 2/c for odd c >= 3. Rejects even c.
Coloring alternating_prefix_coloring(std::int64_t n, std::int64_t c);

/// Blue only at residue 0.
Coloring point_coloring_cyclic(std::int64_t m);

/// Composes a cyclic coloring with reduction mod m: lifted(t) = f(t mod m).
Coloring lift_from_cyclic(const Coloring& f, std::int64_t n);

/// Uniform random coloring from SplitMix64 streams: element i draws the top
/// bit of splitmix64(seed + i * 0x9E3779B97F4A7C15). Identical seeds give
/// identical colorings on every platform.
Coloring random_coloring(const Domain& d, std::uint64_t seed);

namespace detail {
std::uint64_t splitmix64(std::uint64_t x);
}

}  // namespace rado
