#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rado {

/// A linear equation a1*x1 + ... + ak*xk = 0 with nonzero integer coefficients.
struct LinearEquation {
    std::vector<std::int64_t> coefficients;

    LinearEquation() = default;
    explicit LinearEquation(std::vector<std::int64_t> coeffs);

    int k() const { return static_cast<int>(coefficients.size()); }

    /// gcd of all |coefficients| equals 1.
    bool is_reduced() const;

    /// Coefficient multiset is +1 (k/2 times) and -1 (k/2 times), in any order.
    bool is_additive_tuple() const;

    std::string str() const;

    friend bool operator==(const LinearEquation& a, const LinearEquation& b) {
        return a.coefficients == b.coefficients;
    }
};

/// Raised on malformed equation or coloring text; `column` is a 1-based
/// offset into the offending input.
struct ParseError : std::runtime_error {
    std::size_t column;
    ParseError(const std::string& msg, std::size_t col)
        : std::runtime_error(msg + " (column " + std::to_string(col) + ")"), column(col) {}
};

/// Accepts either a bracketed list "[2,-2,3]" or a symbolic form like
/// "2x - 2y + 3z = 0" over distinct single-letter variables. Right-hand side
/// terms are negated onto the left; coefficients come back in left-to-right
/// variable order.
LinearEquation parse_equation(const std::string& text);

/// True iff some nonempty subset of the coefficients sums to zero.
/// Meet-in-the-middle subset scan, k <= 30.
bool zero_sum_subset_exists(const LinearEquation& eq);

/// True iff the coefficients can be perfectly matched into pairs {v, -v}.
bool has_canceling_partition(const LinearEquation& eq);

/// Additive tuple x1 + ... + x_{k/2} = x_{k/2+1} + ... + x_k for even k.
LinearEquation additive_tuple_equation(int k);

}  // namespace rado
