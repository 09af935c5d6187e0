#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rado/domain.hpp"
#include "rado/equation.hpp"

namespace rado {

/// Probabilistic coloring of Z_m: values[t] = P[t is red], each in [0, 1]
/// (tolerance 1e-12 on construction, then clamped).
struct ProbColoring {
    std::int64_t m = 1;
    std::vector<double> values;

    ProbColoring() = default;
    ProbColoring(std::int64_t mod, std::vector<double> vals);

    static ProbColoring constant(std::int64_t m, double p);
    /// Deterministic coloring as probabilities: red -> 1, blue -> 0.
    static ProbColoring from_coloring(const Coloring& f);
};

/// Fourier coefficients indexed by frequencies 0..m-1.
struct Spectrum {
    std::int64_t m = 1;
    std::vector<std::complex<double>> coefficients;

    std::complex<double> at(std::int64_t xi) const {
        std::int64_t r = ((xi % m) + m) % m;
        return coefficients[static_cast<std::size_t>(r)];
    }

    /// conj(F(s)) == F(-s) for all s, i.e. the inversion is real-valued.
    bool is_hermitian(double tol = 1e-9) const;

    /// Sum of |F(t)| over t != 0; at most 1/2 guarantees range safety of the
    /// inversion around F(0) = 1/2.
    double offzero_abs_sum() const;
};

/// Forward transform with the 1/m normalization on this side:
/// F(xi) = (1/m) * sum_t f(t) exp(-2*pi*i*xi*t/m). Direct O(m^2).
Spectrum dft(const ProbColoring& f);

/// Raw inversion f(v) = sum_t F(t) exp(2*pi*i*t*v/m) (no 1/m factor).
std::vector<std::complex<double>> idft_values(const Spectrum& F);

/// Inversion checked into a ProbColoring. In strict mode (default) errors on
/// imaginary parts above 1e-10 or values outside [-1e-12, 1 + 1e-12];
/// otherwise clamps.
ProbColoring idft(const Spectrum& F, bool strict = true);

/// Sum of F(a*t) * F(b*t) over t in Z_m with a*t != 0 and b*t != 0 (mod m).
/// Requires a Hermitian spectrum; the result is real.
double deviation(std::int64_t a, std::int64_t b, const Spectrum& F);

/// Expected monochromatic proportion of a*x + b*y + c*z = 0 over Z_m
/// (m = F.m = |c|) via the two-term transform formula
///   F(0) * sum_t F(at) F(bt) + G(0) * sum_t G(at) G(bt),
/// where G is the transform of 1 - f. Requires m > |a| and m > |b|.
/// Equals 1/4 + deviation(a, b, F) when F(0) = 1/2.
double mu_expected_fourier(std::int64_t a, std::int64_t b, const Spectrum& F);

/// Independent oracle: averages f(x)f(y)f(z) + (1-f)(x)(1-f)(y)(1-f)(z) over
/// every solution of the 3-term equation modulo f.m.
/// Throws std::domain_error if the equation has no solutions over Z_m.
double expected_mu_direct(const LinearEquation& eq, const ProbColoring& f);

/// Builds the explicit spectrum certifying that a*x + b*y + c*z = 0 has
/// expected monochromatic proportion below 1/4 over Z_|c|. Requirements, each
/// reported by name on failure: the equation is fully reduced; |c| strictly
/// exceeds |a| and |b|; at least one of gcd(a, |c|), gcd(b, |c|) is 1; and
/// a + b is not divisible by |c|. When gcd(a, |c|) != 1 the roles of a and b
/// swap. The result is Hermitian with F(0) = 1/2, has off-zero mass <= 1/2,
/// and yields a strictly negative deviation.
Spectrum construct_uncommon_spectrum(std::int64_t a, std::int64_t b, std::int64_t c);

/// Rounds a probabilistic coloring to a concrete one by sampling each
/// residue independently (red with probability f(t)) from a seeded SplitMix64
/// stream.
Coloring sample_coloring(const ProbColoring& f, std::uint64_t seed);

}  // namespace rado
