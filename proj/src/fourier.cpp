#include "rado/fourier.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "rado/colorings.hpp"
#include "rado/solutions.hpp"

namespace rado {

namespace {
constexpr double kImagTol = 1e-10;
constexpr double kRangeTol = 1e-12;

std::complex<double> unit_root(std::int64_t m, std::int64_t exponent) {
    // exp(2*pi*i*exponent/m)
    double angle = 2.0 * std::numbers::pi * static_cast<double>(((exponent % m) + m) % m) /
                   static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}
}  // namespace

ProbColoring::ProbColoring(std::int64_t mod, std::vector<double> vals) : m(mod), values(std::move(vals)) {
    if (m < 1) throw std::invalid_argument("probabilistic coloring needs m >= 1");
    if (static_cast<std::int64_t>(values.size()) != m)
        throw std::invalid_argument("probabilistic coloring length must equal m");
    for (double& v : values) {
        if (v < -kRangeTol || v > 1.0 + kRangeTol)
            throw std::invalid_argument("probabilistic coloring values must lie in [0, 1]");
        v = std::clamp(v, 0.0, 1.0);
    }
}

ProbColoring ProbColoring::constant(std::int64_t m, double p) {
    return ProbColoring(m, std::vector<double>(static_cast<std::size_t>(m), p));
}

ProbColoring ProbColoring::from_coloring(const Coloring& f) {
    if (f.domain.is_interval())
        throw std::invalid_argument("probabilistic colorings live on cyclic domains");
    std::vector<double> vals(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) vals[i] = f.values[i] == kRed ? 1.0 : 0.0;
    return ProbColoring(f.domain.size, std::move(vals));
}

bool Spectrum::is_hermitian(double tol) const {
    for (std::int64_t s = 0; s < m; ++s) {
        std::complex<double> lhs = std::conj(coefficients[static_cast<std::size_t>(s)]);
        std::complex<double> rhs = coefficients[static_cast<std::size_t>((m - s) % m)];
        if (std::abs(lhs - rhs) > tol) return false;
    }
    return true;
}

double Spectrum::offzero_abs_sum() const {
    double s = 0.0;
    for (std::int64_t t = 1; t < m; ++t) s += std::abs(coefficients[static_cast<std::size_t>(t)]);
    return s;
}

Spectrum dft(const ProbColoring& f) {
    Spectrum F;
    F.m = f.m;
    F.coefficients.assign(static_cast<std::size_t>(f.m), {0.0, 0.0});
    for (std::int64_t xi = 0; xi < f.m; ++xi) {
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t t = 0; t < f.m; ++t)
            acc += f.values[static_cast<std::size_t>(t)] * unit_root(f.m, -xi * t);
        F.coefficients[static_cast<std::size_t>(xi)] = acc / static_cast<double>(f.m);
    }
    return F;
}

std::vector<std::complex<double>> idft_values(const Spectrum& F) {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(F.m));
    for (std::int64_t v = 0; v < F.m; ++v) {
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t t = 0; t < F.m; ++t)
            acc += F.coefficients[static_cast<std::size_t>(t)] * unit_root(F.m, t * v);
        out[static_cast<std::size_t>(v)] = acc;
    }
    return out;
}

ProbColoring idft(const Spectrum& F, bool strict) {
    auto raw = idft_values(F);
    std::vector<double> vals(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (strict && std::abs(raw[i].imag()) > kImagTol)
            throw std::domain_error("inversion is not real-valued (spectrum not Hermitian)");
        double re = raw[i].real();
        if (strict && (re < -kRangeTol || re > 1.0 + kRangeTol))
            throw std::domain_error("inversion leaves [0, 1]");
        vals[i] = std::clamp(re, 0.0, 1.0);
    }
    return ProbColoring(F.m, std::move(vals));
}

double deviation(std::int64_t a, std::int64_t b, const Spectrum& F) {
    if (!F.is_hermitian()) throw std::invalid_argument("deviation needs a Hermitian spectrum");
    const std::int64_t m = F.m;
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t t = 0; t < m; ++t) {
        std::int64_t at = ((a * t) % m + m) % m;
        std::int64_t bt = ((b * t) % m + m) % m;
        if (at == 0 || bt == 0) continue;
        acc += F.coefficients[static_cast<std::size_t>(at)] * F.coefficients[static_cast<std::size_t>(bt)];
    }
    if (std::abs(acc.imag()) > kImagTol)
        throw std::domain_error("deviation has a non-negligible imaginary part");
    return acc.real();
}

double mu_expected_fourier(std::int64_t a, std::int64_t b, const Spectrum& F) {
    const std::int64_t m = F.m;
    std::int64_t absa = a < 0 ? -a : a, absb = b < 0 ? -b : b;
    if (m <= absa || m <= absb)
        throw std::invalid_argument("transform formula needs |c| > |a| and |c| > |b|");
    // G = transform of 1 - f: G(0) = 1 - F(0), G(s) = -F(s) otherwise
    std::complex<double> sum_f{0.0, 0.0}, sum_g{0.0, 0.0};
    for (std::int64_t t = 0; t < m; ++t) {
        std::int64_t at = ((a * t) % m + m) % m;
        std::int64_t bt = ((b * t) % m + m) % m;
        std::complex<double> fa = F.coefficients[static_cast<std::size_t>(at)];
        std::complex<double> fb = F.coefficients[static_cast<std::size_t>(bt)];
        std::complex<double> ga = at == 0 ? 1.0 - fa : -fa;
        std::complex<double> gb = bt == 0 ? 1.0 - fb : -fb;
        sum_f += fa * fb;
        sum_g += ga * gb;
    }
    std::complex<double> g0 = 1.0 - F.coefficients[0];
    std::complex<double> mu = F.coefficients[0] * sum_f + g0 * sum_g;
    if (std::abs(mu.imag()) > kImagTol)
        throw std::domain_error("expected proportion has a non-negligible imaginary part");
    return mu.real();
}

double expected_mu_direct(const LinearEquation& eq, const ProbColoring& f) {
    if (eq.k() != 3) throw std::invalid_argument("direct oracle handles 3-term equations");
    const std::int64_t m = f.m;
    double acc = 0.0;
    std::int64_t total = 0;
    for_each_solution(eq, Domain::cyclic(m), [&](const std::vector<std::int64_t>& x) {
        double px = f.values[static_cast<std::size_t>(x[0])];
        double py = f.values[static_cast<std::size_t>(x[1])];
        double pz = f.values[static_cast<std::size_t>(x[2])];
        acc += px * py * pz + (1.0 - px) * (1.0 - py) * (1.0 - pz);
        ++total;
    });
    if (total == 0) throw std::domain_error("equation has no solutions over this cyclic group");
    return acc / static_cast<double>(total);
}

Spectrum construct_uncommon_spectrum(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("coefficients must be nonzero");
    const std::int64_t m = c < 0 ? -c : c;
    std::int64_t absa = a < 0 ? -a : a, absb = b < 0 ? -b : b;
    if (std::gcd(std::gcd(absa, absb), m) != 1)
        throw std::invalid_argument("equation must be fully reduced (gcd of coefficients 1)");
    if (m <= absa || m <= absb)
        throw std::invalid_argument("|c| must strictly exceed |a| and |b| (unique maximum)");
    std::int64_t ga = std::gcd(absa, m), gb = std::gcd(absb, m);
    if (ga != 1 && gb != 1)
        throw std::invalid_argument("one of gcd(a, |c|), gcd(b, |c|) must equal 1");
    if (((a + b) % m + m) % m == 0)
        throw std::invalid_argument("a + b must not be divisible by |c|");

    // place the -1/8 pair on a frequency coprime to m
    std::int64_t lead = a, other = b;
    if (ga != 1) std::swap(lead, other);

    Spectrum F;
    F.m = m;
    F.coefficients.assign(static_cast<std::size_t>(m), {0.0, 0.0});
    F.coefficients[0] = {0.5, 0.0};
    std::int64_t la = ((lead % m) + m) % m;
    std::int64_t lb = ((other % m) + m) % m;
    if (la == lb) {
        // equal frequencies carry +-i/4
        F.coefficients[static_cast<std::size_t>(la)] = {0.0, 0.25};
        F.coefficients[static_cast<std::size_t>(m - la)] = {0.0, -0.25};
    } else {
        F.coefficients[static_cast<std::size_t>(la)] = {-0.125, 0.0};
        F.coefficients[static_cast<std::size_t>(m - la)] = {-0.125, 0.0};
        F.coefficients[static_cast<std::size_t>(lb)] = {1.0 / 9.0, 0.0};
        F.coefficients[static_cast<std::size_t>(m - lb)] = {1.0 / 9.0, 0.0};
    }
    return F;
}

Coloring sample_coloring(const ProbColoring& f, std::uint64_t seed) {
    std::vector<std::int8_t> vals(static_cast<std::size_t>(f.m));
    for (std::int64_t t = 0; t < f.m; ++t) {
        std::uint64_t r = detail::splitmix64(seed + static_cast<std::uint64_t>(t) * 0x9E3779B97F4A7C15ull);
        double u = static_cast<double>(r >> 11) * 0x1.0p-53;
        vals[static_cast<std::size_t>(t)] = u < f.values[static_cast<std::size_t>(t)] ? kRed : kBlue;
    }
    return Coloring(Domain::cyclic(f.m), std::move(vals));
}

}  // namespace rado
