#include "fockseq/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fockseq/gamma_kernel.hpp"
#include "fockseq/quadrature.hpp"
#include "fockseq/special.hpp"

namespace fockseq {

std::complex<double> toeplitz_entry(const SymbolSpec &spec, int angular_k,
                                    std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0 || m > 40 || n > 40)
        throw std::domain_error("toeplitz_entry: require 0 <= m, n <= 40");
    spec.validate();

    // angular factor: (1/pi) int_0^{2pi} e^{i(k+m-n) theta} d(theta),
    // periodic trapezoid (exact for |harmonic| < P)
    const int P = 256;
    const double q = static_cast<double>(angular_k) + static_cast<double>(m - n);
    std::complex<double> ang{};
    for (int j = 0; j < P; ++j) {
        double th = 2.0 * PI * static_cast<double>(j) / P;
        ang += std::exp(std::complex<double>(0.0, q * th));
    }
    ang *= 2.0 * PI / static_cast<double>(P) / PI;

    // radial factor: int_0^inf a(r) r^{m+n+1} e^{-r^2} dr / sqrt(m! n!)
    const double log_norm =
        0.5 * (log_gamma(static_cast<double>(m) + 1.0) + log_gamma(static_cast<double>(n) + 1.0));
    auto f = [&](double r) -> std::complex<double> {
        if (r <= 0.0) return {};
        double lw = static_cast<double>(m + n + 1) * std::log(r) - r * r - log_norm;
        if (lw < -745.0) return {};
        return eval_symbol(spec, r) * std::exp(lw);
    };
    std::vector<double> cuts = spec.breakpoints();
    std::vector<double> panels = make_panels(0.0, 12.0, cuts, 0.5);
    std::complex<double> rad = integrate_panels(f, panels, 24);

    return ang * rad;
}

double brute_kappa(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0 || m > 500 || n > 500)
        throw std::domain_error("brute_kappa: require 0 <= m, n <= 500");
    if (m == n) return 0.0;
    GammaKernel km(m), kn(n);
    double top = static_cast<double>(std::max(m, n));
    double hi = top + 14.0 * std::sqrt(top + 1.0) + 40.0;
    // dense trapezoid; steps refine near the kernel scale
    const std::size_t steps = 262144;
    const double h = hi / static_cast<double>(steps);
    double acc = 0.0;
    double prev = 0.0; // |K(m,0)-K(n,0)| = 0 for m,n >= 1; handled below for 0
    if (m == 0 || n == 0) prev = std::abs(km.density(0.0) - kn.density(0.0));
    for (std::size_t i = 1; i <= steps; ++i) {
        double r = h * static_cast<double>(i);
        double cur = std::abs(km.density(r) - kn.density(r));
        acc += 0.5 * (prev + cur);
        prev = cur;
    }
    return acc * h;
}

std::complex<double> brute_gamma(const SymbolSpec &spec, std::int64_t n) {
    if (n < 0 || n > 500) throw std::domain_error("brute_gamma: require 0 <= n <= 500");
    spec.validate();
    GammaKernel kernel(n);
    Growth g = spec.growth();
    double stretch = 1.0 / std::max(1.0 - g.delta, 0.05);
    double peak = static_cast<double>(n) * stretch;
    double hi = (peak + 14.0 * std::sqrt(peak + 1.0) + 40.0) * stretch;
    auto f = [&](double r) -> std::complex<double> {
        if (r <= 0.0) return (n == 0) ? eval_symbol(spec, 0.0) : std::complex<double>{};
        return eval_symbol(spec, std::sqrt(r)) * kernel.density(r);
    };
    std::complex<double> acc{};
    std::vector<double> cuts = spec.breakpoints_r();
    cuts.push_back(peak);
    std::vector<double> pieces = make_panels(0.0, hi, cuts, hi);
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        acc += adaptive_simpson(f, pieces[i], pieces[i + 1], 1e-12);
    return acc;
}

} // namespace fockseq
