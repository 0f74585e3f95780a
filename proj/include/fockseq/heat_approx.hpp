#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "fockseq/eigenvalues.hpp"
#include "fockseq/oscillation.hpp"
#include "fockseq/sampled_function.hpp"
#include "fockseq/symbols.hpp"

namespace fockseq {

/*
 * Heat-kernel machinery and the constructive approximation pipeline.
 *
 * The kernel pairing behaves, for large n, like convolution with the
 * Gaussian
 *
 *   H(x) = sqrt(2/pi) e^{-2 x^2},
 *
 * i.e. gamma_a(n) ~ (H * a)(sqrt n).  The Fourier convention throughout is
 * F[g](xi) = int g(x) e^{-i xi x} dx, under which H has spectrum
 * e^{-xi^2/8}, nowhere zero, so division by it is well defined on any
 * finite band.
 *
 * The pipeline approximates a target sequence sigma:
 *
 *   1. extend sigma to f on [0,inf), set h(x) = f(x^2)  (bounded, uniformly
 *      continuous, even);
 *   2. synthesize ell with H * ell ~ h by spectral division
 *      ell^ = h^ . W . e^{xi^2/8}, where W is a band window equal to 1 on
 *      [-Omega/2, Omega/2] with a cosine taper vanishing at Omega (an
 *      explicit, band-limited stand-in for a division lemma: the Gaussian
 *      spectrum never vanishes, and W plays the Fejer role).  Realized as
 *      convolution with the explicit kernel
 *      g(t) = (1/pi) int_0^Omega W(xi) e^{xi^2/8} cos(xi t) dxi;
 *   3. the restriction b = ell|_{[0,inf)} approximates sigma(n) for n past
 *      a split point N (measured, not certified);
 *   4. the finite head residue theta(n) = sigma(n) - gamma_b(n), n <= N, is
 *      fitted in least squares over indicator symbols (ridge-regularized),
 *      whose eigenvalue sequences are incomplete-gamma columns;
 *   5. a = b + c.  All reported errors are measured over the checked range.
 */

// H(x) = sqrt(2/pi) e^{-2x^2}; unit mass; spectrum e^{-xi^2/8}.
double heat(double x);
double heat_spectrum(double xi);

// Fejer kernel on the line, sin^2(nx) / (pi n x^2); order n > 0.  Unit
// mass, nonnegative, spectrum (1 - |xi|/(2n))_+.
double fejer(double order, double x);

// (H * a)(x) over the given domain by Gauss panels on [x-6, x+6] clipped to
// the domain (the Gaussian leaves ~1e-32 outside).
std::complex<double> convolve_heat_fn(const std::function<std::complex<double>(double)> &a,
                                      double x, double domain_lo, double domain_hi);
// symbol restricted to [0, inf)
std::complex<double> convolve_heat(const SymbolSpec &a, double x);
// sampled function on its own extension of the line (endpoint hold)
std::complex<double> convolve_heat(const SampledFunction &a, double x);

// L1 distance between the y-kernel at n and the matching Gaussian:
//   int_0^inf | K(n,y^2) 2y - sqrt(2/pi) e^{-2(sqrt n - y)^2} | dy,
// to absolute accuracy ~1e-8.  Empirically below 0.54/sqrt(n).
double convoluzation_error(std::int64_t n);

// sqrt(2/pi) int_0^inf a(y) e^{-2(y-sqrt n)^2} dy = (H * a)(sqrt n); obeys
// |asymptotic_gamma - gamma| <= sup|a| convoluzation_error(n).
std::complex<double> asymptotic_gamma(const SymbolSpec &spec, std::int64_t n);

// Value of the spectral-division kernel
//   g(t) = (1/pi) int_0^omega W(xi) e^{xi^2/8} cos(xi t) dxi,
// W the band window (1 on [0,pass], cosine taper to 0 at omega).  Convolving
// a function h with g inverts the heat smoothing on the passband:
// H * (g * h) reproduces every spectral component of h below `pass` exactly.
double deconvolution_kernel(double t, double pass, double omega);

struct DeconvolutionConfig {
    double omega = 8.0;       // band cutoff; amplification e^{omega^2/8} (cap 12)
    double pass_fraction = 0.5; // W == 1 on [-pf*omega, pf*omega]
    double step = 0.05;       // grid step (aliasing guard: step <= pi/omega)
    double extent = 120.0;    // symbol support [0, extent]
    double kernel_radius = 40.0; // truncation radius of g
};

struct TailReport {
    std::int64_t split_n = 0;        // N
    double tail_sup_error = 0.0;     // sup_{N<n<=checked_to} |sigma - gamma_b|
    std::int64_t checked_to = 0;
    double amplification_factor = 1.0; // e^{omega^2/8}
};

struct TailSynthesis {
    SampledFunction symbol; // b = ell restricted to [0, extent]
    TailReport report;
    std::vector<std::complex<double>> gamma_b; // gamma_b(0..checked_to)
};

// Stage 1-3 of the pipeline.  `checked_to` is the largest index measured;
// requires sqrt(checked_to) + 9 <= extent.  Throws infeasible_error on
// aliasing or amplification-cap violations.
TailSynthesis construct_tail_symbol(const TargetSequence &sigma,
                                    const DeconvolutionConfig &cfg,
                                    std::int64_t checked_to);

struct HeadBasisConfig {
    std::vector<double> knots_r; // indicator right endpoints squared (r = x^2)
    double ridge = 1e-8;
    double condition_limit = 1e12;
};

// Default ladder: knots_r log-spaced in (0, 4N].
HeadBasisConfig default_head_basis(std::int64_t N);

struct HeadCorrection {
    SymbolSpec symbol; // weighted sum of indicators
    std::vector<std::complex<double>> coefficients;
    double residual_sup = 0.0;       // max_{n<=N} |gamma_c(n) - theta(n)|
    double tail_perturbation = 0.0;  // measured sup_{n>N} |gamma_c(n)|
    double condition_estimate = 0.0;
};

// Ridge least squares of theta against indicator columns
// P(n+1, knot).  theta indexes 0..N with N <= 200.
HeadCorrection construct_head_correction(const std::vector<std::complex<double>> &theta,
                                         const HeadBasisConfig &basis);

struct ApproxReport {
    double bandwidth = 0.0;     // Omega
    double fejer_order = 0.0;   // full-pass edge of the band window
    std::int64_t split_n = 0;   // N
    double tail_sup_error = 0.0;    // sup_{N<n<=checked} |sigma - gamma_a|
    double head_residual = 0.0;     // sup_{n<=N}      |sigma - gamma_a|
    double total_sup_error_estimate = 0.0; // max of the two (measured)
    double amplification_factor = 1.0;     // e^{Omega^2/8}
    std::int64_t checked_to = 0;
    bool feasible = true;
};

struct ApproxResult {
    SymbolSpec symbol; // a = b + c as a sum spec
    ApproxReport report;
};

struct ApproxOptions {
    DeconvolutionConfig grid;
    double ridge = 1e-8;
    std::int64_t check_to = 5000;
};

// The full pipeline.  Marks the report infeasible (and skips nothing else)
// when the membership diagnostic rejects sigma.
ApproxResult approximate_sequence(const TargetSequence &sigma, const ApproxOptions &opt);

} // namespace fockseq
