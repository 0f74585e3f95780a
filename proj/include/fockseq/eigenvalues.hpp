#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fockseq/symbols.hpp"

namespace fockseq {

/*
 * Eigenvalue sequences of radial Toeplitz operators on the Fock space.
 *
 * For a radial symbol a the operator is diagonal in the monomial basis and
 * the n-th eigenvalue is the pairing of the symbol with the Gamma density,
 *
 *   gamma_a(n) = int_0^inf a(sqrt r) K(n,r) dr
 *              = int_0^inf a(y) K(n,y^2) 2y dy.
 *
 * The quadrature localizes on a window around the kernel peak: the y-kernel
 * has standard deviation ~ 1/2, and a half-width of 9 leaves tail mass below
 * 1e-12 for every n (checked against the Gamma tail in the test suite).
 * For symbols growing like e^{delta y^2} the peak shifts to
 * sqrt(n/(1-delta)) and the width scales by 1/sqrt(1-delta); the window
 * follows.
 */

struct GammaValue {
    std::complex<double> value;
    double err; // absolute error estimate (rule refinement + tail mass)
};

struct EigenSequence {
    std::vector<std::complex<double>> values; // index 0..N
    std::vector<double> err;
    SymbolSpec symbol;
};

// Quadrature window [y_lo, y_hi] used for gamma(spec, n).
std::pair<double, double> gamma_window(const SymbolSpec &spec, std::int64_t n);

GammaValue gamma(const SymbolSpec &spec, std::int64_t n);

// values[n] = gamma(spec, n) for n = 0..N.  The parallel version evaluates
// indices concurrently; results are bit-identical to the serial reference
// for any thread count (fixed rule, disjoint writes).
EigenSequence gamma_prefix(const SymbolSpec &spec, std::int64_t N);
EigenSequence gamma_prefix_serial(const SymbolSpec &spec, std::int64_t N);

// Closed forms for the named families.
enum class ClosedFamily { Cosine, Indicator, Exp83 };

struct ClosedValue {
    std::complex<double> value;
    bool used_quadrature_fallback = false;
};

// cosine:          gamma(n) = M(n+1, 1/2, -1/4) (series for n <= 200,
//                  quadrature fallback above, flagged)
// indicator(a,b):  gamma(n) = P(n+1, b^2) - P(n+1, a^2)
// exp83:           symbol e^{lambda y^2}, lambda = 1 - 1/sqrt2 - i/sqrt2;
//                  gamma(n) = e^{-i(n+1)pi/4} exactly
ClosedValue gamma_closed_cosine(std::int64_t n);
ClosedValue gamma_closed_indicator(double alpha, double beta, std::int64_t n);
ClosedValue gamma_closed_exp83(std::int64_t n);

// The lambda of the exp83 family.
std::complex<double> exp83_lambda();

// gamma through the iterated averages:
//   gamma_a(n) = 1/(n-j)! int_0^inf A_j a(r) r^{n-j} e^{-r} dr,  n >= j.
std::complex<double> gamma_via_averages(const SymbolSpec &spec, int j, std::int64_t n);
std::complex<double> gamma_via_averages(const AveragedSymbol &avg, std::int64_t n);

} // namespace fockseq
