#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace fockseq {

/*
 * Metrics on the index set.
 *
 *   rho(m,n)   = |sqrt m - sqrt n|
 *   kappa(m,n) = int_0^inf |K(m,r) - K(n,r)| dr
 *              = sup over unit-norm symbols of |gamma_a(m) - gamma_a(n)|
 *
 * For m < n the difference K(m,.) - K(n,.) changes sign exactly once, at
 * r* = (n!/m!)^{1/(n-m)} (monotone likelihood ratio of Gamma densities), so
 * kappa assembles from two regularized incomplete-gamma evaluations:
 *
 *   kappa(m,n) = 2 (P(m+1, r*) - P(n+1, r*)).
 *
 * Adjacent indices have the closed form kappa(n-1,n) = 2 n^n e^{-n} / n!,
 * with kappa(n-1,n) sqrt(n) increasing to sqrt(2/pi).
 */

double rho(std::int64_t m, std::int64_t n);
double rho_real(double x, double y);

// Both metrics for one index pair.
struct MetricPair {
    std::int64_t m = 0;
    std::int64_t n = 0;
    double rho = 0.0;
    double kappa = 0.0;
};

MetricPair metric_pair(std::int64_t m, std::int64_t n);

// Sign-change point r* of K(m,.) - K(n,.), m != n, in log domain.
double kappa_crossing(std::int64_t m, std::int64_t n);

double kappa(std::int64_t m, std::int64_t n);

// Closed form 2 n^n e^{-n} / n!, n >= 1, evaluated through the Stirling
// correction so that the sharp-constant bracket survives in double
// precision up to n = 1e6.
double kappa_adjacent(std::int64_t n);

// sqrt(2/pi) - kappa_adjacent(n) sqrt(n), computed without cancellation:
// equals sqrt(2/pi) (1 - e^{-s(n)}) with s the Stirling correction.  The
// naive subtraction of the two public values loses the 1/(360 n^3) margin
// of the bracket around n ~ 1e6; this form keeps it.
double kappa_adjacent_sqrt_gap(std::int64_t n);

// sup over n of sqrt(n+1) |sigma(n+1) - sigma(n)|; finite iff the sequence
// is Lipschitz with respect to rho.
double lipschitz_statistic(std::span<const std::complex<double>> prefix);

// max |sigma_j - sigma_k| over prefix pairs with rho(j,k) <= delta.
// Exhaustive over the prefix with an index-window cutoff.
double modulus_estimate(std::span<const std::complex<double>> prefix, double delta);
double modulus_estimate_serial(std::span<const std::complex<double>> prefix, double delta);

} // namespace fockseq
