#pragma once

#include <complex>
#include <cstdint>

#include "fockseq/symbols.hpp"

namespace fockseq {

/*
 * Slow, independent cross-checks.  These deliberately use different
 * algorithms from the main path (2D product quadrature, trapezoid sums,
 * adaptive Simpson in the r variable) so that agreement is evidence rather
 * than tautology.  Expect them to be orders of magnitude slower.
 */

// Matrix element <T_phi e_m, e_n> for phi(z) = a(|z|) e^{i k theta}, by a
// full polar product rule (trapezoid in the angle, Gauss panels radially).
// Analytically zero unless n - m = k; radial symbols (k = 0) give diagonal
// matrices.  Requires m, n <= 40.
std::complex<double> toeplitz_entry(const SymbolSpec &spec, int angular_k,
                                    std::int64_t m, std::int64_t n);

// Trapezoid integration of |K(m,r) - K(n,r)| on a dense grid; m, n <= 500.
double brute_kappa(std::int64_t m, std::int64_t n);

// Adaptive-Simpson evaluation of gamma_a(n) in the r variable, with no
// window shortcut; n <= 500.
std::complex<double> brute_gamma(const SymbolSpec &spec, std::int64_t n);

} // namespace fockseq
