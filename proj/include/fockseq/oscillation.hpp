#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fockseq/sampled_function.hpp"

namespace fockseq {

/*
 * Sequences targeted for approximation, and their extension to the half
 * line.
 *
 * The extension interpolates piecewise-linearly in the sqrt parameter
 * tau(x) = sqrt(x):
 *
 *   f(x) = sigma(n) + (tau(x)-tau(n))/(tau(n+1)-tau(n)) (sigma(n+1)-sigma(n)),
 *   n = floor(x),
 *
 * a convex combination of sigma(n) and sigma(n+1), so f matches sigma on
 * the integers and preserves the sup norm.  The modulus of continuity of f
 * in the sqrt metric obeys, for 0 < delta <= 1,
 *
 *   omega_f(delta) <= 3 max(omega_sigma(sqrt delta), sqrt(delta) omega_sigma(1));
 *
 * the case splitting behind the constant 3 additionally uses
 * omega(delta) <= omega(sqrt delta) for delta <= 1.
 */

struct TargetSequence {
    std::vector<std::complex<double>> prefix; // sigma(0..N)
    // optional evaluation rule for indices beyond the prefix
    std::function<std::complex<double>(std::int64_t)> rule;
    double sup_norm = 0.0;

    std::complex<double> at(std::int64_t n) const;
    std::int64_t max_index() const; // last index reachable (prefix or rule)
};

TargetSequence make_target(std::vector<std::complex<double>> prefix,
                           std::function<std::complex<double>(std::int64_t)> rule = {});

std::complex<double> extend(const TargetSequence &sigma, double x);

// The extension packaged with its source sequence.
struct ExtendedFunction {
    TargetSequence source;
    std::complex<double> eval(double x) const { return extend(source, x); }
};

// 3 max(omega(sqrt delta), sqrt(delta) omega(1)) with omega measured on the
// prefix; an upper-bound certificate for the extension's modulus on the
// prefix range.  Requires 0 < delta <= 1.
double omega_bound(const TargetSequence &sigma, double delta);

// h(x) = f(x^2) sampled uniformly on [-extent, extent]; even by
// construction.  Indices beyond the target's reach hold the last value.
SampledFunction h_transform(const TargetSequence &sigma, double step, double extent);

struct MembershipReport {
    std::vector<double> deltas;
    std::vector<double> omega; // modulus estimates at the deltas
    double lipschitz = 0.0;
    bool consistent = false; // consistent-with-SO_sqrt on the prefix
    std::string detail;
};

// Decreasing-modulus diagnostic on the ladder {0.5, 0.2, 0.1, 0.05, 0.02}.
// Membership in SO_sqrt is a tail property, undecidable from a prefix; the
// verdict is "consistent with", never "member of".
MembershipReport membership_report(const TargetSequence &sigma);

} // namespace fockseq
