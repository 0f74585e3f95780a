#pragma once

#include <cstdint>

namespace fockseq {

/*
 * Gamma-density kernel
 *
 *   K(n,r) = r^n e^{-r} / n!          (unit-mass Gamma(n+1) density)
 *
 * and its y-parametrized form K(n,y^2) 2y (unit mass over y in [0,inf)).
 * Everything is evaluated in the log domain: r^n / n! overflows around
 * n = 170 in double precision, while
 *
 *   log K(n,r) = n ln r - r - ln Gamma(n+1)
 *
 * stays comfortably finite up to n ~ 1e6.
 *
 * The off-diagonal ratio
 *
 *   F(x,y) = y^{2x^2+1} e^{x^2} / (x^{2x^2+1} e^{y^2})
 *
 * is only ever evaluated through the shifted logarithm
 *
 *   ln F(x,x+u) = (2x^2+1) ln(1 + u/x) - 2xu - u^2,
 *
 * which controls the cancellation near the diagonal u = 0 and never forms
 * the astronomically large power y^{2x^2+1}.
 */

struct KernelPoint {
    std::int64_t n;
    double r;
    double logval; // log K(n,r); -inf allowed
};

// log K(n,r).  Requires r > 0 for n > 0; (n=0, r=0) returns 0 since K(0,0)=1.
double log_kernel(std::int64_t n, double r);

KernelPoint kernel_point(std::int64_t n, double r);

// K(n, y^2) * 2y for y >= 0.  Underflows to exact 0 once the log value
// drops below -745.
double kernel_y(std::int64_t n, double y);

// Evaluator with ln Gamma(n+1) hoisted out of hot loops.
class GammaKernel {
public:
    explicit GammaKernel(std::int64_t n);
    std::int64_t index() const { return n_; }
    double log_density(double r) const;  // log K(n,r)
    double density(double r) const;      // K(n,r)
    double density_y(double y) const;    // K(n,y^2) 2y
private:
    std::int64_t n_;
    double log_nfact_;
};

// ln F(x, x+u) in the shifted form; x > 0, u >= -x (u = -x gives -inf).
double log_F_shift(double x, double u);

// ln F(x, y), thin wrapper with u = y - x.
double log_F(double x, double y);

struct StirlingBracket {
    std::int64_t n;
    double lower; // n^n e^{-n} sqrt(2 pi n)
    double upper; // lower * e^{1/(12n)}
};

// Two-sided Stirling bracket lower <= n! <= upper, n >= 1.
StirlingBracket stirling_bracket(std::int64_t n);

} // namespace fockseq
