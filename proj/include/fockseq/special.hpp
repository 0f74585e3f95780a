#pragma once

#include <complex>

namespace fockseq {

inline constexpr double PI = 3.14159265358979323846;
inline constexpr double SQRT_2_OVER_PI = 0.79788456080286535588; // sqrt(2/pi)

// ln Gamma(x), x > 0.  Thread-safe wrapper (avoids the signgam global).
double log_gamma(double x);

// Correction term of the Stirling approximation,
//   s(n) = ln n! - (n ln n - n + ln sqrt(2 pi n)),
// computed without cancellation: asymptotic series in 1/n for n >= 16,
// direct log-gamma below.  Satisfies 1/(12n+1) < s(n) < 1/(12n).
double stirling_correction(double n);

// Regularized lower incomplete gamma P(a,x) = gamma(a,x)/Gamma(a), a > 0,
// x >= 0, and its complement Q = 1 - P.  Series for x < a+1, continued
// fraction otherwise; absolute accuracy a few ulp.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Kummer confluent hypergeometric M(a,b,z) by direct series with
// compensated summation.  Intended for moderate |z|; stops once three
// consecutive terms fall below 1e-16 relative.  Returns NaN if the series
// fails to converge within the iteration cap.
double kummer_m(double a, double b, double z);

} // namespace fockseq
