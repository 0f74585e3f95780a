#include "fockseq/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fockseq {

double log_gamma(double x) {
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double stirling_correction(double n) {
    if (n < 1.0)
        throw std::domain_error("stirling_correction: n must be >= 1");
    if (n < 16.0) {
        return log_gamma(n + 1.0) - (n * std::log(n) - n + 0.5 * std::log(2.0 * PI * n));
    }
    // ln n! = n ln n - n + ln sqrt(2 pi n) + 1/12n - 1/360n^3 + 1/1260n^5 - ...
    const double inv = 1.0 / n;
    const double inv2 = inv * inv;
    double s = 1.0 / 12.0;
    double p = inv2;
    s -= p / 360.0;
    p *= inv2;
    s += p / 1260.0;
    p *= inv2;
    s -= p / 1680.0;
    p *= inv2;
    s += p / 1188.0;
    p *= inv2;
    s -= p * (691.0 / 360360.0);
    p *= inv2;
    s += p / 156.0;
    return s * inv;
}

namespace {

constexpr int GAMMA_ITMAX = 20000;
constexpr double GAMMA_EPS = 1e-17;
constexpr double FPMIN = std::numeric_limits<double>::min() / GAMMA_EPS;

// Series representation, valid (and fast) for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < GAMMA_ITMAX; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * GAMMA_EPS) {
            double lg = -x + a * std::log(x) - log_gamma(a);
            return sum * std::exp(lg);
        }
    }
    throw std::runtime_error("regularized_gamma_p: series did not converge");
}

// Lentz continued fraction for Q(a,x), valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / FPMIN;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= GAMMA_ITMAX; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < FPMIN) d = FPMIN;
        c = b + an / c;
        if (std::abs(c) < FPMIN) c = FPMIN;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= GAMMA_EPS) {
            double lg = -x + a * std::log(x) - log_gamma(a);
            return std::exp(lg) * h;
        }
    }
    throw std::runtime_error("regularized_gamma_q: continued fraction did not converge");
}

} // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw std::domain_error("regularized_gamma_p: require a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw std::domain_error("regularized_gamma_q: require a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double kummer_m(double a, double b, double z) {
    // Straight series sum_k (a)_k/(b)_k z^k/k! with Kahan compensation.
    double sum = 1.0;
    double comp = 0.0;
    double term = 1.0;
    int below = 0;
    for (int k = 0; k < 2000; ++k) {
        term *= (a + k) / ((b + k) * (k + 1.0)) * z;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < 1e-16 * std::max(std::abs(sum), 1e-300)) {
            if (++below >= 3) return sum;
        } else {
            below = 0;
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace fockseq
