#include "fockseq/gamma_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fockseq/special.hpp"

namespace fockseq {

namespace {
constexpr double NEG_INF = -std::numeric_limits<double>::infinity();
}

double log_kernel(std::int64_t n, double r) {
    if (n < 0) throw std::domain_error("log_kernel: n must be nonnegative");
    if (r < 0.0) throw std::domain_error("log_kernel: r must be nonnegative");
    if (r == 0.0) {
        if (n == 0) return 0.0; // K(0,0) = 1
        throw std::domain_error("log_kernel: r = 0 requires n = 0");
    }
    if (n == 0) return -r;
    double nd = static_cast<double>(n);
    return nd * std::log(r) - r - log_gamma(nd + 1.0);
}

KernelPoint kernel_point(std::int64_t n, double r) {
    return KernelPoint{n, r, log_kernel(n, r)};
}

double kernel_y(std::int64_t n, double y) {
    if (y < 0.0) throw std::domain_error("kernel_y: y must be nonnegative");
    if (y == 0.0) return 0.0;
    GammaKernel k(n);
    return k.density_y(y);
}

GammaKernel::GammaKernel(std::int64_t n)
    : n_(n), log_nfact_(log_gamma(static_cast<double>(n) + 1.0)) {
    if (n < 0) throw std::domain_error("GammaKernel: n must be nonnegative");
}

double GammaKernel::log_density(double r) const {
    if (r <= 0.0) return (n_ == 0 && r == 0.0) ? 0.0 : NEG_INF;
    if (n_ == 0) return -r;
    return static_cast<double>(n_) * std::log(r) - r - log_nfact_;
}

double GammaKernel::density(double r) const {
    double lv = log_density(r);
    return lv < -745.0 ? 0.0 : std::exp(lv);
}

double GammaKernel::density_y(double y) const {
    if (y <= 0.0) return 0.0;
    double lv = log_density(y * y);
    if (lv < -745.0) return 0.0;
    return std::exp(lv) * 2.0 * y;
}

double log_F_shift(double x, double u) {
    if (!(x > 0.0)) throw std::domain_error("log_F_shift: x must be positive");
    if (u < -x) throw std::domain_error("log_F_shift: u must be >= -x");
    if (u == -x) return NEG_INF;
    return (2.0 * x * x + 1.0) * std::log1p(u / x) - 2.0 * x * u - u * u;
}

double log_F(double x, double y) { return log_F_shift(x, y - x); }

StirlingBracket stirling_bracket(std::int64_t n) {
    if (n < 1) throw std::domain_error("stirling_bracket: n must be >= 1");
    double nd = static_cast<double>(n);
    double log_lower = nd * std::log(nd) - nd + 0.5 * std::log(2.0 * PI * nd);
    return StirlingBracket{n, std::exp(log_lower),
                           std::exp(log_lower + 1.0 / (12.0 * nd))};
}

} // namespace fockseq
