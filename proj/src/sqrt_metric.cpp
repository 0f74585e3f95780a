#include "fockseq/sqrt_metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fockseq/parallel.hpp"
#include "fockseq/special.hpp"

namespace fockseq {

double rho(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0) throw std::domain_error("rho: indices must be nonnegative");
    return std::abs(std::sqrt(static_cast<double>(m)) - std::sqrt(static_cast<double>(n)));
}

double rho_real(double x, double y) {
    if (x < 0.0 || y < 0.0) throw std::domain_error("rho_real: arguments must be >= 0");
    return std::abs(std::sqrt(x) - std::sqrt(y));
}

double kappa_crossing(std::int64_t m, std::int64_t n) {
    if (m == n) throw std::domain_error("kappa_crossing: m != n required");
    double lm = log_gamma(static_cast<double>(m) + 1.0);
    double ln = log_gamma(static_cast<double>(n) + 1.0);
    return std::exp((ln - lm) / static_cast<double>(n - m));
}

namespace {

// Poisson weight x^k e^{-x} / k!.  Near k ~ x the naive log form loses
// ~1e-12 to the cancellation of k ln x against x + ln k!; rewriting through
// the Stirling correction s(k),
//   log = k (log1p(d) - d) - ln sqrt(2 pi k) - s(k),   d = (x-k)/k,
// keeps every term small.
double poisson_weight(std::int64_t k, double x) {
    if (k == 0) return std::exp(-x);
    double kd = static_cast<double>(k);
    double d = (x - kd) / kd;
    double lv;
    if (std::abs(d) < 0.5) {
        lv = kd * (std::log1p(d) - d) - 0.5 * std::log(2.0 * PI * kd) -
             stirling_correction(kd);
    } else {
        lv = kd * std::log(x) - x - log_gamma(kd + 1.0);
    }
    return lv < -745.0 ? 0.0 : std::exp(lv);
}

} // namespace

double kappa(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0) throw std::domain_error("kappa: indices must be nonnegative");
    if (m == n) return 0.0;
    if (m > n) std::swap(m, n);
    // 2 (P(m+1, r*) - P(n+1, r*)) with the difference telescoped into
    // Poisson weights at the crossing; the value is stationary in r*, so
    // crossing rounding enters only at second order.
    double rstar = kappa_crossing(m, n);
    double acc = 0.0;
    for (std::int64_t k = n; k > m; --k) acc += poisson_weight(k, rstar);
    return 2.0 * acc;
}

MetricPair metric_pair(std::int64_t m, std::int64_t n) {
    return MetricPair{m, n, rho(m, n), kappa(m, n)};
}

double kappa_adjacent(std::int64_t n) {
    if (n < 1) throw std::domain_error("kappa_adjacent: n must be >= 1");
    double nd = static_cast<double>(n);
    // 2 n^n e^{-n}/n! = sqrt(2/(pi n)) e^{-s(n)}
    return SQRT_2_OVER_PI / std::sqrt(nd) * std::exp(-stirling_correction(nd));
}

double kappa_adjacent_sqrt_gap(std::int64_t n) {
    if (n < 1) throw std::domain_error("kappa_adjacent_sqrt_gap: n must be >= 1");
    return SQRT_2_OVER_PI * (-std::expm1(-stirling_correction(static_cast<double>(n))));
}

double lipschitz_statistic(std::span<const std::complex<double>> prefix) {
    if (prefix.size() < 2)
        throw std::domain_error("lipschitz_statistic: need at least 2 entries");
    double sup = 0.0;
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
        double v = std::sqrt(static_cast<double>(i) + 1.0) *
                   std::abs(prefix[i + 1] - prefix[i]);
        sup = std::max(sup, v);
    }
    return sup;
}

namespace {

double modulus_row_max(std::span<const std::complex<double>> prefix, double delta,
                       std::size_t j) {
    // pairs (j,k), k > j with sqrt(k) <= sqrt(j) + delta
    double limit = std::sqrt(static_cast<double>(j)) + delta;
    auto kmax = static_cast<std::size_t>(limit * limit + 1e-9);
    kmax = std::min(kmax, prefix.size() - 1);
    double m = 0.0;
    for (std::size_t k = j + 1; k <= kmax; ++k)
        m = std::max(m, std::abs(prefix[k] - prefix[j]));
    return m;
}

} // namespace

double modulus_estimate(std::span<const std::complex<double>> prefix, double delta) {
    if (!(delta > 0.0)) throw std::domain_error("modulus_estimate: delta must be > 0");
    if (prefix.empty()) return 0.0;
    std::vector<double> row(prefix.size(), 0.0);
    parallel_for(static_cast<std::ptrdiff_t>(prefix.size()), [&](std::ptrdiff_t j) {
        row[static_cast<std::size_t>(j)] =
            modulus_row_max(prefix, delta, static_cast<std::size_t>(j));
    });
    return *std::max_element(row.begin(), row.end());
}

double modulus_estimate_serial(std::span<const std::complex<double>> prefix, double delta) {
    if (!(delta > 0.0)) throw std::domain_error("modulus_estimate: delta must be > 0");
    double m = 0.0;
    for (std::size_t j = 0; j < prefix.size(); ++j)
        m = std::max(m, modulus_row_max(prefix, delta, j));
    return m;
}

} // namespace fockseq
