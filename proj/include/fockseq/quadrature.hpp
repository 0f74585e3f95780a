#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace fockseq {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule with k nodes; computed once per k and cached.
const GaussRule &gauss_legendre(int k);

// Integral of f over [a,b] with a k-node Gauss-Legendre rule.
template <typename F>
auto integrate_gl(F &&f, double a, double b, int k) {
    const GaussRule &rule = gauss_legendre(k);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    using R = decltype(f(mid));
    R acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

// Integral over consecutive panels [pts[0], pts[1]], [pts[1], pts[2]], ...
template <typename F>
auto integrate_panels(F &&f, std::span<const double> pts, int k) {
    using R = decltype(f(pts.empty() ? 0.0 : pts[0]));
    R acc{};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] > pts[i]) acc += integrate_gl(f, pts[i], pts[i + 1], k);
    return acc;
}

// Splits [a,b] at the interior points of `cuts` (sorted not required) and
// subdivides each piece so no panel exceeds max_width.
std::vector<double> make_panels(double a, double b, std::span<const double> cuts,
                                double max_width);
inline std::vector<double> make_panels(double a, double b,
                                       std::initializer_list<double> cuts,
                                       double max_width) {
    return make_panels(a, b, std::span<const double>(cuts.begin(), cuts.size()),
                       max_width);
}

// int_0^inf f(t) e^{-t} dt.  Composite Gauss-Legendre panels with the weight
// kept in the integrand, split at `breakpoints` (relative to t=0), truncated
// where e^{-t} falls below 1e-18 of the scale.  `decay` < 1 stretches the
// truncation horizon for integrands growing like e^{(1-decay) t}.
std::complex<double> exp_weight_integral(const std::function<std::complex<double>(double)> &f,
                                         std::span<const double> breakpoints,
                                         double decay = 1.0);

// int_a^b |f| for real continuous f having finitely many sign changes:
// scan on `scan_points` samples, bisect each bracketed root, then Gauss
// panels on the smooth pieces.
double integrate_abs(const std::function<double(double)> &f, double a, double b,
                     int scan_points);

// Classic adaptive Simpson with absolute tolerance (oracle-grade, slow).
std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)> &f,
                                      double a, double b, double tol, int max_depth = 40);

} // namespace fockseq
