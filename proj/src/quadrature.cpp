#include "fockseq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace fockseq {

namespace {

GaussRule compute_gauss_legendre(int k) {
    GaussRule rule;
    rule.nodes.resize(k);
    rule.weights.resize(k);
    const int m = (k + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_k.
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (k + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < k; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = k * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[k - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[k - 1 - i] = w;
    }
    return rule;
}

std::map<int, GaussRule> g_rules;
std::mutex g_rules_mutex;

} // namespace

const GaussRule &gauss_legendre(int k) {
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto it = g_rules.find(k);
    if (it == g_rules.end()) it = g_rules.emplace(k, compute_gauss_legendre(k)).first;
    return it->second;
}

std::vector<double> make_panels(double a, double b, std::span<const double> cuts,
                                double max_width) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double c : cuts)
        if (c > a && c < b) pts.push_back(c);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<double> out;
    out.push_back(pts.front());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        int parts = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
        for (int j = 1; j <= parts; ++j) out.push_back(lo + (hi - lo) * j / parts);
    }
    return out;
}

std::complex<double> exp_weight_integral(const std::function<std::complex<double>(double)> &f,
                                         std::span<const double> breakpoints,
                                         double decay) {
    decay = std::clamp(decay, 0.05, 1.0);
    const double horizon = 42.0 / decay;
    std::vector<double> base{1.0, 4.0, 12.0, 24.0};
    for (double b : breakpoints)
        if (b > 0.0 && b < horizon) base.push_back(b);
    std::vector<double> pts = make_panels(0.0, horizon, base, 8.0 / decay);
    auto g = [&](double t) { return f(t) * std::exp(-t); };
    return integrate_panels(g, pts, 32);
}

double integrate_abs(const std::function<double(double)> &f, double a, double b,
                     int scan_points) {
    if (!(b > a)) return 0.0;
    scan_points = std::max(scan_points, 16);
    const double h = (b - a) / scan_points;
    std::vector<double> cuts;
    cuts.push_back(a);
    double x0 = a;
    double f0 = f(x0);
    for (int i = 1; i <= scan_points; ++i) {
        double x1 = a + i * h;
        double f1 = f(x1);
        if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = f(mid);
                if ((flo < 0.0 && fm > 0.0) || (flo > 0.0 && fm < 0.0)) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
                if (hi - lo < 1e-14 * (1.0 + std::abs(mid))) break;
            }
            cuts.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    cuts.push_back(b);
    auto absf = [&](double x) { return std::abs(f(x)); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        if (hi <= lo) continue;
        // keep panels modest so long smooth stretches stay accurate
        std::vector<double> pts = make_panels(lo, hi, {}, (b - a) / 8.0);
        total += integrate_panels(absf, pts, 48);
    }
    return total;
}

namespace {

std::complex<double> simpson_rec(const std::function<std::complex<double>(double)> &f,
                                 double a, double b, std::complex<double> fa,
                                 std::complex<double> fm, std::complex<double> fb,
                                 std::complex<double> whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = f(lm), frm = f(rm);
    std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    std::complex<double> delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)> &f,
                                      double a, double b, double tol, int max_depth) {
    if (!(b > a)) return {};
    double m = 0.5 * (a + b);
    std::complex<double> fa = f(a), fm = f(m), fb = f(b);
    std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

} // namespace fockseq
