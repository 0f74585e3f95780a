#include "fockseq/eigenvalues.hpp"

#include <algorithm>
#include <cmath>

#include "fockseq/errors.hpp"
#include "fockseq/gamma_kernel.hpp"
#include "fockseq/parallel.hpp"
#include "fockseq/quadrature.hpp"
#include "fockseq/special.hpp"

namespace fockseq {

namespace {

struct WindowAccum {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    void add(double a, double b) {
        lo = std::min(lo, a);
        hi = std::max(hi, b);
    }
};

void leaf_window(const SymbolNode &node, std::int64_t n, WindowAccum &acc);

void node_window(const SymbolSpec &spec, std::int64_t n, WindowAccum &acc) {
    leaf_window(spec.node(), n, acc);
}

void leaf_window(const SymbolNode &node, std::int64_t n, WindowAccum &acc) {
    double nd = static_cast<double>(n);
    if (const auto *p = std::get_if<PowerSymbol>(&node)) {
        double c = std::sqrt(nd + 0.5 * p->exponent);
        acc.add(std::max(0.0, c - 9.0), c + 9.0);
        return;
    }
    if (const auto *e = std::get_if<ExpComplexSymbol>(&node)) {
        double delta = std::max(e->lambda.real(), 0.0);
        double s = 1.0 / std::sqrt(1.0 - delta);
        double c = std::sqrt(nd) * s;
        acc.add(std::max(0.0, c - 9.0 * s), c + 9.0 * s);
        return;
    }
    if (const auto *s = std::get_if<SumSymbol>(&node)) {
        for (const auto &[w, sub] : s->terms) {
            (void)w;
            node_window(sub, n, acc);
        }
        return;
    }
    double c = std::sqrt(nd);
    acc.add(std::max(0.0, c - 9.0), c + 9.0);
}

// Upper bound on the kernel mass (weighted by the symbol's growth) that the
// window ignores.
double tail_mass_bound(const SymbolSpec &spec, std::int64_t n, double lo, double hi) {
    double a = static_cast<double>(n) + 1.0;
    Growth g = spec.growth();
    double sup = spec.sup_norm().value_or(1.0);
    if (g.delta <= 0.0) {
        return sup * (regularized_gamma_p(a, lo * lo) + regularized_gamma_q(a, hi * hi));
    }
    // int e^{delta r} K(n,r) dr over a tail equals
    // (1-delta)^{-(n+1)} times the Gamma(n+1) tail at the rescaled endpoint.
    double scale = std::exp(-a * std::log1p(-g.delta));
    double tail = regularized_gamma_q(a, (1.0 - g.delta) * hi * hi) +
                  regularized_gamma_p(a, (1.0 - g.delta) * lo * lo);
    return scale * tail;
}

// Largest instantaneous frequency (radians per unit of y) the symbol
// reaches on [0, y_hi]; bounds the Gauss panel width for oscillatory kinds.
double max_frequency(const SymbolSpec &spec, double y_hi) {
    if (const auto *e = std::get_if<ExpComplexSymbol>(&spec.node()))
        return 2.0 * std::abs(e->lambda) * y_hi;
    if (std::holds_alternative<CosineSymbol>(spec.node())) return 1.0;
    if (const auto *s = std::get_if<SumSymbol>(&spec.node())) {
        double m = 0.0;
        for (const auto &[w, sub] : s->terms) {
            (void)w;
            m = std::max(m, max_frequency(sub, y_hi));
        }
        return m;
    }
    return 0.0;
}

std::complex<double> integrate_window(const SymbolSpec &spec, const GammaKernel &kernel,
                                      double lo, double hi, int nodes_per_panel) {
    std::vector<double> cuts = spec.breakpoints();
    cuts.push_back(std::sqrt(static_cast<double>(kernel.index())));
    double max_width = (hi - lo) * 0.5;
    // keep several panels per oscillation wavelength
    double freq = max_frequency(spec, hi);
    if (freq > 1.0) max_width = std::min(max_width, 24.0 / freq);
    std::vector<double> panels = make_panels(lo, hi, cuts, max_width);
    // dense breakpoint sets (sampled symbols) get a light per-panel rule
    int k = (panels.size() > 24 && freq <= 1.0) ? std::max(4, nodes_per_panel / 16)
                                                : nodes_per_panel;
    auto f = [&](double y) { return eval_symbol(spec, y) * kernel.density_y(y); };
    return integrate_panels(f, panels, k);
}

} // namespace

std::pair<double, double> gamma_window(const SymbolSpec &spec, std::int64_t n) {
    WindowAccum acc;
    node_window(spec, n, acc);
    double lo = (n < 25) ? 0.0 : acc.lo;
    return {lo, acc.hi};
}

GammaValue gamma(const SymbolSpec &spec, std::int64_t n) {
    if (n < 0) throw std::domain_error("gamma: n must be nonnegative");
    spec.validate();
    Growth g = spec.growth();
    if (g.cls == GrowthClass::Subgaussian && g.delta >= 1.0)
        throw growth_error("gamma: symbol grows like e^{delta r^2} with delta >= 1");

    auto [lo, hi] = gamma_window(spec, n);
    GammaKernel kernel(n);
    std::complex<double> coarse = integrate_window(spec, kernel, lo, hi, 64);
    std::complex<double> fine = integrate_window(spec, kernel, lo, hi, 128);
    double err = std::abs(fine - coarse) + tail_mass_bound(spec, n, lo, hi);
    return GammaValue{fine, err};
}

namespace {

template <typename Loop>
EigenSequence gamma_prefix_impl(const SymbolSpec &spec, std::int64_t N, Loop &&loop) {
    if (N < 0) throw std::domain_error("gamma_prefix: N must be nonnegative");
    spec.validate();
    EigenSequence seq;
    seq.symbol = spec;
    seq.values.resize(static_cast<std::size_t>(N) + 1);
    seq.err.resize(static_cast<std::size_t>(N) + 1);
    loop(N + 1, [&](std::ptrdiff_t i) {
        GammaValue v = gamma(spec, static_cast<std::int64_t>(i));
        seq.values[static_cast<std::size_t>(i)] = v.value;
        seq.err[static_cast<std::size_t>(i)] = v.err;
    });
    return seq;
}

} // namespace

EigenSequence gamma_prefix(const SymbolSpec &spec, std::int64_t N) {
    return gamma_prefix_impl(spec, N,
                             [](std::ptrdiff_t c, auto &&f) { parallel_for(c, f); });
}

EigenSequence gamma_prefix_serial(const SymbolSpec &spec, std::int64_t N) {
    return gamma_prefix_impl(spec, N,
                             [](std::ptrdiff_t c, auto &&f) { serial_for(c, f); });
}

ClosedValue gamma_closed_cosine(std::int64_t n) {
    if (n < 0) throw std::domain_error("gamma_closed_cosine: n must be nonnegative");
    if (n <= 200) {
        double v = kummer_m(static_cast<double>(n) + 1.0, 0.5, -0.25);
        if (std::isfinite(v)) return ClosedValue{v, false};
    }
    return ClosedValue{gamma(SymbolSpec::cosine(), n).value, true};
}

ClosedValue gamma_closed_indicator(double alpha, double beta, std::int64_t n) {
    if (n < 0) throw std::domain_error("gamma_closed_indicator: n must be nonnegative");
    double a = static_cast<double>(n) + 1.0;
    double hi = std::isfinite(beta) ? regularized_gamma_p(a, beta * beta) : 1.0;
    double lo = regularized_gamma_p(a, alpha * alpha);
    return ClosedValue{hi - lo, false};
}

std::complex<double> exp83_lambda() {
    const double inv_sqrt2 = 0.70710678118654752440;
    return {1.0 - inv_sqrt2, -inv_sqrt2};
}

ClosedValue gamma_closed_exp83(std::int64_t n) {
    if (n < 0) throw std::domain_error("gamma_closed_exp83: n must be nonnegative");
    // e^{-i(n+1)pi/4}: exact eighth roots of unity
    static const double c = 0.70710678118654752440;
    static const std::complex<double> table[8] = {
        {1.0, 0.0}, {c, -c}, {0.0, -1.0}, {-c, -c},
        {-1.0, 0.0}, {-c, c}, {0.0, 1.0}, {c, c}};
    return ClosedValue{table[(n + 1) % 8], false};
}

std::complex<double> gamma_via_averages(const AveragedSymbol &avg, std::int64_t n) {
    int j = avg.level();
    if (n < j) throw std::domain_error("gamma_via_averages: require n >= j");
    std::int64_t m = n - j;
    GammaKernel kernel(m);
    double md = static_cast<double>(m);
    double hi = md + 14.0 * std::sqrt(md + 1.0) + 40.0;
    std::vector<double> cuts = avg.base().breakpoints_r();
    cuts.push_back(md);
    std::vector<double> panels = make_panels(0.0, hi, cuts, 2.0);
    auto f = [&](double r) { return avg.eval(r) * kernel.density(r); };
    return integrate_panels(f, panels, 24);
}

std::complex<double> gamma_via_averages(const SymbolSpec &spec, int j, std::int64_t n) {
    if (j < 0) throw std::domain_error("gamma_via_averages: j must be >= 0");
    if (n < j) throw std::domain_error("gamma_via_averages: require n >= j");
    if (j == 0) return gamma(spec, n).value;
    double md = static_cast<double>(n - j);
    double range = md + 14.0 * std::sqrt(md + 1.0) + 40.0;
    AveragedSymbol avg(spec, j, range, 1e-9);
    return gamma_via_averages(avg, n);
}

} // namespace fockseq
