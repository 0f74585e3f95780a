#include "fockseq/heat_approx.hpp"

#include <algorithm>
#include <cmath>

#include "fockseq/errors.hpp"
#include "fockseq/gamma_kernel.hpp"
#include "fockseq/linalg.hpp"
#include "fockseq/parallel.hpp"
#include "fockseq/quadrature.hpp"
#include "fockseq/special.hpp"

namespace fockseq {

double heat(double x) { return SQRT_2_OVER_PI * std::exp(-2.0 * x * x); }

double heat_spectrum(double xi) { return std::exp(-xi * xi / 8.0); }

// Unit-mass normalization sin^2(nx)/(pi n x^2): the variant with a leading 2
// integrates to 2 and cannot be an approximate identity.  Spectrum is the
// triangle (1 - |xi|/(2n))_+.
double fejer(double order, double x) {
    if (!(order > 0.0)) throw std::domain_error("fejer: order must be positive");
    double t = order * x;
    if (std::abs(t) < 1e-5) {
        // sin^2(t)/x^2 = order^2 (1 - t^2/3 + ...)
        return order / PI * (1.0 - t * t / 3.0);
    }
    double s = std::sin(t);
    return s * s / (PI * order * x * x);
}

std::complex<double> convolve_heat_fn(const std::function<std::complex<double>(double)> &a,
                                      double x, double domain_lo, double domain_hi) {
    double lo = std::max(domain_lo, x - 6.0);
    double hi = std::min(domain_hi, x + 6.0);
    if (!(hi > lo)) return {};
    auto f = [&](double y) { return a(y) * heat(x - y); };
    std::vector<double> panels = make_panels(lo, hi, {x}, 1.0);
    return integrate_panels(f, panels, 30);
}

std::complex<double> convolve_heat(const SymbolSpec &a, double x) {
    double lo = std::max(0.0, x - 6.0);
    double hi = x + 6.0;
    if (!(hi > lo)) return {};
    std::vector<double> cuts = a.breakpoints();
    cuts.push_back(x);
    std::vector<double> panels = make_panels(lo, hi, cuts, 1.0);
    int k = (panels.size() > 24) ? 6 : 30;
    auto f = [&](double y) { return eval_symbol(a, y) * heat(x - y); };
    return integrate_panels(f, panels, k);
}

std::complex<double> convolve_heat(const SampledFunction &a, double x) {
    // piecewise-linear integrand: align panels with the sample cells
    double lo = x - 6.0, hi = x + 6.0;
    std::vector<double> cuts;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        double p = a.origin + a.step * static_cast<double>(i);
        if (p > lo && p < hi) cuts.push_back(p);
    }
    std::vector<double> panels = make_panels(lo, hi, cuts, 1.0);
    auto f = [&](double y) { return a.eval(y) * heat(x - y); };
    return integrate_panels(f, panels, 6);
}

double convoluzation_error(std::int64_t n) {
    if (n < 1) throw std::domain_error("convoluzation_error: n must be >= 1");
    GammaKernel kernel(n);
    double root = std::sqrt(static_cast<double>(n));
    auto diff = [&](double y) {
        double d = root - y;
        return kernel.density_y(y) - SQRT_2_OVER_PI * std::exp(-2.0 * d * d);
    };
    double lo = std::max(0.0, root - 12.0);
    double hi = root + 12.0;
    return integrate_abs(diff, lo, hi, 4000);
}

std::complex<double> asymptotic_gamma(const SymbolSpec &spec, std::int64_t n) {
    if (n < 0) throw std::domain_error("asymptotic_gamma: n must be nonnegative");
    return convolve_heat(spec, std::sqrt(static_cast<double>(n)));
}

// ---------------------------------------------------------------------------
// Deconvolution
// ---------------------------------------------------------------------------

namespace {

// Band window: 1 on [0, pass], cosine taper to 0 at omega.
double band_window(double xi, double pass, double omega) {
    double a = std::abs(xi);
    if (a <= pass) return 1.0;
    if (a >= omega) return 0.0;
    double c = std::cos(0.5 * PI * (a - pass) / (omega - pass));
    return c * c;
}

} // namespace

double deconvolution_kernel(double t, double pass, double omega) {
    auto f = [&](double xi) {
        return band_window(xi, pass, omega) * std::exp(xi * xi / 8.0) * std::cos(xi * t);
    };
    double width = std::min(1.0, 4.0 / std::max(1.0, std::abs(t)));
    std::vector<double> panels = make_panels(0.0, omega, {pass}, width);
    return integrate_panels(f, panels, 24) / PI;
}

TailSynthesis construct_tail_symbol(const TargetSequence &sigma,
                                    const DeconvolutionConfig &cfg,
                                    std::int64_t checked_to) {
    if (!(cfg.omega > 0.0) || cfg.omega > 12.0)
        throw infeasible_error(
            "construct_tail_symbol: omega must lie in (0, 12] (amplification cap)");
    if (!(cfg.step > 0.0) || cfg.step > PI / cfg.omega)
        throw infeasible_error("construct_tail_symbol: grid step exceeds pi/omega (aliasing)");
    if (checked_to < 1) throw std::domain_error("construct_tail_symbol: checked_to >= 1");
    double top = std::sqrt(static_cast<double>(checked_to)) + 9.0;
    if (top > cfg.extent)
        throw infeasible_error(
            "construct_tail_symbol: extent too small for the checked range "
            "(need sqrt(checked_to) + 9 <= extent)");

    const double pass = cfg.pass_fraction * cfg.omega;
    const double dx = cfg.step;

    // h on [-(extent + kernel_radius), extent + kernel_radius]
    SampledFunction h = h_transform(sigma, dx, cfg.extent + cfg.kernel_radius);

    // deconvolution kernel table on the same lattice
    auto half = static_cast<std::ptrdiff_t>(std::floor(cfg.kernel_radius / dx));
    std::vector<double> g(static_cast<std::size_t>(half) + 1);
    parallel_for(half + 1, [&](std::ptrdiff_t k) {
        g[static_cast<std::size_t>(k)] =
            deconvolution_kernel(dx * static_cast<double>(k), pass, cfg.omega);
    });
    // truncation shifts the DC gain of the discrete operator; renormalize
    // the lattice sum to the exact gain W(0) e^0 = 1
    double lattice_sum = g[0] * dx;
    for (std::ptrdiff_t k = 1; k <= half; ++k)
        lattice_sum += 2.0 * g[static_cast<std::size_t>(k)] * dx;
    for (double &v : g) v /= lattice_sum;

    // ell = g * h restricted to [0, extent]
    auto out_count = static_cast<std::ptrdiff_t>(std::floor(cfg.extent / dx)) + 1;
    SampledFunction b;
    b.origin = 0.0;
    b.step = dx;
    b.samples.resize(static_cast<std::size_t>(out_count));
    // h index of x = 0
    auto zero_idx = static_cast<std::ptrdiff_t>(std::llround(-h.origin / dx));
    parallel_for(out_count, [&](std::ptrdiff_t i) {
        std::complex<double> acc = g[0] * h.samples[static_cast<std::size_t>(zero_idx + i)];
        for (std::ptrdiff_t k = 1; k <= half; ++k) {
            auto ip = static_cast<std::size_t>(zero_idx + i + k);
            auto im = static_cast<std::size_t>(zero_idx + i - k);
            acc += g[static_cast<std::size_t>(k)] * (h.samples[ip] + h.samples[im]);
        }
        b.samples[static_cast<std::size_t>(i)] = acc * dx;
    });

    // measure gamma_b over the checked range
    SymbolSpec bspec = SymbolSpec::sampled(b);
    std::vector<std::complex<double>> gb(static_cast<std::size_t>(checked_to) + 1);
    parallel_for(checked_to + 1, [&](std::ptrdiff_t n) {
        gb[static_cast<std::size_t>(n)] = gamma(bspec, n).value;
    });

    // suffix maxima of |sigma - gamma_b| pick the split point where the
    // tail error stabilizes
    std::vector<double> dev(gb.size());
    for (std::size_t n = 0; n < gb.size(); ++n)
        dev[n] = std::abs(sigma.at(static_cast<std::int64_t>(n)) - gb[n]);
    std::vector<double> suffix(gb.size() + 1, 0.0);
    for (std::size_t n = gb.size(); n-- > 0;)
        suffix[n] = std::max(dev[n], suffix[n + 1]);

    const std::int64_t ladder[] = {10, 20, 40, 70, 100, 140, 200};
    std::int64_t n_cap = std::min<std::int64_t>(200, checked_to / 2);
    std::int64_t best = n_cap;
    double floor_err = suffix[static_cast<std::size_t>(n_cap) + 1];
    for (std::int64_t cand : ladder) {
        if (cand > n_cap) break;
        if (suffix[static_cast<std::size_t>(cand) + 1] <= 1.05 * floor_err + 1e-12) {
            best = cand;
            break;
        }
    }

    TailSynthesis out;
    out.symbol = std::move(b);
    out.report.split_n = best;
    out.report.tail_sup_error = suffix[static_cast<std::size_t>(best) + 1];
    out.report.checked_to = checked_to;
    out.report.amplification_factor = std::exp(cfg.omega * cfg.omega / 8.0);
    out.gamma_b = std::move(gb);
    return out;
}

HeadBasisConfig default_head_basis(std::int64_t N) {
    HeadBasisConfig cfg;
    const int count = 48;
    double t_max = 4.0 * static_cast<double>(std::max<std::int64_t>(N, 1));
    double t_min = 0.02;
    double q = std::pow(t_min / t_max, 1.0 / (count - 1));
    cfg.knots_r.resize(count);
    for (int k = 0; k < count; ++k)
        cfg.knots_r[static_cast<std::size_t>(k)] = t_max * std::pow(q, count - 1 - k);
    return cfg;
}

HeadCorrection construct_head_correction(const std::vector<std::complex<double>> &theta,
                                         const HeadBasisConfig &basis) {
    if (theta.empty()) throw std::domain_error("construct_head_correction: theta empty");
    auto N = static_cast<std::int64_t>(theta.size()) - 1;
    if (N > 200)
        throw std::domain_error("construct_head_correction: N must be <= 200");
    if (basis.knots_r.empty())
        throw validation_error("head-basis.knots: must be nonempty");
    for (double t : basis.knots_r)
        if (!(t > 0.0)) throw validation_error("head-basis.knots: must be positive");

    const int K = static_cast<int>(basis.knots_r.size());
    const int head_rows = static_cast<int>(theta.size());
    // Zero-target rows past N keep the fit from dumping weight onto large
    // knots whose columns decay only around n ~ knot; without them the tail
    // perturbation sup_{n>N} |gamma_c(n)| is uncontrolled.
    const int rows = head_rows + 5 * head_rows + 60;

    std::vector<double> A(static_cast<std::size_t>(rows) * K);
    for (int n = 0; n < rows; ++n)
        for (int k = 0; k < K; ++k)
            A[static_cast<std::size_t>(n) * K + k] =
                regularized_gamma_p(static_cast<double>(n) + 1.0, basis.knots_r[static_cast<std::size_t>(k)]);

    SpdMatrix M;
    M.n = K;
    M.a.assign(static_cast<std::size_t>(K) * K, 0.0);
    for (int i = 0; i < K; ++i)
        for (int j = i; j < K; ++j) {
            double s = 0.0;
            for (int n = 0; n < rows; ++n)
                s += A[static_cast<std::size_t>(n) * K + i] * A[static_cast<std::size_t>(n) * K + j];
            M.at(i, j) = s;
            M.at(j, i) = s;
        }
    for (int i = 0; i < K; ++i) M.at(i, i) += basis.ridge;

    SpdMatrix factor = M;
    cholesky_factor(factor);
    double cond = spd_condition_estimate(M, factor);
    if (cond > basis.condition_limit)
        throw infeasible_error("construct_head_correction: basis condition estimate " +
                               std::to_string(cond) + " exceeds limit");

    std::vector<std::complex<double>> rhs(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        std::complex<double> s{};
        for (int n = 0; n < head_rows; ++n)
            s += A[static_cast<std::size_t>(n) * K + k] * theta[static_cast<std::size_t>(n)];
        rhs[static_cast<std::size_t>(k)] = s;
    }
    std::vector<std::complex<double>> coeff = cholesky_solve(factor, std::move(rhs));

    HeadCorrection out;
    out.coefficients = coeff;
    out.condition_estimate = cond;

    double res = 0.0;
    for (int n = 0; n < head_rows; ++n) {
        std::complex<double> fit{};
        for (int k = 0; k < K; ++k) fit += coeff[static_cast<std::size_t>(k)] * A[static_cast<std::size_t>(n) * K + k];
        res = std::max(res, std::abs(fit - theta[static_cast<std::size_t>(n)]));
    }
    out.residual_sup = res;

    std::int64_t tail_to = std::max<std::int64_t>(10 * (N + 1), 300);
    std::vector<double> tail_dev(static_cast<std::size_t>(tail_to - N), 0.0);
    parallel_for(tail_to - N, [&](std::ptrdiff_t i) {
        std::int64_t n = N + 1 + i;
        std::complex<double> v{};
        for (int k = 0; k < K; ++k)
            v += coeff[static_cast<std::size_t>(k)] *
                 regularized_gamma_p(static_cast<double>(n) + 1.0, basis.knots_r[static_cast<std::size_t>(k)]);
        tail_dev[static_cast<std::size_t>(i)] = std::abs(v);
    });
    out.tail_perturbation = *std::max_element(tail_dev.begin(), tail_dev.end());

    std::vector<std::pair<std::complex<double>, SymbolSpec>> terms;
    for (int k = 0; k < K; ++k)
        terms.emplace_back(coeff[static_cast<std::size_t>(k)],
                           SymbolSpec::indicator(0.0, std::sqrt(basis.knots_r[static_cast<std::size_t>(k)])));
    out.symbol = SymbolSpec::sum(std::move(terms));
    return out;
}

ApproxResult approximate_sequence(const TargetSequence &sigma, const ApproxOptions &opt) {
    bool feasible = true;
    if (sigma.prefix.size() >= 100) {
        MembershipReport mem = membership_report(sigma);
        feasible = mem.consistent;
    }

    TailSynthesis tail = construct_tail_symbol(sigma, opt.grid, opt.check_to);
    const std::int64_t N = tail.report.split_n;

    std::vector<std::complex<double>> theta(static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 0; n <= N; ++n)
        theta[static_cast<std::size_t>(n)] =
            sigma.at(n) - tail.gamma_b[static_cast<std::size_t>(n)];

    HeadBasisConfig basis = default_head_basis(N);
    basis.ridge = opt.ridge;
    HeadCorrection head = construct_head_correction(theta, basis);

    // gamma_a = gamma_b + gamma_c by linearity; gamma_c from the
    // incomplete-gamma closed form of the indicator basis
    const auto &knots = basis.knots_r;
    std::vector<double> dev(static_cast<std::size_t>(opt.check_to) + 1, 0.0);
    parallel_for(opt.check_to + 1, [&](std::ptrdiff_t n) {
        std::complex<double> gc{};
        for (std::size_t k = 0; k < knots.size(); ++k)
            gc += head.coefficients[k] *
                  regularized_gamma_p(static_cast<double>(n) + 1.0, knots[k]);
        std::complex<double> ga = tail.gamma_b[static_cast<std::size_t>(n)] + gc;
        dev[static_cast<std::size_t>(n)] = std::abs(sigma.at(n) - ga);
    });

    double head_res = 0.0, tail_res = 0.0;
    for (std::int64_t n = 0; n <= opt.check_to; ++n) {
        if (n <= N)
            head_res = std::max(head_res, dev[static_cast<std::size_t>(n)]);
        else
            tail_res = std::max(tail_res, dev[static_cast<std::size_t>(n)]);
    }

    ApproxResult out;
    std::vector<std::pair<std::complex<double>, SymbolSpec>> terms;
    terms.emplace_back(1.0, SymbolSpec::sampled(tail.symbol));
    for (std::size_t k = 0; k < knots.size(); ++k)
        terms.emplace_back(head.coefficients[k],
                           SymbolSpec::indicator(0.0, std::sqrt(knots[k])));
    out.symbol = SymbolSpec::sum(std::move(terms));

    out.report.bandwidth = opt.grid.omega;
    out.report.fejer_order = opt.grid.pass_fraction * opt.grid.omega;
    out.report.split_n = N;
    out.report.tail_sup_error = tail_res;
    out.report.head_residual = head_res;
    out.report.total_sup_error_estimate = std::max(head_res, tail_res);
    out.report.amplification_factor = tail.report.amplification_factor;
    out.report.checked_to = opt.check_to;
    out.report.feasible = feasible;
    return out;
}

} // namespace fockseq
