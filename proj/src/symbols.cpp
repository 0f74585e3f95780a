#include "fockseq/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fockseq/errors.hpp"
#include "fockseq/quadrature.hpp"

namespace fockseq {

namespace {
constexpr double INF = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
} // namespace

SymbolSpec::SymbolSpec() : node_(std::make_shared<SymbolNode>(ConstantSymbol{0.0})) {}
SymbolSpec::SymbolSpec(SymbolNode node)
    : node_(std::make_shared<SymbolNode>(std::move(node))) {}

SymbolSpec SymbolSpec::constant(std::complex<double> c) { return SymbolSpec(ConstantSymbol{c}); }
SymbolSpec SymbolSpec::indicator(double alpha, double beta) {
    return SymbolSpec(IndicatorSymbol{alpha, beta});
}
SymbolSpec SymbolSpec::piecewise(std::vector<double> knots,
                                 std::vector<std::complex<double>> values) {
    return SymbolSpec(PiecewiseConstantSymbol{std::move(knots), std::move(values)});
}
SymbolSpec SymbolSpec::cosine() { return SymbolSpec(CosineSymbol{}); }
SymbolSpec SymbolSpec::power(double p) { return SymbolSpec(PowerSymbol{p}); }
SymbolSpec SymbolSpec::exp_complex(std::complex<double> lambda) {
    return SymbolSpec(ExpComplexSymbol{lambda});
}
SymbolSpec SymbolSpec::sampled(SampledFunction grid) {
    return SymbolSpec(SampledSymbol{std::move(grid)});
}
SymbolSpec SymbolSpec::sum(std::vector<std::pair<std::complex<double>, SymbolSpec>> terms) {
    return SymbolSpec(SumSymbol{std::move(terms)});
}

void SymbolSpec::validate() const {
    std::visit(
        overloaded{
            [](const ConstantSymbol &) {},
            [](const IndicatorSymbol &s) {
                if (!(s.alpha >= 0.0))
                    throw validation_error("indicator.alpha: must be >= 0");
                if (!(s.beta > s.alpha))
                    throw validation_error("indicator.beta: must exceed alpha");
            },
            [](const PiecewiseConstantSymbol &s) {
                if (s.knots.size() < 2)
                    throw validation_error("piecewise-constant.knots: need at least 2 knots");
                if (s.values.size() + 1 != s.knots.size())
                    throw validation_error(
                        "piecewise-constant.values: need exactly knots-1 values");
                if (!(s.knots.front() >= 0.0))
                    throw validation_error("piecewise-constant.knots: must start at >= 0");
                for (std::size_t i = 0; i + 1 < s.knots.size(); ++i)
                    if (!(s.knots[i] < s.knots[i + 1]))
                        throw validation_error(
                            "piecewise-constant.knots: must be strictly increasing");
            },
            [](const CosineSymbol &) {},
            [](const PowerSymbol &s) {
                if (!(s.exponent >= 0.0))
                    throw validation_error("power.exponent: must be >= 0");
            },
            [](const ExpComplexSymbol &s) {
                if (!(s.lambda.real() < 1.0))
                    throw validation_error("exp-complex.lambda: Re(lambda) must be < 1");
            },
            [](const SampledSymbol &s) {
                if (s.grid.samples.empty())
                    throw validation_error("sampled.samples: must be nonempty");
                if (!(s.grid.step > 0.0))
                    throw validation_error("sampled.step: must be positive");
            },
            [](const SumSymbol &s) {
                if (s.terms.empty()) throw validation_error("sum.terms: must be nonempty");
                for (const auto &[w, sub] : s.terms) {
                    (void)w;
                    sub.validate();
                }
            }},
        *node_);
}

std::complex<double> eval_symbol(const SymbolSpec &spec, double y) {
    if (y < 0.0) throw std::domain_error("eval_symbol: y must be nonnegative");
    return std::visit(
        overloaded{
            [&](const ConstantSymbol &s) -> std::complex<double> { return s.value; },
            [&](const IndicatorSymbol &s) -> std::complex<double> {
                return (y >= s.alpha && y < s.beta) ? 1.0 : 0.0;
            },
            [&](const PiecewiseConstantSymbol &s) -> std::complex<double> {
                if (y < s.knots.front() || y >= s.knots.back()) return 0.0;
                auto it = std::upper_bound(s.knots.begin(), s.knots.end(), y);
                return s.values[static_cast<std::size_t>(it - s.knots.begin()) - 1];
            },
            [&](const CosineSymbol &) -> std::complex<double> { return std::cos(y); },
            [&](const PowerSymbol &s) -> std::complex<double> {
                return std::pow(y, s.exponent);
            },
            [&](const ExpComplexSymbol &s) -> std::complex<double> {
                return std::exp(s.lambda * (y * y));
            },
            [&](const SampledSymbol &s) -> std::complex<double> { return s.grid.eval(y); },
            [&](const SumSymbol &s) -> std::complex<double> {
                std::complex<double> acc{};
                for (const auto &[w, sub] : s.terms) acc += w * eval_symbol(sub, y);
                return acc;
            }},
        spec.node());
}

Growth SymbolSpec::growth() const {
    return std::visit(
        overloaded{
            [](const ConstantSymbol &) { return Growth{GrowthClass::Bounded, 0.0}; },
            [](const IndicatorSymbol &s) {
                return Growth{std::isfinite(s.beta) ? GrowthClass::Vanishing
                                                    : GrowthClass::Bounded,
                              0.0};
            },
            [](const PiecewiseConstantSymbol &) {
                return Growth{GrowthClass::Vanishing, 0.0};
            },
            [](const CosineSymbol &) { return Growth{GrowthClass::Bounded, 0.0}; },
            [](const PowerSymbol &s) {
                if (s.exponent == 0.0) return Growth{GrowthClass::Bounded, 0.0};
                // y^p is dominated by e^{delta y^2} for every delta > 0
                return Growth{GrowthClass::Subgaussian, 0.0};
            },
            [](const ExpComplexSymbol &s) {
                double d = s.lambda.real();
                if (d < 0.0) return Growth{GrowthClass::Vanishing, 0.0};
                if (d == 0.0) return Growth{GrowthClass::Bounded, 0.0};
                return Growth{GrowthClass::Subgaussian, d};
            },
            [](const SampledSymbol &) { return Growth{GrowthClass::Bounded, 0.0}; },
            [](const SumSymbol &s) {
                Growth g{GrowthClass::Vanishing, 0.0};
                for (const auto &[w, sub] : s.terms) {
                    (void)w;
                    Growth sg = sub.growth();
                    g.delta = std::max(g.delta, sg.delta);
                    if (sg.cls == GrowthClass::Subgaussian)
                        g.cls = GrowthClass::Subgaussian;
                    else if (sg.cls == GrowthClass::Bounded &&
                             g.cls == GrowthClass::Vanishing)
                        g.cls = GrowthClass::Bounded;
                }
                return g;
            }},
        *node_);
}

std::optional<double> SymbolSpec::sup_norm() const {
    return std::visit(
        overloaded{
            [](const ConstantSymbol &s) -> std::optional<double> { return std::abs(s.value); },
            [](const IndicatorSymbol &) -> std::optional<double> { return 1.0; },
            [](const PiecewiseConstantSymbol &s) -> std::optional<double> {
                double m = 0.0;
                for (auto v : s.values) m = std::max(m, std::abs(v));
                return m;
            },
            [](const CosineSymbol &) -> std::optional<double> { return 1.0; },
            [](const PowerSymbol &s) -> std::optional<double> {
                if (s.exponent == 0.0) return 1.0;
                return std::nullopt;
            },
            [](const ExpComplexSymbol &s) -> std::optional<double> {
                if (s.lambda.real() <= 0.0) return 1.0;
                return std::nullopt;
            },
            [](const SampledSymbol &s) -> std::optional<double> {
                double m = 0.0;
                for (auto v : s.grid.samples) m = std::max(m, std::abs(v));
                return m;
            },
            [](const SumSymbol &s) -> std::optional<double> {
                double m = 0.0;
                for (const auto &[w, sub] : s.terms) {
                    auto sn = sub.sup_norm();
                    if (!sn) return std::nullopt;
                    m += std::abs(w) * *sn;
                }
                return m;
            }},
        *node_);
}

bool SymbolSpec::vanishes_at_infinity() const {
    return std::visit(
        overloaded{
            [](const ConstantSymbol &s) { return s.value == std::complex<double>{}; },
            [](const IndicatorSymbol &s) { return std::isfinite(s.beta); },
            [](const PiecewiseConstantSymbol &) { return true; },
            [](const CosineSymbol &) { return false; },
            [](const PowerSymbol &) { return false; },
            [](const ExpComplexSymbol &s) { return s.lambda.real() < 0.0; },
            [](const SampledSymbol &s) {
                return !s.grid.samples.empty() &&
                       s.grid.samples.back() == std::complex<double>{};
            },
            [](const SumSymbol &s) {
                for (const auto &[w, sub] : s.terms)
                    if (w != std::complex<double>{} && !sub.vanishes_at_infinity())
                        return false;
                return true;
            }},
        *node_);
}

std::vector<double> SymbolSpec::breakpoints() const {
    std::vector<double> out;
    std::visit(overloaded{[&](const ConstantSymbol &) {},
                          [&](const IndicatorSymbol &s) {
                              out.push_back(s.alpha);
                              if (std::isfinite(s.beta)) out.push_back(s.beta);
                          },
                          [&](const PiecewiseConstantSymbol &s) {
                              out.insert(out.end(), s.knots.begin(), s.knots.end());
                          },
                          [&](const CosineSymbol &) {},
                          [&](const PowerSymbol &) {},
                          [&](const ExpComplexSymbol &) {},
                          [&](const SampledSymbol &s) {
                              for (std::size_t i = 0; i < s.grid.samples.size(); ++i)
                                  out.push_back(s.grid.origin +
                                                s.grid.step * static_cast<double>(i));
                          },
                          [&](const SumSymbol &s) {
                              for (const auto &[w, sub] : s.terms) {
                                  (void)w;
                                  auto b = sub.breakpoints();
                                  out.insert(out.end(), b.begin(), b.end());
                              }
                          }},
               *node_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> SymbolSpec::breakpoints_r() const {
    std::vector<double> out = breakpoints();
    for (double &b : out) b = b * b;
    return out;
}

std::string SymbolSpec::kind_name() const {
    return std::visit(
        overloaded{[](const ConstantSymbol &) { return std::string("constant"); },
                   [](const IndicatorSymbol &) { return std::string("indicator"); },
                   [](const PiecewiseConstantSymbol &) {
                       return std::string("piecewise-constant");
                   },
                   [](const CosineSymbol &) { return std::string("cosine"); },
                   [](const PowerSymbol &) { return std::string("power"); },
                   [](const ExpComplexSymbol &) { return std::string("exp-complex"); },
                   [](const SampledSymbol &) { return std::string("sampled"); },
                   [](const SumSymbol &) { return std::string("sum"); }},
        *node_);
}

// ---------------------------------------------------------------------------
// Iterated averages
// ---------------------------------------------------------------------------

namespace {

// Frequency scale of the base symbol in the r variable, used to size the
// memo grid spacing.
double curvature_scale(const SymbolSpec &spec) {
    return std::visit(
        overloaded{[](const ConstantSymbol &) { return 0.5; },
                   [](const IndicatorSymbol &) { return 1.0; },
                   [](const PiecewiseConstantSymbol &) { return 1.0; },
                   [](const CosineSymbol &) { return 1.0; },
                   [](const PowerSymbol &) { return 0.5; },
                   [](const ExpComplexSymbol &s) { return std::max(1.0, std::abs(s.lambda)); },
                   [](const SampledSymbol &) { return 1.0; },
                   [](const SumSymbol &s) {
                       double m = 0.5;
                       for (const auto &[w, sub] : s.terms) {
                           (void)w;
                           m = std::max(m, curvature_scale(sub));
                       }
                       return m;
                   }},
        spec.node());
}

bool contains_exp_kind(const SymbolSpec &spec) {
    return std::visit(overloaded{[](const ExpComplexSymbol &) { return true; },
                                 [](const SumSymbol &s) {
                                     for (const auto &[w, sub] : s.terms) {
                                         (void)w;
                                         if (contains_exp_kind(sub)) return true;
                                     }
                                     return false;
                                 },
                                 [](const auto &) { return false; }},
                      spec.node());
}

} // namespace

AveragedSymbol::AveragedSymbol(SymbolSpec base, int level)
    : base_(std::move(base)), level_(level) {
    if (level < 0) throw std::domain_error("AveragedSymbol: level must be >= 0");
    base_.validate();
    Growth g = base_.growth();
    if (g.delta >= 1.0)
        throw growth_error("AveragedSymbol: growth delta must be < 1");
    growth_delta_ = g.delta;
    breaks_r_ = base_.breakpoints_r();
}

AveragedSymbol::AveragedSymbol(SymbolSpec base, int level, double memo_range,
                               double memo_tol)
    : AveragedSymbol(std::move(base), level) {
    if (level_ == 0 || memo_range <= 0.0) return;
    const double horizon = std::min(42.0 / std::max(1.0 - growth_delta_, 0.05), 2000.0);
    const double top = memo_range + static_cast<double>(level_) * horizon;
    const bool flat = contains_exp_kind(base_);
    const double scale = curvature_scale(base_);
    double h0 = std::clamp(std::sqrt(30.0 * memo_tol) / scale, 2e-5, 0.5);

    for (int round = 0; round < 4; ++round) {
        nodes_.clear();
        double r = 0.0;
        std::size_t next_break = 0;
        while (r < top) {
            nodes_.push_back(r);
            double h = flat ? h0 : h0 * std::sqrt(std::max(r, 1.0));
            double rn = r + h;
            while (next_break < breaks_r_.size() && breaks_r_[next_break] <= r)
                ++next_break;
            if (next_break < breaks_r_.size() && breaks_r_[next_break] < rn)
                rn = breaks_r_[next_break];
            r = rn;
        }
        nodes_.push_back(top);

        memo_.assign(static_cast<std::size_t>(level_), {});
        memo_limit_.assign(static_cast<std::size_t>(level_), 0.0);
        for (int j = 1; j <= level_; ++j) {
            double limit = top - static_cast<double>(j - 1) * horizon;
            memo_limit_[static_cast<std::size_t>(j - 1)] = limit;
            auto &vals = memo_[static_cast<std::size_t>(j - 1)];
            std::size_t count = nodes_.size();
            while (count > 0 && nodes_[count - 1] > limit) --count;
            vals.resize(count);
            for (std::size_t i = 0; i < count; ++i) {
                double rr = nodes_[i];
                std::vector<double> local;
                for (double b : breaks_r_)
                    if (b > rr) local.push_back(b - rr);
                auto f = [&](double t) { return eval_level(j - 1, rr + t); };
                std::complex<double> v =
                    exp_weight_integral(f, local, 1.0 - growth_delta_);
                vals[i] = v * std::exp(-growth_delta_ * rr);
            }
        }

        // midpoint validation of the interpolation on the top level
        double worst = 0.0;
        const auto &vals = memo_.back();
        for (std::size_t i = 0; i + 1 < vals.size(); i += 37) {
            double rm = 0.5 * (nodes_[i] + nodes_[i + 1]);
            std::complex<double> direct;
            {
                std::vector<double> local;
                for (double b : breaks_r_)
                    if (b > rm) local.push_back(b - rm);
                auto f = [&](double t) { return eval_level(level_ - 1, rm + t); };
                direct = exp_weight_integral(f, local, 1.0 - growth_delta_) *
                         std::exp(-growth_delta_ * rm);
            }
            std::complex<double> interp =
                0.5 * (vals[i] + vals[i + 1]); // nodes are near-equidistant locally
            if (std::isfinite(std::abs(direct)))
                worst = std::max(worst, std::abs(direct - interp));
        }
        if (worst <= 8.0 * memo_tol || !std::isfinite(worst)) break;
        h0 *= 0.5;
    }
}

std::complex<double> AveragedSymbol::eval(double r) const { return eval_level(level_, r); }

std::complex<double> AveragedSymbol::eval_level(int j, double r) const {
    if (j == 0) return eval_symbol(base_, std::sqrt(r));
    if (!memo_.empty() && static_cast<std::size_t>(j) <= memo_.size() &&
        r <= memo_limit_[static_cast<std::size_t>(j - 1)] &&
        memo_[static_cast<std::size_t>(j - 1)].size() >= 2) {
        const auto &vals = memo_[static_cast<std::size_t>(j - 1)];
        auto it = std::upper_bound(nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(vals.size()), r);
        std::size_t i = (it == nodes_.begin())
                            ? 0
                            : static_cast<std::size_t>(it - nodes_.begin()) - 1;
        std::complex<double> g;
        if (i + 1 >= vals.size()) {
            g = vals.back();
        } else {
            double w = (r - nodes_[i]) / (nodes_[i + 1] - nodes_[i]);
            g = vals[i] + w * (vals[i + 1] - vals[i]);
        }
        return g * std::exp(growth_delta_ * r);
    }
    std::vector<double> local;
    for (double b : breaks_r_)
        if (b > r) local.push_back(b - r);
    auto f = [&](double t) { return eval_level(j - 1, r + t); };
    return exp_weight_integral(f, local, 1.0 - growth_delta_);
}

double AveragedSymbol::sup_norm_estimate() const {
    if (level_ == 0) {
        auto sn = base_.sup_norm();
        return sn ? *sn : INF;
    }
    if (memo_.empty()) return INF;
    double m = 0.0;
    const auto &vals = memo_.back();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double v = std::abs(vals[i] * std::exp(growth_delta_ * nodes_[i]));
        if (!std::isfinite(v)) return INF;
        m = std::max(m, v);
    }
    return m;
}

AveragedSymbol average_B(const SymbolSpec &spec, int level) {
    return AveragedSymbol(spec, level);
}

std::optional<int> in_class_M(const SymbolSpec &spec, int j_max) {
    spec.validate();
    if (j_max > 4) throw std::domain_error("in_class_M: j_max must be <= 4");
    if (spec.sup_norm()) return 0;

    // probe grid: log-spaced up to r = 1e4
    std::vector<double> probes{0.0};
    for (double r = 1.0; r <= 1.0e4; r *= 1.6) probes.push_back(r);
    probes.push_back(1.0e4);

    for (int j = 1; j <= j_max; ++j) {
        AveragedSymbol avg(spec, j, 1.0e4, 1e-3);
        double max_all = 0.0, max_mid = 0.0;
        bool finite = true;
        for (double r : probes) {
            double v = std::abs(avg.eval(r));
            if (!std::isfinite(v)) {
                finite = false;
                break;
            }
            max_all = std::max(max_all, v);
            if (r <= 100.0) max_mid = std::max(max_mid, v);
        }
        if (finite && max_all <= 2.0 * max_mid + 1e-6) return j;
    }
    return std::nullopt;
}

} // namespace fockseq
