#include "fockseq/oscillation.hpp"

#include <cmath>
#include <stdexcept>

#include "fockseq/errors.hpp"
#include "fockseq/sqrt_metric.hpp"

namespace fockseq {

std::complex<double> TargetSequence::at(std::int64_t n) const {
    if (n < 0) throw std::domain_error("TargetSequence::at: n must be nonnegative");
    if (n < static_cast<std::int64_t>(prefix.size()))
        return prefix[static_cast<std::size_t>(n)];
    if (rule) return rule(n);
    throw std::out_of_range("TargetSequence::at: index beyond prefix and no rule");
}

std::int64_t TargetSequence::max_index() const {
    if (rule) return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(prefix.size()) - 1;
}

TargetSequence make_target(std::vector<std::complex<double>> prefix,
                           std::function<std::complex<double>(std::int64_t)> rule) {
    TargetSequence t;
    t.prefix = std::move(prefix);
    t.rule = std::move(rule);
    double m = 0.0;
    for (auto v : t.prefix) m = std::max(m, std::abs(v));
    t.sup_norm = m;
    if (t.rule && !t.prefix.empty()) {
        // rule must agree with the prefix on a sample of the overlap
        std::size_t n = t.prefix.size();
        for (std::size_t i : {std::size_t{0}, n / 2, n - 1}) {
            auto d = std::abs(t.rule(static_cast<std::int64_t>(i)) - t.prefix[i]);
            if (!(d <= 1e-9 * (1.0 + std::abs(t.prefix[i]))))
                throw validation_error("target.rule: disagrees with prefix at n=" +
                                       std::to_string(i));
        }
    }
    return t;
}

std::complex<double> extend(const TargetSequence &sigma, double x) {
    if (x < 0.0) throw std::domain_error("extend: x must be nonnegative");
    double fl = std::floor(x);
    auto n = static_cast<std::int64_t>(fl);
    if (x == fl) return sigma.at(n);
    std::complex<double> s0 = sigma.at(n);
    std::complex<double> s1 = sigma.at(n + 1);
    double tn = std::sqrt(fl);
    double tn1 = std::sqrt(fl + 1.0);
    double w = (std::sqrt(x) - tn) / (tn1 - tn);
    return s0 + w * (s1 - s0);
}

double omega_bound(const TargetSequence &sigma, double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::domain_error("omega_bound: delta must lie in (0,1]");
    double w_sqrt = modulus_estimate(sigma.prefix, std::sqrt(delta));
    double w_one = modulus_estimate(sigma.prefix, 1.0);
    return 3.0 * std::max(w_sqrt, std::sqrt(delta) * w_one);
}

SampledFunction h_transform(const TargetSequence &sigma, double step, double extent) {
    if (sigma.prefix.size() < 2)
        throw std::domain_error("h_transform: prefix length must be >= 2");
    if (!(step > 0.0) || !(extent > 0.0))
        throw std::domain_error("h_transform: step and extent must be positive");
    std::int64_t top = sigma.max_index();
    double x_reach = std::sqrt(static_cast<double>(std::min<std::int64_t>(top, 1LL << 40)));
    auto count = static_cast<std::size_t>(std::floor(2.0 * extent / step)) + 1;
    SampledFunction h;
    h.origin = -extent;
    h.step = step;
    h.samples.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        double x = -extent + step * static_cast<double>(i);
        double ax = std::min(std::abs(x), x_reach - 1e-12);
        ax = std::max(ax, 0.0);
        h.samples[i] = extend(sigma, ax * ax);
    }
    return h;
}

MembershipReport membership_report(const TargetSequence &sigma) {
    if (sigma.prefix.size() < 100)
        throw std::domain_error("membership_report: prefix length must be >= 100");
    MembershipReport rep;
    rep.deltas = {0.5, 0.2, 0.1, 0.05, 0.02};
    for (double d : rep.deltas) rep.omega.push_back(modulus_estimate(sigma.prefix, d));
    rep.lipschitz = lipschitz_statistic(sigma.prefix);

    // Consistency requires each ladder step to shrink the modulus by at
    // least a factor 1.2 (or be negligibly small already).  A single
    // end-to-end factor would pass sequences whose modulus plateaus at 2
    // until rho resolves adjacent indices, which contradicts a vanishing
    // modulus.
    double floor_tol = 1e-9 * std::max(1.0, sigma.sup_norm);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < rep.omega.size(); ++i) {
        if (rep.omega[i + 1] <= floor_tol) continue;
        if (rep.omega[i + 1] > rep.omega[i] / 1.2) {
            ok = false;
            rep.detail = "modulus fails to decrease from delta=" +
                         std::to_string(rep.deltas[i]) + " to " +
                         std::to_string(rep.deltas[i + 1]);
            break;
        }
    }
    rep.consistent = ok;
    if (ok) rep.detail = "modulus decreases along the delta ladder";
    return rep;
}

} // namespace fockseq
