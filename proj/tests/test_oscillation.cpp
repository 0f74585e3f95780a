#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "fockseq/eigenvalues.hpp"
#include "fockseq/io.hpp"
#include "fockseq/oscillation.hpp"
#include "fockseq/sqrt_metric.hpp"

using namespace fockseq;

namespace {

TargetSequence prefix_target(std::size_t count,
                             std::complex<double> (*f)(std::int64_t)) {
    std::vector<std::complex<double>> p(count);
    for (std::size_t n = 0; n < count; ++n) p[n] = f(static_cast<std::int64_t>(n));
    return make_target(std::move(p));
}

} // namespace

TEST_CASE("extension interpolates exactly at the integers") {
    TargetSequence t = prefix_target(50, [](std::int64_t n) {
        return std::complex<double>(std::cos(1.7 * static_cast<double>(n)),
                                    std::sin(0.3 * static_cast<double>(n)));
    });
    for (std::int64_t n = 0; n < 50; ++n)
        CHECK(extend(t, static_cast<double>(n)) == t.at(n));
}

TEST_CASE("extension pinned values") {
    TargetSequence t01 = make_target({0.0, 1.0, 2.0});
    CHECK(extend(t01, 0.25).real() == doctest::Approx(0.5).epsilon(1e-15));
    TargetSequence c = make_target(std::vector<std::complex<double>>(10, 2.5));
    for (double x : {0.1, 0.9, 3.3, 8.7})
        CHECK(extend(c, x).real() == doctest::Approx(2.5).epsilon(1e-15));
    CHECK_THROWS_AS(extend(t01, 5.0), std::out_of_range);
}

TEST_CASE("extension is a convex combination with sup-norm preservation") {
    // weights: extension of (0,1) gives w(x), of (1,0) gives 1-w(x)
    TargetSequence up = make_target({0.0, 1.0});
    TargetSequence down = make_target({1.0, 0.0});
    for (int i = 0; i <= 40; ++i) {
        double x = i / 40.0;
        double w = extend(up, x).real();
        CHECK(w >= 0.0);
        CHECK(w <= 1.0);
        CHECK(extend(down, x).real() == doctest::Approx(1.0 - w).epsilon(1e-15));
    }

    TargetSequence t = prefix_target(200, [](std::int64_t n) {
        return std::complex<double>(std::cos(std::sqrt(static_cast<double>(n) * 3.0)), 0.0);
    });
    double sup = 0.0;
    for (std::int64_t n = 0; n < 199; ++n)
        for (int j = 0; j < 64; ++j)
            sup = std::max(sup,
                           std::abs(extend(t, static_cast<double>(n) + j / 64.0)));
    CHECK(sup <= t.sup_norm + 1e-12);
    CHECK(sup >= t.sup_norm - 1e-12);
}

TEST_CASE("extended function wrapper") {
    ExtendedFunction f{make_target({0.0, 1.0, 2.0})};
    CHECK(f.eval(0.25).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f.eval(2.0) == f.source.at(2));
}

TEST_CASE("omega bound certificate") {
    TargetSequence c = make_target(std::vector<std::complex<double>>(200, 1.0));
    CHECK(omega_bound(c, 0.3) == 0.0);

    TargetSequence alt = prefix_target(10001, [](std::int64_t n) {
        return std::complex<double>((n % 2 == 0) ? 1.0 : -1.0, 0.0);
    });
    CHECK(omega_bound(alt, 0.25) == doctest::Approx(6.0).epsilon(1e-12));

    TargetSequence cs = prefix_target(10001, [](std::int64_t n) {
        return std::complex<double>(std::cos(std::sqrt(static_cast<double>(n))), 0.0);
    });
    CHECK(omega_bound(cs, 0.01) <= 0.3 + 1e-3);

    CHECK_THROWS_AS(omega_bound(c, 0.0), std::domain_error);
    CHECK_THROWS_AS(omega_bound(c, 1.5), std::domain_error);
}

TEST_CASE("omega bound is sound on random close pairs") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> ux(0.0, 195.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<TargetSequence> seqs;
    seqs.push_back(prefix_target(201, [](std::int64_t n) {
        return std::complex<double>(std::cos(std::sqrt(static_cast<double>(n))), 0.0);
    }));
    seqs.push_back(prefix_target(201, [](std::int64_t n) {
        return std::complex<double>((n % 2 == 0) ? 1.0 : -1.0, 0.0);
    }));
    seqs.push_back(prefix_target(201, [](std::int64_t n) {
        double s = std::sqrt(static_cast<double>(n));
        return std::complex<double>(std::cos(s), std::sin(s));
    }));
    seqs.push_back(make_target(std::vector<std::complex<double>>(201, 0.7)));
    seqs.push_back(prefix_target(201, [](std::int64_t n) {
        return gamma_closed_cosine(n).value;
    }));

    for (const auto &t : seqs) {
        for (double delta : {1.0, 0.25, 0.04}) {
            double bound = omega_bound(t, delta);
            for (int i = 0; i < 2000; ++i) {
                double x = ux(rng);
                double rx = std::sqrt(x);
                double ry = rx + delta * (2.0 * u01(rng) - 1.0);
                if (ry < 0.0) ry = 0.0;
                double y = ry * ry;
                if (y > 195.0) continue;
                CHECK(std::abs(extend(t, x) - extend(t, y)) <= bound + 1e-12);
            }
        }
    }
}

TEST_CASE("h transform") {
    TargetSequence c = make_target(std::vector<std::complex<double>>(30, 4.0));
    SampledFunction hc = h_transform(c, 0.25, 5.0);
    for (auto v : hc.samples) CHECK(v == std::complex<double>(4.0));

    TargetSequence cs = named_target("cos-sqrt", 1700);
    SampledFunction h = h_transform(cs, 0.05, 40.0);
    CHECK(h.eval(0.0) == cs.at(0));
    // f(x^2) is even by construction (grid symmetry up to rounding)
    CHECK(std::abs(h.eval(-17.3) - h.eval(17.3)) < 1e-12);
    for (int k = 1; k < 1500; k += 13) {
        double x = std::sqrt(static_cast<double>(k));
        CHECK(std::abs(h.eval(x) - std::cos(x)) < 5e-3); // grid interpolation level
    }
}

TEST_CASE("membership diagnostics") {
    TargetSequence cs = named_target("cos-sqrt", 2000);
    MembershipReport consistent = membership_report(cs);
    CHECK(consistent.consistent);
    CHECK(consistent.omega.size() == 5);
    CHECK(consistent.omega.front() > consistent.omega.back());

    std::vector<std::complex<double>> e83(2001);
    for (std::size_t n = 0; n < e83.size(); ++n)
        e83[n] = gamma_closed_exp83(static_cast<std::int64_t>(n)).value;
    CHECK(!membership_report(make_target(std::move(e83))).consistent);

    CHECK(!membership_report(named_target("alternating", 2000)).consistent);

    EigenSequence gc = gamma_prefix(SymbolSpec::cosine(), 2000);
    CHECK(membership_report(make_target(std::move(gc.values))).consistent);

    TargetSequence small = make_target(std::vector<std::complex<double>>(50, 1.0));
    CHECK_THROWS_AS(membership_report(small), std::domain_error);
}
