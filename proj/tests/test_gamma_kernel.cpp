#include <doctest.h>

#include <cmath>
#include <limits>

#include "fockseq/gamma_kernel.hpp"
#include "fockseq/quadrature.hpp"
#include "fockseq/special.hpp"

using namespace fockseq;

TEST_CASE("log_kernel pinned values") {
    CHECK(log_kernel(0, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(log_kernel(1, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
    // K(2,2) = 4 e^-2 / 2 = 2 e^-2
    CHECK(log_kernel(2, 2.0) == doctest::Approx(std::log(2.0) - 2.0).epsilon(1e-14));
    CHECK(std::exp(log_kernel(2, 2.0)) == doctest::Approx(0.2706705664732254).epsilon(1e-13));
    CHECK(log_kernel(0, 0.0) == 0.0);
    CHECK_THROWS_AS(log_kernel(3, 0.0), std::domain_error);
    CHECK_THROWS_AS(log_kernel(1, -0.5), std::domain_error);
    // no overflow at n = 1e6
    CHECK(std::isfinite(log_kernel(1000000, 1.0e6)));
}

TEST_CASE("kernel_y values and unit mass") {
    CHECK(kernel_y(0, 0.0) == 0.0);
    CHECK(kernel_y(0, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
    auto mass = integrate_gl([](double y) { return kernel_y(5, y); }, 0.0, 12.0, 256);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("kernel normalization over r up to n = 200") {
    for (std::int64_t n = 0; n <= 200; ++n) {
        GammaKernel k(n);
        double nd = static_cast<double>(n);
        double hi = nd + 14.0 * std::sqrt(nd + 1.0) + 40.0;
        auto panels = make_panels(0.0, hi, {nd}, 2.0);
        double mass = integrate_panels([&](double r) { return k.density(r); }, panels, 32);
        CHECK(std::abs(mass - 1.0) < 1e-10);
    }
}

TEST_CASE("kernel peak sits at r = n") {
    for (std::int64_t n : {1, 2, 7, 50, 300}) {
        GammaKernel k(n);
        double nd = static_cast<double>(n);
        double peak = k.log_density(nd);
        for (double d : {0.5, 0.1, 0.02}) {
            CHECK(peak > k.log_density(nd - d));
            CHECK(peak > k.log_density(nd + d));
        }
    }
}

TEST_CASE("log_F_shift pinned values and domain") {
    for (double x : {0.5, 1.0, 7.0, 40.0})
        CHECK(log_F_shift(x, 0.0) == 0.0);
    CHECK(log_F_shift(1.0, 1.0) ==
          doctest::Approx(3.0 * std::log(2.0) - 3.0).epsilon(1e-14));
    CHECK(log_F_shift(10.0, 0.5) <= -0.2);
    CHECK(log_F_shift(2.0, -2.0) == -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(log_F_shift(2.0, -2.5), std::domain_error);
    CHECK(log_F(3.0, 4.0) == log_F_shift(3.0, 1.0));
}

TEST_CASE("log F upper bound |u|/x - u^2") {
    for (double x = 1.0; x <= 100.0; x *= 1.7) {
        for (int i = 0; i <= 60; ++i) {
            double u = -x / 2.0 + (x / 2.0 + 10.0) * i / 60.0;
            CHECK(log_F_shift(x, u) <= std::abs(u) / x - u * u + 1e-12);
        }
    }
}

TEST_CASE("L1 distance between the y-kernel and F shrinks") {
    auto l1 = [](std::int64_t n) {
        double root = std::sqrt(static_cast<double>(n));
        auto diff = [&](double y) {
            return kernel_y(n, y) - SQRT_2_OVER_PI * std::exp(log_F(root, y));
        };
        return integrate_abs(diff, std::max(0.0, root - 12.0), root + 12.0, 3000);
    };
    double d10 = l1(10), d100 = l1(100), d1000 = l1(1000);
    CHECK(d10 > d100);
    CHECK(d100 > d1000);
    CHECK(d1000 < 0.1);
    // the ratio of the two kernels is e^{s(n)}, so the L1 gap is e^{s}-1
    CHECK(d1000 == doctest::Approx(std::expm1(stirling_correction(1000.0))).epsilon(1e-4));
}

TEST_CASE("stirling bracket") {
    StirlingBracket b1 = stirling_bracket(1);
    CHECK(b1.lower == doctest::Approx(0.9221370088957891).epsilon(1e-13));
    CHECK(b1.upper == doctest::Approx(0.9221370088957891 * std::exp(1.0 / 12.0)).epsilon(1e-13));
    CHECK(b1.lower < 1.0);
    CHECK(b1.upper > 1.0);

    StirlingBracket b10 = stirling_bracket(10);
    CHECK(b10.lower < 3628800.0);
    CHECK(b10.upper > 3628800.0);

    StirlingBracket b5 = stirling_bracket(5);
    CHECK(b5.lower < 120.0);
    CHECK(b5.upper > 120.0);

    // log-domain containment up to the edge of double range (170! ~ 7e306)
    for (std::int64_t n : {20, 100, 170}) {
        StirlingBracket b = stirling_bracket(n);
        double lg = log_gamma(static_cast<double>(n) + 1.0);
        CHECK(std::isfinite(b.upper));
        CHECK(std::log(b.lower) < lg);
        CHECK(std::log(b.upper) > lg);
    }
    CHECK_THROWS_AS(stirling_bracket(0), std::domain_error);
}

TEST_CASE("kernel point carries the log value") {
    KernelPoint p = kernel_point(3, 2.5);
    CHECK(p.n == 3);
    CHECK(p.r == 2.5);
    CHECK(p.logval ==
          doctest::Approx(3.0 * std::log(2.5) - 2.5 - log_gamma(4.0)).epsilon(1e-14));
}
