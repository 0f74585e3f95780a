#include <doctest.h>

#include <cmath>
#include <complex>

#include "fockseq/eigenvalues.hpp"
#include "fockseq/errors.hpp"
#include "fockseq/special.hpp"
#include "fockseq/sqrt_metric.hpp"

using namespace fockseq;
using namespace std::complex_literals;

TEST_CASE("gamma pinned values") {
    for (std::int64_t n : {0, 3, 17, 240}) {
        GammaValue v = gamma(SymbolSpec::constant(1.0), n);
        CHECK(std::abs(v.value - 1.0) < 1e-12);
        CHECK(v.err < 1e-12);
    }
    CHECK(gamma(SymbolSpec::indicator(0.0, 1.0), 0).value.real() ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(gamma(SymbolSpec::cosine(), 0).value.real() ==
          doctest::Approx(0.5755636164979777).epsilon(1e-9));
    for (std::int64_t n : {0, 1, 4, 30})
        CHECK(gamma(SymbolSpec::power(2.0), n).value.real() ==
              doctest::Approx(static_cast<double>(n) + 1.0).epsilon(1e-11));
}

TEST_CASE("gamma rejects divergent growth") {
    CHECK_THROWS_AS(gamma(SymbolSpec::exp_complex(1.5 + 0.0i), 0), validation_error);
    // delta < 1 but not bounded is fine
    CHECK_NOTHROW(gamma(SymbolSpec::exp_complex(0.9 + 0.0i), 0));
}

TEST_CASE("gamma_prefix: parallel equals serial bit for bit") {
    SymbolSpec spec = SymbolSpec::cosine();
    EigenSequence par = gamma_prefix(spec, 200);
    EigenSequence ser = gamma_prefix_serial(spec, 200);
    REQUIRE(par.values.size() == 201);
    CHECK(par.values == ser.values);
    CHECK(par.err == ser.err);

    EigenSequence ones = gamma_prefix(SymbolSpec::constant(1.0), 5);
    for (auto v : ones.values) CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("exp83 family: quadrature matches the exact eighth roots") {
    SymbolSpec spec = SymbolSpec::exp_complex(exp83_lambda());
    EigenSequence seq = gamma_prefix(spec, 7);
    for (std::int64_t n = 0; n <= 7; ++n) {
        auto expect = gamma_closed_exp83(n).value;
        CHECK(std::abs(seq.values[static_cast<std::size_t>(n)] - expect) < 1e-8);
    }
    CHECK(std::abs(gamma_closed_exp83(0).value -
                   std::complex<double>(std::sqrt(0.5), -std::sqrt(0.5))) < 1e-16);
}

TEST_CASE("closed forms") {
    CHECK(gamma_closed_indicator(0.0, 1.0, 0).value.real() ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(gamma_closed_cosine(0).value.real() ==
          doctest::Approx(0.5755636164979777).epsilon(1e-13));
    CHECK(!gamma_closed_cosine(100).used_quadrature_fallback);
    CHECK(gamma_closed_cosine(300).used_quadrature_fallback);
    // indicator with infinite right endpoint reduces to the constant
    CHECK(gamma_closed_indicator(0.0, std::numeric_limits<double>::infinity(), 5)
              .value.real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("oracle agreement between quadrature and closed forms") {
    SymbolSpec cosine = SymbolSpec::cosine();
    SymbolSpec ind = SymbolSpec::indicator(0.0, 1.0);
    SymbolSpec e83 = SymbolSpec::exp_complex(exp83_lambda());
    for (std::int64_t n : {0, 1, 2, 5, 12, 25, 60, 100}) {
        CHECK(std::abs(gamma(cosine, n).value - gamma_closed_cosine(n).value) < 1e-8);
        CHECK(std::abs(gamma(ind, n).value -
                       gamma_closed_indicator(0.0, 1.0, n).value) < 1e-8);
    }
    // The subgaussian family is a conditioning stress test: the integrand
    // modulus peaks at e^{delta n/(1-delta)+O(log n)} while the value has
    // modulus 1, so real-axis quadrature in doubles holds 1e-8 only through
    // n ~ 30 and must say so in its error estimate beyond.
    for (std::int64_t n = 0; n <= 30; ++n)
        CHECK(std::abs(gamma(e83, n).value - gamma_closed_exp83(n).value) < 1e-8);
    for (std::int64_t n : {60, 100}) {
        GammaValue v = gamma(e83, n);
        CHECK(std::abs(v.value - gamma_closed_exp83(n).value) <= v.err + 1e-8);
    }
}

TEST_CASE("bounded symbols give bounded eigenvalues") {
    for (const SymbolSpec &spec : {SymbolSpec::cosine(), SymbolSpec::indicator(0.0, 2.0),
                                   SymbolSpec::constant(0.25 + 0.5i)}) {
        double sup = *spec.sup_norm();
        for (std::int64_t n : {0, 3, 40, 500}) {
            GammaValue v = gamma(spec, n);
            CHECK(std::abs(v.value) <= sup + v.err + 1e-12);
        }
    }
}

TEST_CASE("unit-sup symbols give sqrt-Lipschitz eigenvalue sequences") {
    // sqrt(n+1) |gamma(n+1) - gamma(n)| <= kappa(n,n+1) sqrt(n+1) <= sqrt(2/pi)
    for (const SymbolSpec &spec :
         {SymbolSpec::cosine(), SymbolSpec::indicator(0.0, 1.0)}) {
        EigenSequence seq = gamma_prefix(spec, 10000);
        double stat = lipschitz_statistic(seq.values);
        CHECK(stat <= SQRT_2_OVER_PI + 1e-6);
    }
}

TEST_CASE("vanishing symbols give vanishing eigenvalues") {
    for (std::int64_t n : {30, 60, 200})
        CHECK(std::abs(gamma_closed_indicator(0.0, 1.0, n).value) < 1e-6);
}

TEST_CASE("gamma through the averages") {
    CHECK(std::abs(gamma_via_averages(SymbolSpec::cosine(), 0, 3) -
                   gamma(SymbolSpec::cosine(), 3).value) < 1e-9);
    CHECK(gamma_via_averages(SymbolSpec::power(2.0), 1, 4).real() ==
          doctest::Approx(5.0).epsilon(1e-8));
    CHECK(std::abs(gamma_via_averages(SymbolSpec::exp_complex(exp83_lambda()), 1, 2) -
                   gamma_closed_exp83(2).value) < 1e-8);
    CHECK_THROWS_AS(gamma_via_averages(SymbolSpec::cosine(), 2, 1), std::domain_error);
}

TEST_CASE("average path agrees with the direct pairing") {
    for (const SymbolSpec &spec :
         {SymbolSpec::cosine(), SymbolSpec::indicator(0.0, 1.0)}) {
        for (int j : {1, 2}) {
            double range = 20.0 + 14.0 * std::sqrt(21.0) + 40.0;
            AveragedSymbol avg(spec, j, range, 1e-9);
            for (std::int64_t n = j; n <= 20; ++n) {
                auto via = gamma_via_averages(avg, n);
                auto direct = gamma(spec, n).value;
                CHECK(std::abs(via - direct) < 1e-7);
            }
        }
    }
}
