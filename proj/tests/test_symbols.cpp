#include <doctest.h>

#include <cmath>
#include <complex>

#include "fockseq/errors.hpp"
#include "fockseq/eigenvalues.hpp"
#include "fockseq/quadrature.hpp"
#include "fockseq/special.hpp"
#include "fockseq/symbols.hpp"

using namespace fockseq;
using namespace std::complex_literals;

TEST_CASE("symbol evaluation") {
    CHECK(eval_symbol(SymbolSpec::constant(1.0), 3.7) == std::complex<double>(1.0));
    CHECK(eval_symbol(SymbolSpec::cosine(), PI).real() == doctest::Approx(-1.0));
    CHECK(eval_symbol(SymbolSpec::indicator(0.0, 1.0), 0.5) == std::complex<double>(1.0));
    CHECK(eval_symbol(SymbolSpec::indicator(0.0, 1.0), 2.0) == std::complex<double>(0.0));
    CHECK(eval_symbol(SymbolSpec::power(2.0), 3.0).real() == doctest::Approx(9.0));
    auto pw = SymbolSpec::piecewise({0.0, 1.0, 2.0}, {1.0 + 0.0i, -2.0 + 1.0i});
    CHECK(eval_symbol(pw, 0.3) == std::complex<double>(1.0));
    CHECK(eval_symbol(pw, 1.5) == std::complex<double>(-2.0, 1.0));
    CHECK(eval_symbol(pw, 2.5) == std::complex<double>(0.0));
    auto lam = exp83_lambda();
    CHECK(std::abs(eval_symbol(SymbolSpec::exp_complex(lam), 2.0) -
                   std::exp(lam * 4.0)) < 1e-15);
}

TEST_CASE("validation names the offending field") {
    CHECK_THROWS_WITH_AS(SymbolSpec::indicator(1.0, 1.0).validate(),
                         doctest::Contains("indicator.beta"), validation_error);
    CHECK_THROWS_WITH_AS(SymbolSpec::indicator(-1.0, 1.0).validate(),
                         doctest::Contains("indicator.alpha"), validation_error);
    CHECK_THROWS_WITH_AS(SymbolSpec::piecewise({1.0}, {}).validate(),
                         doctest::Contains("piecewise-constant.knots"), validation_error);
    CHECK_THROWS_WITH_AS(SymbolSpec::piecewise({0.0, 1.0}, {1.0, 2.0}).validate(),
                         doctest::Contains("piecewise-constant.values"), validation_error);
    CHECK_THROWS_WITH_AS(SymbolSpec::exp_complex(1.5 + 0.0i).validate(),
                         doctest::Contains("exp-complex.lambda"), validation_error);
    CHECK_THROWS_WITH_AS(SymbolSpec::sampled(SampledFunction{}).validate(),
                         doctest::Contains("sampled.samples"), validation_error);
    CHECK_THROWS_WITH_AS(SymbolSpec::sum({}).validate(),
                         doctest::Contains("sum.terms"), validation_error);
}

TEST_CASE("growth classes and sup norms") {
    CHECK(SymbolSpec::constant(2.0).sup_norm() == 2.0);
    CHECK(SymbolSpec::cosine().sup_norm() == 1.0);
    CHECK(!SymbolSpec::power(2.0).sup_norm().has_value());
    CHECK(SymbolSpec::indicator(0.0, 1.0).vanishes_at_infinity());
    CHECK(!SymbolSpec::cosine().vanishes_at_infinity());
    Growth g = SymbolSpec::exp_complex(exp83_lambda()).growth();
    CHECK(g.cls == GrowthClass::Subgaussian);
    CHECK(g.delta == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-15));
    auto mix = SymbolSpec::sum({{2.0 + 0.0i, SymbolSpec::cosine()},
                                {1.0 + 0.0i, SymbolSpec::indicator(0.0, 1.0)}});
    CHECK(mix.sup_norm() == 3.0);
    CHECK(mix.growth().cls == GrowthClass::Bounded);
}

TEST_CASE("averages: base case and closed forms") {
    AveragedSymbol a0(SymbolSpec::cosine(), 0);
    CHECK(std::abs(a0.eval(4.0) - std::cos(2.0)) < 1e-15);

    AveragedSymbol p1(SymbolSpec::power(2.0), 1);
    for (double r : {0.0, 1.0, 7.5})
        CHECK(p1.eval(r).real() == doctest::Approx(r + 1.0).epsilon(1e-11));

    auto lam = exp83_lambda();
    AveragedSymbol e1(SymbolSpec::exp_complex(lam), 1);
    for (double r : {0.0, 2.5}) {
        auto expect = std::exp(lam * r) / (1.0 - lam);
        CHECK(std::abs(e1.eval(r) - expect) < 1e-10);
    }
}

TEST_CASE("averages: recursion consistency on memoized levels") {
    for (const SymbolSpec &spec :
         {SymbolSpec::cosine(), SymbolSpec::indicator(0.0, 1.0)}) {
        for (int j : {1, 2}) {
            AveragedSymbol avg(spec, j, 60.0, 1e-9);
            AveragedSymbol below(spec, j - 1, 120.0, 1e-9);
            for (double r : {0.0, 1.0, 10.0}) {
                std::vector<double> local;
                for (double b : spec.breakpoints_r())
                    if (b > r) local.push_back(b - r);
                auto direct = exp_weight_integral(
                    [&](double t) { return below.eval(r + t); }, local, 1.0);
                CHECK(std::abs(avg.eval(r) - direct) < 1e-8);
            }
        }
    }
}

TEST_CASE("averages: linearity and boundedness transfer") {
    auto a = SymbolSpec::cosine();
    auto b = SymbolSpec::indicator(0.0, 1.0);
    auto combo = SymbolSpec::sum({{2.0 + 1.0i, a}, {-0.5 + 0.0i, b}});
    AveragedSymbol ja(a, 1), jb(b, 1), jc(combo, 1);
    for (double r : {0.0, 0.7, 5.0}) {
        auto expect = (2.0 + 1.0i) * ja.eval(r) - 0.5 * jb.eval(r);
        CHECK(std::abs(jc.eval(r) - expect) < 1e-9);
    }
    // averaging contracts the sup norm
    for (const SymbolSpec &spec : {a, b}) {
        double sup = *spec.sup_norm();
        for (int j : {1, 2}) {
            AveragedSymbol avg(spec, j);
            for (double r : {0.0, 1.0, 4.0, 25.0})
                CHECK(std::abs(avg.eval(r)) <= sup + 1e-9);
        }
    }
}

TEST_CASE("class-M membership heuristic") {
    CHECK(in_class_M(SymbolSpec::constant(1.0), 4) == 0);
    CHECK(in_class_M(SymbolSpec::cosine(), 4) == 0);
    CHECK(!in_class_M(SymbolSpec::power(2.0), 4).has_value());
    CHECK(!in_class_M(SymbolSpec::exp_complex(exp83_lambda()), 2).has_value());
    CHECK_THROWS_AS(in_class_M(SymbolSpec::cosine(), 5), std::domain_error);
}
