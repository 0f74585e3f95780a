#include <doctest.h>

#include <cmath>
#include <complex>

#include "fockseq/errors.hpp"
#include "fockseq/io.hpp"

using namespace fockseq;
using namespace std::complex_literals;

TEST_CASE("symbol documents round-trip") {
    SampledFunction grid;
    grid.origin = 0.0;
    grid.step = 0.5;
    grid.samples = {1.0 + 0.0i, 0.25 - 1.0i, 0.0 + 0.0i};
    SymbolSpec spec = SymbolSpec::sum({
        {1.0 + 0.0i, SymbolSpec::sampled(grid)},
        {0.5 - 0.25i, SymbolSpec::indicator(0.0, 2.0)},
        {2.0 + 0.0i, SymbolSpec::cosine()},
        {1.0 + 0.0i, SymbolSpec::exp_complex(-0.5 + 0.25i)},
    });
    SymbolSpec back = symbol_from_json_text(symbol_to_json_text(spec));
    CHECK(back.kind_name() == "sum");
    for (double y : {0.0, 0.3, 0.75, 1.9, 5.0})
        CHECK(eval_symbol(back, y) == eval_symbol(spec, y)); // bit-identical
    // serialization is deterministic
    CHECK(symbol_to_json_text(spec) == symbol_to_json_text(back));
}

TEST_CASE("symbol documents reject malformed input with a field name") {
    CHECK_THROWS_WITH_AS(symbol_from_json_text("{}"), doctest::Contains("kind"),
                         validation_error);
    CHECK_THROWS_WITH_AS(symbol_from_json_text(R"({"kind":"indicator","alpha":0})"),
                         doctest::Contains("indicator.beta"), validation_error);
    CHECK_THROWS_WITH_AS(symbol_from_json_text(R"({"kind":"nope"})"),
                         doctest::Contains("kind"), validation_error);
    CHECK_THROWS_WITH_AS(
        symbol_from_json_text(R"({"kind":"indicator","alpha":2,"beta":1})"),
        doctest::Contains("indicator.beta"), validation_error);
    CHECK_THROWS_AS(symbol_from_json_text("not json at all"), validation_error);
}

TEST_CASE("optional growth declaration is checked") {
    CHECK_NOTHROW(symbol_from_json_text(R"({"kind":"cosine","growth":"bounded"})"));
    CHECK_NOTHROW(symbol_from_json_text(
        R"({"kind":"indicator","alpha":0,"beta":1,"growth":"vanishing-at-infinity"})"));
    CHECK_NOTHROW(symbol_from_json_text(
        R"({"kind":"exp-complex","lambda":[0.3,-0.7],"growth":{"class":"subgaussian","delta":0.5}})"));
    CHECK_THROWS_WITH_AS(
        symbol_from_json_text(R"({"kind":"power","exponent":2,"growth":"bounded"})"),
        doctest::Contains("growth"), validation_error);
    CHECK_THROWS_WITH_AS(
        symbol_from_json_text(
            R"({"kind":"exp-complex","lambda":[0.6,0],"growth":{"class":"subgaussian","delta":0.5}})"),
        doctest::Contains("growth.delta"), validation_error);
    CHECK_THROWS_WITH_AS(
        symbol_from_json_text(R"({"kind":"cosine","growth":"weird"})"),
        doctest::Contains("growth"), validation_error);
}

TEST_CASE("indicator with infinite endpoint round-trips") {
    SymbolSpec spec = symbol_from_json_text(
        R"({"kind":"indicator","alpha":1.5,"beta":"inf"})");
    CHECK(eval_symbol(spec, 2.0) == std::complex<double>(1.0));
    CHECK(eval_symbol(spec, 1.0) == std::complex<double>(0.0));
    SymbolSpec back = symbol_from_json_text(symbol_to_json_text(spec));
    CHECK(eval_symbol(back, 1e9) == std::complex<double>(1.0));
}

TEST_CASE("gamma CSV format") {
    EigenSequence seq;
    seq.values = {1.0 + 0.0i, 0.5 - 0.25i};
    seq.err = {1e-15, 2e-15};
    std::string with_err = gamma_csv(seq, true);
    CHECK(with_err.rfind("n,re,im,err\n", 0) == 0);
    CHECK(with_err.find("\n0,1,0,") != std::string::npos);
    CHECK(with_err.find("\n1,0.5,-0.25,") != std::string::npos);
    std::string closed = gamma_csv(seq, false);
    CHECK(closed.rfind("n,re,im\n", 0) == 0);
    CHECK(closed.find("err") == std::string::npos);
}

TEST_CASE("named targets") {
    TargetSequence cs = named_target("cos-sqrt", 100);
    CHECK(cs.prefix.size() == 101);
    CHECK(cs.at(4).real() == doctest::Approx(std::cos(2.0)).epsilon(1e-15));
    CHECK(cs.at(200).real() ==
          doctest::Approx(std::cos(std::sqrt(200.0))).epsilon(1e-15)); // via rule
    TargetSequence alt = named_target("alternating", 10);
    CHECK(alt.at(3) == std::complex<double>(-1.0));
    TargetSequence eis = named_target("exp-i-sqrt", 10);
    CHECK(std::abs(eis.at(4) - std::exp(2.0i)) < 1e-15);
    CHECK_THROWS_AS(named_target("mystery", 10), validation_error);
}

TEST_CASE("target CSV parsing") {
    std::string path = "test_target_tmp.csv";
    {
        EigenSequence seq;
        seq.values = {1.0 + 0.0i, 0.5 + 0.25i, -1.0 + 0.0i};
        seq.err = {0, 0, 0};
        write_gamma_csv(seq, false, path);
    }
    TargetSequence t = load_target_csv(path);
    REQUIRE(t.prefix.size() == 3);
    CHECK(t.at(1) == std::complex<double>(0.5, 0.25));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_target_csv("does_not_exist.csv"), validation_error);
}

TEST_CASE("approx report keys") {
    ApproxReport r;
    r.bandwidth = 8.0;
    std::string j = approx_report_json(r);
    for (const char *key : {"bandwidth", "fejer_order", "split_n", "tail_sup_error",
                            "head_residual", "total_sup_error_estimate",
                            "amplification_factor", "feasible"})
        CHECK(j.find(key) != std::string::npos);
}
