// Benchmark of the OpenMP-parallel sweeps against their serial reference
// loops.  Also asserts that both paths produce bit-identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "fockseq/eigenvalues.hpp"
#include "fockseq/heat_approx.hpp"
#include "fockseq/parallel.hpp"
#include "fockseq/sqrt_metric.hpp"
#include "fockseq/symbols.hpp"

using namespace fockseq;

namespace {

template <typename F>
double timed(F &&f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void row(const char *name, double ts, double tp, bool identical) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx   %s\n", name, ts, tp, ts / tp,
                identical ? "bit-identical" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads: %d\n", thread_count());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

    {
        SymbolSpec cosine = SymbolSpec::cosine();
        EigenSequence a, b;
        double ts = timed([&] { a = gamma_prefix_serial(cosine, 1500); });
        double tp = timed([&] { b = gamma_prefix(cosine, 1500); });
        row("gamma_prefix(cos, N=1500)", ts, tp, a.values == b.values && a.err == b.err);
    }

    {
        std::vector<std::complex<double>> prefix(20001);
        for (std::size_t n = 0; n < prefix.size(); ++n)
            prefix[n] = std::cos(std::sqrt(static_cast<double>(n)));
        double ms = 0.0, mp = 0.0;
        double ts = timed([&] { ms = modulus_estimate_serial(prefix, 0.25); });
        double tp = timed([&] { mp = modulus_estimate(prefix, 0.25); });
        row("modulus_estimate(N=2e4, d=0.25)", ts, tp, ms == mp);
    }

    {
        std::vector<double> a(400), b(400);
        double ts = timed([&] {
            serial_for(400, [&](std::ptrdiff_t i) { a[static_cast<std::size_t>(i)] = convoluzation_error(i + 1); });
        });
        double tp = timed([&] {
            parallel_for(400, [&](std::ptrdiff_t i) { b[static_cast<std::size_t>(i)] = convoluzation_error(i + 1); });
        });
        row("convoluzation_error(n<=400)", ts, tp, a == b);
    }

    {
        std::vector<double> a(100000), b(100000);
        double ts = timed([&] {
            serial_for(100000, [&](std::ptrdiff_t i) { a[static_cast<std::size_t>(i)] = kappa(i, i + 1); });
        });
        double tp = timed([&] {
            parallel_for(100000, [&](std::ptrdiff_t i) { b[static_cast<std::size_t>(i)] = kappa(i, i + 1); });
        });
        row("kappa(n,n+1) sweep (n<=1e5)", ts, tp, a == b);
    }

    return 0;
}
