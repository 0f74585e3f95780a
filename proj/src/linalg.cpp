#include "fockseq/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace fockseq {

void cholesky_factor(SpdMatrix &m) {
    const int n = m.n;
    for (int j = 0; j < n; ++j) {
        double d = m.at(j, j);
        for (int k = 0; k < j; ++k) d -= m.at(j, k) * m.at(j, k);
        if (!(d > 0.0)) throw std::runtime_error("cholesky_factor: matrix not SPD");
        d = std::sqrt(d);
        m.at(j, j) = d;
        for (int i = j + 1; i < n; ++i) {
            double s = m.at(i, j);
            for (int k = 0; k < j; ++k) s -= m.at(i, k) * m.at(j, k);
            m.at(i, j) = s / d;
        }
    }
}

namespace {

template <typename T>
std::vector<T> solve_impl(const SpdMatrix &f, std::vector<T> b) {
    const int n = f.n;
    for (int i = 0; i < n; ++i) {
        T s = b[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) s -= f.at(i, k) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(i)] = s / f.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        T s = b[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < n; ++k) s -= f.at(k, i) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(i)] = s / f.at(i, i);
    }
    return b;
}

} // namespace

std::vector<double> cholesky_solve(const SpdMatrix &factor, std::vector<double> rhs) {
    return solve_impl(factor, std::move(rhs));
}

std::vector<std::complex<double>> cholesky_solve(const SpdMatrix &factor,
                                                 std::vector<std::complex<double>> rhs) {
    return solve_impl(factor, std::move(rhs));
}

double spd_condition_estimate(const SpdMatrix &matrix, const SpdMatrix &factor) {
    const int n = matrix.n;
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = 1.0 + 0.5 * ((i * 2654435761u) % 97) / 97.0;

    auto normalize = [&](std::vector<double> &x) {
        double s = 0.0;
        for (double e : x) s += e * e;
        s = std::sqrt(s);
        if (s > 0.0)
            for (double &e : x) e /= s;
        return s;
    };

    normalize(v);
    double lmax = 0.0;
    for (int it = 0; it < 60; ++it) {
        std::vector<double> w(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                w[static_cast<std::size_t>(i)] += matrix.at(i, j) * v[static_cast<std::size_t>(j)];
        lmax = normalize(w);
        v = std::move(w);
    }

    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = 1.0 - 0.5 * ((i * 40503u) % 89) / 89.0;
    normalize(v);
    double inv_norm = 1.0;
    for (int it = 0; it < 60; ++it) {
        std::vector<double> w = cholesky_solve(factor, v);
        inv_norm = normalize(w);
        v = std::move(w);
    }
    double lmin = 1.0 / inv_norm;
    return lmax / lmin;
}

} // namespace fockseq
