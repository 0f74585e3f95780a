#pragma once

#include <complex>
#include <vector>

namespace fockseq {

// Dense symmetric positive-definite matrix in row-major order, sized for
// the head-correction solves (a few hundred unknowns at most).
struct SpdMatrix {
    int n = 0;
    std::vector<double> a; // n*n

    double &at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// In-place Cholesky factorization A = L L^T; throws if not positive definite.
void cholesky_factor(SpdMatrix &m);

// Solve L L^T x = b given the factor from cholesky_factor.
std::vector<double> cholesky_solve(const SpdMatrix &factor, std::vector<double> rhs);
std::vector<std::complex<double>> cholesky_solve(const SpdMatrix &factor,
                                                 std::vector<std::complex<double>> rhs);

// lambda_max / lambda_min estimate by power iteration on A and on A^{-1}
// (via the Cholesky factor).  Deterministic start vector.
double spd_condition_estimate(const SpdMatrix &matrix, const SpdMatrix &factor);

} // namespace fockseq
