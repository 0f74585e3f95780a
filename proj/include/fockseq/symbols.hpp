#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fockseq/sampled_function.hpp"

namespace fockseq {

/*
 * Declarative radial symbols a : [0,inf) -> C.
 *
 * A symbol is a small closed grammar (named analytic forms, indicators,
 * piecewise samples, weighted sums) rather than arbitrary user code, so a
 * symbol document can be serialized, validated and replayed bit-identically.
 */

enum class GrowthClass { Bounded, Vanishing, Subgaussian };

struct Growth {
    GrowthClass cls = GrowthClass::Bounded;
    double delta = 0.0; // only for Subgaussian: |a(r)| <= C e^{delta r^2}, delta < 1
};

struct ConstantSymbol {
    std::complex<double> value;
};

// Characteristic function of alpha <= y < beta on the radius axis
// (beta may be +inf).
struct IndicatorSymbol {
    double alpha = 0.0;
    double beta = 1.0;
};

// Value values[i] on [knots[i], knots[i+1}), zero outside [knots.front(), knots.back()).
struct PiecewiseConstantSymbol {
    std::vector<double> knots;
    std::vector<std::complex<double>> values;
};

struct CosineSymbol {}; // a(y) = cos y

struct PowerSymbol {
    double exponent = 1.0; // a(y) = y^p, p >= 0
};

struct ExpComplexSymbol {
    std::complex<double> lambda; // a(y) = e^{lambda y^2}, Re lambda < 1
};

struct SampledSymbol {
    SampledFunction grid;
};

struct SumSymbol;

using SymbolNode =
    std::variant<ConstantSymbol, IndicatorSymbol, PiecewiseConstantSymbol, CosineSymbol,
                 PowerSymbol, ExpComplexSymbol, SampledSymbol, SumSymbol>;

class SymbolSpec {
public:
    SymbolSpec(); // constant 0
    SymbolSpec(SymbolNode node);

    static SymbolSpec constant(std::complex<double> c);
    static SymbolSpec indicator(double alpha, double beta);
    static SymbolSpec piecewise(std::vector<double> knots,
                                std::vector<std::complex<double>> values);
    static SymbolSpec cosine();
    static SymbolSpec power(double p);
    static SymbolSpec exp_complex(std::complex<double> lambda);
    static SymbolSpec sampled(SampledFunction grid);
    static SymbolSpec sum(std::vector<std::pair<std::complex<double>, SymbolSpec>> terms);

    const SymbolNode &node() const; // defined after SumSymbol below

    // Throws validation_error naming the offending field.
    void validate() const;

    Growth growth() const;

    // Finite sup-norm when the symbol is bounded.
    std::optional<double> sup_norm() const;

    // True when a(y) -> 0 as y -> inf.
    bool vanishes_at_infinity() const;

    // Points where the symbol (or its derivative) jumps, in the y variable.
    std::vector<double> breakpoints() const;

    // Same discontinuity set mapped to the r = y^2 axis.
    std::vector<double> breakpoints_r() const;

    std::string kind_name() const;

private:
    std::shared_ptr<const SymbolNode> node_;
};

struct SumSymbol {
    std::vector<std::pair<std::complex<double>, SymbolSpec>> terms;
};

inline const SymbolNode &SymbolSpec::node() const { return *node_; }

std::complex<double> eval_symbol(const SymbolSpec &spec, double y);

/*
 * Iterated exponential-weight averages
 *
 *   A_0 a(r)   = a(sqrt r)
 *   A_j a(r)   = int_0^inf A_{j-1} a(r+t) e^{-t} dt,   j = 1, 2, ...
 *
 * Boundedness of some level certifies a bounded eigenvalue sequence even for
 * unbounded symbols.  Levels j >= 1 can optionally carry an eagerly built
 * memo grid (piecewise-linear in r) so that higher levels do not pay the
 * full nested-quadrature cost; evaluation after construction is read-only.
 */
class AveragedSymbol {
public:
    // direct nested quadrature (no memo)
    AveragedSymbol(SymbolSpec base, int level);
    // memoized on [0, memo_range] with target interpolation accuracy memo_tol
    AveragedSymbol(SymbolSpec base, int level, double memo_range, double memo_tol);

    int level() const { return level_; }
    const SymbolSpec &base() const { return base_; }
    std::complex<double> eval(double r) const;

    // Estimated sup over the memo range (infinity when no memo and level>0).
    double sup_norm_estimate() const;

private:
    std::complex<double> eval_level(int j, double r) const;

    SymbolSpec base_;
    int level_ = 0;
    double growth_delta_ = 0.0;
    std::vector<double> breaks_r_;
    // memo_[j-1] holds level-j values g(r) = A_j a(r) e^{-delta r} on a
    // prefix of nodes_; level j stays valid one quadrature horizon short of
    // level j-1 so builds never recurse past the grid
    std::vector<double> nodes_;
    std::vector<std::vector<std::complex<double>>> memo_;
    std::vector<double> memo_limit_;
};

AveragedSymbol average_B(const SymbolSpec &spec, int level);

// Least j <= j_max whose average stays bounded on a log-spaced probe grid up
// to r = 1e4.  Heuristic certificate: a finite prefix cannot decide
// boundedness, so the verdict is "bounded on the probe grid only".
std::optional<int> in_class_M(const SymbolSpec &spec, int j_max);

} // namespace fockseq
