#pragma once

#include <stdexcept>
#include <string>

namespace fockseq {

// A symbol or target document failed validation; the message names the field.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A symbol grows too fast for the requested operation (divergent integral).
class growth_error : public std::runtime_error {
public:
    explicit growth_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Quadrature failed to reach the requested accuracy; carries the best estimate.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string &msg, double best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// A pipeline configuration cannot work (aliasing, amplification cap, ...).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace fockseq
