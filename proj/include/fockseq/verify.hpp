#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fockseq {

// One checked claim with its measured margin.
struct VerifyEntry {
    std::string suite;
    std::string claim;
    double bound = 0.0;
    double measured = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    bool kappa = true;
    bool convoluzation = true;
    bool stirling = true;
    bool asymptotic = true;
    std::int64_t max_n_kappa = 10000;
    std::int64_t max_n_convoluzation = 1000;
    std::int64_t max_n_stirling = 10000;
    std::int64_t max_n_asymptotic = 10000;
};

// Runs the selected claim suites.  Entirely deterministic: repeated runs
// produce identical entries byte for byte once serialized.
std::vector<VerifyEntry> run_verify(const VerifyOptions &opt);

// JSON array of {suite, claim, bound, measured, pass} objects.
std::string verify_report_json(const std::vector<VerifyEntry> &entries);

bool verify_all_pass(const std::vector<VerifyEntry> &entries);

} // namespace fockseq
