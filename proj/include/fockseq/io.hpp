#pragma once

#include <string>

#include "fockseq/eigenvalues.hpp"
#include "fockseq/heat_approx.hpp"
#include "fockseq/oscillation.hpp"
#include "fockseq/symbols.hpp"

namespace fockseq {

/*
 * Document formats.
 *
 * Symbol documents are JSON trees with a `kind` field and per-kind
 * parameters; complex numbers are either a plain number or a [re, im] pair:
 *
 *   {"kind":"constant","value":1}
 *   {"kind":"indicator","alpha":0,"beta":1}
 *   {"kind":"piecewise-constant","knots":[0,1,2],"values":[1,[0,-1]]}
 *   {"kind":"cosine"}
 *   {"kind":"power","exponent":2}
 *   {"kind":"exp-complex","lambda":[0.2928932188134524,-0.7071067811865476]}
 *   {"kind":"sampled","origin":0,"step":0.05,"samples":[...]}
 *   {"kind":"sum","terms":[{"weight":1,"spec":{...}}, ...]}
 *
 * Target CSVs carry rows `n,re,im` (header optional) with contiguous n from
 * 0.  Gamma CSVs are written as `n,re,im,err` (err omitted for closed
 * forms).  All numbers print with enough digits to round-trip exactly.
 */

SymbolSpec symbol_from_json_text(const std::string &text);
std::string symbol_to_json_text(const SymbolSpec &spec);

SymbolSpec load_symbol_file(const std::string &path);
void save_symbol_file(const SymbolSpec &spec, const std::string &path);

// Named built-in targets: cos-sqrt, exp-i-sqrt, constant, alternating, or
// gamma-of:<symbol-file>.  The prefix is materialized eagerly up to
// max_index (parallel, deterministic); named closed forms also install an
// evaluation rule.
TargetSequence named_target(const std::string &name, std::int64_t max_index);

// CSV rows n,re[,im]; requires contiguous indices from 0.
TargetSequence load_target_csv(const std::string &path);

std::string gamma_csv(const EigenSequence &seq, bool with_err);
void write_gamma_csv(const EigenSequence &seq, bool with_err, const std::string &path);

std::string approx_report_json(const ApproxReport &report);

} // namespace fockseq
