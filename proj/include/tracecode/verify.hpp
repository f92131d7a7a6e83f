#pragma once

#include <string>
#include <vector>

#include "tracecode/ghw.hpp"

namespace tracecode {

// One checked claim. status is one of:
//   "confirmed"               the stated closed form matches enumeration
//   "discrepancy"             an unexplained mismatch (verify exits nonzero)
//   "table-discrepancy"       the known swapped-multiplicity record (explained)
//   "inapplicable-degenerate" the claim presumes an injective codeword map and
//                             the spec was detected degenerate
//   "skipped-budget"          enumeration refused by the budget
struct ClaimResult {
    std::string id;
    std::string status;
    std::string detail;
};

struct VerifyOptions {
    uint64_t seed = 0;
    unsigned threads = 1;
    uint64_t budget = 10'000'000'000ULL;
    bool expsum_checks = true;
    bool code_checks = true;
    bool ghw_checks = true;
    unsigned pair_samples = 1000;  // sampled (a, b) pairs when exhaustion is too big
    unsigned spec_samples = 64;    // sampled code specs when exhaustion is too big
};

struct VerifyReport {
    Params params;
    std::vector<ClaimResult> claims;

    uint64_t count_status(const std::string& status) const;
    // 0 iff every claim is confirmed, explained, degenerate-flagged or skipped.
    int exit_code() const;
};

VerifyReport run_verify(const FieldCtx& f, const VerifyOptions& opt = {});

}  // namespace tracecode
