// verify.hpp — the conformance suite behind the `verify` subcommand: each
// item re-derives one of the pinned identities (exterior-power tables, the
// alternating-coefficient identity, the σ̃ trace formula, the vanishing-order
// sums at s = 1, the infinitesimal-character regions, the factorization
// residual, the χ_I expansion) and reports pass/fail with detail.
#pragma once

#include <string>
#include <vector>

namespace sl4 {

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<VerifyItem> run_verify_suite();

}  // namespace sl4
