#pragma once

#include <string>
#include <vector>

#include "ijord/corpus.hpp"

namespace ijord {

struct InvariantResult {
    std::string name;
    long long checked = 0;
    long long failed = 0;
};

struct VerifyOptions {
    unsigned long long seed = 1;
    long long bound = FiniteField::kDefaultBound;
    bool inject_mutant = false; // corrupt one multiset to demonstrate reporting
    CorpusOptions corpus;
};

// Runs every module's invariant suite over the bounded corpus and returns
// one row per invariant.  Deterministic for a fixed seed.
std::vector<InvariantResult> run_verification(const VerifyOptions& opts);

std::string format_verification(const std::vector<InvariantResult>& results,
                                const VerifyOptions& opts);

bool verification_passed(const std::vector<InvariantResult>& results);

} // namespace ijord
