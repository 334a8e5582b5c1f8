#pragma once

#include <vector>

#include "ijord/jordan.hpp"

namespace ijord {

// Bounded exhaustive generation of valid simple cuspidal descriptors: base
// cardinalities, endo-class shapes up to max_endo_degree, N up to max_n,
// every factor split, Lusztig data with b <= max_b over a small polynomial
// inventory, and both involution flags per factor.  Fully deterministic.
struct CorpusOptions {
    std::vector<long long> qs{3, 5};
    long long max_endo_degree = 4;
    long long max_n = 6;
    long long max_b = 2;
    int max_polys_per_degree = 2; // nontrivial inventory entries per degree
    int max_data_per_factor = 4;
    bool vary_involutions = true;
};

std::vector<SimpleCuspidalDescriptor> generate_corpus(const CorpusOptions& opts = {});

// Multi-part compositions sampled from the corpus (distinct endo labels, at
// most one depth-zero part, seeded chi flags).
std::vector<std::vector<GeneralPart>> generate_compositions(
    const std::vector<SimpleCuspidalDescriptor>& corpus, int count, unsigned long long seed);

} // namespace ijord
