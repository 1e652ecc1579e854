// Seeded randomized sampling of genuine tame automorphisms and the census
// of their multidegrees.
//
// Samples are factor lists of random unimodular affine maps and random
// shears, composed under a total-degree cap; a sample whose composition
// would exceed the cap at any step is discarded and redrawn from the next
// attempt sub-stream (bounded retries, then the identity). Identical
// parameters produce a byte-identical census.

#pragma once

#include "tamedeg/polymap.hpp"

#include <cstdint>
#include <vector>

namespace tamedeg {

struct SearchParams {
    int dimension = 3;
    int factor_count_max = 6;
    std::int64_t shear_degree_max = 3;
    std::vector<std::int64_t> coefficient_pool = {-3, -2, -1, 1, 2, 3};
    std::int64_t sample_count = 10000;
    std::uint64_t seed = 0;
    std::int64_t degree_cap = 30;
    int max_retries = 32;

    void validate() const;
};

/// The index-th sample of the stream identified by params.seed. Every
/// returned factor list is invertible by construction and its composition
/// respects params.degree_cap.
FactorList sample_tame(const SearchParams& params, std::int64_t index);

struct CensusEntry {
    std::vector<std::int64_t> degrees;  // sorted multidegree
    std::int64_t count = 0;
    std::int64_t example_index = 0;  // first sample index with this tuple
};

struct Census {
    SearchParams params;
    std::int64_t total = 0;
    std::vector<CensusEntry> entries;  // ascending by degree tuple
};

Census census(const SearchParams& params);

}  // namespace tamedeg
