#pragma once

#include <random>
#include <string>
#include <vector>

#include "parthom/complexes.hpp"

namespace parthom {

inline constexpr std::uint64_t kDefaultSeed = 20250809;

struct NamedFilter {
    std::string spec;
    CompositionComplex delta;
};

// A seeded random nonempty filter on Comp(n): the closure of a few random
// generator masks.  mt19937_64 keeps the stream identical across platforms.
CompositionComplex random_filter(int n, std::mt19937_64& rng);

// Every downward-closed nonempty family of subsets of {1..n-1}; feasible for
// n <= 5 (at most 2^16 candidate families).
std::vector<CompositionComplex> all_filters(int n);

// The standing zoo of named filters at a given n: full complex, divisible
// simplices and their boundaries and skeleta, semigroup complexes, knapsack
// complexes, and a couple of non-pure generators.
std::vector<NamedFilter> canonical_families(int n);

}  // namespace parthom
