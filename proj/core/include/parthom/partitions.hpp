#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parthom/chain_complex.hpp"
#include "parthom/complexes.hpp"
#include "parthom/composition.hpp"
#include "parthom/homology.hpp"
#include "parthom/specht.hpp"

namespace parthom {

// Blocks are element bitmasks over {1..n} (bit i-1 = element i).
using BlockMask = std::uint16_t;

// Set partition of {1..n}; blocks stored sorted by their minimum element.
struct SetPartition {
    std::vector<BlockMask> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    std::vector<int> type() const;  // block sizes, sorted descending
    // True when every block of this partition is contained in a block of o.
    bool refines(const SetPartition& o) const;
    std::string to_string() const;  // {1,2|3,4}
    bool operator==(const SetPartition& o) const { return blocks == o.blocks; }
};

// Ordered set partition of {1..n}: blocks in a fixed order.
struct OrderedSetPartition {
    std::vector<BlockMask> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    Composition type() const;
    std::string to_string() const;  // ({3}|{1,2,4})
    bool operator==(const OrderedSetPartition& o) const { return blocks == o.blocks; }
};

// The ordered set partition whose blocks are consecutive segments of alpha of
// lengths d1, d2, ....
OrderedSetPartition sigma(const Permutation& alpha, const Composition& d);

SetPartition forgetful(const OrderedSetPartition& sigma);

inline constexpr int kDefaultOracleBound = 7;
inline constexpr int kHardOracleBound = 8;

// All of Q*_delta, graded by block count: strata[k] holds the ordered set
// partitions with k+1 blocks (so strata[0] is the single cell ([n]) of degree
// -1), each stratum sorted canonically.
std::vector<std::vector<OrderedSetPartition>> q_star(const CompositionComplex& delta);

// Chain complex of Q*_delta: degree k-2 basis is the sigma with k blocks and
// type in delta; boundary merges adjacent blocks with alternating signs.
ChainComplex q_star_chain_complex(const CompositionComplex& delta);

// The filter Pi*_delta: set partitions pi admitting a block order with the
// n-containing block last whose type lies in delta.  Elements sorted
// canonically (block count descending, then block sequence).
struct PiStarPoset {
    int n = 0;
    std::vector<SetPartition> elements;  // excludes nothing; 1-hat included
};
PiStarPoset pi_star(const CompositionComplex& delta);

bool pi_star_contains(const CompositionComplex& delta, const SetPartition& pi);

// The poset Pi*_delta minus its maximum under the partition-lattice order
// (merging blocks), ready for order_complex.
FinitePoset pi_star_poset_without_top(const CompositionComplex& delta);

// True when membership of a composition in delta depends only on its
// multiset of parts.  Every filter induced by a filter of integer
// partitions (divisible, semigroup, ...) is type-closed.
bool is_type_closed(const CompositionComplex& delta);

// The brute-force target of the main theorem: the complex of chains of
// Pi*_delta minus 1-hat that lift to chains of Q*_delta minus 1-hat, i.e.
// the image of the barycentric subdivision of Q*_delta under the forgetful
// map.  For a type-closed delta every chain of the lattice order lifts, so
// this is exactly the order complex of Pi*_delta minus 1-hat (and is built
// as such); on general filters a lattice chain can lack an ordered witness
// and contributes no cell.
ChainComplex pi_star_oracle_complex(const CompositionComplex& delta);

// The liftable-chain complex built by the lifting search, regardless of
// type-closedness (exposed for cross-checking the two constructions).
ChainComplex liftable_chain_complex(const CompositionComplex& delta);

// Reduced Betti numbers of pi_star_oracle_complex, computed by exact rank.
// Throws when n exceeds the bound.
BettiVector oracle_betti(const CompositionComplex& delta,
                         int bound = kDefaultOracleBound);

enum class FixedCountMode { Auto, Exhaustive, CycleAssignment };

// Number of cells of degree i in Q*_delta fixed by a permutation of cycle
// type t (a partition of n-1, acting with n as a fixed point).
Integer fixed_count(const CycleType& t, int degree, const CompositionComplex& delta,
                    FixedCountMode mode = FixedCountMode::Auto);

// A canonical representative of the cycle type t inside S_{n-1} <= S_n:
// cycles laid out consecutively on 1..n-1.
Permutation cycle_type_representative(const CycleType& t, int n);

}  // namespace parthom
