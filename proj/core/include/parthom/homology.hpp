#pragma once

#include <functional>
#include <string>
#include <vector>

#include "parthom/chain_complex.hpp"
#include "parthom/complexes.hpp"

namespace parthom {

// Chain complex of a composition complex (or of a link, whose faces are
// stored relative to its base): degree-i basis is the faces of dimension i
// in ascending (popcount, mask) order, and the boundary of a face is the
// alternating sum of single-element deletions, which for compositions is the
// alternating sum of adjacent-part merges.
ChainComplex chain_complex_of(const CompositionComplex& delta);

BettiVector reduced_betti_of(const CompositionComplex& delta);
Integer euler_characteristic_of(const CompositionComplex& delta);

// A finite poset given by its elements and a strict comparability oracle.
struct FinitePoset {
    std::size_t size = 0;
    std::function<bool(std::size_t, std::size_t)> strictly_less;
    std::vector<std::string> labels;  // optional, parallel to element indices
};

// Order complex: degree-i basis is the chains with i+1 elements, boundary is
// the alternating element deletion.  Chains are enumerated in lexicographic
// order of their element index sequences.
ChainComplex order_complex(const FinitePoset& poset);

}  // namespace parthom
