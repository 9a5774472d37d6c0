#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "parthom/composition.hpp"

namespace parthom {

// A filter in Comp(n) viewed as a simplicial complex under the dual order.
//
// Faces are bitmask subsets of the ground set.  For a top-level filter the
// ground set is all of {1..n-1} and a face with mask m is the composition
// decode(n, m); its dimension is popcount(m) - 1, so the empty face (the
// composition (n)) has dimension -1.
//
// For links and joins the ground set excludes the cuts of a base composition
// and faces are stored relative to that base (see LinkComplex); the face
// poset structure and boundary maps are identical, only the labels differ.
class CompositionComplex {
  public:
    CompositionComplex() = default;
    CompositionComplex(int n, FaceMask ground, std::unordered_set<FaceMask> faces);

    int n() const { return n_; }
    FaceMask ground() const { return ground_; }
    const std::unordered_set<FaceMask>& faces() const { return faces_; }

    bool empty() const { return faces_.empty(); }          // the void complex
    std::size_t size() const { return faces_.size(); }
    bool contains(FaceMask m) const { return faces_.count(m) > 0; }

    // -1 for the empty-face-only complex; -2 for the void complex.
    int dim() const;

    // Faces sorted by (dimension, numeric mask); the canonical iteration order.
    std::vector<FaceMask> sorted_faces() const;

    // Faces not properly contained in another face.
    std::vector<FaceMask> facets() const;

    bool operator==(const CompositionComplex& o) const {
        return n_ == o.n_ && ground_ == o.ground_ && faces_ == o.faces_;
    }

  private:
    int n_ = 0;
    FaceMask ground_ = 0;
    std::unordered_set<FaceMask> faces_;
};

// The link of a base composition: a complex on the ground set
// {1..n-1} minus encode(base), whose faces d correspond to the refinements
// base | d in the ambient complex.  A top-level filter is the special case
// base = (n).  Equality is face-wise: same base and same relative faces.
struct LinkComplex {
    Composition base;
    CompositionComplex complex;

    int n() const { return base.n(); }

    // The ambient-complex mask of a relative face.
    FaceMask absolute(FaceMask rel) const { return base.encode() | rel; }

    bool operator==(const LinkComplex& o) const {
        return base == o.base && complex == o.complex;
    }
};

LinkComplex as_rooted(const CompositionComplex& delta);

// The filter generated by a set of compositions: the union of their simplices
// (all coarsenings of all generators).
CompositionComplex filter_from_generators(int n, const std::vector<Composition>& gens);

// All compositions of n: the full Boolean complex on {1..n-1}.
CompositionComplex full_complex(int n);

// All proper coarsenings of c; requires |c| >= 2.
CompositionComplex boundary_of_simplex(const Composition& c);

// Faces of dimension <= k, k >= -1.
CompositionComplex skeleton(const CompositionComplex& delta, int k);

// The principal filter of refinements of c, re-rooted at c.
// Dimension shift: dim_link(d) = dim_delta(d) - |c| + 1.
LinkComplex link(const CompositionComplex& delta, const Composition& c);

// Join of complexes: faces are concatenations, the cut vertex at position m
// joins every pair.  The result is rooted at the concatenated base since the
// join is not a filter in Comp(m + m').
LinkComplex join(const LinkComplex& a, const LinkComplex& b);
LinkComplex join(const CompositionComplex& a, const CompositionComplex& b);

// True when lambda is a knapsack partition: all bounded sub-multiset sums
// are distinct.
bool is_knapsack(const std::vector<int>& lambda);

// The complex with facets (c1,...,c_{k-1}, m) where type(c1..c_{k-1}) is the
// multiset lambda.  Throws when lambda is not a knapsack partition.
CompositionComplex knapsack_complex(const std::vector<int>& lambda, int m);

// Interior faces by the pseudomanifold-boundary rule: the boundary subcomplex
// is the downward closure of the codimension-1 faces lying in exactly one
// facet, and the interior is everything else.  Requires a pure complex with
// every codimension-1 face in at most two facets.
std::vector<Composition> interior_faces(const CompositionComplex& delta);

}  // namespace parthom
