#pragma once

#include <string>
#include <vector>

#include "parthom/complexes.hpp"
#include "parthom/composition.hpp"

namespace parthom {

// Cycle type of an element of S_{n-1}: a partition of n-1, parts descending.
class CycleType {
  public:
    explicit CycleType(std::vector<int> parts);

    static CycleType identity(int m);  // m fixed points: type 1^m

    const std::vector<int>& parts() const { return parts_; }
    int m() const { return m_; }  // the integer being partitioned (= n-1)
    bool is_identity() const;

    std::string to_string() const;
    bool operator==(const CycleType& o) const { return parts_ == o.parts_; }
    bool operator<(const CycleType& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
    int m_ = 0;
};

// All cycle types of S_m, deterministically ordered.
std::vector<CycleType> all_cycle_types(int m);

// A skew shape described by bottom-to-top row lengths and, between adjacent
// rows, whether they overlap in one column.  Border strips have every flag
// set; fully disconnected shapes have none.  `zero` marks the zero-module
// placeholder that stands in for B*(c) when c ends in 1 (and has more than
// one part).
struct SkewShapeSpec {
    std::vector<int> rows;
    std::vector<bool> overlaps;
    bool zero = false;

    int boxes() const;
    // ASCII rendering, one line per row, top row first.
    std::string ascii() const;
};

// B*(c) = B(c-1): the border strip on n-1 boxes, or the zero marker.
SkewShapeSpec shape_b_star(const Composition& c);

// B#(c) = B(c/1): always defined, on n-1 boxes.
SkewShapeSpec shape_b_sharp(const Composition& c);

// B*(d, b) for d refining b: rows d1,...,d_{r-1},d_r - 1 with rows j, j+1
// overlapping exactly when the jth initial sum of d is an initial sum of b-1.
SkewShapeSpec shape_b_star_interval(const Composition& d, const Composition& b);

// dim S^{B*(c)} = beta*_n(c).
Integer dim_specht_star(const Composition& c);

// dim S^{B*(d,b)} = sum of beta*_n(c) over the interval d <= c <= b in the
// coarsening order; requires d to refine b.
Integer dim_specht_interval(const Composition& d, const Composition& b);

// Trace of a permutation of cycle type t on the permutation module M^{B#(c)}:
// the number of ways to distribute the cycles of t (with n fixed in the last
// row) into rows of sizes (c1,...,c_{k-1},c_k - 1), every row a disjoint
// union of whole cycles.
Integer perm_module_character(const Composition& c, const CycleType& t);

// Trace of t on the Specht module S^{B*(c)}, by inclusion-exclusion over the
// coarsenings of c.
Integer specht_star_character(const Composition& c, const CycleType& t);

// Both sides of the virtual-representation identity for the filter delta:
// lhs = sum_i (-1)^i . #cells of degree i of Q*_delta fixed by t,
// rhs = sum_{c in delta} (-1)^{|c|-1} . chi~(link_c(delta)) . chi_{S^{B*(c)}}(t).
struct LefschetzPair {
    Integer lhs;
    Integer rhs;
    bool equal() const { return lhs == rhs; }
};
LefschetzPair lefschetz_check(const CompositionComplex& delta, const CycleType& t);

// All cycle types at once, sharing one enumeration of Q*_delta (and one link
// scan) across the classes.
std::vector<std::pair<CycleType, LefschetzPair>> lefschetz_check_all(
    const CompositionComplex& delta);

}  // namespace parthom
