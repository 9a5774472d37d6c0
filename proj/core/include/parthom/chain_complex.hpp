#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "parthom/integer.hpp"
#include "parthom/sparse_matrix.hpp"

namespace parthom {

// Reduced Betti numbers indexed from degree -1 upward; only nonzero entries
// are stored.
class BettiVector {
  public:
    void set(int degree, Integer value);
    Integer get(int degree) const;
    const std::map<int, Integer>& entries() const& { return entries_; }
    // ranging over the entries of a temporary would dangle
    const std::map<int, Integer>& entries() const&& = delete;
    bool operator==(const BettiVector& o) const { return entries_ == o.entries_; }
    std::string to_string() const;

  private:
    std::map<int, Integer> entries_;
};

// Graded basis with signed integer boundary matrices.  Index i of the arrays
// corresponds to degree i - 1, so the empty face / empty chain lives at
// index 0.  boundary[i] maps degree i-1 into degree i-2; boundary[0] has no
// rows.  Labels are optional (used for dumps and error messages).
struct ChainComplex {
    std::vector<std::size_t> cells;
    std::vector<SparseIntMatrix> boundary;
    std::vector<std::vector<std::string>> labels;

    int max_degree() const { return static_cast<int>(cells.size()) - 2; }
    std::size_t cells_at(int degree) const;

    // del o del = 0, and matrix shapes match the graded basis sizes.
    void validate() const;

    Integer euler_characteristic_f() const;  // alternating sum of cell counts

    // Per-degree triplet dump "i j value" for external verification.
    void dump(std::ostream& os) const;
};

// beta_i = dim C_i - rank del_i - rank del_{i+1}, ranks exact.
BettiVector reduced_betti(const ChainComplex& k);

// Reduced Euler characteristic; computes both the f-vector sum and the
// alternating sum of Betti numbers and insists they agree.
Integer euler_characteristic(const ChainComplex& k);

}  // namespace parthom
