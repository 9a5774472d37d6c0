#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace parthom {

// Column-major sparse integer matrix.  Entries are built column by column;
// boundary matrices only ever hold +-1 but elimination intermediates are
// handled exactly (64-bit fast path, arbitrary precision on overflow).
class SparseIntMatrix {
  public:
    struct Entry {
        std::uint32_t row;
        std::int32_t value;
    };

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
        columns_.resize(cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }

    void add_entry(std::size_t col, std::size_t row, std::int32_t value);

    std::size_t nnz() const;

    // True when this * other is the zero matrix (requires other.rows == cols).
    bool product_is_zero(const SparseIntMatrix& other) const;

    // Rank over the rationals, computed exactly: sparse elimination on unit
    // pivots with Markowitz-style pivot selection, then fraction-free Bareiss
    // on whatever dense residue remains.
    std::size_t exact_rank() const;

    // Triplet lines "i j value" (0-based), one per entry, in column order.
    void dump_triplets(std::ostream& os) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

}  // namespace parthom
