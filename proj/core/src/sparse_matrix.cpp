#include "parthom/sparse_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "parthom/integer.hpp"

namespace parthom {

namespace {

struct Int64Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}

inline Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer checked_sub(const Integer& a, const Integer& b) { return a - b; }

template <typename T>
bool is_unit(const T& v) {
    return v == 1 || v == -1;
}

// Fraction-free Bareiss elimination on a dense residue; returns its rank.
template <typename T>
std::size_t bareiss_rank(std::vector<std::vector<T>> m) {
    const std::size_t nrows = m.size();
    if (nrows == 0) return 0;
    const std::size_t ncols = m[0].size();
    T prev = 1;
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t piv = row;
        while (piv < nrows && m[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(m[piv], m[row]);
        const T pivot = m[row][col];
        for (std::size_t i = row + 1; i < nrows; ++i) {
            if (m[i][col] == 0 && pivot == prev) continue;
            for (std::size_t j = col + 1; j < ncols; ++j) {
                T num = checked_sub(checked_mul(pivot, m[i][j]),
                                    checked_mul(m[i][col], m[row][j]));
                m[i][j] = static_cast<T>(num / prev);
            }
            m[i][col] = 0;
        }
        prev = pivot;
        ++rank;
        ++row;
    }
    return rank;
}

// Sparse elimination with unit pivots.  Rows are kept as sorted (col, value)
// vectors; column occupancy lists are maintained lazily.
template <typename T>
class Eliminator {
  public:
    explicit Eliminator(const SparseIntMatrix& m)
        : ncols_(m.cols()),
          rows_(m.rows()),
          col_rows_(m.cols()),
          col_alive_(m.cols(), true),
          row_alive_(m.rows(), true) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& e : m.column(j))
                rows_[e.row].push_back({static_cast<std::uint32_t>(j), static_cast<T>(e.value)});
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::sort(rows_[i].begin(), rows_[i].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [col, val] : rows_[i]) col_rows_[col].push_back(i);
            push(i);
        }
    }

    std::size_t run() {
        while (true) {
            drain();
            // Rows left without unit entries may have acquired one after
            // later updates; retry until a fixed point, then go dense.
            bool progress = false;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (row_alive_[i] && !rows_[i].empty() && has_unit(i)) {
                    push(i);
                    progress = true;
                }
            if (!progress) break;
        }
        return rank_ + dense_residue_rank();
    }

  private:
    using Row = std::vector<std::pair<std::uint32_t, T>>;

    void push(std::size_t i) {
        queue_.push({static_cast<std::uint32_t>(rows_[i].size()), static_cast<std::uint32_t>(i)});
    }

    bool has_unit(std::size_t i) const {
        for (const auto& [col, val] : rows_[i])
            if (is_unit(val)) return true;
        return false;
    }

    std::size_t live_count(std::uint32_t col) {
        auto& list = col_rows_[col];
        std::size_t k = 0;
        for (std::size_t idx = 0; idx < list.size(); ++idx) {
            std::size_t r = list[idx];
            if (row_alive_[r] && row_has(r, col)) list[k++] = list[idx];
        }
        list.resize(k);
        return k;
    }

    bool row_has(std::size_t r, std::uint32_t col) const {
        const Row& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        return it != row.end() && it->first == col;
    }

    void drain() {
        while (!queue_.empty()) {
            auto [nnz, r] = queue_.top();
            queue_.pop();
            if (!row_alive_[r] || rows_[r].size() != nnz) continue;  // stale
            if (rows_[r].empty()) {
                row_alive_[r] = false;
                continue;
            }
            // Choose the unit entry whose column is sparsest.
            std::uint32_t best_col = 0;
            std::size_t best_count = SIZE_MAX;
            T best_val{};
            for (const auto& [col, val] : rows_[r]) {
                if (!is_unit(val)) continue;
                std::size_t cnt = live_count(col);
                if (cnt < best_count) {
                    best_count = cnt;
                    best_col = col;
                    best_val = val;
                }
            }
            if (best_count == SIZE_MAX) continue;  // no unit entry; leave for retry
            eliminate(r, best_col, best_val);
        }
    }

    void eliminate(std::size_t r, std::uint32_t c, const T& pivot) {
        ++rank_;
        row_alive_[r] = false;
        col_alive_[c] = false;
        Row pivot_row = std::move(rows_[r]);
        rows_[r].clear();

        std::vector<std::size_t> targets = std::move(col_rows_[c]);
        col_rows_[c].clear();
        for (std::size_t s : targets) {
            if (!row_alive_[s]) continue;
            const Row& row = rows_[s];
            auto it = std::lower_bound(row.begin(), row.end(), c,
                                       [](const auto& e, std::uint32_t cc) { return e.first < cc; });
            if (it == row.end() || it->first != c) continue;
            // multiplier chosen so the entry in column c cancels (pivot is +-1)
            T mult = pivot == 1 ? it->second : static_cast<T>(-it->second);
            combine(s, pivot_row, mult);
            push(s);
        }
    }

    // rows_[s] -= mult * pivot_row
    void combine(std::size_t s, const Row& pivot_row, const T& mult) {
        const Row& a = rows_[s];
        Row out;
        out.reserve(a.size() + pivot_row.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < pivot_row.size()) {
            if (j == pivot_row.size() || (i < a.size() && a[i].first < pivot_row[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || pivot_row[j].first < a[i].first) {
                T v = checked_mul(mult, pivot_row[j].second);
                v = checked_sub(static_cast<T>(0), v);
                if (v != 0) {
                    out.push_back({pivot_row[j].first, v});
                    note_new_column(s, pivot_row[j].first);
                }
                ++j;
            } else {
                T v = checked_sub(a[i].second, checked_mul(mult, pivot_row[j].second));
                if (v != 0) out.push_back({a[i].first, v});
                ++i;
                ++j;
            }
        }
        rows_[s] = std::move(out);
    }

    void note_new_column(std::size_t s, std::uint32_t col) {
        if (col_alive_[col]) col_rows_[col].push_back(s);
    }

    std::size_t dense_residue_rank() {
        std::vector<std::size_t> live_rows;
        std::map<std::uint32_t, std::size_t> live_cols;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (row_alive_[i] && !rows_[i].empty()) live_rows.push_back(i);
        if (live_rows.empty()) return 0;
        for (std::size_t i : live_rows)
            for (const auto& [col, val] : rows_[i])
                live_cols.emplace(col, 0);
        std::size_t idx = 0;
        for (auto& [col, pos] : live_cols) pos = idx++;
        std::vector<std::vector<T>> dense(live_rows.size(),
                                          std::vector<T>(live_cols.size(), T{0}));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [col, val] : rows_[live_rows[i]])
                dense[i][live_cols[col]] = val;
        return bareiss_rank(std::move(dense));
    }

    std::size_t ncols_;
    std::vector<Row> rows_;
    std::vector<std::vector<std::size_t>> col_rows_;
    std::vector<bool> col_alive_;
    std::vector<bool> row_alive_;
    std::priority_queue<std::pair<std::uint32_t, std::uint32_t>,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>>,
                        std::greater<>>
        queue_;
    std::size_t rank_ = 0;
};

}  // namespace

void SparseIntMatrix::add_entry(std::size_t col, std::size_t row, std::int32_t value) {
    if (col >= cols_ || row >= rows_)
        throw std::out_of_range("SparseIntMatrix::add_entry: index out of range");
    if (value != 0) columns_[col].push_back({static_cast<std::uint32_t>(row), value});
}

std::size_t SparseIntMatrix::nnz() const {
    std::size_t total = 0;
    for (const auto& col : columns_) total += col.size();
    return total;
}

bool SparseIntMatrix::product_is_zero(const SparseIntMatrix& other) const {
    if (other.rows() != cols_)
        throw std::invalid_argument("product_is_zero: dimension mismatch");
    std::vector<std::int64_t> acc(rows_, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < other.cols(); ++j) {
        for (const auto& mid : other.column(j))
            for (const auto& e : columns_[mid.row]) {
                if (acc[e.row] == 0) touched.push_back(e.row);
                acc[e.row] += static_cast<std::int64_t>(mid.value) * e.value;
            }
        bool zero = true;
        for (std::uint32_t r : touched) {
            if (acc[r] != 0) zero = false;
            acc[r] = 0;
        }
        touched.clear();
        if (!zero) return false;
    }
    return true;
}

std::size_t SparseIntMatrix::exact_rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    try {
        return Eliminator<std::int64_t>(*this).run();
    } catch (const Int64Overflow&) {
        return Eliminator<Integer>(*this).run();
    }
}

void SparseIntMatrix::dump_triplets(std::ostream& os) const {
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& e : columns_[j]) os << e.row << ' ' << j << ' ' << e.value << '\n';
}

}  // namespace parthom
