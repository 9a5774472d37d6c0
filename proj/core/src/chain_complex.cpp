#include "parthom/chain_complex.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace parthom {

void BettiVector::set(int degree, Integer value) {
    if (value < 0) throw std::invalid_argument("BettiVector: negative entry");
    if (value == 0)
        entries_.erase(degree);
    else
        entries_[degree] = std::move(value);
}

Integer BettiVector::get(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? Integer{0} : it->second;
}

std::string BettiVector::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [deg, val] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << deg << ": " << val;
    }
    os << '}';
    return os.str();
}

std::size_t ChainComplex::cells_at(int degree) const {
    const int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(cells.size())) return 0;
    return cells[static_cast<std::size_t>(idx)];
}

void ChainComplex::validate() const {
    if (cells.size() != boundary.size())
        throw std::logic_error("ChainComplex: ragged grading");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (boundary[i].cols() != cells[i])
            throw std::logic_error("ChainComplex: boundary column count mismatch");
        const std::size_t below = i == 0 ? 0 : cells[i - 1];
        if (boundary[i].rows() != below)
            throw std::logic_error("ChainComplex: boundary row count mismatch");
        if (i > 0 && !boundary[i - 1].product_is_zero(boundary[i]))
            throw std::logic_error("ChainComplex: del o del != 0");
    }
}

Integer ChainComplex::euler_characteristic_f() const {
    Integer chi = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int degree = static_cast<int>(i) - 1;
        Integer term = static_cast<std::uint64_t>(cells[i]);
        (degree % 2 == 0) ? chi += term : chi -= term;
    }
    return chi;
}

void ChainComplex::dump(std::ostream& os) const {
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        os << "# degree " << static_cast<int>(i) - 1 << " cells " << cells[i] << '\n';
        boundary[i].dump_triplets(os);
    }
}

BettiVector reduced_betti(const ChainComplex& k) {
    const std::size_t levels = k.cells.size();
    std::vector<std::size_t> rank(levels + 1, 0);
    for (std::size_t i = 0; i < levels; ++i) rank[i] = k.boundary[i].exact_rank();
    BettiVector betti;
    for (std::size_t i = 0; i < levels; ++i) {
        const std::size_t r_above = i + 1 < levels ? rank[i + 1] : 0;
        const long long b = static_cast<long long>(k.cells[i]) -
                            static_cast<long long>(rank[i]) -
                            static_cast<long long>(r_above);
        if (b < 0) throw std::logic_error("reduced_betti: negative Betti number (del o del != 0?)");
        betti.set(static_cast<int>(i) - 1, Integer{b});
    }
    return betti;
}

Integer euler_characteristic(const ChainComplex& k) {
    const Integer from_f = k.euler_characteristic_f();
    Integer from_betti = 0;
    const BettiVector betti = reduced_betti(k);
    for (const auto& [deg, val] : betti.entries())
        (deg % 2 == 0) ? from_betti += val : from_betti -= val;
    if (from_f != from_betti)
        throw std::logic_error("euler_characteristic: f-vector and Betti sums disagree");
    return from_f;
}

}  // namespace parthom
