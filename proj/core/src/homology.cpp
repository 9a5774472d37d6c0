#include "parthom/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace parthom {

namespace {

// Chains packed 16 bits per element, first element in the highest bits so
// numeric order on keys is lexicographic order on index sequences.
using ChainKey = unsigned __int128;
constexpr int kMaxChain = 8;

ChainKey append(ChainKey key, std::size_t element, int length) {
    return key | (static_cast<ChainKey>(element + 1) << (112 - 16 * length));
}

std::size_t key_at(ChainKey key, int pos) {
    return static_cast<std::size_t>((key >> (112 - 16 * pos)) & 0xffff) - 1;
}

ChainKey erase_at(ChainKey key, int pos, int length) {
    ChainKey out = 0;
    int outpos = 0;
    for (int i = 0; i < length; ++i) {
        if (i == pos) continue;
        out = append(out, key_at(key, i), outpos++);
    }
    return out;
}

std::size_t index_of(const std::vector<ChainKey>& level, ChainKey key) {
    auto it = std::lower_bound(level.begin(), level.end(), key);
    if (it == level.end() || *it != key)
        throw std::logic_error("order_complex: face chain missing");
    return static_cast<std::size_t>(it - level.begin());
}

}  // namespace

ChainComplex chain_complex_of(const CompositionComplex& delta) {
    if (delta.empty())
        throw std::invalid_argument("chain_complex_of: void complex has no chain complex");

    std::vector<std::vector<FaceMask>> levels;
    for (FaceMask f : delta.sorted_faces()) {
        const std::size_t level = static_cast<std::size_t>(popcount(f));
        if (levels.size() <= level) levels.resize(level + 1);
        levels[level].push_back(f);  // sorted_faces is (popcount, mask)-sorted
    }

    const bool top_level = delta.ground() == full_mask(delta.n());
    ChainComplex k;
    k.cells.resize(levels.size());
    k.boundary.resize(levels.size());
    k.labels.resize(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        k.cells[i] = levels[i].size();
        if (top_level)
            for (FaceMask f : levels[i])
                k.labels[i].push_back(Composition::decode(delta.n(), f).to_string());
        const std::size_t below = i == 0 ? 0 : levels[i - 1].size();
        SparseIntMatrix m(below, levels[i].size());
        if (i > 0) {
            for (std::size_t col = 0; col < levels[i].size(); ++col) {
                FaceMask f = levels[i][col];
                int j = 0;
                FaceMask rest = f;
                while (rest) {
                    FaceMask bit = rest & (~rest + 1);
                    FaceMask face = f & ~bit;
                    auto it = std::lower_bound(levels[i - 1].begin(), levels[i - 1].end(), face);
                    m.add_entry(col, static_cast<std::size_t>(it - levels[i - 1].begin()),
                                j % 2 == 0 ? 1 : -1);
                    rest &= rest - 1;
                    ++j;
                }
            }
        }
        k.boundary[i] = std::move(m);
    }
    return k;
}

BettiVector reduced_betti_of(const CompositionComplex& delta) {
    return reduced_betti(chain_complex_of(delta));
}

Integer euler_characteristic_of(const CompositionComplex& delta) {
    return euler_characteristic(chain_complex_of(delta));
}

ChainComplex order_complex(const FinitePoset& poset) {
    // Successor lists in ascending index order.
    std::vector<std::vector<std::size_t>> above(poset.size);
    for (std::size_t x = 0; x < poset.size; ++x)
        for (std::size_t y = 0; y < poset.size; ++y)
            if (x != y && poset.strictly_less(x, y)) above[x].push_back(y);

    std::vector<std::vector<ChainKey>> levels(1);
    levels[0].push_back(0);  // the empty chain

    // Depth-first extension emits, per length, chains in lexicographic order.
    std::vector<std::size_t> stack;
    auto emit = [&](ChainKey key, std::size_t len) {
        if (levels.size() <= len) levels.resize(len + 1);
        levels[len].push_back(key);
    };
    std::function<void(ChainKey, std::size_t, std::size_t)> extend =
        [&](ChainKey key, std::size_t last, std::size_t len) {
            if (len >= kMaxChain)
                throw std::invalid_argument("order_complex: chain length exceeds supported bound");
            for (std::size_t y : above[last]) {
                ChainKey next = append(key, y, static_cast<int>(len));
                emit(next, len + 1);
                extend(next, y, len + 1);
            }
        };
    for (std::size_t x = 0; x < poset.size; ++x) {
        ChainKey key = append(0, x, 0);
        emit(key, 1);
        extend(key, x, 1);
    }

    ChainComplex k;
    k.cells.resize(levels.size());
    k.boundary.resize(levels.size());
    k.labels.resize(levels.size());
    const bool with_labels = !poset.labels.empty();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        k.cells[i] = levels[i].size();
        if (with_labels)
            for (ChainKey key : levels[i]) {
                std::string label;
                for (int p = 0; p < static_cast<int>(i); ++p) {
                    if (p) label += " < ";
                    label += poset.labels[key_at(key, p)];
                }
                k.labels[i].push_back(label.empty() ? "()" : label);
            }
        const std::size_t below = i == 0 ? 0 : levels[i - 1].size();
        SparseIntMatrix m(below, levels[i].size());
        if (i > 0) {
            for (std::size_t col = 0; col < levels[i].size(); ++col) {
                for (int j = 0; j < static_cast<int>(i); ++j) {
                    ChainKey face = erase_at(levels[i][col], j, static_cast<int>(i));
                    m.add_entry(col, index_of(levels[i - 1], face), j % 2 == 0 ? 1 : -1);
                }
            }
        }
        k.boundary[i] = std::move(m);
    }
    return k;
}

}  // namespace parthom
