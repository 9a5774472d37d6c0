#include "parthom/partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace parthom {

namespace {

// Order on blocks equal to lexicographic order of their sorted element lists:
// compare by the smallest element where the two sets differ.
bool block_less(BlockMask a, BlockMask b) {
    if (a == b) return false;
    BlockMask diff = a ^ b;
    BlockMask low = diff & static_cast<BlockMask>(~diff + 1);
    return (a & low) != 0;
}

bool block_seq_less(const std::vector<BlockMask>& a, const std::vector<BlockMask>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return block_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

std::string block_elements(BlockMask m, char sep) {
    std::ostringstream os;
    bool first = true;
    for (int e = 1; e <= 16; ++e)
        if (m & (BlockMask{1} << (e - 1))) {
            if (!first) os << sep;
            first = false;
            os << e;
        }
    return os.str();
}

// Packed key for ordered block sequences (16 bits per block, first block in
// the highest bits): numeric order equals block-sequence order by mask value.
using PackKey = unsigned __int128;

PackKey pack(const std::vector<BlockMask>& blocks) {
    if (blocks.size() > 8)
        throw std::invalid_argument("ordered set partition has more than 8 blocks");
    PackKey key = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        key |= static_cast<PackKey>(blocks[i]) << (112 - 16 * i);
    return key;
}

std::vector<BlockMask> unpack(PackKey key, int count) {
    std::vector<BlockMask> blocks(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        blocks[static_cast<std::size_t>(i)] =
            static_cast<BlockMask>((key >> (112 - 16 * i)) & 0xffff);
    return blocks;
}

// All ways to fill ordered blocks of sizes `sizes` from the elements of
// `pool`, invoking f on each complete block list.
void enumerate_fillings(BlockMask pool, const std::vector<int>& sizes, std::size_t at,
                        std::vector<BlockMask>& blocks,
                        const std::function<void(const std::vector<BlockMask>&)>& f) {
    if (at == sizes.size()) {
        f(blocks);
        return;
    }
    // Choose a subset of `pool` of the required size; to avoid duplicates the
    // subset is built over the pool's bit positions via combinations.
    std::vector<int> positions;
    for (int b = 0; b < 16; ++b)
        if (pool & (BlockMask{1} << b)) positions.push_back(b);
    const int want = sizes[at];
    if (want > static_cast<int>(positions.size())) return;
    std::vector<int> idx(static_cast<std::size_t>(want));
    for (int i = 0; i < want; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        BlockMask chosen = 0;
        for (int i : idx) chosen |= BlockMask{1} << positions[static_cast<std::size_t>(i)];
        blocks.push_back(chosen);
        enumerate_fillings(pool & static_cast<BlockMask>(~chosen), sizes, at + 1, blocks, f);
        blocks.pop_back();
        // next combination
        int i = want - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                             static_cast<int>(positions.size()) - want + i)
            --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < want; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

std::vector<int> SetPartition::type() const {
    std::vector<int> sizes;
    for (BlockMask b : blocks) sizes.push_back(__builtin_popcount(b));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

bool SetPartition::refines(const SetPartition& o) const {
    for (BlockMask b : blocks) {
        bool found = false;
        for (BlockMask c : o.blocks)
            if ((b & c) == b) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << '|';
        os << block_elements(blocks[i], ',');
    }
    os << '}';
    return os.str();
}

Composition OrderedSetPartition::type() const {
    std::vector<int> parts;
    for (BlockMask b : blocks) parts.push_back(__builtin_popcount(b));
    return Composition(std::move(parts));
}

std::string OrderedSetPartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << '|';
        os << '{' << block_elements(blocks[i], ',') << '}';
    }
    os << ')';
    return os.str();
}

OrderedSetPartition sigma(const Permutation& alpha, const Composition& d) {
    if (alpha.n() != d.n()) throw std::invalid_argument("sigma: size mismatch");
    OrderedSetPartition out;
    int pos = 1;
    for (int part : d.parts()) {
        BlockMask block = 0;
        for (int i = 0; i < part; ++i) block |= BlockMask{1} << (alpha(pos + i) - 1);
        out.blocks.push_back(block);
        pos += part;
    }
    return out;
}

SetPartition forgetful(const OrderedSetPartition& sigma) {
    SetPartition out{sigma.blocks};
    std::sort(out.blocks.begin(), out.blocks.end(), block_less);
    return out;
}

std::vector<std::vector<OrderedSetPartition>> q_star(const CompositionComplex& delta) {
    if (delta.empty()) throw std::invalid_argument("q_star: void complex");
    const int n = delta.n();
    if (n > 16) throw std::invalid_argument("q_star: n too large to enumerate");
    const BlockMask all = static_cast<BlockMask>((1u << n) - 1);
    const BlockMask n_bit = BlockMask{1} << (n - 1);

    std::vector<std::vector<OrderedSetPartition>> strata;
    for (FaceMask f : delta.sorted_faces()) {
        Composition c = Composition::decode(n, f);
        const std::size_t level = static_cast<std::size_t>(c.size() - 1);
        if (strata.size() <= level) strata.resize(level + 1);
        // Fill the first k-1 blocks from {1..n-1}; the last block takes n
        // plus whatever remains.
        std::vector<int> sizes(c.parts().begin(), c.parts().end() - 1);
        std::vector<BlockMask> blocks;
        enumerate_fillings(
            static_cast<BlockMask>(all & ~n_bit), sizes, 0, blocks,
            [&](const std::vector<BlockMask>& chosen) {
                BlockMask used = 0;
                for (BlockMask b : chosen) used |= b;
                OrderedSetPartition osp{chosen};
                osp.blocks.push_back(static_cast<BlockMask>(all & ~used));
                strata[level].push_back(std::move(osp));
            });
    }
    for (auto& stratum : strata)
        std::sort(stratum.begin(), stratum.end(),
                  [](const OrderedSetPartition& a, const OrderedSetPartition& b) {
                      return block_seq_less(a.blocks, b.blocks);
                  });
    return strata;
}

ChainComplex q_star_chain_complex(const CompositionComplex& delta) {
    const auto strata = q_star(delta);
    std::vector<std::vector<PackKey>> levels(strata.size());
    for (std::size_t i = 0; i < strata.size(); ++i) {
        levels[i].reserve(strata[i].size());
        for (const auto& osp : strata[i]) levels[i].push_back(pack(osp.blocks));
        std::sort(levels[i].begin(), levels[i].end());
    }

    ChainComplex k;
    k.cells.resize(levels.size());
    k.boundary.resize(levels.size());
    k.labels.resize(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        k.cells[i] = levels[i].size();
        const std::size_t below = i == 0 ? 0 : levels[i - 1].size();
        SparseIntMatrix m(below, levels[i].size());
        if (i > 0) {
            const int nblocks = static_cast<int>(i) + 1;
            for (std::size_t col = 0; col < levels[i].size(); ++col) {
                std::vector<BlockMask> blocks = unpack(levels[i][col], nblocks);
                for (int j = 0; j + 1 < nblocks; ++j) {
                    std::vector<BlockMask> merged;
                    merged.reserve(static_cast<std::size_t>(nblocks - 1));
                    for (int b = 0; b < nblocks; ++b) {
                        if (b == j) {
                            merged.push_back(
                                static_cast<BlockMask>(blocks[static_cast<std::size_t>(b)] |
                                                       blocks[static_cast<std::size_t>(b + 1)]));
                            ++b;
                        } else {
                            merged.push_back(blocks[static_cast<std::size_t>(b)]);
                        }
                    }
                    PackKey key = pack(merged);
                    auto it = std::lower_bound(levels[i - 1].begin(), levels[i - 1].end(), key);
                    if (it == levels[i - 1].end() || *it != key)
                        throw std::logic_error("q_star_chain_complex: merged cell missing");
                    m.add_entry(col, static_cast<std::size_t>(it - levels[i - 1].begin()),
                                j % 2 == 0 ? 1 : -1);
                }
            }
        }
        k.boundary[i] = std::move(m);
    }
    return k;
}

namespace {

// Membership of a type in Pi*_delta: does some arrangement of the non-n
// block sizes, with the n-block size last, land in delta?
using TypeKey = std::pair<std::vector<int>, int>;
using TypeMemo = std::map<TypeKey, bool>;

TypeKey type_key(const CompositionComplex& delta, const SetPartition& pi) {
    const BlockMask n_bit = BlockMask{1} << (delta.n() - 1);
    std::vector<int> sizes;
    int n_block_size = 0;
    for (BlockMask b : pi.blocks) {
        if (b & n_bit)
            n_block_size = __builtin_popcount(b);
        else
            sizes.push_back(__builtin_popcount(b));
    }
    std::sort(sizes.begin(), sizes.end());
    return {std::move(sizes), n_block_size};
}

bool type_in_delta(const CompositionComplex& delta, const TypeKey& key, TypeMemo& memo) {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool found = false;
    std::vector<int> arrangement = key.first;
    do {
        std::vector<int> parts = arrangement;
        parts.push_back(key.second);
        if (delta.contains(Composition(std::move(parts)).encode())) {
            found = true;
            break;
        }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    memo.emplace(key, found);
    return found;
}

}  // namespace

bool pi_star_contains(const CompositionComplex& delta, const SetPartition& pi) {
    TypeMemo memo;
    return type_in_delta(delta, type_key(delta, pi), memo);
}

namespace {

void enumerate_partitions(int n, std::function<void(const std::vector<BlockMask>&)> f) {
    std::vector<BlockMask> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    std::function<void(int)> place = [&](int element) {
        if (element > n) {
            f(blocks);
            return;
        }
        const BlockMask bit = BlockMask{1} << (element - 1);
        const std::size_t count = blocks.size();  // recursion appends blocks
        for (std::size_t i = 0; i < count; ++i) {
            blocks[i] |= bit;
            place(element + 1);
            blocks[i] &= static_cast<BlockMask>(~bit);
        }
        blocks.push_back(bit);
        place(element + 1);
        blocks.pop_back();
    };
    place(1);
}

}  // namespace

PiStarPoset pi_star(const CompositionComplex& delta) {
    if (delta.empty()) throw std::invalid_argument("pi_star: void complex");
    const int n = delta.n();
    if (n > 14) throw std::invalid_argument("pi_star: n too large to enumerate");
    PiStarPoset poset;
    poset.n = n;
    TypeMemo memo;
    enumerate_partitions(n, [&](const std::vector<BlockMask>& blocks) {
        SetPartition pi{blocks};  // blocks already sorted by minimum
        if (type_in_delta(delta, type_key(delta, pi), memo))
            poset.elements.push_back(std::move(pi));
    });
    std::sort(poset.elements.begin(), poset.elements.end(),
              [](const SetPartition& a, const SetPartition& b) {
                  if (a.blocks.size() != b.blocks.size())
                      return a.blocks.size() > b.blocks.size();
                  return block_seq_less(a.blocks, b.blocks);
              });
    return poset;
}

FinitePoset pi_star_poset_without_top(const CompositionComplex& delta) {
    PiStarPoset pis = pi_star(delta);
    auto elements = std::make_shared<std::vector<SetPartition>>();
    FinitePoset poset;
    for (auto& pi : pis.elements) {
        if (pi.block_count() == 1) continue;  // 1-hat
        poset.labels.push_back(pi.to_string());
        elements->push_back(std::move(pi));
    }
    poset.size = elements->size();
    poset.strictly_less = [elements](std::size_t x, std::size_t y) {
        const SetPartition& a = (*elements)[x];
        const SetPartition& b = (*elements)[y];
        return a.blocks.size() > b.blocks.size() && a.refines(b);
    };
    return poset;
}

bool is_type_closed(const CompositionComplex& delta) {
    for (FaceMask f : delta.faces()) {
        std::vector<int> parts = Composition::decode(delta.n(), f).parts();
        std::sort(parts.begin(), parts.end());
        do {
            if (!delta.contains(Composition(parts).encode())) return false;
        } while (std::next_permutation(parts.begin(), parts.end()));
    }
    return true;
}

namespace {

// Chains packed 16 bits per element index (first element highest), matching
// the order_complex convention; supports chains of up to 8 elements.
using ChainKey = unsigned __int128;

ChainKey chain_append(ChainKey key, std::size_t element, int length) {
    return key | (static_cast<ChainKey>(element + 1) << (112 - 16 * length));
}

ChainKey chain_erase(ChainKey key, int pos, int length) {
    ChainKey out = 0;
    int outpos = 0;
    for (int i = 0; i < length; ++i) {
        ChainKey field = (key >> (112 - 16 * i)) & 0xffff;
        if (i == pos) continue;
        out |= field << (112 - 16 * outpos);
        ++outpos;
    }
    return out;
}

// sigma <= tau in Q_n: the blocks of tau are unions of consecutive blocks
// of sigma.
bool consecutive_coarsening(const std::vector<BlockMask>& fine,
                            const std::vector<BlockMask>& coarse) {
    std::size_t i = 0;
    for (BlockMask target : coarse) {
        BlockMask acc = 0;
        while (acc != target) {
            if (i >= fine.size() || (fine[i] & ~target) != 0) return false;
            acc |= fine[i++];
        }
    }
    return i == fine.size();
}

}  // namespace

ChainComplex liftable_chain_complex(const CompositionComplex& delta) {
    // Cells of Q*_delta below the top, in a flat list.
    const auto strata = q_star(delta);
    std::vector<const OrderedSetPartition*> cells;
    for (std::size_t level = 1; level < strata.size(); ++level)
        for (const auto& osp : strata[level]) cells.push_back(&osp);
    const std::size_t m = cells.size();

    // Canonical indexing of the elements of Pi*_delta minus 1-hat.
    std::map<std::vector<BlockMask>, std::size_t> pi_index;
    for (const auto* osp : cells) pi_index.emplace(forgetful(*osp).blocks, 0);
    {
        std::size_t next = 0;
        for (auto& [blocks, idx] : pi_index) idx = next++;
    }
    std::vector<std::size_t> image(m);
    for (std::size_t i = 0; i < m; ++i) image[i] = pi_index.at(forgetful(*cells[i]).blocks);

    // Comparability lists over the Q* cells (strictly coarser above).
    std::vector<std::vector<std::uint32_t>> above(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (cells[i]->block_count() > cells[j]->block_count() &&
                consecutive_coarsening(cells[i]->blocks, cells[j]->blocks))
                above[i].push_back(static_cast<std::uint32_t>(j));

    // Cells of each fiber, by pi element.
    std::vector<std::vector<std::uint32_t>> fiber(pi_index.size());
    for (std::size_t i = 0; i < m; ++i) fiber[image[i]].push_back(static_cast<std::uint32_t>(i));

    // Depth-first search over liftable chains.  The set of lifts of a chain
    // depends only on the chain, so every face is visited exactly once; the
    // search prunes as soon as no lift survives.
    std::vector<std::vector<ChainKey>> levels(1);
    levels[0].push_back(0);
    std::vector<std::uint32_t> stamp(m, 0);
    std::uint32_t clock = 0;
    std::function<void(ChainKey, int, const std::vector<std::uint32_t>&)> extend =
        [&](ChainKey chain, int length, const std::vector<std::uint32_t>& lifts) {
            if (levels.size() <= static_cast<std::size_t>(length))
                levels.resize(static_cast<std::size_t>(length) + 1);
            levels[static_cast<std::size_t>(length)].push_back(chain);
            if (length >= 8) throw std::logic_error("liftable_chain_complex: chain too long");
            // Successor cells reachable from any current lift, grouped by image.
            std::map<std::size_t, std::vector<std::uint32_t>> buckets;
            ++clock;
            for (std::uint32_t sigma : lifts)
                for (std::uint32_t tau : above[sigma])
                    if (stamp[tau] != clock) {
                        stamp[tau] = clock;
                        buckets[image[tau]].push_back(tau);
                    }
            for (auto& [y, next_lifts] : buckets) {
                std::sort(next_lifts.begin(), next_lifts.end());
                extend(chain_append(chain, y, length), length + 1, next_lifts);
            }
        };
    for (std::size_t y = 0; y < fiber.size(); ++y)
        extend(chain_append(0, y, 0), 1, fiber[y]);

    for (auto& level : levels) std::sort(level.begin(), level.end());

    ChainComplex k;
    k.cells.resize(levels.size());
    k.boundary.resize(levels.size());
    k.labels.resize(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        k.cells[i] = levels[i].size();
        const std::size_t below = i == 0 ? 0 : levels[i - 1].size();
        SparseIntMatrix mat(below, levels[i].size());
        if (i > 0) {
            for (std::size_t col = 0; col < levels[i].size(); ++col) {
                for (int j = 0; j < static_cast<int>(i); ++j) {
                    ChainKey face = chain_erase(levels[i][col], j, static_cast<int>(i));
                    auto it = std::lower_bound(levels[i - 1].begin(), levels[i - 1].end(), face);
                    if (it == levels[i - 1].end() || *it != face)
                        throw std::logic_error("liftable_chain_complex: missing subchain");
                    mat.add_entry(col, static_cast<std::size_t>(it - levels[i - 1].begin()),
                                  j % 2 == 0 ? 1 : -1);
                }
            }
        }
        k.boundary[i] = std::move(mat);
    }
    return k;
}

ChainComplex pi_star_oracle_complex(const CompositionComplex& delta) {
    if (is_type_closed(delta)) return order_complex(pi_star_poset_without_top(delta));
    return liftable_chain_complex(delta);
}

BettiVector oracle_betti(const CompositionComplex& delta, int bound) {
    if (bound > kHardOracleBound)
        throw std::invalid_argument("oracle_betti: bound exceeds hard cap");
    if (delta.n() > bound)
        throw std::invalid_argument("oracle_betti: n exceeds enumeration bound");
    return reduced_betti(pi_star_oracle_complex(delta));
}

Permutation cycle_type_representative(const CycleType& t, int n) {
    if (t.m() != n - 1)
        throw std::invalid_argument("cycle_type_representative: type is not a partition of n-1");
    std::vector<int> images(static_cast<std::size_t>(n));
    images[static_cast<std::size_t>(n - 1)] = n;
    int start = 1;
    for (int len : t.parts()) {
        for (int i = 0; i < len; ++i)
            images[static_cast<std::size_t>(start + i - 1)] = start + (i + 1) % len;
        start += len;
    }
    return Permutation(std::move(images));
}

Integer fixed_count(const CycleType& t, int degree, const CompositionComplex& delta,
                    FixedCountMode mode) {
    const int n = delta.n();
    if (mode == FixedCountMode::Auto)
        mode = n <= kDefaultOracleBound ? FixedCountMode::Exhaustive
                                        : FixedCountMode::CycleAssignment;
    if (mode == FixedCountMode::CycleAssignment) {
        Integer total = 0;
        for (FaceMask f : delta.faces()) {
            if (popcount(f) != degree + 1) continue;
            total += perm_module_character(Composition::decode(n, f), t);
        }
        return total;
    }

    const Permutation alpha = cycle_type_representative(t, n);
    const auto strata = q_star(delta);
    const std::size_t level = static_cast<std::size_t>(degree + 1);
    if (level >= strata.size()) return 0;
    Integer count = 0;
    for (const auto& osp : strata[level]) {
        bool fixed = true;
        for (BlockMask b : osp.blocks) {
            BlockMask image = 0;
            for (int e = 1; e <= n; ++e)
                if (b & (BlockMask{1} << (e - 1))) image |= BlockMask{1} << (alpha(e) - 1);
            if (image != b) {
                fixed = false;
                break;
            }
        }
        if (fixed) ++count;
    }
    return count;
}

}  // namespace parthom
