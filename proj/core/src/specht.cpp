#include "parthom/specht.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "parthom/homology.hpp"
#include "parthom/partitions.hpp"

namespace parthom {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("CycleType: part < 1");
        m_ += p;
    }
    std::sort(parts_.rbegin(), parts_.rend());
}

CycleType CycleType::identity(int m) {
    return CycleType(std::vector<int>(static_cast<std::size_t>(m), 1));
}

bool CycleType::is_identity() const {
    return parts_.empty() || parts_.front() == 1;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << '+';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void partitions_desc(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_desc(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<CycleType> all_cycle_types(int m) {
    if (m < 0) throw std::invalid_argument("all_cycle_types: negative m");
    std::vector<CycleType> out;
    if (m == 0) {
        out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> acc;
    partitions_desc(m, m, acc, out);
    return out;
}

int SkewShapeSpec::boxes() const {
    int total = 0;
    for (int r : rows) total += r;
    return total;
}

std::string SkewShapeSpec::ascii() const {
    if (zero) return "(zero module)\n";
    if (rows.empty()) return "(empty shape)\n";
    std::vector<int> offsets(rows.size(), 0);
    for (std::size_t i = 1; i < rows.size(); ++i)
        offsets[i] = offsets[i - 1] + rows[i - 1] - (overlaps[i - 1] ? 1 : 0);
    std::ostringstream os;
    for (std::size_t i = rows.size(); i-- > 0;) {
        for (int s = 0; s < offsets[i]; ++s) os << ' ';
        for (int b = 0; b < rows[i]; ++b) os << '#';
        os << '\n';
    }
    return os.str();
}

SkewShapeSpec shape_b_star(const Composition& c) {
    SkewShapeSpec shape;
    if (c.last() < 2) {
        if (c.size() > 1) {
            shape.zero = true;
            return shape;
        }
        return shape;  // c = (1): the empty shape, the trivial module of S_0
    }
    shape.rows = c.parts();
    shape.rows.back() -= 1;
    shape.overlaps.assign(shape.rows.size() - 1, true);
    return shape;
}

SkewShapeSpec shape_b_sharp(const Composition& c) {
    SkewShapeSpec shape;
    shape.rows = slash_one(c);
    if (!shape.rows.empty()) shape.overlaps.assign(shape.rows.size() - 1, true);
    return shape;
}

SkewShapeSpec shape_b_star_interval(const Composition& d, const Composition& b) {
    const FaceMask d_cuts = d.encode(), b_cuts = b.encode();
    if ((d_cuts & b_cuts) != b_cuts)
        throw std::invalid_argument("shape_b_star_interval: d does not refine b");
    SkewShapeSpec shape;
    if (b.last() == 1 && b.size() > 1) {
        // Every composition in [d, b] ends in 1, so the whole sum is zero.
        shape.zero = true;
        return shape;
    }
    shape.rows = d.parts();
    shape.rows.back() -= 1;
    // Initial sums of b-1; when b ends in 1 that last sum disappears with the
    // trailing zero part.
    FaceMask b1_sums = b_cuts;
    if (b.last() >= 2) b1_sums |= FaceMask{1} << (b.n() - 2);
    shape.overlaps.clear();
    int acc = 0;
    for (std::size_t j = 0; j + 1 < shape.rows.size(); ++j) {
        acc += d[static_cast<int>(j)];
        shape.overlaps.push_back((b1_sums & (FaceMask{1} << (acc - 1))) != 0);
    }
    if (!shape.rows.empty() && shape.rows.back() == 0) {
        shape.rows.pop_back();
        if (!shape.overlaps.empty()) shape.overlaps.pop_back();
    }
    return shape;
}

Integer dim_specht_star(const Composition& c) { return beta_star(c); }

Integer dim_specht_interval(const Composition& d, const Composition& b) {
    const FaceMask d_cuts = d.encode(), b_cuts = b.encode();
    if ((d_cuts & b_cuts) != b_cuts)
        throw std::invalid_argument("dim_specht_interval: d does not refine b");
    Integer total = 0;
    // Compositions in [d, b]: cut sets between encode(b) and encode(d).
    for_each_submask(d_cuts & ~b_cuts, [&](FaceMask extra) {
        total += beta_star(Composition::decode(d.n(), b_cuts | extra));
    });
    return total;
}

namespace {

// Number of ways to distribute the cycle multiset into labelled rows with the
// given exact capacities; cycles of equal length are interchangeable, counted
// by binomial coefficients.
class CycleAssignment {
  public:
    CycleAssignment(const CycleType& t, std::vector<int> capacities)
        : capacities_(std::move(capacities)) {
        for (int p : t.parts()) {
            if (!lengths_.empty() && lengths_.back() == p) {
                ++counts_.back();
            } else {
                lengths_.push_back(p);
                counts_.push_back(1);
            }
        }
    }

    Integer count() { return rec(0, counts_); }

  private:
    Integer rec(std::size_t row, std::vector<int>& remaining) {
        if (row == capacities_.size()) {
            for (int r : remaining)
                if (r != 0) return 0;
            return 1;
        }
        auto key = std::make_pair(row, remaining);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Integer total = fill(row, 0, capacities_[row], 1, remaining);
        memo_.emplace(std::move(key), total);
        return total;
    }

    Integer fill(std::size_t row, std::size_t at, int space, Integer ways,
                 std::vector<int>& remaining) {
        if (space == 0) {
            Integer rest = rec(row + 1, remaining);
            return ways * rest;
        }
        if (at == lengths_.size()) return 0;
        Integer total = 0;
        const int len = lengths_[at];
        const int max_take = std::min(remaining[at], space / len);
        for (int take = 0; take <= max_take; ++take) {
            const Integer choose = binomial(remaining[at], take);
            remaining[at] -= take;
            total += fill(row, at + 1, space - take * len, ways * choose, remaining);
            remaining[at] += take;
        }
        return total;
    }

    std::vector<int> capacities_;
    std::vector<int> lengths_;
    std::vector<int> counts_;
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

}  // namespace

Integer perm_module_character(const Composition& c, const CycleType& t) {
    if (t.m() != c.n() - 1)
        throw std::invalid_argument("perm_module_character: type is not a partition of n-1");
    std::vector<int> capacities = c.parts();
    capacities.back() -= 1;  // n sits in the last row
    return CycleAssignment(t, std::move(capacities)).count();
}

Integer specht_star_character(const Composition& c, const CycleType& t) {
    Integer acc = 0;
    const int k = c.size();
    for_each_submask(c.encode(), [&](FaceMask sub) {
        Composition d = Composition::decode(c.n(), sub);
        Integer term = perm_module_character(d, t);
        ((k - d.size()) % 2 == 0) ? acc += term : acc -= term;
    });
    return acc;
}

LefschetzPair lefschetz_check(const CompositionComplex& delta, const CycleType& t) {
    if (delta.empty()) throw std::invalid_argument("lefschetz_check: void complex");
    LefschetzPair pair{0, 0};
    const int top = delta.dim();
    for (int i = -1; i <= top; ++i) {
        Integer fixed = fixed_count(t, i, delta);
        (i % 2 == 0) ? pair.lhs += fixed : pair.lhs -= fixed;
    }
    for (FaceMask f : delta.sorted_faces()) {
        Composition c = Composition::decode(delta.n(), f);
        Integer chi = euler_characteristic_of(link(delta, c).complex);
        Integer term = chi * specht_star_character(c, t);
        (c.size() % 2 == 1) ? pair.rhs += term : pair.rhs -= term;
    }
    return pair;
}

std::vector<std::pair<CycleType, LefschetzPair>> lefschetz_check_all(
    const CompositionComplex& delta) {
    if (delta.empty()) throw std::invalid_argument("lefschetz_check_all: void complex");
    const int n = delta.n();
    const std::vector<CycleType> types = all_cycle_types(n - 1);
    std::vector<std::pair<CycleType, LefschetzPair>> out;
    out.reserve(types.size());
    for (const CycleType& t : types) out.push_back({t, LefschetzPair{0, 0}});

    if (n <= kDefaultOracleBound) {
        // One pass over the cells of Q*_delta, applying each class
        // representative; the trace contributions accumulate per type.
        std::vector<std::array<int, 17>> images(types.size());
        for (std::size_t ti = 0; ti < types.size(); ++ti) {
            Permutation alpha = cycle_type_representative(types[ti], n);
            for (int e = 1; e <= n; ++e) images[ti][static_cast<std::size_t>(e)] = alpha(e);
        }
        const auto strata = q_star(delta);
        for (std::size_t level = 0; level < strata.size(); ++level) {
            const int degree = static_cast<int>(level) - 1;
            const int sign = degree % 2 == 0 ? 1 : -1;
            for (const auto& osp : strata[level]) {
                for (std::size_t ti = 0; ti < types.size(); ++ti) {
                    bool fixed = true;
                    for (BlockMask b : osp.blocks) {
                        BlockMask img = 0;
                        BlockMask rest = b;
                        while (rest) {
                            const int e = __builtin_ctz(rest) + 1;
                            img |= BlockMask{1}
                                   << (images[ti][static_cast<std::size_t>(e)] - 1);
                            rest &= static_cast<BlockMask>(rest - 1);
                        }
                        if (img != b) {
                            fixed = false;
                            break;
                        }
                    }
                    if (fixed) out[ti].second.lhs += sign;
                }
            }
        }
    } else {
        for (std::size_t ti = 0; ti < types.size(); ++ti) {
            const int top = delta.dim();
            for (int i = -1; i <= top; ++i) {
                Integer fixed =
                    fixed_count(types[ti], i, delta, FixedCountMode::CycleAssignment);
                (i % 2 == 0) ? out[ti].second.lhs += fixed : out[ti].second.lhs -= fixed;
            }
        }
    }

    for (FaceMask f : delta.sorted_faces()) {
        Composition c = Composition::decode(delta.n(), f);
        Integer chi = euler_characteristic_of(link(delta, c).complex);
        if (chi == 0) continue;
        const int sign = c.size() % 2 == 1 ? 1 : -1;
        for (std::size_t ti = 0; ti < types.size(); ++ti)
            out[ti].second.rhs += sign * chi * specht_star_character(c, types[ti]);
    }
    return out;
}

}  // namespace parthom
