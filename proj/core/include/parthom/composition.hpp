#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parthom/integer.hpp"

namespace parthom {

// Subsets of {1..n-1} are stored as machine-word bitmasks: element i of the
// ground set corresponds to bit i-1.  Compositions of n are limited to
// n <= 63 so every subset fits in one word.
using FaceMask = std::uint64_t;

inline constexpr int kMaxCompositionSize = 63;

inline FaceMask full_mask(int n) {
    return n <= 1 ? 0 : (FaceMask{1} << (n - 1)) - 1;
}

inline int popcount(FaceMask m) { return __builtin_popcountll(m); }

// A composition of n: an ordered list of positive parts summing to n.
// Immutable after construction.
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    static Composition single(int n) { return Composition(std::vector<int>{n}); }

    // Inverse of encode(): split n at the elements of `cuts`.
    static Composition decode(int n, FaceMask cuts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int last() const { return parts_.back(); }

    // Partial sums c1, c1+c2, ..., all but the last, as a subset of {1..n-1}.
    FaceMask encode() const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Composition& o) const { return parts_ <=> o.parts_; }

    // Text form "[2,3,1]".
    std::string to_string() const;
    static Composition parse(const std::string& text);

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

// A permutation of {1..n}, given by its sequence of images.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    const std::vector<int>& images() const { return images_; }
    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  private:
    std::vector<int> images_;
};

// Complement composition: exchange plus signs and commas, i.e. the complement
// of the cut set inside {1..n-1}.
Composition complement(const Composition& c);

// c-1: decrement the last part; empty (returns false) when the last part is 1.
bool drop_one(const Composition& c, Composition& out);

// c/1: decrement the last part, deleting it if it becomes zero.
// Always a composition of n-1 (empty when n = 1).
std::vector<int> slash_one(const Composition& c);

// Descent set of alpha as a composition of n via consecutive differences.
Composition descent_composition(const Permutation& alpha);

// n! / (c1! c2! ... ck!).
Integer multinomial(const Composition& c);

// Number of permutations in S_n with descent composition exactly c.
Integer beta(const Composition& c);

// Number of permutations alpha in S_n with Des(alpha) = c and alpha(n) = n.
// Computed by inclusion-exclusion over coarsenings of c.
Integer beta_star(const Composition& c);

// Exhaustive check of beta_star by enumerating S_n; rejects n > max_n.
Integer beta_star_oracle(const Composition& c, int max_n = 10);

// All compositions of n, in ascending bitmask order.
std::vector<Composition> all_compositions(int n);

// Visit every sub-bitmask of `m`, including m itself and 0, in decreasing
// numeric order.  Sub-bitmasks of encode(c) are exactly the coarsenings of c.
template <typename F>
void for_each_submask(FaceMask m, F&& f) {
    FaceMask sub = m;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & m;
    }
}

}  // namespace parthom
