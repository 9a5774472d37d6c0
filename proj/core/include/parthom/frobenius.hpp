#pragma once

#include <optional>
#include <vector>

#include "parthom/complexes.hpp"
#include "parthom/composition.hpp"
#include "parthom/synthesis.hpp"

namespace parthom {

// A numerical semigroup given by generators, with a membership table up to a
// working bound.
class Semigroup {
  public:
    Semigroup(std::vector<int> generators, int bound);

    static Semigroup arithmetic(int a, int d, int bound);

    bool contains(int m) const;
    const std::vector<int>& generators() const { return generators_; }
    int bound() const { return static_cast<int>(member_.size()) - 1; }

    // Members in [1, bound], ascending.
    std::vector<int> members() const;

  private:
    std::vector<int> generators_;
    std::vector<char> member_;
};

// The Frobenius complex: compositions of n with every part in the semigroup.
// Throws when n is not in the semigroup (the complex would be void).
CompositionComplex frobenius_filter(const Semigroup& lambda, int n);

// Block sizes a or b with 2 <= a < b and gcd(a,b) = 1.
struct TwoGenSpec {
    int a;
    int b;
    TwoGenSpec(int a_, int b_);

    // A = { m >= 1 : m = 0, a, b or a+b (mod ab) }.
    bool in_A(int m) const;
    // Sphere dimension of the Frobenius complex for m in A.
    int h(int m) const;
    int residue_r(int n) const;  // 0 <= r < a with n = rb (mod a)
    int residue_s(int n) const;  // 0 <= s < b with n = sa (mod b)
};

// h(n) when n is in A; nullopt marks the contractible case.
std::optional<int> h_value(const TwoGenSpec& spec, int n);

// The homology of the order complex of Pi_n^<a,b> minus 1-hat: one Specht
// summand per composition with all parts in A, in degree
// dim(c) = sum h(c_j) + 2k - 2.
DecompositionReport ab_homology(const TwoGenSpec& spec, int n);

// Top (and, for a >= 3, bottom) homology in closed form.
struct ExtremeFamily {
    int degree;
    std::vector<Composition> family;
    Integer total;
};
ExtremeFamily ab_top(const TwoGenSpec& spec, int n);
ExtremeFamily ab_bottom(const TwoGenSpec& spec, int n);

// Complete description for a = 2 and odd b >= 3: summands are compositions
// with all parts = 0 or 2 (mod b), graded by the number of parts = 2 (mod b).
DecompositionReport a2_homology(int b, int n);

// The semigroup generated by the arithmetic progression a, a+d, ..., a+(a-1)d.
struct ApSpec {
    int a;
    int d;
    ApSpec(int a_, int d_);

    int scale() const;  // gcd(a, d)
    Semigroup semigroup(int bound) const;
    // The entries allowed in critical cells: {a} union A_eff where
    // A_eff = {a + jd : 1 <= j <= a/gcd(a,d) - 1}.  The gcd > 1 case is the
    // scaling isomorphism applied to the relatively prime parameters.
    std::vector<int> progression_entries() const;  // A_eff
};

// b(d): add maximal runs of entries together, each run ending at an entry
// equal to a (the final run is summed whether or not it ends with a).
Composition run_coarsening(const Composition& d, int a);

// Critical cells of the Morse matching on the Frobenius complex itself:
// compositions with c_1, ..., c_{k-1} in A_eff and c_k in {a} union A_eff.
std::vector<Composition> ap_critical_cells(const ApSpec& spec, int n);

// The arithmetic-progression decomposition of the order complex: for each
// composition d of n into i+2 parts with entries in {a} union A_eff, one
// interval summand S^{B*(d, b(d))} in degree i.
DecompositionReport ap_homology(const ApSpec& spec, int n);

// The d | a specialization (block sizes divisible by d and >= a); delegates
// to ap_homology.
DecompositionReport browdy_case(const ApSpec& spec, int n);

}  // namespace parthom
