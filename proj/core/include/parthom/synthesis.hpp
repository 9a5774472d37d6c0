#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "parthom/chain_complex.hpp"
#include "parthom/complexes.hpp"
#include "parthom/composition.hpp"
#include "parthom/partitions.hpp"

namespace parthom {

// Thrown when a verified identity of the engine fails (also used by the
// ball/sphere evaluators when the asserted homeomorphism is inconsistent
// with the computed homology).
struct IdentityMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One Specht summand of a homology degree: multiplicity copies of the module
// named by `composition` (or of the interval module [composition, upper]
// when `upper` is set), of dimension `specht_dim`.
struct DecompositionEntry {
    int degree = 0;
    Composition composition;
    std::optional<Composition> upper;
    Integer multiplicity;
    Integer specht_dim;
};

struct DecompositionReport {
    int n = 0;
    std::vector<DecompositionEntry> entries;  // sorted by (degree, bitmask)
    BettiVector betti;                        // per-degree totals
    Integer euler;                            // alternating sum of the totals

    void finalize();  // sorts entries, fills betti + euler from them
};

// Per-face link homology with results memoised by face bitmask.
class LinkAnalysis {
  public:
    explicit LinkAnalysis(const CompositionComplex& delta) : delta_(&delta) {}
    const BettiVector& betti_of_link(FaceMask face);
    const CompositionComplex& delta() const { return *delta_; }

  private:
    const CompositionComplex* delta_;
    std::unordered_map<FaceMask, BettiVector> cache_;
};

// The engine's central computation:
//   betti_i = sum over c in delta of betti_{i-|c|+1}(link_c(delta)) . beta*_n(c)
BettiVector main_betti(const CompositionComplex& delta);

// Full per-degree summand inventory.  With include_zero also lists, per
// degree, the faces whose links contribute nothing.
DecompositionReport decomposition(const CompositionComplex& delta,
                                  bool include_zero = false);

// The reduced Euler characteristic two ways: `direct` from cell counts (of
// the oracle order complex when n is within the bound, of Q*_delta
// otherwise) and `formula` from the link/Specht expansion.  They must agree.
struct EulerPair {
    Integer direct;
    Integer formula;
    bool equal() const { return direct == formula; }
};
EulerPair euler_corollary(const CompositionComplex& delta,
                          int oracle_bound = kDefaultOracleBound);

// Specializations for complexes asserted to be homeomorphic to a ball or a
// sphere of dimension k = dim(delta).  The assertion is never trusted: the
// result is recomputed through main_betti and a mismatch throws
// IdentityMismatch.
DecompositionReport ball_case(const CompositionComplex& delta);
DecompositionReport sphere_case(const CompositionComplex& delta);

// Critical-cell counts of the lifted Morse matching: identical arithmetic to
// main_betti, reported per dimension.
std::map<int, Integer> morse_sphere_counts(const CompositionComplex& delta);

struct VerifyCheck {
    std::string name;
    bool ran = false;
    bool pass = true;
    std::string detail;
};

struct VerifyReport {
    std::string label;
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
    std::string to_string() const;  // one pass/fail line per check
};

// Runs every identity the engine can test on delta: main theorem vs the
// partition-lattice oracle (n within bound), vs the Q* chain complex, the
// Euler corollary, and the virtual-character identity over all cycle types.
VerifyReport verify(const CompositionComplex& delta, const std::string& label = "",
                    int oracle_bound = kDefaultOracleBound, int qstar_bound = 8);

}  // namespace parthom
