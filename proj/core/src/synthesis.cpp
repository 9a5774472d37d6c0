#include "parthom/synthesis.hpp"

#include <algorithm>
#include <sstream>

#include "parthom/homology.hpp"
#include "parthom/specht.hpp"

namespace parthom {

void DecompositionReport::finalize() {
    std::sort(entries.begin(), entries.end(),
              [](const DecompositionEntry& a, const DecompositionEntry& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  return a.composition.encode() < b.composition.encode();
              });
    betti = BettiVector{};
    std::map<int, Integer> totals;
    for (const auto& e : entries) totals[e.degree] += e.multiplicity * e.specht_dim;
    for (auto& [deg, val] : totals) betti.set(deg, val);
    euler = 0;
    for (const auto& [deg, val] : betti.entries())
        (deg % 2 == 0) ? euler += val : euler -= val;
}

const BettiVector& LinkAnalysis::betti_of_link(FaceMask face) {
    auto it = cache_.find(face);
    if (it != cache_.end()) return it->second;
    std::unordered_set<FaceMask> faces;
    for (FaceMask f : delta_->faces())
        if ((f & face) == face) faces.insert(f & ~face);
    CompositionComplex link_complex(delta_->n(), delta_->ground() & ~face, std::move(faces));
    BettiVector betti = reduced_betti(chain_complex_of(link_complex));
    return cache_.emplace(face, std::move(betti)).first->second;
}

BettiVector main_betti(const CompositionComplex& delta) {
    return decomposition(delta).betti;
}

DecompositionReport decomposition(const CompositionComplex& delta, bool include_zero) {
    if (delta.empty()) throw std::invalid_argument("decomposition: void complex");
    LinkAnalysis links(delta);
    DecompositionReport report;
    report.n = delta.n();
    const int top = delta.dim();
    for (FaceMask f : delta.sorted_faces()) {
        Composition c = Composition::decode(delta.n(), f);
        const BettiVector& lb = links.betti_of_link(f);
        const Integer dim = beta_star(c);
        for (const auto& [j, mult] : lb.entries()) {
            const int degree = j + c.size() - 1;
            report.entries.push_back({degree, c, std::nullopt, mult, dim});
        }
        if (include_zero) {
            for (int degree = -1; degree <= top; ++degree) {
                const int j = degree - c.size() + 1;
                if (lb.get(j) == 0)
                    report.entries.push_back({degree, c, std::nullopt, 0, dim});
            }
        }
    }
    report.finalize();
    return report;
}

EulerPair euler_corollary(const CompositionComplex& delta, int oracle_bound) {
    if (delta.empty()) throw std::invalid_argument("euler_corollary: void complex");
    EulerPair pair{0, 0};

    if (delta.n() <= oracle_bound) {
        pair.direct = euler_characteristic(pi_star_oracle_complex(delta));
    } else {
        // f-vector of Q*_delta: the degree k-2 stratum has one cell per
        // ordered set partition of type c with n last, counted by the
        // multinomial of c/1 in n-1.
        for (FaceMask f : delta.faces()) {
            Composition c = Composition::decode(delta.n(), f);
            Integer cells = multinomial_of(delta.n() - 1, slash_one(c));
            (c.size() % 2 == 0) ? pair.direct += cells : pair.direct -= cells;
        }
    }

    LinkAnalysis links(delta);
    for (FaceMask f : delta.sorted_faces()) {
        Composition c = Composition::decode(delta.n(), f);
        Integer chi = 0;
        for (const auto& [deg, val] : links.betti_of_link(f).entries())
            (deg % 2 == 0) ? chi += val : chi -= val;
        Integer term = chi * beta_star(c);
        (c.size() % 2 == 1) ? pair.formula += term : pair.formula -= term;
    }
    return pair;
}

namespace {

DecompositionReport manifold_case(const CompositionComplex& delta,
                                  const std::vector<Composition>& summands,
                                  const char* what) {
    const int k = delta.dim();
    DecompositionReport report;
    report.n = delta.n();
    for (const Composition& c : summands)
        report.entries.push_back({k, c, std::nullopt, 1, beta_star(c)});
    report.finalize();

    const BettiVector computed = main_betti(delta);
    if (!(computed == report.betti)) {
        std::ostringstream os;
        os << what << ": asserted homeomorphism is inconsistent with homology; "
           << "formula gives " << report.betti.to_string() << " but main theorem gives "
           << computed.to_string();
        throw IdentityMismatch(os.str());
    }
    return report;
}

}  // namespace

DecompositionReport ball_case(const CompositionComplex& delta) {
    return manifold_case(delta, interior_faces(delta), "ball_case");
}

DecompositionReport sphere_case(const CompositionComplex& delta) {
    std::vector<Composition> all;
    for (FaceMask f : delta.sorted_faces())
        all.push_back(Composition::decode(delta.n(), f));
    return manifold_case(delta, all, "sphere_case");
}

std::map<int, Integer> morse_sphere_counts(const CompositionComplex& delta) {
    std::map<int, Integer> counts;
    const BettiVector betti = main_betti(delta);
    for (const auto& [deg, val] : betti.entries()) counts[deg] = val;
    return counts;
}

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (c.ran && !c.pass) return false;
    return true;
}

std::string VerifyReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.ran ? (c.pass ? "PASS " : "FAIL ") : "SKIP ") << c.name;
        if (!label.empty()) os << " [" << label << "]";
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    return os.str();
}

VerifyReport verify(const CompositionComplex& delta, const std::string& label,
                    int oracle_bound, int qstar_bound) {
    VerifyReport report;
    report.label = label;
    const int n = delta.n();
    const BettiVector main = main_betti(delta);

    {
        VerifyCheck check{"main-vs-oracle"};
        if (n <= oracle_bound) {
            check.ran = true;
            BettiVector oracle = oracle_betti(delta, oracle_bound);
            check.pass = main == oracle;
            if (!check.pass)
                check.detail = "main " + main.to_string() + " != oracle " + oracle.to_string();
        }
        report.checks.push_back(std::move(check));
    }
    {
        VerifyCheck check{"main-vs-qstar"};
        if (n <= qstar_bound) {
            check.ran = true;
            BettiVector qs = reduced_betti(q_star_chain_complex(delta));
            check.pass = main == qs;
            if (!check.pass)
                check.detail = "main " + main.to_string() + " != qstar " + qs.to_string();
        }
        report.checks.push_back(std::move(check));
    }
    {
        VerifyCheck check{"euler-corollary"};
        check.ran = true;
        EulerPair pair = euler_corollary(delta, oracle_bound);
        check.pass = pair.equal();
        if (!check.pass)
            check.detail = "direct " + pair.direct.str() + " != formula " + pair.formula.str();
        report.checks.push_back(std::move(check));
    }
    {
        VerifyCheck check{"lefschetz"};
        if (n <= oracle_bound) {
            check.ran = true;
            for (const auto& [t, pair] : lefschetz_check_all(delta)) {
                if (!pair.equal()) {
                    check.pass = false;
                    check.detail = "cycle type " + t.to_string() + ": lhs " + pair.lhs.str() +
                                   " != rhs " + pair.rhs.str();
                    break;
                }
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace parthom
