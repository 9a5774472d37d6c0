#include "parthom/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "parthom/specht.hpp"

namespace parthom {

namespace {

// All compositions of n whose parts lie in `allowed` (sorted ascending), in
// lexicographic order of the part sequences.
void compositions_with_parts(int n, const std::vector<int>& allowed,
                             const std::function<void(const Composition&)>& f) {
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            if (!parts.empty()) f(Composition(parts));
            return;
        }
        for (int p : allowed) {
            if (p > remaining) break;
            parts.push_back(p);
            rec(remaining - p);
            parts.pop_back();
        }
    };
    rec(n);
}

}  // namespace

Semigroup::Semigroup(std::vector<int> generators, int bound)
    : generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("Semigroup: no generators");
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    for (int g : generators_)
        if (g < 1) throw std::invalid_argument("Semigroup: generator < 1");
    if (bound < 0) bound = 0;
    member_.assign(static_cast<std::size_t>(bound) + 1, 0);
    for (int m = 1; m <= bound; ++m) {
        for (int g : generators_) {
            if (g > m) break;
            if (g == m || member_[static_cast<std::size_t>(m - g)]) {
                member_[static_cast<std::size_t>(m)] = 1;
                break;
            }
        }
    }
}

Semigroup Semigroup::arithmetic(int a, int d, int bound) {
    if (a < 1 || d < 1) throw std::invalid_argument("Semigroup::arithmetic: a, d >= 1");
    std::vector<int> gens;
    for (int j = 0; j < a; ++j) gens.push_back(a + j * d);
    return Semigroup(std::move(gens), bound);
}

bool Semigroup::contains(int m) const {
    if (m < 1) return false;
    if (m >= static_cast<int>(member_.size()))
        throw std::out_of_range("Semigroup::contains: beyond membership table");
    return member_[static_cast<std::size_t>(m)] != 0;
}

std::vector<int> Semigroup::members() const {
    std::vector<int> out;
    for (int m = 1; m < static_cast<int>(member_.size()); ++m)
        if (member_[static_cast<std::size_t>(m)]) out.push_back(m);
    return out;
}

CompositionComplex frobenius_filter(const Semigroup& lambda, int n) {
    if (n < 1 || !lambda.contains(n))
        throw std::invalid_argument("frobenius_filter: n is not in the semigroup");
    std::vector<int> allowed;
    for (int m : lambda.members())
        if (m <= n) allowed.push_back(m);
    std::unordered_set<FaceMask> faces;
    compositions_with_parts(n, allowed,
                            [&](const Composition& c) { faces.insert(c.encode()); });
    return CompositionComplex(n, full_mask(n), std::move(faces));
}

TwoGenSpec::TwoGenSpec(int a_, int b_) : a(a_), b(b_) {
    if (!(2 <= a && a < b)) throw std::invalid_argument("TwoGenSpec: need 2 <= a < b");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("TwoGenSpec: a, b not coprime");
}

bool TwoGenSpec::in_A(int m) const {
    if (m < 1) return false;
    const int r = m % (a * b);
    return r == 0 || r == a || r == b || r == (a + b) % (a * b);
}

int TwoGenSpec::h(int m) const {
    const int ab = a * b;
    const int r = m % ab;
    if (r == 0) return 2 * m / ab - 2;
    if (r == a) return 2 * (m - a) / ab - 1;
    if (r == b) return 2 * (m - b) / ab - 1;
    if (r == (a + b) % ab) return 2 * (m - a - b) / ab;
    throw std::invalid_argument("TwoGenSpec::h: m not in A");
}

int TwoGenSpec::residue_r(int n) const {
    for (int r = 0; r < a; ++r)
        if ((n - r * b) % a == 0) return r;
    throw std::logic_error("TwoGenSpec::residue_r: unreachable");
}

int TwoGenSpec::residue_s(int n) const {
    for (int s = 0; s < b; ++s)
        if ((n - s * a) % b == 0) return s;
    throw std::logic_error("TwoGenSpec::residue_s: unreachable");
}

std::optional<int> h_value(const TwoGenSpec& spec, int n) {
    if (!spec.in_A(n)) return std::nullopt;
    return spec.h(n);
}

namespace {

std::vector<int> values_in_A(const TwoGenSpec& spec, int n) {
    std::vector<int> allowed;
    for (int m = 1; m <= n; ++m)
        if (spec.in_A(m)) allowed.push_back(m);
    return allowed;
}

}  // namespace

DecompositionReport ab_homology(const TwoGenSpec& spec, int n) {
    Semigroup lambda({spec.a, spec.b}, n);
    if (!lambda.contains(n))
        throw std::invalid_argument("ab_homology: n not in <a,b>");
    DecompositionReport report;
    report.n = n;
    compositions_with_parts(n, values_in_A(spec, n), [&](const Composition& c) {
        int dim = 2 * c.size() - 2;
        for (int p : c.parts()) dim += spec.h(p);
        report.entries.push_back({dim, c, std::nullopt, 1, beta_star(c)});
    });
    report.finalize();
    return report;
}

ExtremeFamily ab_top(const TwoGenSpec& spec, int n) {
    const int r = spec.residue_r(n);
    ExtremeFamily out;
    out.degree = (n - r * (spec.b - spec.a)) / spec.a - 2;
    out.total = 0;
    std::vector<int> allowed{spec.a, spec.b, spec.a + spec.b};
    std::sort(allowed.begin(), allowed.end());
    compositions_with_parts(n, allowed, [&](const Composition& c) {
        int not_a = 0;
        for (int p : c.parts())
            if (p != spec.a) ++not_a;
        if (not_a != r) return;
        out.total += beta_star(c);
        out.family.push_back(c);
    });
    return out;
}

ExtremeFamily ab_bottom(const TwoGenSpec& spec, int n) {
    if (spec.a < 3)
        throw std::invalid_argument("ab_bottom: requires 3 <= a < b");
    const int r = spec.residue_r(n);
    const int s = spec.residue_s(n);
    ExtremeFamily out;
    out.degree = 2 * (n - s * spec.a - r * spec.b) / (spec.a * spec.b) + r + s - 2;
    out.total = 0;
    const int ab = spec.a * spec.b;
    compositions_with_parts(n, values_in_A(spec, n), [&](const Composition& c) {
        int count_a_side = 0, count_b_side = 0;
        for (int p : c.parts()) {
            const int res = p % ab;
            if (res == spec.a || res == spec.a + spec.b) ++count_a_side;
            if (res == spec.b || res == spec.a + spec.b) ++count_b_side;
        }
        if (count_a_side != s || count_b_side != r) return;
        out.total += beta_star(c);
        out.family.push_back(c);
    });
    return out;
}

DecompositionReport a2_homology(int b, int n) {
    if (b < 3 || b % 2 == 0)
        throw std::invalid_argument("a2_homology: b must be odd and >= 3");
    Semigroup lambda({2, b}, n);
    if (!lambda.contains(n))
        throw std::invalid_argument("a2_homology: n not in <2,b>");
    std::vector<int> allowed;
    for (int m = 1; m <= n; ++m)
        if (m % b == 0 || m % b == 2) allowed.push_back(m);
    DecompositionReport report;
    report.n = n;
    compositions_with_parts(n, allowed, [&](const Composition& c) {
        int s = 0;
        for (int p : c.parts())
            if (p % b == 2) ++s;
        const int degree = (n + s * (b - 2)) / b - 2;
        report.entries.push_back({degree, c, std::nullopt, 1, beta_star(c)});
    });
    report.finalize();
    return report;
}

ApSpec::ApSpec(int a_, int d_) : a(a_), d(d_) {
    if (a < 1 || d < 1) throw std::invalid_argument("ApSpec: a, d >= 1");
}

int ApSpec::scale() const { return std::gcd(a, d); }

Semigroup ApSpec::semigroup(int bound) const { return Semigroup::arithmetic(a, d, bound); }

std::vector<int> ApSpec::progression_entries() const {
    std::vector<int> out;
    for (int j = 1; j <= a / scale() - 1; ++j) out.push_back(a + j * d);
    return out;
}

Composition run_coarsening(const Composition& d, int a) {
    std::vector<int> parts;
    int run = 0;
    for (int p : d.parts()) {
        run += p;
        if (p == a) {
            parts.push_back(run);
            run = 0;
        }
    }
    if (run > 0) parts.push_back(run);
    return Composition(std::move(parts));
}

std::vector<Composition> ap_critical_cells(const ApSpec& spec, int n) {
    Semigroup lambda = spec.semigroup(n);
    if (!lambda.contains(n))
        throw std::invalid_argument("ap_critical_cells: n not in the semigroup");
    const std::vector<int> interior_entries = spec.progression_entries();
    std::vector<int> last_entries = interior_entries;
    last_entries.insert(last_entries.begin(), spec.a);

    std::vector<Composition> out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        for (int p : last_entries) {
            if (p == remaining) {
                parts.push_back(p);
                out.push_back(Composition(parts));
                parts.pop_back();
            }
        }
        for (int p : interior_entries) {
            if (p >= remaining) continue;
            parts.push_back(p);
            rec(remaining - p);
            parts.pop_back();
        }
    };
    rec(n);
    std::sort(out.begin(), out.end(), [](const Composition& x, const Composition& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.encode() < y.encode();
    });
    return out;
}

DecompositionReport ap_homology(const ApSpec& spec, int n) {
    Semigroup lambda = spec.semigroup(n);
    if (!lambda.contains(n))
        throw std::invalid_argument("ap_homology: n not in the semigroup");
    std::vector<int> allowed = spec.progression_entries();
    allowed.insert(allowed.begin(), spec.a);
    DecompositionReport report;
    report.n = n;
    compositions_with_parts(n, allowed, [&](const Composition& c) {
        Composition upper = run_coarsening(c, spec.a);
        report.entries.push_back(
            {c.size() - 2, c, upper, 1, dim_specht_interval(c, upper)});
    });
    report.finalize();
    return report;
}

DecompositionReport browdy_case(const ApSpec& spec, int n) {
    if (spec.a % spec.d != 0)
        throw std::invalid_argument("browdy_case: requires d | a");
    return ap_homology(spec, n);
}

}  // namespace parthom
