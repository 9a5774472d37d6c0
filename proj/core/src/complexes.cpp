#include "parthom/complexes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace parthom {

namespace {

void validate_faces(int n, FaceMask ground, const std::unordered_set<FaceMask>& faces) {
    if (n < 1 || n > kMaxCompositionSize)
        throw std::invalid_argument("CompositionComplex: n out of range");
    if ((ground & ~full_mask(n)) != 0)
        throw std::invalid_argument("CompositionComplex: ground outside {1..n-1}");
    for (FaceMask f : faces) {
        if ((f & ~ground) != 0)
            throw std::invalid_argument("CompositionComplex: face outside ground set");
        // Downward closure: every one-element deletion must be present.
        FaceMask rest = f;
        while (rest) {
            FaceMask bit = rest & (~rest + 1);
            if (!faces.count(f & ~bit))
                throw std::logic_error("CompositionComplex: not downward closed");
            rest &= rest - 1;
        }
    }
}

}  // namespace

CompositionComplex::CompositionComplex(int n, FaceMask ground,
                                       std::unordered_set<FaceMask> faces)
    : n_(n), ground_(ground), faces_(std::move(faces)) {
    validate_faces(n_, ground_, faces_);
}

int CompositionComplex::dim() const {
    int d = -2;
    for (FaceMask f : faces_) d = std::max(d, popcount(f) - 1);
    return d;
}

std::vector<FaceMask> CompositionComplex::sorted_faces() const {
    std::vector<FaceMask> out(faces_.begin(), faces_.end());
    std::sort(out.begin(), out.end(), [](FaceMask a, FaceMask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

std::vector<FaceMask> CompositionComplex::facets() const {
    std::vector<FaceMask> out;
    for (FaceMask f : faces_) {
        bool maximal = true;
        FaceMask spare = ground_ & ~f;
        while (spare && maximal) {
            FaceMask bit = spare & (~spare + 1);
            if (faces_.count(f | bit)) maximal = false;
            spare &= spare - 1;
        }
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](FaceMask a, FaceMask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

LinkComplex as_rooted(const CompositionComplex& delta) {
    return LinkComplex{Composition::single(delta.n()), delta};
}

CompositionComplex filter_from_generators(int n, const std::vector<Composition>& gens) {
    std::unordered_set<FaceMask> faces;
    for (const Composition& g : gens) {
        if (g.n() != n)
            throw std::invalid_argument("filter_from_generators: generator " +
                                        g.to_string() + " does not sum to n");
        for_each_submask(g.encode(), [&](FaceMask sub) { faces.insert(sub); });
    }
    return CompositionComplex(n, full_mask(n), std::move(faces));
}

CompositionComplex full_complex(int n) {
    std::unordered_set<FaceMask> faces;
    const FaceMask full = full_mask(n);
    for (FaceMask m = 0;; ++m) {
        faces.insert(m);
        if (m == full) break;
    }
    return CompositionComplex(n, full, std::move(faces));
}

CompositionComplex boundary_of_simplex(const Composition& c) {
    if (c.size() < 2)
        throw std::invalid_argument("boundary_of_simplex: boundary of a point is void");
    std::unordered_set<FaceMask> faces;
    for_each_submask(c.encode(), [&](FaceMask sub) { faces.insert(sub); });
    faces.erase(c.encode());
    return CompositionComplex(c.n(), full_mask(c.n()), std::move(faces));
}

CompositionComplex skeleton(const CompositionComplex& delta, int k) {
    if (k < -1) throw std::invalid_argument("skeleton: k < -1");
    std::unordered_set<FaceMask> faces;
    for (FaceMask f : delta.faces())
        if (popcount(f) - 1 <= k) faces.insert(f);
    return CompositionComplex(delta.n(), delta.ground(), std::move(faces));
}

LinkComplex link(const CompositionComplex& delta, const Composition& c) {
    const FaceMask base = c.encode();
    if (!delta.contains(base))
        throw std::invalid_argument("link: face " + c.to_string() + " not in complex");
    std::unordered_set<FaceMask> faces;
    for (FaceMask f : delta.faces())
        if ((f & base) == base) faces.insert(f & ~base);
    return LinkComplex{c, CompositionComplex(delta.n(), delta.ground() & ~base,
                                             std::move(faces))};
}

LinkComplex join(const LinkComplex& a, const LinkComplex& b) {
    const int m = a.n(), mp = b.n();
    std::vector<int> base_parts = a.base.parts();
    base_parts.insert(base_parts.end(), b.base.parts().begin(), b.base.parts().end());
    Composition base(std::move(base_parts));

    std::unordered_set<FaceMask> faces;
    for (FaceMask fa : a.complex.faces())
        for (FaceMask fb : b.complex.faces()) faces.insert(fa | (fb << m));
    FaceMask ground = a.complex.ground() | (b.complex.ground() << m);
    return LinkComplex{base, CompositionComplex(m + mp, ground, std::move(faces))};
}

LinkComplex join(const CompositionComplex& a, const CompositionComplex& b) {
    return join(as_rooted(a), as_rooted(b));
}

bool is_knapsack(const std::vector<int>& lambda) {
    std::map<int, int> mult;
    for (int p : lambda) {
        if (p < 1) return false;
        ++mult[p];
    }
    std::unordered_set<long long> sums{0};
    long long expected = 1;
    for (auto [value, count] : mult) {
        expected *= count + 1;
        std::unordered_set<long long> next;
        for (long long s : sums)
            for (int e = 0; e <= count; ++e) next.insert(s + static_cast<long long>(e) * value);
        sums = std::move(next);
    }
    return static_cast<long long>(sums.size()) == expected;
}

CompositionComplex knapsack_complex(const std::vector<int>& lambda, int m) {
    if (m < 1) throw std::invalid_argument("knapsack_complex: m < 1");
    if (!is_knapsack(lambda))
        throw std::invalid_argument("knapsack_complex: lambda is not a knapsack partition");
    int n = m;
    for (int p : lambda) n += p;
    std::vector<int> prefix(lambda);
    std::sort(prefix.begin(), prefix.end());
    std::vector<Composition> facets;
    do {
        std::vector<int> parts(prefix);
        parts.push_back(m);
        facets.emplace_back(std::move(parts));
    } while (std::next_permutation(prefix.begin(), prefix.end()));
    if (facets.empty()) facets.push_back(Composition::single(n));
    return filter_from_generators(n, facets);
}

std::vector<Composition> interior_faces(const CompositionComplex& delta) {
    if (delta.empty()) throw std::invalid_argument("interior_faces: void complex");
    const std::vector<FaceMask> facets = delta.facets();
    const int top = popcount(facets.back()) - 1;
    if (popcount(facets.front()) - 1 != top)
        throw std::invalid_argument("interior_faces: complex is not pure");

    // Count facets over each codimension-1 face.
    std::unordered_set<FaceMask> boundary;
    for (FaceMask f : delta.faces()) {
        if (popcount(f) - 1 != top - 1) continue;
        int count = 0;
        FaceMask spare = delta.ground() & ~f;
        while (spare) {
            FaceMask bit = spare & (~spare + 1);
            if (delta.contains(f | bit)) ++count;
            spare &= spare - 1;
        }
        if (count >= 3)
            throw std::invalid_argument(
                "interior_faces: codimension-1 face in >= 3 facets (not a pseudomanifold)");
        if (count == 1)
            for_each_submask(f, [&](FaceMask sub) { boundary.insert(sub); });
    }

    std::vector<Composition> interior;
    for (FaceMask f : delta.sorted_faces())
        if (!boundary.count(f)) interior.push_back(Composition::decode(delta.n(), f));
    return interior;
}

}  // namespace parthom
