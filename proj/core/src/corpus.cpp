#include "parthom/corpus.hpp"

#include <algorithm>

#include "parthom/filter_spec.hpp"
#include "parthom/frobenius.hpp"

namespace parthom {

CompositionComplex random_filter(int n, std::mt19937_64& rng) {
    const FaceMask full = full_mask(n);
    const std::size_t gens = 1 + static_cast<std::size_t>(rng() % 4);
    std::unordered_set<FaceMask> faces;
    for (std::size_t i = 0; i < gens; ++i)
        for_each_submask(static_cast<FaceMask>(rng()) & full,
                         [&](FaceMask sub) { faces.insert(sub); });
    return CompositionComplex(n, full, std::move(faces));
}

std::vector<CompositionComplex> all_filters(int n) {
    if (n > 5) throw std::invalid_argument("all_filters: exhaustive only for n <= 5");
    const int vertices = n - 1;
    const unsigned faces_total = 1u << vertices;
    std::vector<CompositionComplex> out;
    // A family is a subset of the 2^(n-1) faces; keep the downward-closed
    // nonempty ones.
    for (unsigned family = 1; family < (1u << faces_total); ++family) {
        bool closed = true;
        for (unsigned face = 0; face < faces_total && closed; ++face) {
            if (!(family & (1u << face))) continue;
            for (int b = 0; b < vertices && closed; ++b)
                if (face & (1u << b))
                    if (!(family & (1u << (face & ~(1u << b))))) closed = false;
        }
        if (!closed) continue;
        std::unordered_set<FaceMask> faces;
        for (unsigned face = 0; face < faces_total; ++face)
            if (family & (1u << face)) faces.insert(face);
        out.emplace_back(n, full_mask(n), std::move(faces));
    }
    return out;
}

std::vector<NamedFilter> canonical_families(int n) {
    std::vector<std::string> specs;
    specs.push_back("full@" + std::to_string(n));

    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    specs.push_back("simplex:" + Composition(ones).to_string());
    if (n >= 2) specs.push_back("boundary:" + Composition(ones).to_string());
    if (n >= 3) specs.push_back("skeleton:" + std::to_string(n - 4) + ":" +
                                Composition(ones).to_string());

    for (int d = 2; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        specs.push_back("ddiv:" + std::to_string(d) + "@" + std::to_string(n));
        if (n / d >= 2) {
            std::vector<int> parts(static_cast<std::size_t>(n / d), d);
            specs.push_back("boundary:" + Composition(parts).to_string());
        }
    }

    if (n >= 2) specs.push_back("semigroup:2,3@" + std::to_string(n));
    {
        Semigroup s357({3, 5, 7}, n);
        if (n >= 1 && s357.contains(n))
            specs.push_back("semigroup:3,5,7@" + std::to_string(n));
    }

    // A non-pure filter: mixed generator dimensions.
    if (n >= 5) {
        std::vector<int> fine(static_cast<std::size_t>(n - 2), 1);
        fine.back() = 3;  // (1,...,1,3)
        specs.push_back("gen:" + Composition(fine).to_string() + "," +
                        Composition({2, n - 2}).to_string() + "@" + std::to_string(n));
    }

    // Knapsack complexes with lambda + m summing to n.
    if (n >= 4) specs.push_back("knapsack:{1,2}|" + std::to_string(n - 3));
    if (n >= 6 && n % 3 == 0) {
        std::vector<int> lambda(static_cast<std::size_t>(n / 3 - 1), 3);
        std::string body;
        for (std::size_t i = 0; i < lambda.size(); ++i)
            body += (i ? ",3" : "3");
        specs.push_back("knapsack:{" + body + "}|3");
    }

    std::sort(specs.begin(), specs.end());
    specs.erase(std::unique(specs.begin(), specs.end()), specs.end());

    std::vector<NamedFilter> out;
    for (const std::string& spec : specs) out.push_back({spec, parse_spec(spec)});
    return out;
}

}  // namespace parthom
