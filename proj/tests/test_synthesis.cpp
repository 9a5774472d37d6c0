#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parthom/corpus.hpp"
#include "parthom/frobenius.hpp"
#include "parthom/homology.hpp"
#include "parthom/partitions.hpp"
#include "parthom/synthesis.hpp"

using namespace parthom;

namespace {

BettiVector betti_of(std::initializer_list<std::pair<int, int>> entries) {
    BettiVector b;
    for (auto [deg, val] : entries) b.set(deg, val);
    return b;
}

}  // namespace

TEST_CASE("main theorem on model families") {
    CHECK(main_betti(filter_from_generators(4, {Composition({2, 2})})) == betti_of({{0, 2}}));
    CHECK(main_betti(boundary_of_simplex(Composition({1, 1, 1, 1}))) == betti_of({{1, 6}}));
    CHECK(main_betti(filter_from_generators(5, {Composition({5})})) == betti_of({{-1, 1}}));
    CHECK(main_betti(full_complex(6)) == BettiVector{});

    // no singleton blocks at n = 5: 1 + 5 + 3 isolated classes
    CHECK(main_betti(frobenius_filter(Semigroup({2, 3}, 5), 5)) == betti_of({{0, 9}}));
}

TEST_CASE("decomposition reports") {
    DecompositionReport report = decomposition(filter_from_generators(5, {Composition({5})}));
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].degree == -1);
    CHECK(report.entries[0].multiplicity == 1);
    CHECK(report.entries[0].specht_dim == 1);
    CHECK(report.euler == -1);

    // per-degree totals match the summand inventory (invariant of the type)
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        CompositionComplex delta = random_filter(6, rng);
        DecompositionReport r = decomposition(delta);
        std::map<int, Integer> totals;
        for (const auto& e : r.entries) totals[e.degree] += e.multiplicity * e.specht_dim;
        for (const auto& [deg, val] : r.betti.entries()) CHECK(totals[deg] == val);
        // entries with dimension zero are retained (compositions ending in 1)
        for (const auto& e : r.entries)
            if (e.specht_dim == 0) CHECK(e.composition.last() == 1);
    }

    // verbose mode adds zero-multiplicity rows without changing totals
    CompositionComplex delta = boundary_of_simplex(Composition({2, 2, 2}));
    DecompositionReport terse = decomposition(delta, false);
    DecompositionReport verbose = decomposition(delta, true);
    CHECK(terse.betti == verbose.betti);
    CHECK(verbose.entries.size() > terse.entries.size());
}

TEST_CASE("exhaustive main vs oracle for n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& delta : all_filters(n)) {
            CHECK(main_betti(delta) == oracle_betti(delta));
            CHECK(main_betti(delta) == reduced_betti(q_star_chain_complex(delta)));
        }
}

TEST_CASE("euler corollary") {
    EulerPair pair = euler_corollary(filter_from_generators(4, {Composition({2, 2})}));
    CHECK(pair.direct == 2);
    CHECK(pair.formula == 2);

    pair = euler_corollary(filter_from_generators(6, {Composition({6})}));
    CHECK(pair.direct == -1);
    CHECK(pair.formula == -1);

    pair = euler_corollary(boundary_of_simplex(Composition({1, 1, 1, 1})));
    CHECK(pair.direct == -6);
    CHECK(pair.formula == -6);

    // beyond the oracle bound the direct side counts Q* cells
    pair = euler_corollary(frobenius_filter(Semigroup({3, 5, 7}, 9), 9), 7);
    CHECK(pair.equal());

    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(euler_corollary(random_filter(6, rng)).equal());
}

TEST_CASE("ball and sphere specializations") {
    // simplex: single summand S^{B*(facet)} in the top degree
    DecompositionReport ball = ball_case(filter_from_generators(6, {Composition({2, 2, 2})}));
    REQUIRE(ball.entries.size() == 1);
    CHECK(ball.entries[0].degree == 1);
    CHECK(ball.entries[0].composition == Composition({2, 2, 2}));
    CHECK(ball.betti == betti_of({{1, 16}}));

    // boundary of the simplex: all faces, dimension binom - beta*
    DecompositionReport sphere = sphere_case(boundary_of_simplex(Composition({2, 2, 2})));
    Integer expected = multinomial_of(5, {2, 2, 1}) - beta_star(Composition({2, 2, 2}));
    CHECK(sphere.betti.get(0) == expected);

    // knapsack ball: degree k-2 over the interior faces
    DecompositionReport knap = ball_case(knapsack_complex({1, 2}, 2));
    CHECK(knap.betti == betti_of({{1, 11}}));

    // a wrong homeomorphism assertion is rejected
    CHECK_THROWS_AS((void)sphere_case(filter_from_generators(6, {Composition({2, 2, 2})})),
                    IdentityMismatch);
}

TEST_CASE("morse sphere counts equal main betti") {
    std::mt19937_64 rng(777);
    for (int n = 4; n <= 6; ++n)
        for (int trial = 0; trial < 6; ++trial) {
            CompositionComplex delta = random_filter(n, rng);
            auto counts = morse_sphere_counts(delta);
            BettiVector betti = main_betti(delta);
            for (const auto& [deg, val] : counts) CHECK(betti.get(deg) == val);
            for (const auto& [deg, val] : betti.entries()) CHECK(counts.at(deg) == val);
        }
}

TEST_CASE("skeleton multiplicities match the binomial closed form") {
    // k-skeleton of the simplex on a composition into k + r parts:
    // each face c with |c| <= k + 2 contributes binom(k+r-|c|-1, k-|c|+2)
    struct Case {
        Composition d;
        int k;
    };
    for (const Case& sk : {Case{Composition({1, 1, 1, 1, 1}), 1},
                           Case{Composition({2, 1, 2, 1}), 1},
                           Case{Composition({1, 1, 1, 1, 1, 1}), 2}}) {
        const int r = sk.d.size() - sk.k;
        CompositionComplex delta = skeleton(filter_from_generators(sk.d.n(), {sk.d}), sk.k);
        DecompositionReport report = decomposition(delta);
        std::map<FaceMask, Integer> multiplicity;
        for (const auto& e : report.entries) {
            CHECK(e.degree == sk.k);  // shellable: homology concentrated on top
            multiplicity[e.composition.encode()] += e.multiplicity;
        }
        for (FaceMask f : delta.sorted_faces()) {
            Composition c = Composition::decode(delta.n(), f);
            Integer expected = binomial(sk.k + r - c.size() - 1, sk.k - c.size() + 2);
            CHECK(multiplicity[f] == expected);
        }
    }
}

TEST_CASE("homology of shellable families is concentrated on top") {
    for (const Composition& d :
         {Composition({2, 2, 2}), Composition({1, 1, 1, 1, 1}), Composition({3, 2, 1})}) {
        CompositionComplex simplex = filter_from_generators(d.n(), {d});
        const BettiVector simplex_betti = main_betti(simplex);
        for (const auto& [deg, val] : simplex_betti.entries()) CHECK(deg == d.size() - 2);
        if (d.size() >= 2) {
            const BettiVector sphere_betti = main_betti(boundary_of_simplex(d));
            for (const auto& [deg, val] : sphere_betti.entries()) CHECK(deg == d.size() - 3);
        }
    }
}

TEST_CASE("verify runs its full ledger") {
    VerifyReport report = verify(filter_from_generators(4, {Composition({2, 2})}), "simplex");
    CHECK(report.all_passed());
    CHECK(report.checks.size() == 4);
    for (const auto& check : report.checks) CHECK(check.ran);

    // out-of-bound oracle checks are skipped, not failed
    VerifyReport big = verify(frobenius_filter(Semigroup({3, 5, 7}, 10), 10), "n10");
    CHECK(big.all_passed());
    bool oracle_ran = false;
    for (const auto& check : big.checks)
        if (check.name == "main-vs-oracle") oracle_ran = check.ran;
    CHECK_FALSE(oracle_ran);

    CHECK(verify(full_complex(5), "full").all_passed());
}
