#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "goldspec/common.hpp"
#include "goldspec/eig.hpp"
#include "goldspec/errors.hpp"
#include "goldspec/families.hpp"
#include "goldspec/spectrum.hpp"
#include "test_util.hpp"

using namespace goldspec;
using testutil::approx;

namespace {

constexpr double kPi = std::numbers::pi;

SymMatrix random_symmetric(int n, uint64_t seed, double scale = 1.0) {
    std::mt19937_64 rng(seed);
    auto uniform = [&] {
        return (static_cast<double>(rng() >> 11) / 9007199254740992.0 * 2.0 - 1.0) * scale;
    };
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = uniform();
    return m;
}

std::vector<Graph> small_corpus() {
    return {cycle_graph(5),          cycle_graph(6),
            path_graph(6),           complete_graph(5),
            complete_bipartite_graph(3, 3), cocktail_party_graph(3),
            star_graph(7),           comet_graph(8, 1),
            moebius_ladder(8),       prism_graph(4),
            generalized_petersen(5, 2), platonic_graph("icosahedron"),
            named_graph("heawood"),  clique_expansion(cycle_graph(5), 2),
            k_cover(3, 2)};
}

}  // namespace

TEST_CASE("two-node matrix") {
    SymMatrix m(2);
    m.at(0, 1) = m.at(1, 0) = 1.0;
    const auto v = eig_symmetric(m);
    REQUIRE(v.size() == 2);
    CHECK(approx(v[0], 1, 1e-14));
    CHECK(approx(v[1], -1, 1e-14));
}

TEST_CASE("cycle eigenvalues match the cosine formula") {
    for (int n : {5, 8, 13}) {
        std::vector<double> expected;
        for (int j = 0; j < n; ++j) expected.push_back(2.0 * std::cos(2.0 * kPi * j / n));
        std::sort(expected.begin(), expected.end(), std::greater<>());
        const auto got = eig_symmetric(adjacency_matrix(cycle_graph(n)));
        REQUIRE(got.size() == expected.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(approx(got[i], expected[i], 1e-12));
    }
}

TEST_CASE("complete bipartite eigenvalues") {
    const auto v = eig_symmetric(adjacency_matrix(complete_bipartite_graph(3, 3)));
    const std::vector<double> expected{3, 0, 0, 0, 0, -3};
    for (size_t i = 0; i < v.size(); ++i) CHECK(approx(v[i], expected[i], 1e-12));
}

TEST_CASE("random symmetric matrices: trace, frobenius, ordering") {
    std::mt19937_64 sizes(20240901);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 5 + static_cast<int>(sizes() % 96);  // orders 5..100
        const SymMatrix m = random_symmetric(n, 1000 + trial, 3.0);
        double trace = 0, frob2 = 0;
        for (int i = 0; i < n; ++i) trace += m.at(i, i);
        for (double x : m.a) frob2 += x * x;

        const auto v = eig_symmetric(m);
        REQUIRE(static_cast<int>(v.size()) == n);
        CHECK(std::is_sorted(v.begin(), v.end(), std::greater_equal<>()));
        double sum = 0, sum2 = 0;
        for (double x : v) {
            sum += x;
            sum2 += x * x;
        }
        CHECK(approx(sum, trace, 1e-6 * std::max(1.0, std::abs(trace))));
        CHECK(approx(sum2, frob2, 1e-6 * std::max(1.0, frob2)));
    }
}

TEST_CASE("eigenpair residuals") {
    for (int n : {7, 24, 60}) {
        const SymMatrix m = random_symmetric(n, 77 + n);
        double norm_inf = 0;
        for (int i = 0; i < n; ++i) {
            double row = 0;
            for (int j = 0; j < n; ++j) row += std::abs(m.at(i, j));
            norm_inf = std::max(norm_inf, row);
        }
        const EigResult r = eig_symmetric_full(m);
        for (int j = 0; j < n; ++j) {
            double res = 0;
            for (int i = 0; i < n; ++i) {
                double av = 0;
                for (int k = 0; k < n; ++k)
                    av += m.at(i, k) * r.vectors[static_cast<size_t>(k) * n + j];
                res = std::max(res, std::abs(av - r.values[j] * r.vectors[static_cast<size_t>(i) * n + j]));
            }
            CHECK(res <= 1e-8 * std::max(1.0, norm_inf));
        }
    }
}

TEST_CASE("eigensolver contract checks") {
    SymMatrix bad(3);
    bad.at(0, 1) = 1.0;
    bad.at(1, 0) = 1.0 + 1e-6;
    CHECK_THROWS_AS(eig_symmetric(bad), ContractViolation);

    SymMatrix huge;
    huge.n = 5001;
    CHECK_THROWS_AS(eig_symmetric(huge), SizeError);

    SymMatrix one(1);
    one.at(0, 0) = 4.0;
    CHECK(eig_symmetric(one) == std::vector<double>{4.0});
}

TEST_CASE("spectrum grouping") {
    const Spectrum petersen = adjacency_spectrum(generalized_petersen(5, 2));
    REQUIRE(petersen.groups().size() == 3);
    CHECK(petersen.groups()[0].multiplicity == 1);
    CHECK(approx(petersen.groups()[0].value, 3, 1e-10));
    CHECK(petersen.groups()[1].multiplicity == 5);
    CHECK(approx(petersen.groups()[1].value, 1, 1e-10));
    CHECK(petersen.groups()[2].multiplicity == 4);
    CHECK(approx(petersen.groups()[2].value, -2, 1e-10));

    const Spectrum ico = adjacency_spectrum(platonic_graph("icosahedron"));
    REQUIRE(ico.groups().size() == 4);
    const double s5 = std::sqrt(5.0);
    const double values[] = {5, s5, -1, -s5};
    const int mult[] = {1, 3, 5, 3};
    for (int i = 0; i < 4; ++i) {
        CHECK(approx(ico.groups()[i].value, values[i], 1e-10));
        CHECK(ico.groups()[i].multiplicity == mult[i]);
    }

    const Spectrum k1 = adjacency_spectrum(complete_graph(1));
    REQUIRE(k1.groups().size() == 1);
    CHECK(k1.groups()[0].multiplicity == 1);
    CHECK(k1.groups()[0].value == 0.0);

    int total = 0;
    for (const auto& g : ico.groups()) total += g.multiplicity;
    CHECK(total == ico.size());
}

TEST_CASE("adjacency spectra: trace zero, power sum = 2m") {
    for (const Graph& g : small_corpus()) {
        const auto v = adjacency_spectrum(g).values();
        double sum = 0, sum2 = 0;
        for (double x : v) {
            sum += x;
            sum2 += x * x;
        }
        CHECK(std::abs(sum) <= 1e-8 * g.node_count());
        CHECK(approx(sum2, 2.0 * g.edge_count(), 1e-6 * 2.0 * g.edge_count()));
    }
}

TEST_CASE("spectral ratios") {
    const SpectralRatios c5 = spectral_ratios(cycle_graph(5));
    REQUIRE(c5.w1.has_value());
    REQUIRE(c5.w2.has_value());
    CHECK(approx(*c5.w1, kPhi, 1e-9));
    CHECK(approx(*c5.w2, kPhi, 1e-9));

    const SpectralRatios kn = spectral_ratios(complete_graph(7));
    REQUIRE(kn.w1.has_value());
    CHECK(approx(*kn.w1, 0.0, 1e-12));
    CHECK_FALSE(kn.w2.has_value());

    const SpectralRatios c4 = spectral_ratios(cycle_graph(4));
    CHECK(approx(*c4.w1, 1.0, 1e-12));
    CHECK(approx(*c4.w2, 2.0, 1e-12));

    const SpectralRatios cp3 = spectral_ratios(cocktail_party_graph(3));
    CHECK(approx(*cp3.w1, 0.5, 1e-12));
    CHECK(approx(*cp3.w2, 3.0, 1e-12));

    CHECK_THROWS_AS(spectral_ratios(complete_graph(1)), ParameterError);
}

TEST_CASE("ratio identities across the corpus") {
    for (const Graph& g : small_corpus()) {
        const SpectralRatios r = spectral_ratios(g);
        CHECK(r.length == r.gap + r.bulk);  // exact by construction
        if (r.w1 && r.w2) {
            CHECK(*r.w1 >= 0.0);
            CHECK(*r.w2 >= 1.0);
            CHECK(approx(*r.w2, 1.0 + 1.0 / *r.w1, 1e-9));
        }
        // Perron-Frobenius: connected graphs have a simple top eigenvalue
        if (is_connected(g) && g.node_count() >= 2) CHECK(r.gap > 1e-9);
    }
}

TEST_CASE("ratios are scale invariant") {
    for (const Graph& g : {cycle_graph(5), comet_graph(8, 1), moebius_ladder(8)}) {
        const Spectrum s = adjacency_spectrum(g);
        const SpectralRatios a = spectral_ratios(s);
        const SpectralRatios b = spectral_ratios(s.scaled(37.5));
        REQUIRE(a.w1.has_value());
        CHECK(approx(*a.w1, *b.w1, 1e-9));
        CHECK(approx(*a.w2, *b.w2, 1e-9));
    }
}

TEST_CASE("laplacian spectrum") {
    const auto k2 = laplacian_spectrum(complete_graph(2)).values();
    CHECK(approx(k2[0], 2, 1e-12));
    CHECK(approx(k2[1], 0, 1e-12));

    // for regular graphs mu_j = lambda1 - lambda_{n-j+1}
    for (const Graph& g : {cycle_graph(5), generalized_petersen(5, 2), k_cover(3, 2)}) {
        const auto adj = adjacency_spectrum(g).values();
        const auto lap = laplacian_spectrum(g).values();
        const int n = static_cast<int>(adj.size());
        for (int j = 0; j < n; ++j) CHECK(approx(lap[j], adj[0] - adj[n - 1 - j], 1e-8));
    }

    // zero eigenvalue multiplicity counts components
    const Graph two_triangles =
        Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const auto lap = laplacian_spectrum(two_triangles).values();
    const long zeros = std::count_if(lap.begin(), lap.end(),
                                     [](double v) { return std::abs(v) <= 1e-8; });
    CHECK(zeros == component_count(two_triangles));
    CHECK(approx(lap.back(), 0, 1e-8));
}

TEST_CASE("synchronizability ratio") {
    const SyncReport petersen = sync_ratio(generalized_petersen(5, 2));
    CHECK(approx(petersen.q, 2.5, 1e-9));
    REQUIRE(petersen.consistent_with_ratio_product.has_value());
    CHECK(*petersen.consistent_with_ratio_product);

    const SyncReport hw = sync_ratio(named_graph("heawood"));
    CHECK(approx(hw.q, 6.0 / (3.0 - std::sqrt(2.0)), 1e-9));

    const SyncReport mg = sync_ratio(named_graph("mcgee"));
    CHECK(approx(mg.q, 5.562, 1e-3));

    const SyncReport ico = sync_ratio(platonic_graph("icosahedron"));
    CHECK(approx(ico.q, kPhi * kPhi, 1e-8));

    // q >= 1 for connected graphs, and q = w1*w2 on regular ones
    for (const Graph& g : small_corpus()) {
        if (!is_connected(g)) continue;
        const SyncReport rep = sync_ratio(g);
        CHECK(rep.q >= 1.0 - 1e-12);
        const GraphProps p = graph_props(g);
        if (p.regular) {
            const SpectralRatios r = spectral_ratios(g);
            if (r.w1 && r.w2) CHECK(approx(rep.q, *r.w1 * *r.w2, 1e-9));
        }
    }

    const Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(sync_ratio(split), DomainError);
}

TEST_CASE("expansion bounds") {
    const auto ico = expansion_bounds(platonic_graph("icosahedron"));
    CHECK(approx(ico.first, (5.0 - std::sqrt(5.0)) / 2.0, 1e-9));
    CHECK(approx(ico.first, 1.3820, 1e-4));
    CHECK(approx(ico.second, std::sqrt(10.0 * (5.0 - std::sqrt(5.0))), 1e-9));
    CHECK(approx(ico.second, 5.2573, 1e-4));

    const auto k2 = expansion_bounds(complete_graph(2));
    CHECK(approx(k2.first, 1, 1e-12));
    CHECK(approx(k2.second, 2, 1e-12));

    const auto e2 = expansion_bounds(clique_expansion(cycle_graph(5), 2));
    CHECK(approx(e2.first, (4.0 - 2.0 / kPhi) / 2.0, 1e-9));
    CHECK(approx(e2.second, 4.7023, 1e-4));

    CHECK_THROWS_AS(expansion_bounds(comet_graph(8, 1)), DomainError);  // not regular
    const Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(expansion_bounds(split), DomainError);  // regular but disconnected
}
