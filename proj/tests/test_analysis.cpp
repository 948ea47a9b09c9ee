#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "goldspec/analysis.hpp"
#include "goldspec/errors.hpp"
#include "goldspec/families.hpp"
#include "test_util.hpp"

using namespace goldspec;
using testutil::approx;

namespace {

FamilySpec make_spec(Family f, std::map<std::string, long> params) {
    FamilySpec s;
    s.family = f;
    s.params = std::move(params);
    return s;
}

}  // namespace

TEST_CASE("golden constant identities") {
    const GoldenIdentityReport rep = golden_constant();
    CHECK(approx(rep.phi, (1.0 + std::sqrt(5.0)) / 2.0, 1e-12));
    CHECK(std::abs(rep.quadratic_residual) <= 1e-12);
    CHECK(rep.reciprocal_power_error <= 1e-10);

    REQUIRE(rep.convergents.size() == 50);
    CHECK(rep.convergents[0] == 2.0);   // 1 + 1/1
    CHECK(rep.convergents[1] == 1.5);   // 1 + 1/(1 + 1/1)
    // depth 8 is the ratio of the 10th and 9th Fibonacci numbers
    CHECK(approx(rep.convergents[7], 55.0 / 34.0, 1e-14));
    CHECK(approx(rep.convergents[7], 1.6176, 1e-4));
    CHECK(rep.convergent_error <= 1e-10);
}

TEST_CASE("golden classification") {
    CHECK(classify_gsg(cycle_graph(5)).is_golden);
    CHECK(classify_gsg(platonic_graph("icosahedron")).is_golden);

    const GsgVerdict c6 = classify_gsg(cycle_graph(6));
    REQUIRE(c6.applicable());
    CHECK(approx(*c6.w1, 3.0, 1e-9));
    CHECK(approx(*c6.w2, 4.0 / 3.0, 1e-9));
    CHECK(approx(*c6.deviation, 3.0 - kPhi, 1e-9));
    CHECK_FALSE(c6.is_golden);

    // almost-golden needs the wider tolerance
    const GsgVerdict comet = classify_gsg(comet_graph(17, 1), kAlmostGoldenTol);
    CHECK(comet.is_golden);
    CHECK_FALSE(classify_gsg(comet_graph(17, 1)).is_golden);

    // undefined second ratio: never golden, no deviation
    const GsgVerdict kn = classify_gsg(complete_graph(5));
    CHECK_FALSE(kn.applicable());
    CHECK_FALSE(kn.is_golden);

    // deviation is invariant under spectrum scaling
    const Spectrum s = adjacency_spectrum(moebius_ladder(8));
    CHECK(approx(*classify_gsg(s).deviation, *classify_gsg(s.scaled(11.0)).deviation, 1e-9));
}

TEST_CASE("ramanujan report") {
    const RamanujanReport petersen = ramanujan_check(generalized_petersen(5, 2));
    CHECK(petersen.d == 3);
    CHECK(approx(petersen.lambda_nontrivial, 2.0, 1e-9));
    CHECK(approx(petersen.bound, 2.0 * std::sqrt(2.0), 1e-12));
    CHECK(petersen.strict_pass);
    CHECK(petersen.second_eigenvalue_pass);

    // the expansion family passes the second-eigenvalue test up to k = 20
    for (int k : {19, 20}) {
        const RamanujanReport r = ramanujan_check(clique_expansion(cycle_graph(5), k));
        CHECK(r.d == 2 * k);
        CHECK(approx(r.lambda2, k / kPhi, 1e-8));
        CHECK(r.second_eigenvalue_pass);
    }
    CHECK_FALSE(ramanujan_check(clique_expansion(cycle_graph(5), 21)).second_eigenvalue_pass);

    // k = 3: the most negative eigenvalue breaks the strict variant only
    const RamanujanReport r3 = ramanujan_check(clique_expansion(cycle_graph(5), 3));
    CHECK(approx(r3.lambda_nontrivial, 3.0 * kPhi, 1e-8));
    CHECK(approx(r3.bound, 2.0 * std::sqrt(5.0), 1e-12));
    CHECK_FALSE(r3.strict_pass);
    CHECK(r3.second_eigenvalue_pass);

    // degree-1 edge case: both eigenvalues are trivial
    const RamanujanReport k2 = ramanujan_check(complete_graph(2));
    CHECK(k2.lambda_nontrivial == 0.0);
    CHECK(k2.strict_pass);

    CHECK_THROWS_AS(ramanujan_check(comet_graph(8, 1)), DomainError);
    const Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(ramanujan_check(split), DomainError);
}

TEST_CASE("strict ramanujan pass implies second-eigenvalue pass") {
    std::vector<Graph> regulars{cycle_graph(5),
                                cycle_graph(8),
                                complete_graph(6),
                                complete_bipartite_graph(3, 3),
                                cocktail_party_graph(4),
                                moebius_ladder(10),
                                prism_graph(6),
                                generalized_petersen(7, 2),
                                platonic_graph("dodecahedron"),
                                named_graph("mcgee"),
                                k_cover(5, 2),
                                clique_expansion(cycle_graph(5), 4)};
    for (const Graph& g : regulars) {
        const RamanujanReport r = ramanujan_check(g);
        if (r.strict_pass) CHECK(r.second_eigenvalue_pass);
    }
}

TEST_CASE("closed forms match the numeric eigensolver") {
    std::vector<FamilySpec> specs;
    for (long n = 3; n <= 12; ++n) specs.push_back(make_spec(Family::cycle, {{"n", n}}));
    for (long n = 1; n <= 10; ++n) specs.push_back(make_spec(Family::path, {{"n", n}}));
    for (long n = 1; n <= 8; ++n) specs.push_back(make_spec(Family::complete, {{"n", n}}));
    specs.push_back(make_spec(Family::complete_bipartite, {{"a", 3}, {"b", 2}}));
    specs.push_back(make_spec(Family::complete_bipartite, {{"a", 8}, {"b", 5}}));
    specs.push_back(make_spec(Family::complete_bipartite, {{"a", 1}, {"b", 1}}));
    for (long c : {2, 3, 4, 6, 12})
        specs.push_back(make_spec(Family::complete_multipartite, {{"n", 12}, {"c", c}}));
    for (long p = 1; p <= 6; ++p) specs.push_back(make_spec(Family::cocktail_party, {{"n", p}}));
    for (long k = 1; k <= 10; ++k) specs.push_back(make_spec(Family::c5_expansion, {{"k", k}}));
    for (long k = 1; k <= 5; ++k) {
        specs.push_back(make_spec(Family::k_cover_c3, {{"k", k}}));
        specs.push_back(make_spec(Family::k_cover_c5, {{"k", k}}));
    }
    for (auto [a, b] : {std::pair<long, long>{3, 2}, {8, 5}, {6, 4}, {4, 2}, {2, 2}, {5, 1}})
        specs.push_back(make_spec(Family::line_complete_bipartite, {{"a", a}, {"b", b}}));

    for (const FamilySpec& spec : specs) {
        CAPTURE(spec.to_string());
        const VerificationReport rep = verify_closed_form(spec);
        CHECK(rep.structural_ok);
        CHECK(rep.max_abs_deviation <= 1e-7);
        CHECK(rep.multiplicities_match);
    }
}

TEST_CASE("cover spectra carry the printed multiplicities") {
    for (long k = 2; k <= 5; ++k) {
        const Spectrum c3 = closed_form_spectrum(make_spec(Family::k_cover_c3, {{"k", k}}));
        REQUIRE(c3.groups().size() == 4);
        CHECK(c3.groups()[0].multiplicity == 1);
        CHECK(c3.groups()[1].multiplicity == 3 * k - 3);
        CHECK(c3.groups()[2].multiplicity == 3 * k * k - 6 * k + 5);
        CHECK(c3.groups()[3].multiplicity == 3 * k - 3);

        const Spectrum c5 = closed_form_spectrum(make_spec(Family::k_cover_c5, {{"k", k}}));
        REQUIRE(c5.groups().size() == 4);
        CHECK(c5.groups()[1].multiplicity == 5 * k - 3);
        CHECK(c5.groups()[2].multiplicity == 5 * k * k - 10 * k + 5);
    }

    const Spectrum e2 = closed_form_spectrum(make_spec(Family::c5_expansion, {{"k", 2}}));
    REQUIRE(e2.groups().size() == 4);
    CHECK(approx(e2.groups()[0].value, 4, 1e-12));
    CHECK(approx(e2.groups()[1].value, 2.0 / kPhi, 1e-12));
    CHECK(e2.groups()[1].multiplicity == 2);
    CHECK(e2.groups()[2].multiplicity == 5);
    CHECK(approx(e2.groups()[3].value, -2.0 * kPhi, 1e-12));

    CHECK_THROWS_AS(closed_form_spectrum(make_spec(Family::comet, {{"q", 8}, {"r", 1}})),
                    NotAvailableError);
    CHECK_FALSE(has_closed_form(Family::generalized_petersen));
    CHECK(has_closed_form(Family::cycle));
}

TEST_CASE("design incidence spectrum and ratio") {
    DesignSpec d{6, 4, 16};
    const Spectrum s = design_spectrum(d);
    REQUIRE(s.size() == 32);
    const auto& g = s.groups();
    REQUIRE(g.size() == 4);
    CHECK(approx(g[0].value, 6, 1e-12));
    CHECK(g[1].multiplicity == 15);
    CHECK(approx(g[1].value, std::sqrt(2.0), 1e-12));
    CHECK(approx(g[2].value, -std::sqrt(2.0), 1e-12));
    CHECK(approx(g[3].value, -6, 1e-12));

    // ratio from the spectrum agrees with the direct formula
    const SpectralRatios r = spectral_ratios(s);
    const DesignAnalysis da = design_analysis(6, 4);
    REQUIRE(da.w1.has_value());
    CHECK(approx(*r.w1, *da.w1, 1e-12));
    CHECK(approx(*da.w1, 1.6167, 5e-4));

    CHECK_THROWS_AS(design_spectrum(DesignSpec{6, 6, 16}), ParameterError);
    CHECK_THROWS_AS(design_spectrum(DesignSpec{6, 0, 16}), ParameterError);
    CHECK_THROWS_AS(design_spectrum(DesignSpec{6, 4, std::nullopt}), ParameterError);
}

TEST_CASE("design analysis golden concurrence") {
    const double phi6 = std::pow(kPhi, 6.0);

    const DesignAnalysis d6 = design_analysis(6);
    CHECK(approx(d6.lambda_star_golden, 6.0 - 36.0 / phi6, 1e-12));
    CHECK(approx(d6.lambda_star_golden, 3.9938, 1e-3));
    CHECK_FALSE(d6.integer_solution_exists);

    const DesignAnalysis d18 = design_analysis(18);
    CHECK(d18.lambda_star_golden < 0.0);
    CHECK(approx(d18.lambda_star_golden, -0.057, 2e-3));

    for (int d = 2; d <= 17; ++d) CHECK_FALSE(design_analysis(d).integer_solution_exists);

    CHECK_THROWS_AS(design_analysis(1), ParameterError);
    CHECK_THROWS_AS(design_analysis(6, 6), ParameterError);
}

TEST_CASE("golden cycle size") {
    CHECK(approx(cycle_golden_size(CycleParity::odd), 5.0, 1e-9));

    // independent route: bisect sin(pi/n) = 1/phi
    double lo = 4.0, hi = 6.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2.0;
        if (std::sin(std::numbers::pi / mid) > 1.0 / kPhi) lo = mid;
        else hi = mid;
    }
    const double even = cycle_golden_size(CycleParity::even);
    CHECK(approx(even, (lo + hi) / 2.0, 1e-9));
    CHECK(approx(even, 4.716, 1e-3));
    CHECK(std::abs(even - std::round(even)) > 0.1);  // not an integer
}

TEST_CASE("regular golden threshold") {
    CHECK(regular_gsg_threshold(70, 0).ramanujan_compatible);
    CHECK_FALSE(regular_gsg_threshold(71, 0).ramanujan_compatible);

    const RegularGsgThreshold ico = regular_gsg_threshold(5, 5.0 - std::sqrt(5.0));
    CHECK(approx(ico.lambda2_required, std::sqrt(5.0), 1e-12));

    const RegularGsgThreshold base = regular_gsg_threshold(9, 0);
    CHECK(approx(base.lambda2_required, 9.0 / std::pow(kPhi, 3.0), 1e-12));
    CHECK(approx(base.lambda2_required, base.lambda2_lower_bound, 1e-12));

    CHECK_THROWS_AS(regular_gsg_threshold(5, 10.0), ParameterError);
    CHECK_THROWS_AS(regular_gsg_threshold(5, -0.5), ParameterError);
}

TEST_CASE("gap growth across the golden families") {
    // expansion series: gap = k(2 - 1/phi) agrees with n/(phi^2+1) for all k
    for (const GapGrowthRow& row : gap_growth(GsgSeries::c5_expansion, 1, 10)) {
        CHECK(approx(row.gap_actual, row.k * (2.0 - 1.0 / kPhi), 1e-9));
        CHECK(row.agrees);
    }

    // covers: actual gap grows like k(3 - phi); the sqrt(n) reference does not match
    const auto c3 = gap_growth(GsgSeries::k_cover_c3, 2, 5);
    for (const GapGrowthRow& row : c3) {
        CHECK(approx(row.gap_actual, row.k * (3.0 - kPhi), 1e-9));
        CHECK_FALSE(row.agrees);
    }
    const GapGrowthRow& k3 = c3[1];
    CHECK(k3.n == 27);
    CHECK(approx(k3.gap_actual, 4.146, 1e-3));
    CHECK(approx(k3.gap_reference, 10.854, 1e-3));

    const auto c5 = gap_growth(GsgSeries::k_cover_c5, 2, 4);
    CHECK(c5[0].n == 20);
    CHECK(approx(c5[0].gap_actual, 2.764, 1e-3));
    CHECK(approx(c5[0].gap_reference, 7.236, 1e-3));
    CHECK_FALSE(c5[0].agrees);
}

TEST_CASE("golden families stay golden as they grow") {
    for (long k : {1, 2, 5, 12, 25}) {
        CHECK(classify_gsg(closed_form_spectrum(make_spec(Family::c5_expansion, {{"k", k}})))
                  .is_golden);
    }
    for (long k = 1; k <= 6; ++k) {
        CHECK(classify_gsg(closed_form_spectrum(make_spec(Family::k_cover_c3, {{"k", k}})))
                  .is_golden);
        CHECK(classify_gsg(closed_form_spectrum(make_spec(Family::k_cover_c5, {{"k", k}})))
                  .is_golden);
    }
}

TEST_CASE("cycle scan: only the pentagon is golden") {
    int golden = 0;
    long golden_n = 0;
    for (long n = 3; n <= 100; ++n) {
        const Spectrum s = closed_form_spectrum(make_spec(Family::cycle, {{"n", n}}));
        const GsgVerdict v = classify_gsg(s);
        if (v.is_golden) {
            ++golden;
            golden_n = n;
        }
    }
    CHECK(golden == 1);
    CHECK(golden_n == 5);
}

TEST_CASE("no golden instances in the excluded families") {
    for (long n = 2; n <= 60; ++n) {
        CHECK_FALSE(classify_gsg(closed_form_spectrum(make_spec(Family::path, {{"n", n}})), 1e-6)
                        .is_golden);
        CHECK_FALSE(
            classify_gsg(closed_form_spectrum(make_spec(Family::complete, {{"n", n}})), 1e-6)
                .is_golden);
        CHECK_FALSE(
            classify_gsg(closed_form_spectrum(make_spec(Family::cocktail_party, {{"n", n}})), 1e-6)
                .is_golden);
    }
    for (long a = 1; a <= 15; ++a)
        for (long b = a; b <= 15; ++b)
            CHECK_FALSE(classify_gsg(closed_form_spectrum(make_spec(
                                         Family::complete_bipartite, {{"a", a}, {"b", b}})),
                                     1e-6)
                            .is_golden);
}
