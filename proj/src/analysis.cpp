#include "goldspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "goldspec/errors.hpp"

namespace goldspec {

namespace {

constexpr double kPi = std::numbers::pi;

long need(const FamilySpec& spec, const char* key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw ParameterError(family_to_string(spec.family) + ": missing parameter '" +
                             std::string(key) + "'");
    return it->second;
}

// expands (value, multiplicity) pairs into a sorted Spectrum
Spectrum from_groups(std::initializer_list<std::pair<double, long>> groups) {
    std::vector<double> values;
    for (const auto& [v, mult] : groups)
        for (long i = 0; i < mult; ++i) values.push_back(v);
    return Spectrum::from_values(std::move(values), SpectrumSource::closed_form);
}

}  // namespace

GoldenIdentityReport golden_constant() {
    GoldenIdentityReport rep;
    rep.phi = kPhi;
    rep.quadratic_residual = kPhi * kPhi - kPhi - 1.0;

    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term /= kPhi;
        rep.reciprocal_power_sum += term;
    }
    rep.reciprocal_power_error = std::abs(rep.reciprocal_power_sum - kPhi);

    double x = 1.0;
    for (int depth = 1; depth <= 50; ++depth) {
        x = 1.0 + 1.0 / x;
        rep.convergents.push_back(x);
    }
    rep.convergent_error = std::abs(rep.convergents.back() - kPhi);
    return rep;
}

GsgVerdict classify_gsg(const SpectralRatios& r, double tol) {
    GsgVerdict v;
    v.tol = tol;
    v.w1 = r.w1;
    v.w2 = r.w2;
    if (r.w1 && r.w2) {
        v.deviation = std::max(std::abs(*r.w1 - kPhi), std::abs(*r.w2 - kPhi));
        v.is_golden = *v.deviation <= tol;
    }
    return v;
}

GsgVerdict classify_gsg(const Spectrum& s, double tol) {
    return classify_gsg(spectral_ratios(s), tol);
}

GsgVerdict classify_gsg(const Graph& g, double tol) {
    return classify_gsg(adjacency_spectrum(g), tol);
}

RamanujanReport ramanujan_check(const Graph& g) {
    const GraphProps props = graph_props(g);
    if (!props.regular) throw DomainError("ramanujan check is defined for regular graphs only");
    if (!props.connected) throw DomainError("ramanujan check needs a connected graph");
    if (props.regularity < 1) throw DomainError("ramanujan check needs degree >= 1");

    const Spectrum s = adjacency_spectrum(g);
    RamanujanReport rep;
    rep.d = props.regularity;
    rep.bound = 2.0 * std::sqrt(static_cast<double>(rep.d) - 1.0);
    rep.lambda2 = s.size() >= 2 ? s.lambda2() : s.lambda1();
    rep.lambda_nontrivial = 0;
    for (double v : s.values())
        if (std::abs(v) < static_cast<double>(rep.d))
            rep.lambda_nontrivial = std::max(rep.lambda_nontrivial, std::abs(v));
    rep.strict_pass = rep.lambda_nontrivial <= rep.bound;
    rep.second_eigenvalue_pass = rep.lambda2 <= rep.bound;
    return rep;
}

bool has_closed_form(Family f) {
    switch (f) {
        case Family::cycle:
        case Family::path:
        case Family::complete:
        case Family::complete_bipartite:
        case Family::complete_multipartite:
        case Family::cocktail_party:
        case Family::c5_expansion:
        case Family::k_cover_c3:
        case Family::k_cover_c5:
        case Family::line_complete_bipartite:
            return true;
        default:
            return false;
    }
}

Spectrum closed_form_spectrum(const FamilySpec& spec) {
    const double sqrt5 = std::sqrt(5.0);
    switch (spec.family) {
        case Family::cycle: {
            const long n = need(spec, "n");
            if (n < 3) throw ParameterError("cycle: n must be >= 3");
            std::vector<double> values{2.0};
            for (long j = 1; 2 * j < n; ++j) {
                const double v = 2.0 * std::cos(2.0 * kPi * j / n);
                values.push_back(v);
                values.push_back(v);
            }
            if (n % 2 == 0) values.push_back(-2.0);
            return Spectrum::from_values(std::move(values), SpectrumSource::closed_form);
        }
        case Family::path: {
            const long n = need(spec, "n");
            if (n < 1) throw ParameterError("path: n must be >= 1");
            std::vector<double> values;
            for (long j = 1; j <= n; ++j) values.push_back(2.0 * std::cos(j * kPi / (n + 1)));
            return Spectrum::from_values(std::move(values), SpectrumSource::closed_form);
        }
        case Family::complete: {
            const long n = need(spec, "n");
            if (n < 1) throw ParameterError("complete: n must be >= 1");
            return from_groups({{static_cast<double>(n - 1), 1}, {-1.0, n - 1}});
        }
        case Family::complete_bipartite: {
            const long a = need(spec, "a"), b = need(spec, "b");
            if (a < 1 || b < 1) throw ParameterError("complete_bipartite: parts must be >= 1");
            const double r = std::sqrt(static_cast<double>(a) * b);
            return from_groups({{r, 1}, {0.0, a + b - 2}, {-r, 1}});
        }
        case Family::complete_multipartite: {
            const long n = need(spec, "n"), c = need(spec, "c");
            if (c < 2 || c > n || n % c != 0)
                throw ParameterError("complete_multipartite: need c >= 2 and c | n");
            const double part = static_cast<double>(n) / c;
            return from_groups({{n - part, 1}, {0.0, n - c}, {-part, c - 1}});
        }
        case Family::cocktail_party: {
            const long p = need(spec, "n");
            if (p < 1) throw ParameterError("cocktail_party: need at least one pair");
            return from_groups({{2.0 * p - 2.0, 1}, {0.0, p}, {-2.0, p - 1}});
        }
        case Family::c5_expansion: {
            const long k = need(spec, "k");
            if (k < 1) throw ParameterError("c5_expansion: k must be >= 1");
            const double kd = static_cast<double>(k);
            return from_groups({{2.0 * kd, 1},
                                {kd * (sqrt5 - 1.0) / 2.0, 2},
                                {0.0, 5 * (k - 1)},
                                {-kd * (sqrt5 + 1.0) / 2.0, 2}});
        }
        case Family::k_cover_c3:
        case Family::k_cover_c5: {
            const long k = need(spec, "k");
            if (k < 1) throw ParameterError("k_cover: k must be >= 1");
            const bool five = spec.family == Family::k_cover_c5;
            const double kd = static_cast<double>(k);
            const long bulk = five ? 5 * k * k - 10 * k + 5 : 3 * k * k - 6 * k + 5;
            const long wings = five ? 5 * k - 3 : 3 * k - 3;
            return from_groups({{3.0 * kd - 1.0, 1},
                                {-1.0 + kd * (1.0 + sqrt5) / 2.0, wings},
                                {-1.0, bulk},
                                {-1.0 + kd * (1.0 - sqrt5) / 2.0, wings}});
        }
        case Family::line_complete_bipartite: {
            const long a = need(spec, "a"), b = need(spec, "b");
            if (a < 1 || b < 1) throw ParameterError("line_complete_bipartite: parts must be >= 1");
            if (a * b < 1) throw ParameterError("line_complete_bipartite: empty line graph");
            return from_groups({{static_cast<double>(a + b - 2), 1},
                                {static_cast<double>(a - b), b - 1},
                                {static_cast<double>(b - 2), a - 1},
                                {-2.0, a * b - a - b + 1}});
        }
        default:
            throw NotAvailableError("no closed-form spectrum for family " +
                                    family_to_string(spec.family));
    }
}

Spectrum design_spectrum(const DesignSpec& spec) {
    if (spec.d < 2) throw ParameterError("design: d must be >= 2");
    if (spec.lambda_star <= 0 || spec.lambda_star >= spec.d)
        throw ParameterError("design: need 0 < lambda_star < d");
    if (!spec.v) throw ParameterError("design: element count v required for the spectrum");
    if (*spec.v < 2) throw ParameterError("design: v must be >= 2");
    const double r = std::sqrt(static_cast<double>(spec.d - spec.lambda_star));
    return from_groups({{static_cast<double>(spec.d), 1},
                        {r, *spec.v - 1},
                        {-r, *spec.v - 1},
                        {static_cast<double>(-spec.d), 1}});
}

VerificationReport verify_closed_form(const FamilySpec& spec) {
    VerificationReport rep;
    rep.spec = spec;
    rep.closed_form = closed_form_spectrum(spec).values();
    const Graph g = build_family(spec);
    const Spectrum numeric = adjacency_spectrum(g);
    rep.numeric = numeric.values();

    if (rep.closed_form.size() != rep.numeric.size()) {
        rep.structural_ok = false;
        rep.max_abs_deviation = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.structural_ok = true;
    for (size_t i = 0; i < rep.numeric.size(); ++i)
        rep.max_abs_deviation =
            std::max(rep.max_abs_deviation, std::abs(rep.closed_form[i] - rep.numeric[i]));

    const auto cg = Spectrum::from_values(rep.closed_form, SpectrumSource::closed_form).groups();
    const auto ng = numeric.groups();
    rep.multiplicities_match = cg.size() == ng.size();
    if (rep.multiplicities_match)
        for (size_t i = 0; i < cg.size(); ++i)
            if (cg[i].multiplicity != ng[i].multiplicity ||
                std::abs(cg[i].value - ng[i].value) > kGroupTol)
                rep.multiplicities_match = false;
    return rep;
}

double cycle_golden_size(CycleParity parity) {
    if (parity == CycleParity::odd)
        return kPi / std::asin(std::sqrt(4.0 * kPhi * kPhi - 1.0) / (2.0 * kPhi * kPhi));
    return kPi / std::asin(1.0 / kPhi);
}

DesignAnalysis design_analysis(int d, std::optional<int> lambda_star) {
    if (d < 2) throw ParameterError("design analysis: d must be >= 2");
    DesignAnalysis out;
    if (lambda_star) {
        if (*lambda_star >= d)
            throw ParameterError("design analysis: lambda_star must satisfy lambda_star < d");
        const double r = std::sqrt(static_cast<double>(d - *lambda_star));
        out.w1 = (d + r) / (d - r);
    }
    const double phi6 = std::pow(kPhi, 6.0);
    out.lambda_star_golden = d - static_cast<double>(d) * d / phi6;

    // Exact integer check. phi^6 = 9 + 4*sqrt(5), so the golden concurrence is
    // t = d - d^2 (9 - 4 sqrt 5); an integer t would force
    // (9 d^2 - d + t)^2 == 80 d^4, which is decidable in integers.
    const long dd = d;
    for (long t = 1; t < dd; ++t) {
        const long lhs = 9 * dd * dd - dd + t;
        if (lhs * lhs == 80 * dd * dd * dd * dd) {
            out.integer_solution_exists = true;
            break;
        }
    }
    return out;
}

RegularGsgThreshold regular_gsg_threshold(int d, double eps) {
    if (d < 1) throw ParameterError("regular threshold: d must be >= 1");
    if (eps < 0 || eps >= 2.0 * d)
        throw ParameterError("regular threshold: eps must lie in [0, 2d)");
    RegularGsgThreshold out;
    out.lambda2_required = (d * (kPhi - 1.0) + eps) / (kPhi + 1.0);
    out.lambda2_lower_bound = d / std::pow(kPhi, 3.0);
    out.ramanujan_compatible =
        out.lambda2_lower_bound <= 2.0 * std::sqrt(static_cast<double>(d) - 1.0);
    return out;
}

std::vector<GapGrowthRow> gap_growth(GsgSeries series, int k_min, int k_max) {
    if (k_min < 1) throw ParameterError("gap growth: k must be >= 1");
    std::vector<GapGrowthRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        FamilySpec spec;
        switch (series) {
            case GsgSeries::c5_expansion: spec.family = Family::c5_expansion; break;
            case GsgSeries::k_cover_c3: spec.family = Family::k_cover_c3; break;
            case GsgSeries::k_cover_c5: spec.family = Family::k_cover_c5; break;
        }
        spec.params["k"] = k;
        const Spectrum s = closed_form_spectrum(spec);
        GapGrowthRow row;
        row.k = k;
        row.n = s.size();
        row.gap_actual = s.lambda1() - s.lambda2();
        switch (series) {
            case GsgSeries::c5_expansion:
                row.gap_reference = row.n / (kPhi * kPhi + 1.0);
                break;
            case GsgSeries::k_cover_c3:
                row.gap_reference = (kPhi * kPhi + 1.0) / std::sqrt(3.0) * std::sqrt(row.n);
                break;
            case GsgSeries::k_cover_c5:
                row.gap_reference = (kPhi * kPhi + 1.0) / std::sqrt(5.0) * std::sqrt(row.n);
                break;
        }
        row.agrees = std::abs(row.gap_actual - row.gap_reference) <=
                     1e-9 * std::max(1.0, std::abs(row.gap_actual));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace goldspec
