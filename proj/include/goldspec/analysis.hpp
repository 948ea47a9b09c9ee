#pragma once

#include <optional>
#include <vector>

#include "goldspec/families.hpp"
#include "goldspec/spectrum.hpp"

namespace goldspec {

/// Numeric self-checks of the golden ratio constant.
struct GoldenIdentityReport {
    double phi = 0;
    double quadratic_residual = 0;       // phi^2 - phi - 1
    double reciprocal_power_sum = 0;     // sum_{k=1..60} phi^-k
    double reciprocal_power_error = 0;   // |sum - phi|
    std::vector<double> convergents;     // 1 + 1/(1 + 1/(...)), depths 1..50
    double convergent_error = 0;         // |convergents.back() - phi|
};

GoldenIdentityReport golden_constant();

/// Golden-spectral verdict: both ratios within tol of phi.
struct GsgVerdict {
    std::optional<double> w1;
    std::optional<double> w2;
    std::optional<double> deviation;  // max(|w1-phi|, |w2-phi|); absent if either ratio undefined
    bool is_golden = false;
    double tol = kGoldenTol;

    bool applicable() const { return deviation.has_value(); }
};

GsgVerdict classify_gsg(const SpectralRatios& r, double tol = kGoldenTol);
GsgVerdict classify_gsg(const Spectrum& s, double tol = kGoldenTol);
GsgVerdict classify_gsg(const Graph& g, double tol = kGoldenTol);

/// Ramanujan test for connected d-regular graphs, reported under both
/// conventions: "strict" bounds max |lambda| over eigenvalues with
/// |lambda| < d; the second-eigenvalue variant bounds lambda_2 alone.
struct RamanujanReport {
    int d = 0;
    double lambda2 = 0;
    double lambda_nontrivial = 0;  // max |lambda_i| with |lambda_i| < d (0 if none)
    double bound = 0;              // 2 sqrt(d-1)
    bool strict_pass = false;
    bool second_eigenvalue_pass = false;
};

RamanujanReport ramanujan_check(const Graph& g);

/// Exact-formula spectrum for the families that have one:
/// cycle, path, complete, complete_bipartite, complete_multipartite,
/// cocktail_party, c5_expansion, k_cover_c3, k_cover_c5,
/// line_complete_bipartite. Throws NotAvailableError otherwise.
Spectrum closed_form_spectrum(const FamilySpec& spec);
bool has_closed_form(Family f);

/// Symmetric block-design parameters: block size d, pair concurrence
/// lambda_star, optional element count v.
struct DesignSpec {
    int d = 0;
    int lambda_star = 0;
    std::optional<int> v;
};

/// Incidence-graph spectrum {d, +-sqrt(d - lambda_star) each v-1 times, -d}.
Spectrum design_spectrum(const DesignSpec& spec);

/// Closed form vs numeric eigensolver cross-check.
struct VerificationReport {
    FamilySpec spec;
    std::vector<double> closed_form;
    std::vector<double> numeric;
    double max_abs_deviation = 0;
    bool multiplicities_match = false;
    bool structural_ok = false;  // lengths agree

    bool pass(double tol = 1e-7) const {
        return structural_ok && multiplicities_match && max_abs_deviation <= tol;
    }
};

VerificationReport verify_closed_form(const FamilySpec& spec);

enum class CycleParity { odd, even };

/// Real cycle size whose spectral ratios would be golden:
/// 5 exactly for odd, ~4.715 (non-integer) for even.
double cycle_golden_size(CycleParity parity);

/// Golden-ratio analysis of symmetric 2-(v,d,lambda*) design incidence graphs.
struct DesignAnalysis {
    std::optional<double> w1;        // (d + sqrt(d - lambda_star)) / (d - sqrt(d - lambda_star))
    double lambda_star_golden = 0;   // d - d^2/phi^6: concurrence that would force w1 = phi
    bool integer_solution_exists = false;  // exact integer check via scaled squares
};

DesignAnalysis design_analysis(int d, std::optional<int> lambda_star = std::nullopt);

/// lambda_2 a d-regular graph must hit to be golden, given lambda_n = -d + eps.
struct RegularGsgThreshold {
    double lambda2_required = 0;    // (d(phi-1) + eps) / (phi+1)
    double lambda2_lower_bound = 0; // d / phi^3 (eps = 0 case)
    bool ramanujan_compatible = false;  // d/phi^3 <= 2 sqrt(d-1), i.e. d <= 70
};

RegularGsgThreshold regular_gsg_threshold(int d, double eps);

enum class GsgSeries { c5_expansion, k_cover_c3, k_cover_c5 };

/// Spectral-gap growth across a golden family: the gap from the closed-form
/// spectrum next to the reference growth formula (gap = n/(phi^2+1) for the
/// expansion series, (phi^2+1)/sqrt(3|5) * sqrt(n) for the covers), with a
/// per-term agreement flag.
struct GapGrowthRow {
    int k = 0;
    int n = 0;
    double gap_actual = 0;
    double gap_reference = 0;
    bool agrees = false;
};

std::vector<GapGrowthRow> gap_growth(GsgSeries series, int k_min, int k_max);

}  // namespace goldspec
