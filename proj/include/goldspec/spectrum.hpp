#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "goldspec/common.hpp"
#include "goldspec/eig.hpp"
#include "goldspec/graph.hpp"

namespace goldspec {

enum class SpectrumSource { numeric, closed_form };

struct SpectrumGroup {
    double value = 0;      // group representative (mean of members)
    int multiplicity = 0;
};

/// Eigenvalue sequence sorted non-increasing, with multiplicity grouping.
class Spectrum {
public:
    static Spectrum from_values(std::vector<double> values, SpectrumSource source,
                                double group_tol = kGroupTol);

    const std::vector<double>& values() const { return values_; }
    const std::vector<SpectrumGroup>& groups() const { return groups_; }
    SpectrumSource source() const { return source_; }
    int size() const { return static_cast<int>(values_.size()); }

    double lambda1() const { return values_.front(); }
    double lambda2() const { return values_[1]; }
    double lambda_min() const { return values_.back(); }

    /// Spectrum with every value multiplied by s (ratio-invariance helper).
    Spectrum scaled(double s) const;

private:
    std::vector<double> values_;
    std::vector<SpectrumGroup> groups_;
    SpectrumSource source_ = SpectrumSource::numeric;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix laplacian_matrix(const Graph& g);

Spectrum adjacency_spectrum(const Graph& g);
/// Eigenvalues of D - A; smallest is ~0 with multiplicity = component count.
Spectrum laplacian_spectrum(const Graph& g);

/// Width ratios of a spectrum. gap = l1-l2, bulk = l2-ln, length = gap+bulk.
/// w1 = bulk/gap and w2 = length/bulk are flagged absent (never NaN) when the
/// corresponding denominator is below 1e-10.
struct SpectralRatios {
    std::optional<double> w1;
    std::optional<double> w2;
    double gap = 0;
    double bulk = 0;
    double length = 0;
};

SpectralRatios spectral_ratios(const Spectrum& s);  // needs >= 2 eigenvalues
SpectralRatios spectral_ratios(const Graph& g);

/// Laplacian eigenvalue ratio q = mu_1 / mu_{n-1} (smaller = better
/// synchronizability). For regular graphs q equals w1*w2.
struct SyncReport {
    double q = 0;
    double mu1 = 0;
    double mu_second_smallest = 0;
    std::optional<bool> consistent_with_ratio_product;  // regular graphs only
};

SyncReport sync_ratio(const Graph& g);  // requires connected, n >= 2

/// Vertex-expansion bracket (gap/2, sqrt(2*d*gap)) for connected d-regular graphs.
std::pair<double, double> expansion_bounds(const Graph& g);

}  // namespace goldspec
