#include "goldspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "goldspec/errors.hpp"

namespace goldspec {

Spectrum Spectrum::from_values(std::vector<double> values, SpectrumSource source,
                               double group_tol) {
    if (values.empty()) throw ParameterError("spectrum must contain at least one eigenvalue");
    std::sort(values.begin(), values.end(), std::greater<>());

    Spectrum s;
    s.values_ = std::move(values);
    s.source_ = source;

    size_t start = 0;
    while (start < s.values_.size()) {
        size_t end = start + 1;
        // grouped against the first member, so chains cannot drift
        while (end < s.values_.size() && s.values_[start] - s.values_[end] <= group_tol) ++end;
        double sum = 0;
        for (size_t i = start; i < end; ++i) sum += s.values_[i];
        s.groups_.push_back({sum / static_cast<double>(end - start), static_cast<int>(end - start)});
        start = end;
    }
    return s;
}

Spectrum Spectrum::scaled(double s) const {
    std::vector<double> v = values_;
    for (double& x : v) x *= s;
    return from_values(std::move(v), source_);
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.node_count());
    for (auto [i, j] : g.edges()) m.at(i, j) = m.at(j, i) = 1.0;
    return m;
}

SymMatrix laplacian_matrix(const Graph& g) {
    SymMatrix m(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) m.at(i, i) = g.degree(i);
    for (auto [i, j] : g.edges()) m.at(i, j) = m.at(j, i) = -1.0;
    return m;
}

Spectrum adjacency_spectrum(const Graph& g) {
    return Spectrum::from_values(eig_symmetric(adjacency_matrix(g)), SpectrumSource::numeric);
}

Spectrum laplacian_spectrum(const Graph& g) {
    return Spectrum::from_values(eig_symmetric(laplacian_matrix(g)), SpectrumSource::numeric);
}

SpectralRatios spectral_ratios(const Spectrum& s) {
    if (s.size() < 2)
        throw ParameterError("spectral ratios need at least two eigenvalues (got " +
                             std::to_string(s.size()) + ")");
    SpectralRatios r;
    r.gap = s.lambda1() - s.lambda2();
    r.bulk = s.lambda2() - s.lambda_min();
    r.length = r.gap + r.bulk;
    if (r.gap > kRatioDefinedTol) r.w1 = r.bulk / r.gap;
    if (r.bulk > kRatioDefinedTol) r.w2 = r.length / r.bulk;
    return r;
}

SpectralRatios spectral_ratios(const Graph& g) { return spectral_ratios(adjacency_spectrum(g)); }

SyncReport sync_ratio(const Graph& g) {
    if (g.node_count() < 2) throw DomainError("sync ratio needs at least two nodes");
    if (!is_connected(g))
        throw DomainError("sync ratio undefined for disconnected graphs (algebraic connectivity is zero)");
    const Spectrum mu = laplacian_spectrum(g);
    SyncReport rep;
    rep.mu1 = mu.lambda1();
    rep.mu_second_smallest = mu.values()[mu.size() - 2];
    rep.q = rep.mu1 / rep.mu_second_smallest;

    const GraphProps props = graph_props(g);
    if (props.regular) {
        const Spectrum adj = adjacency_spectrum(g);
        const SpectralRatios r = spectral_ratios(adj);
        const double d = props.regularity;
        const double from_adjacency = (d - adj.lambda_min()) / (d - adj.lambda2());
        bool ok = std::abs(rep.q - from_adjacency) <= 1e-9;
        if (r.w1 && r.w2) ok = ok && std::abs(rep.q - *r.w1 * *r.w2) <= 1e-9;
        rep.consistent_with_ratio_product = ok;
    }
    return rep;
}

std::pair<double, double> expansion_bounds(const Graph& g) {
    const GraphProps props = graph_props(g);
    if (!props.regular) throw DomainError("expansion bounds are stated for regular graphs only");
    if (!props.connected) throw DomainError("expansion bounds need a connected graph");
    if (g.node_count() < 2) throw DomainError("expansion bounds need at least two nodes");
    const Spectrum s = adjacency_spectrum(g);
    const double gap = s.lambda1() - s.lambda2();
    return {gap / 2.0, std::sqrt(2.0 * props.regularity * gap)};
}

}  // namespace goldspec
