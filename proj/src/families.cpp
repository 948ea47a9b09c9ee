#include "goldspec/families.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "goldspec/common.hpp"
#include "goldspec/errors.hpp"

namespace goldspec {

namespace {

const std::map<std::string, Family>& family_names() {
    static const std::map<std::string, Family> names = {
        {"cycle", Family::cycle},
        {"path", Family::path},
        {"complete", Family::complete},
        {"complete_bipartite", Family::complete_bipartite},
        {"complete_multipartite", Family::complete_multipartite},
        {"cocktail_party", Family::cocktail_party},
        {"star", Family::star},
        {"comet", Family::comet},
        {"circulant", Family::circulant},
        {"moebius_ladder", Family::moebius_ladder},
        {"prism", Family::prism},
        {"generalized_petersen", Family::generalized_petersen},
        {"platonic", Family::platonic},
        {"named", Family::named},
        {"c5_expansion", Family::c5_expansion},
        {"k_cover_c3", Family::k_cover_c3},
        {"k_cover_c5", Family::k_cover_c5},
        {"line_complete_bipartite", Family::line_complete_bipartite},
    };
    return names;
}

long need_param(const FamilySpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw ParameterError(family_to_string(spec.family) + ": missing parameter '" + key + "'");
    return it->second;
}

long param_or(const FamilySpec& spec, const std::string& key, long fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

int as_int(long v, const std::string& what) {
    if (v < -kMaxGraphNodes || v > kMaxGraphNodes)
        throw ParameterError(what + " out of supported range: " + std::to_string(v));
    return static_cast<int>(v);
}

}  // namespace

std::string family_to_string(Family f) {
    for (const auto& [name, fam] : family_names())
        if (fam == f) return name;
    return "?";
}

Family family_from_string(const std::string& s) {
    auto it = family_names().find(s);
    if (it == family_names().end()) throw ParameterError("unknown family tag '" + s + "'");
    return it->second;
}

std::string FamilySpec::to_string() const {
    std::ostringstream out;
    out << family_to_string(family) << '(';
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) out << ',';
        out << k << '=' << v;
        first = false;
    }
    if (!connections.empty()) {
        if (!first) out << ',';
        out << "conn=";
        for (size_t i = 0; i < connections.size(); ++i) {
            if (i) out << '+';
            out << connections[i];
        }
        first = false;
    }
    if (!name.empty()) {
        if (!first) out << ',';
        out << "name=" << name;
    }
    out << ')';
    return out.str();
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParameterError("cycle: n must be >= 3 (got " + std::to_string(n) + ")");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw ParameterError("path: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw ParameterError("complete: n must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw ParameterError("complete_bipartite: parts must be >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph complete_multipartite_graph(int n, int c) {
    if (c < 2) throw ParameterError("complete_multipartite: need c >= 2 parts");
    if (c > n) throw ParameterError("complete_multipartite: c must not exceed n");
    if (n % c != 0)
        throw ParameterError("complete_multipartite: c must divide n (got n=" + std::to_string(n) +
                             ", c=" + std::to_string(c) + ")");
    const int part = n / c;
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (i / part != j / part) g.add_edge(i, j);
    return g;
}

Graph cocktail_party_graph(int pairs) {
    if (pairs < 1) throw ParameterError("cocktail_party: need at least one pair");
    const int n = 2 * pairs;
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i != pairs) g.add_edge(i, j);
    return g;
}

Graph star_graph(int q) {
    if (q < 1) throw ParameterError("star: q must be >= 1");
    Graph g(q + 1);
    for (int i = 1; i <= q; ++i) g.add_edge(0, i);
    return g;
}

Graph comet_graph(int q, int r) {
    if (q < 1) throw ParameterError("comet: q must be >= 1");
    if (r < 0) throw ParameterError("comet: r must be >= 0");
    Graph g(q + r + 1);
    for (int i = 1; i <= q; ++i) g.add_edge(0, i);
    for (int i = 0; i < r; ++i) g.add_edge(i == 0 ? 1 : q + i, q + i + 1);
    return g;
}

Graph circulant_graph(int n, const std::vector<int>& connections) {
    if (n < 3) throw ParameterError("circulant: n must be >= 3");
    if (connections.empty()) throw ParameterError("circulant: connection list must be non-empty");
    std::set<int> seen;
    for (int j : connections) {
        if (j < 1 || 2 * j > n)
            throw ParameterError("circulant: connection " + std::to_string(j) +
                                 " must satisfy 1 <= j <= n/2");
        if (!seen.insert(j).second)
            throw ParameterError("circulant: duplicate connection " + std::to_string(j));
    }
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j : connections) g.add_edge(i, (i + j) % n);
    return g;
}

Graph moebius_ladder(int n) {
    if (n < 4 || n % 2 != 0)
        throw ParameterError("moebius_ladder: n must be even and >= 4 (got " + std::to_string(n) +
                             ")");
    return circulant_graph(n, {1, n / 2});
}

Graph prism_graph(int n) {
    if (n < 3) throw ParameterError("prism: n must be >= 3");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + 1) % n);
        g.add_edge(i, n + i);
    }
    return g;
}

Graph generalized_petersen(int n, int k) {
    if (n < 3) throw ParameterError("generalized_petersen: n must be >= 3");
    if (k < 1 || 2 * k >= n)
        throw ParameterError("generalized_petersen: need 1 <= k < n/2 (got n=" +
                             std::to_string(n) + ", k=" + std::to_string(k) + ")");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    return g;
}

namespace {

// Cycle 0..n-1 plus one chord per node: node i gets i -> i + pattern[i % len].
Graph lcf_graph(int n, const std::vector<int>& pattern) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        int d = pattern[i % pattern.size()];
        int j = ((i + d) % n + n) % n;
        g.add_edge(i, j);
    }
    return g;
}

}  // namespace

Graph platonic_graph(const std::string& name) {
    if (name == "tetrahedron") return complete_graph(4);
    if (name == "octahedron") return cocktail_party_graph(3);
    if (name == "cube") {
        Graph g(8);
        for (int i = 0; i < 8; ++i)
            for (int b = 0; b < 3; ++b)
                if (i < (i ^ (1 << b))) g.add_edge(i, i ^ (1 << b));
        return g;
    }
    if (name == "dodecahedron") {
        Graph g(20);
        for (int i = 0; i < 10; ++i) {
            g.add_edge(i, (i + 1) % 10);
            g.add_edge(i, 10 + i);
            g.add_edge(10 + i, 10 + (i + 2) % 10);
        }
        return g;
    }
    if (name == "icosahedron") {
        // two apexes (0, 11) over a pentagonal antiprism 1..5 / 6..10
        static const std::array<std::pair<int, int>, 30> edges = {{
            {0, 1}, {0, 2}, {0, 3},  {0, 4},  {0, 5},   // top apex
            {1, 2}, {2, 3}, {3, 4},  {4, 5},  {5, 1},   // upper pentagon
            {6, 7}, {7, 8}, {8, 9},  {9, 10}, {10, 6},  // lower pentagon
            {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10},  // bottom apex
            {1, 6}, {1, 7}, {2, 7},  {2, 8},  {3, 8},
            {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
        }};
        Graph g(12);
        for (auto [i, j] : edges) g.add_edge(i, j);
        return g;
    }
    throw ParameterError("platonic: unknown solid '" + name +
                         "' (expected tetrahedron|cube|octahedron|dodecahedron|icosahedron)");
}

Graph named_graph(const std::string& name) {
    if (name == "petersen") return generalized_petersen(5, 2);
    if (name == "heawood") return lcf_graph(14, {5, -5});
    if (name == "mcgee") return lcf_graph(24, {12, 7, -7});
    throw ParameterError("named: unknown graph '" + name + "' (expected petersen|heawood|mcgee)");
}

Graph tensor_product(const Graph& g, const Graph& h) {
    const int ng = g.node_count(), nh = h.node_count();
    const long total = static_cast<long>(ng) * nh;
    if (total > kMaxGraphNodes)
        throw SizeError("tensor product would have " + std::to_string(total) + " nodes");
    Graph out(static_cast<int>(total));
    const auto ge = g.edges();
    const auto he = h.edges();
    for (auto [u, v] : ge)
        for (auto [x, y] : he) {
            out.add_edge(u * nh + x, v * nh + y);
            out.add_edge(u * nh + y, v * nh + x);
        }
    return out;
}

Graph clique_expansion(const Graph& g, int k) {
    if (k < 1) throw ParameterError("clique_expansion: k must be >= 1");
    const long total = static_cast<long>(g.node_count()) * k;
    if (total > kMaxGraphNodes)
        throw SizeError("expansion would have " + std::to_string(total) + " nodes");
    Graph out(static_cast<int>(total));
    for (auto [u, v] : g.edges())
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) out.add_edge(u * k + i, v * k + j);
    return out;
}

Graph k_cover(int base, int k) {
    if (base != 3 && base != 5)
        throw ParameterError("k_cover: base must be 3 or 5 (got " + std::to_string(base) + ")");
    if (k < 1) throw ParameterError("k_cover: k must be >= 1");
    const int kk = k * k;
    const long total = static_cast<long>(base) * kk;
    if (total > kMaxGraphNodes)
        throw SizeError("cover would have " + std::to_string(total) + " nodes");
    Graph g(static_cast<int>(total));
    auto fibre = [k](int block, int sheet) { return block * k + sheet; };
    for (int o = 0; o < base; ++o) {
        const int next = (o + 1) % base;
        for (int b = 0; b < k; ++b)
            for (int s = 0; s < k; ++s) {
                const int u = o * kk + fibre(b, s);
                // sheet-matching within the fibre
                for (int b2 = b + 1; b2 < k; ++b2) g.add_edge(u, o * kk + fibre(b2, s));
                // shift coupling into the next fibre: block row b shifts sheets by b
                const int c = (s + b) % k;
                for (int j = 0; j < k; ++j) g.add_edge(u, next * kk + fibre(j, c));
            }
    }
    return g;
}

Graph line_graph(const Graph& g) {
    const auto edges = g.edges();
    if (edges.empty()) throw ParameterError("line_graph: input graph has no edges");
    if (static_cast<long>(edges.size()) > kMaxGraphNodes)
        throw SizeError("line graph would have " + std::to_string(edges.size()) + " nodes");
    Graph out(static_cast<int>(edges.size()));
    for (size_t a = 0; a < edges.size(); ++a)
        for (size_t b = a + 1; b < edges.size(); ++b) {
            const auto& [i, j] = edges[a];
            const auto& [x, y] = edges[b];
            if (i == x || i == y || j == x || j == y)
                out.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return out;
}

Graph build_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::cycle:
            return cycle_graph(as_int(need_param(spec, "n"), "n"));
        case Family::path:
            return path_graph(as_int(need_param(spec, "n"), "n"));
        case Family::complete:
            return complete_graph(as_int(need_param(spec, "n"), "n"));
        case Family::complete_bipartite:
            return complete_bipartite_graph(as_int(need_param(spec, "a"), "a"),
                                            as_int(need_param(spec, "b"), "b"));
        case Family::complete_multipartite:
            return complete_multipartite_graph(as_int(need_param(spec, "n"), "n"),
                                               as_int(need_param(spec, "c"), "c"));
        case Family::cocktail_party:
            return cocktail_party_graph(as_int(need_param(spec, "n"), "n"));
        case Family::star:
            return star_graph(as_int(need_param(spec, "q"), "q"));
        case Family::comet:
            return comet_graph(as_int(need_param(spec, "q"), "q"),
                               as_int(param_or(spec, "r", 1), "r"));
        case Family::circulant:
            return circulant_graph(as_int(need_param(spec, "n"), "n"), spec.connections);
        case Family::moebius_ladder:
            return moebius_ladder(as_int(need_param(spec, "n"), "n"));
        case Family::prism:
            return prism_graph(as_int(need_param(spec, "n"), "n"));
        case Family::generalized_petersen:
            return generalized_petersen(as_int(need_param(spec, "n"), "n"),
                                        as_int(param_or(spec, "k", 2), "k"));
        case Family::platonic:
            return platonic_graph(spec.name);
        case Family::named:
            return named_graph(spec.name);
        case Family::c5_expansion:
            return clique_expansion(cycle_graph(5), as_int(need_param(spec, "k"), "k"));
        case Family::k_cover_c3:
            return k_cover(3, as_int(need_param(spec, "k"), "k"));
        case Family::k_cover_c5:
            return k_cover(5, as_int(need_param(spec, "k"), "k"));
        case Family::line_complete_bipartite:
            return line_graph(complete_bipartite_graph(as_int(need_param(spec, "a"), "a"),
                                                       as_int(need_param(spec, "b"), "b")));
    }
    throw ParameterError("unhandled family");
}

}  // namespace goldspec
