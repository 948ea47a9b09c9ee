#include "goldspec/search.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "goldspec/errors.hpp"
#include "goldspec/graph_io.hpp"

namespace goldspec {

namespace {

constexpr int kMaxTreeNodes = 16;

// node i's parent is the most recent node one level up
std::vector<int> parents_from_levels(const std::vector<int>& levels) {
    std::vector<int> parent(levels.size(), -1);
    std::vector<int> chain{0};  // chain[d] = current node at depth d
    for (size_t i = 1; i < levels.size(); ++i) {
        chain.resize(levels[i]);
        parent[i] = chain.back();
        chain.push_back(static_cast<int>(i));
    }
    return parent;
}

std::vector<std::vector<int>> adjacency_from_parents(const std::vector<int>& parent) {
    std::vector<std::vector<int>> adj(parent.size());
    for (size_t i = 1; i < parent.size(); ++i) {
        adj[i].push_back(parent[i]);
        adj[parent[i]].push_back(static_cast<int>(i));
    }
    return adj;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) adj[i] = g.neighbors(i);
    return adj;
}

// centroid(s): node(s) minimising the largest component left after removal
std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> size(n), best_nodes;
    int best = n + 1;

    // subtree sizes rooted at 0
    std::vector<int> order, parent(n, -1);
    order.reserve(n);
    order.push_back(0);
    for (size_t idx = 0; idx < order.size(); ++idx) {
        int u = order[idx];
        for (int v : adj[u])
            if (v != parent[u]) {
                parent[v] = u;
                order.push_back(v);
            }
    }
    std::fill(size.begin(), size.end(), 1);
    for (size_t idx = order.size(); idx-- > 1;) size[parent[order[idx]]] += size[order[idx]];

    for (int v = 0; v < n; ++v) {
        int max_comp = n - size[v];
        for (int u : adj[v])
            if (u != parent[v]) max_comp = std::max(max_comp, size[u]);
        if (max_comp < best) {
            best = max_comp;
            best_nodes.assign(1, v);
        } else if (max_comp == best) {
            best_nodes.push_back(v);
        }
    }
    std::sort(best_nodes.begin(), best_nodes.end());
    return best_nodes;
}

// canonical rooted level sequence: child blocks sorted in non-increasing
// lexicographic order, which maximises the concatenated sequence
std::vector<int> canon_code(const std::vector<std::vector<int>>& adj, int v, int from) {
    std::vector<std::vector<int>> kids;
    for (int u : adj[v])
        if (u != from) kids.push_back(canon_code(adj, u, v));
    std::sort(kids.begin(), kids.end(), std::greater<>());
    std::vector<int> code{0};
    for (const auto& k : kids)
        for (int x : k) code.push_back(x + 1);
    return code;
}

Graph graph_from_parents(const std::vector<int>& parent) {
    Graph g(static_cast<int>(parent.size()));
    for (size_t i = 1; i < parent.size(); ++i) g.add_edge(static_cast<int>(i), parent[i]);
    return g;
}

}  // namespace

FreeTreeEnumerator::FreeTreeEnumerator(int n) : n_(n) {
    if (n < 2) throw ParameterError("tree enumeration: n must be >= 2");
    if (n > kMaxTreeNodes)
        throw SizeError("tree enumeration capped at n = " + std::to_string(kMaxTreeNodes));
}

bool FreeTreeEnumerator::advance() {
    if (!started_) {
        levels_.resize(n_);
        std::iota(levels_.begin(), levels_.end(), 0);  // the path, lexicographically largest
        started_ = true;
        return true;
    }
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
        if (levels_[i] >= 2) {
            p = i;
            break;
        }
    if (p < 0) return false;  // current sequence is the star: enumeration done
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (levels_[i] == levels_[p] - 1) {
            q = i;
            break;
        }
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
    return true;
}

bool FreeTreeEnumerator::accepted() const {
    const auto parent = parents_from_levels(levels_);
    const auto adj = adjacency_from_parents(parent);
    const auto cents = tree_centroids(adj);
    if (std::find(cents.begin(), cents.end(), 0) == cents.end()) return false;
    if (cents.size() == 1) return true;
    const int other = cents[0] == 0 ? cents[1] : cents[0];
    // bicentroidal: keep the rooting with the larger canonical sequence
    return !(canon_code(adj, 0, -1) < canon_code(adj, other, -1));
}

std::optional<Graph> FreeTreeEnumerator::next() {
    if (done_) return std::nullopt;
    while (advance()) {
        if (accepted()) return graph_from_parents(parents_from_levels(levels_));
    }
    done_ = true;
    return std::nullopt;
}

void enumerate_free_trees(int n_min, int n_max,
                          const std::function<void(const Graph&)>& emit) {
    if (n_min < 2) throw ParameterError("tree enumeration: n_min must be >= 2");
    if (n_min > n_max) throw ParameterError("tree enumeration: n_min must not exceed n_max");
    for (int n = n_min; n <= n_max; ++n) {
        FreeTreeEnumerator trees(n);
        while (auto t = trees.next()) emit(*t);
    }
}

std::vector<long> free_tree_counts(int n_min, int n_max) {
    std::vector<long> counts;
    for (int n = n_min; n <= n_max; ++n) {
        long c = 0;
        FreeTreeEnumerator trees(n);
        while (trees.next()) ++c;
        counts.push_back(c);
    }
    return counts;
}

std::vector<int> free_tree_code(const Graph& tree) {
    if (tree.edge_count() != tree.node_count() - 1 || !is_connected(tree))
        throw ParameterError("free_tree_code: input is not a tree");
    const auto adj = adjacency_lists(tree);
    const auto cents = tree_centroids(adj);
    std::vector<int> best = canon_code(adj, cents[0], -1);
    for (size_t i = 1; i < cents.size(); ++i)
        best = std::max(best, canon_code(adj, cents[i], -1));
    return best;
}

namespace {

inline int pair_bit(int i, int j) {  // i < j, colex order
    return j * (j - 1) / 2 + i;
}

bool mask_connected(int n, uint32_t mask) {
    if (n == 1) return true;
    std::array<uint8_t, 8> rows{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_bit(i, j) & 1u) {
                rows[i] |= static_cast<uint8_t>(1u << j);
                rows[j] |= static_cast<uint8_t>(1u << i);
            }
    uint8_t seen = 1, frontier = 1;
    while (frontier) {
        uint8_t next = 0;
        for (int i = 0; i < n; ++i)
            if (frontier >> i & 1u) next |= rows[i];
        frontier = next & static_cast<uint8_t>(~seen);
        seen |= next;
    }
    return seen == (1u << n) - 1u;
}

Graph graph_from_mask(int n, uint32_t mask) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_bit(i, j) & 1u) g.add_edge(i, j);
    return g;
}

}  // namespace

void enumerate_connected_graphs(int n, bool dedup,
                                const std::function<void(const Graph&)>& emit) {
    if (n < 1 || n > 7)
        throw SizeError("labeled enumeration capped at n = 7 (got " + std::to_string(n) + ")");
    if (dedup && n > 6)
        throw SizeError("isomorphism dedup supported for n <= 6 only");

    const int bits = n * (n - 1) / 2;

    // per-permutation bit relocation tables
    std::vector<std::vector<int>> perm_maps;
    if (dedup) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> map(bits);
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) {
                    int a = perm[i], b = perm[j];
                    if (a > b) std::swap(a, b);
                    map[pair_bit(i, j)] = pair_bit(a, b);
                }
            perm_maps.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        if (!mask_connected(n, mask)) continue;
        if (dedup) {
            uint32_t canon = mask;
            for (const auto& map : perm_maps) {
                uint32_t img = 0;
                uint32_t rest = mask;
                while (rest) {
                    const int b = std::countr_zero(rest);
                    rest &= rest - 1;
                    img |= 1u << map[b];
                }
                canon = std::min(canon, img);
                if (canon < mask) break;  // a smaller representative exists
            }
            if (canon != mask) continue;
        }
        emit(graph_from_mask(n, mask));
    }
}

namespace {

ScanRecord record_from_spectrum(const Spectrum& s, std::string label, int n, long m, double tol) {
    ScanRecord rec;
    rec.label = std::move(label);
    rec.n = n;
    rec.m = m;
    rec.deviation = std::numeric_limits<double>::infinity();
    if (s.size() >= 2) {
        const SpectralRatios r = spectral_ratios(s);
        rec.w1 = r.w1;
        rec.w2 = r.w2;
        const GsgVerdict exact = classify_gsg(r, kGoldenTol);
        if (exact.applicable()) {
            rec.deviation = *exact.deviation;
            rec.golden = exact.is_golden;
            rec.almost = rec.deviation <= tol;
        }
    }
    return rec;
}

}  // namespace

ScanRecord scan_record(const FamilySpec& spec, double tol) {
    const Graph g = build_family(spec);
    const Spectrum s =
        has_closed_form(spec.family) ? closed_form_spectrum(spec) : adjacency_spectrum(g);
    return record_from_spectrum(s, spec.to_string(), g.node_count(), g.edge_count(), tol);
}

ScanRecord scan_record(const Graph& g, std::string label, double tol) {
    return record_from_spectrum(adjacency_spectrum(g), std::move(label), g.node_count(),
                                g.edge_count(), tol);
}

std::vector<ScanRecord> rank_records(std::vector<ScanRecord> records) {
    std::sort(records.begin(), records.end(), [](const ScanRecord& a, const ScanRecord& b) {
        if (a.deviation != b.deviation) return a.deviation < b.deviation;
        if (a.n != b.n) return a.n < b.n;
        return a.label < b.label;
    });
    for (size_t i = 0; i < records.size(); ++i) records[i].rank = static_cast<int>(i + 1);
    return records;
}

std::vector<ScanRecord> scan_family(const FamilySpec& templ, const std::string& var, long lo,
                                    long hi, double tol) {
    std::vector<ScanRecord> records;
    for (long v = lo; v <= hi; ++v) {
        FamilySpec spec = templ;
        spec.params[var] = v;
        try {
            records.push_back(scan_record(spec, tol));
        } catch (const ParameterError&) {
            // not an instance of the family (e.g. odd Moebius ladder size)
        }
    }
    return rank_records(std::move(records));
}

std::vector<ScanRecord> scan_files(const std::vector<std::string>& paths,
                                   const std::string& format, double tol,
                                   std::vector<FileScanIssue>* issues) {
    std::vector<ScanRecord> records;
    auto report = [&](const std::string& path, long line, std::string msg) {
        if (issues) issues->push_back({path, line, std::move(msg)});
    };

    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            report(path, -1, "cannot open file");
            continue;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();

        if (format == "g6") {
            std::istringstream lines(text);
            std::string line;
            long lineno = 0;
            bool any = false;
            while (std::getline(lines, line)) {
                ++lineno;
                while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
                    line.pop_back();
                if (line.empty()) continue;
                any = true;
                try {
                    const Graph g = parse_graph6(line);
                    records.push_back(scan_record(g, emit_graph6(g), tol));
                } catch (const std::exception& e) {
                    report(path, lineno, e.what());
                }
            }
            if (!any) report(path, -1, "empty file");
        } else {
            try {
                Graph g = format == "adj" ? parse_adjacency(text) : parse_edge_list(text);
                records.push_back(scan_record(g, emit_graph6(g), tol));
            } catch (const std::exception& e) {
                report(path, -1, e.what());
            }
        }
    }
    return rank_records(std::move(records));
}

std::vector<FibonacciRow> fibonacci_line_graph_study(int k_max, bool lucas) {
    if (k_max < 2) throw ParameterError("line-graph study: k_max must be >= 2");
    if (k_max > 12) throw SizeError("line-graph study capped at k_max = 12");

    std::vector<long> seq(k_max + 2);
    seq[1] = 1;
    seq[2] = lucas ? 3 : 1;
    for (int i = 3; i <= k_max + 1; ++i) seq[i] = seq[i - 1] + seq[i - 2];

    std::vector<FibonacciRow> rows;
    for (int k = 2; k <= k_max; ++k) {
        FibonacciRow row;
        row.k = k;
        row.a = seq[k + 1];
        row.b = seq[k];
        FamilySpec spec;
        spec.family = Family::line_complete_bipartite;
        spec.params["a"] = row.a;
        spec.params["b"] = row.b;
        const SpectralRatios r = spectral_ratios(closed_form_spectrum(spec));
        row.w1 = r.w1;
        row.w2 = r.w2;
        row.w1_predicted = static_cast<double>(row.a) / static_cast<double>(row.b);
        row.w2_predicted = static_cast<double>(row.a + row.b) / static_cast<double>(row.a);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace goldspec
