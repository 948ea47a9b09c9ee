#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace goldspec {

/// Simple undirected graph: no loops, no multi-edges. Nodes are 0-based.
/// Immutable by convention once construction finishes; all analysis code
/// takes const references and never mutates.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return n_; }
    long edge_count() const { return m_; }

    bool has_edge(int i, int j) const;

    /// Adds {i,j}; returns false if the edge was already present. Throws on loops.
    bool add_edge(int i, int j);

    int degree(int i) const { return deg_[i]; }
    const std::vector<int>& degrees() const { return deg_; }
    std::vector<int> neighbors(int i) const;

    /// Edge list in lexicographic (i,j) order with i < j.
    std::vector<std::pair<int, int>> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const Graph& other) const;

private:
    void check_node(int i) const;

    int n_ = 0;
    long m_ = 0;
    std::vector<int> deg_;
    std::vector<bool> adj_;  // n_*n_ bitmap, kept symmetric
    std::vector<std::string> labels_;
};

struct GraphProps {
    int n = 0;
    long m = 0;
    std::vector<int> degrees;  // sorted descending
    bool regular = false;
    int regularity = 0;  // common degree when regular
    bool connected = false;
    bool bipartite = false;
};

GraphProps graph_props(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_bipartite(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

}  // namespace goldspec
