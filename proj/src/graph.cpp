#include "goldspec/graph.hpp"

#include <algorithm>
#include <queue>

#include "goldspec/common.hpp"
#include "goldspec/errors.hpp"

namespace goldspec {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw ParameterError("graph needs at least one node (got " + std::to_string(n) + ")");
    if (n > kMaxGraphNodes)
        throw SizeError("graph too large for dense representation: n = " + std::to_string(n) +
                        " exceeds cap " + std::to_string(kMaxGraphNodes));
    deg_.assign(n_, 0);
    adj_.assign(static_cast<size_t>(n_) * n_, false);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

void Graph::check_node(int i) const {
    if (i < 0 || i >= n_)
        throw ParameterError("node index " + std::to_string(i) + " out of range [0," +
                             std::to_string(n_) + ")");
}

bool Graph::has_edge(int i, int j) const {
    check_node(i);
    check_node(j);
    return adj_[static_cast<size_t>(i) * n_ + j];
}

bool Graph::add_edge(int i, int j) {
    check_node(i);
    check_node(j);
    if (i == j) throw ParameterError("self-loop rejected at node " + std::to_string(i));
    size_t a = static_cast<size_t>(i) * n_ + j;
    size_t b = static_cast<size_t>(j) * n_ + i;
    if (adj_[a]) return false;
    adj_[a] = adj_[b] = true;
    ++deg_[i];
    ++deg_[j];
    ++m_;
    return true;
}

std::vector<int> Graph::neighbors(int i) const {
    check_node(i);
    std::vector<int> out;
    out.reserve(deg_[i]);
    const size_t row = static_cast<size_t>(i) * n_;
    for (int j = 0; j < n_; ++j)
        if (adj_[row + j]) out.push_back(j);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int i = 0; i < n_; ++i) {
        const size_t row = static_cast<size_t>(i) * n_;
        for (int j = i + 1; j < n_; ++j)
            if (adj_[row + j]) out.emplace_back(i, j);
    }
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw ParameterError("label count must equal node count");
    labels_ = std::move(labels);
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

namespace {

// BFS component ids; returns component count.
int label_components(const Graph& g, std::vector<int>& comp) {
    const int n = g.node_count();
    comp.assign(n, -1);
    int count = 0;
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (comp[v] < 0) {
                    comp[v] = count;
                    q.push(v);
                }
            }
        }
        ++count;
    }
    return count;
}

}  // namespace

int component_count(const Graph& g) {
    std::vector<int> comp;
    return label_components(g, comp);
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_bipartite(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> color(n, -1);
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

GraphProps graph_props(const Graph& g) {
    GraphProps p;
    p.n = g.node_count();
    p.m = g.edge_count();
    p.degrees = g.degrees();
    std::sort(p.degrees.begin(), p.degrees.end(), std::greater<>());
    p.regular = !p.degrees.empty() &&
                std::all_of(p.degrees.begin(), p.degrees.end(),
                            [&](int d) { return d == p.degrees.front(); });
    p.regularity = p.regular ? p.degrees.front() : 0;
    p.connected = is_connected(g);
    p.bipartite = is_bipartite(g);
    return p;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.node_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    // non-tree edge closes a cycle through s of this length or shorter
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

}  // namespace goldspec
