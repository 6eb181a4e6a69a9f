#include "visconn/graph.hpp"

#include <numeric>

namespace visconn {

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw IndexOutOfRange();
    if (i == j) throw PreconditionViolated("Graph: no loops");
    edges_.insert(make_edge(i, j));
}

bool Graph::has_edge(int i, int j) const {
    return edges_.count(make_edge(i, j)) > 0;
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [i, j] : edges_) {
        if (i == v || j == v) ++d;
    }
    return d;
}

std::vector<int> Graph::neighbours(int v) const {
    std::vector<int> out;
    for (const auto& [i, j] : edges_) {
        if (i == v) out.push_back(j);
        else if (j == v) out.push_back(i);
    }
    return out;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const auto& [i, j] : edges_) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

bool GeomGraph::is_noncrossing() const {
    std::vector<Edge> es(edges.begin(), edges.end());
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (!edges_compatible(base[es[i].first], base[es[i].second],
                                  base[es[j].first], base[es[j].second])) {
                return false;
            }
        }
    }
    return true;
}

bool GeomGraph::is_properly_coloured() const {
    if (colour.empty()) return false;
    for (const auto& [i, j] : edges) {
        if (colour[i] == colour[j]) return false;
    }
    return true;
}

namespace {

// Union-find over n vertices; returns component count and cycle flag.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

bool GeomGraph::is_forest() const {
    Dsu dsu(n());
    for (const auto& [i, j] : edges) {
        if (!dsu.unite(i, j)) return false;
    }
    return true;
}

bool GeomGraph::is_spanning_tree() const {
    if (static_cast<int>(edges.size()) != n() - 1) return false;
    Dsu dsu(n());
    int comps = n();
    for (const auto& [i, j] : edges) {
        if (dsu.unite(i, j)) --comps;
    }
    return comps == 1;
}

}  // namespace visconn
