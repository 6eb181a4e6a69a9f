#pragma once

#include <set>
#include <utility>
#include <vector>

#include "visconn/geom.hpp"

namespace visconn {

using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int i, int j) { return i < j ? Edge{i, j} : Edge{j, i}; }

/// Abstract undirected simple graph on vertex indices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::set<Edge>& edges() const { return edges_; }

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;

    int degree(int v) const;
    std::vector<int> neighbours(int v) const;
    std::vector<std::vector<int>> adjacency() const;

private:
    int n_ = 0;
    std::set<Edge> edges_;
};

/// Point-embedded edge set with optional per-vertex colour labels.
struct GeomGraph {
    PointSet base;
    std::set<Edge> edges;
    std::vector<int> colour;  // empty, or one label per vertex

    int n() const { return base.size(); }
    bool has_colours() const { return !colour.empty(); }

    /// All edge pairs pairwise satisfy edges_compatible.
    bool is_noncrossing() const;
    /// Every edge joins differently coloured endpoints.
    bool is_properly_coloured() const;
    /// Connected and |E| = n-1 over the whole vertex set.
    bool is_spanning_tree() const;
    /// Acyclic.
    bool is_forest() const;
};

struct Bipartition {
    std::vector<int> a;
    std::vector<int> b;
};

}  // namespace visconn
