#pragma once

#include <optional>

#include "visconn/graph.hpp"

namespace visconn {

struct DegreeStats {
    int min_degree;
    std::vector<int> degrees;
};

/// One bipartition achieving the minimum edge-cut size; the smaller side is
/// recorded (ties broken towards the lexicographically smaller vertex set).
struct CutRecord {
    std::vector<int> side;
    std::vector<Edge> cut_edges;
    int size;
};

struct SeparatorPartition {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> c;
};

DegreeStats degree_stats(const Graph& g);

/// Maximum shortest-path length over vertex pairs; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

/// Exact vertex connectivity via vertex-split unit-capacity max-flow over
/// non-adjacent pairs; n-1 for complete graphs.
int vertex_connectivity(const Graph& g);

/// Exact edge connectivity via unit-capacity max-flow from vertex 0.
int edge_connectivity(const Graph& g);

/// All bipartitions achieving the minimum cut size, by exhaustive 2^(n-1)
/// sweep. Throws TooLarge for n > 20; requires a connected graph.
std::vector<CutRecord> min_edge_cuts_by_bipartition(const Graph& g);

/// Checks the structural characterisation of a non-star delta-sized cut:
/// g[a] complete of size delta, |b|+|c| >= delta, every a-vertex has exactly
/// one neighbour in b and none in c, every b-vertex has a neighbour in a,
/// and b x c is complete.
bool check_deltacut_structure(const Graph& g, const std::vector<int>& a,
                              const std::vector<int>& b, const std::vector<int>& c);

/// True iff part.a and part.b are nonempty and no edge joins them.
bool verify_separator(const Graph& g, const SeparatorPartition& part);

}  // namespace visconn
