#pragma once

#include <tuple>

#include "visconn/connectivity.hpp"
#include "visconn/visibility.hpp"

namespace visconn {

/// A set of vertex-index paths, pairwise edge-disjoint in their host graph.
struct PathSystem {
    std::vector<std::vector<int>> paths;

    int count() const { return static_cast<int>(paths.size()); }
    /// Max path length (edge count) over the system; 0 when empty.
    int max_length() const;
    /// Every consecutive pair is a host edge and no host edge repeats.
    bool edge_disjoint_in(const Graph& host) const;
};

/// Matching between the pencil of lines through v and the pencil through w:
/// matched entries are (index into lines_v, index into lines_w, witness vertex).
struct PencilMatch {
    std::vector<Line> lines_v;
    std::vector<Line> lines_w;
    std::vector<std::tuple<int, int, int>> matched;
};

/// Maximum matching in the bipartite pencil graph of v and w over the points
/// off the line vw.
PencilMatch pencil_matching(const PointSet& ps, int v, int w);

/// min(deg v, deg w) pairwise edge-disjoint v-w paths of length at most 4 in a
/// diameter-2 graph. Throws DiameterTooLarge otherwise.
PathSystem four_paths(const Graph& g, int v, int w);

/// Edge-disjoint paths from v to w in the visibility graph of ps, each either
/// straight along the line vw or bending once at a matched witness vertex.
/// At least ceil((n-1)/(l-1)) paths where l = max_collinear(ps).
PathSystem one_bend_paths(const PointSet& ps, int v, int w);

/// A line whose two closed half-planes each contain at least half of a and at
/// least half of b, found by exhaustive search over candidate lines.
Line ham_sandwich(const PointSet& a, const PointSet& b);

/// For properly coloured non-crossing geometric graphs with disjoint hulls:
/// indices (i in g1, j in g2) of a bichromatic edge whose addition keeps the
/// union non-crossing and properly coloured.
std::pair<int, int> join_separated_graphs(const GeomGraph& g1, const GeomGraph& g2);

/// Non-crossing spanning tree of the bivisibility graph where all of a lies on
/// one line and b avoids it; requires |a| >= |b| >= 1.
GeomGraph line_anchored_tree(const PointSet& a, const PointSet& b);

/// Non-crossing subgraph of the bivisibility graph with at least n+1 edges,
/// for |a| = |b| = n >= 2 and a non-collinear union.
GeomGraph large_noncrossing_subgraph(const PointSet& a, const PointSet& b);

/// Non-crossing forest in the bivisibility graph with at least
/// ceil((n-1)/(l-1)) edges where l counts the fullest AB-line; a spanning tree
/// when l = 2.
GeomGraph ray_cover_forest(const PointSet& a, const PointSet& b);

/// Non-crossing spanning tree of the bivisibility graph for |a| = |b| with at
/// most 3 points of the union on any AB-line.
GeomGraph noncrossing_spanning_tree(const PointSet& a, const PointSet& b);

}  // namespace visconn
