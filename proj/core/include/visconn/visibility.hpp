#pragma once

#include "visconn/graph.hpp"

namespace visconn {

/// True iff no point of ps lies strictly inside the segment ps[i]ps[j].
bool is_visible(const PointSet& ps, int i, int j);

/// Visibility graph: edge {i,j} iff the points are mutually visible.
Graph visibility_graph(const PointSet& ps);

/// Bivisibility graph of disjoint nonempty a and b: base is a followed by b,
/// colour 0 for a-vertices and 1 for b-vertices, edges only across the classes
/// and only for pairs visible with respect to the union.
GeomGraph bivisibility_graph(const PointSet& a, const PointSet& b);

/// Size of the largest collinear subset; requires at least 2 points.
int max_collinear(const PointSet& ps);

/// Largest number of points of a∪b on a line meeting both classes.
int max_collinear_ab(const PointSet& a, const PointSet& b);

/// Concatenation helper used throughout: a's points then b's points.
PointSet union_points(const PointSet& a, const PointSet& b);

}  // namespace visconn
