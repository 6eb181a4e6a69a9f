#pragma once

#include <optional>
#include <string>

#include "visconn/graph.hpp"
#include "visconn/verify.hpp"

namespace visconn {

/// Parsed point file: points plus optional class labels (0=A, 1=B, 2=C);
/// labels are all-or-nothing across lines.
struct LabelledPoints {
    PointSet points;
    std::vector<int> labels;

    bool has_labels() const { return !labels.empty(); }
    /// Points carrying the given label (everything when unlabelled and label 0).
    PointSet of_label(int label) const;
};

/// "p/q" in lowest terms, plain integer when the denominator is 1.
std::string format_scalar(const Scalar& s);
Scalar parse_scalar(const std::string& token);

/// Point file: one "x y [A|B|C]" per line, '#' comments, blank lines ignored.
LabelledPoints parse_point_file(const std::string& text);
std::string serialize_point_file(const LabelledPoints& lp);

/// Edge list: header "n m" then m lines "i j", i < j, ascending.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

/// Sorted "key=value" lines (byte-stable across platforms).
std::string serialize_report(const Report& r);

/// 800x800 viewport with 5% margin; draws every point and edge.
std::string svg_graph(const GeomGraph& g);
std::string svg_points(const PointSet& ps);

}  // namespace visconn
