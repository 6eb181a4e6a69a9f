#include "visconn/visibility.hpp"

#include <algorithm>
#include <map>

namespace visconn {

bool is_visible(const PointSet& ps, int i, int j) {
    if (i < 0 || j < 0 || i >= ps.size() || j >= ps.size()) throw IndexOutOfRange();
    if (i == j) throw PreconditionViolated("is_visible: i != j required");
    for (int k = 0; k < ps.size(); ++k) {
        if (k == i || k == j) continue;
        if (strictly_between(ps[i], ps[k], ps[j])) return false;
    }
    return true;
}

Graph visibility_graph(const PointSet& ps) {
    if (ps.size() < 1) throw PreconditionViolated("visibility_graph: empty set");
    Graph g(ps.size());
    for (int i = 0; i < ps.size(); ++i) {
        for (int j = i + 1; j < ps.size(); ++j) {
            if (is_visible(ps, i, j)) g.add_edge(i, j);
        }
    }
    return g;
}

PointSet union_points(const PointSet& a, const PointSet& b) {
    std::vector<Point> pts(a.begin(), a.end());
    pts.insert(pts.end(), b.begin(), b.end());
    return PointSet(std::move(pts));  // distinctness check doubles as disjointness check
}

GeomGraph bivisibility_graph(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty()) {
        throw PreconditionViolated("bivisibility_graph: both sets must be nonempty");
    }
    for (const Point& p : a) {
        if (b.contains(p)) throw OverlappingSets();
    }
    GeomGraph g;
    g.base = union_points(a, b);
    g.colour.assign(static_cast<std::size_t>(g.base.size()), 0);
    for (int i = a.size(); i < g.base.size(); ++i) g.colour[i] = 1;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = a.size(); j < g.base.size(); ++j) {
            if (is_visible(g.base, i, j)) g.edges.insert(make_edge(i, j));
        }
    }
    return g;
}

namespace {

// Canonical direction of q-p for grouping collinear points: reduced integer
// vector with positive leading component.
std::pair<Integer, Integer> direction_key(const Point& p, const Point& q) {
    Scalar dx = q.x - p.x, dy = q.y - p.y;
    Integer l = lcm(denominator(dx), denominator(dy));
    Integer ix = numerator(Scalar(dx * l)), iy = numerator(Scalar(dy * l));
    Integer g = gcd(abs(ix), abs(iy));
    if (g != 0) {
        ix /= g;
        iy /= g;
    }
    if (ix < 0 || (ix == 0 && iy < 0)) {
        ix = -ix;
        iy = -iy;
    }
    return {ix, iy};
}

}  // namespace

int max_collinear(const PointSet& ps) {
    if (ps.size() < 2) throw PreconditionViolated("max_collinear: need at least 2 points");
    int best = 2;
    for (int i = 0; i < ps.size(); ++i) {
        std::map<std::pair<Integer, Integer>, int> runs;
        for (int j = i + 1; j < ps.size(); ++j) {
            best = std::max(best, ++runs[direction_key(ps[i], ps[j])] + 1);
        }
    }
    return best;
}

int max_collinear_ab(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty()) {
        throw PreconditionViolated("max_collinear_ab: both sets must be nonempty");
    }
    PointSet all = union_points(a, b);
    int best = 0;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            Line l = Line::through(a[i], b[j]);
            int count = 0;
            for (const Point& p : all) {
                if (l.contains(p)) ++count;
            }
            best = std::max(best, count);
        }
    }
    return best;
}

}  // namespace visconn
