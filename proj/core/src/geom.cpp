#include "visconn/geom.hpp"

#include <algorithm>
#include <optional>

namespace visconn {

PointSet::PointSet(std::vector<Point> pts) : points_(std::move(pts)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (std::size_t j = i + 1; j < points_.size(); ++j) {
            if (points_[i] == points_[j]) {
                throw PreconditionViolated("PointSet: points must be pairwise distinct");
            }
        }
    }
}

bool PointSet::contains(const Point& p) const {
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

static int sign(const Scalar& s) {
    if (s > 0) return 1;
    if (s < 0) return -1;
    return 0;
}

int orientation(const Point& p, const Point& q, const Point& r) {
    Scalar cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign(cross);
}

bool strictly_between(const Point& p, const Point& q, const Point& r) {
    if (p == r) throw PreconditionViolated("strictly_between: p and r must differ");
    if (q == p || q == r) return false;
    if (orientation(p, q, r) != 0) return false;
    // Collinear: compare along the dominant axis.
    if (p.x != r.x) {
        return (p.x < q.x && q.x < r.x) || (r.x < q.x && q.x < p.x);
    }
    return (p.y < q.y && q.y < r.y) || (r.y < q.y && q.y < p.y);
}

namespace {

bool on_closed_segment(const Point& a, const Point& b, const Point& q) {
    if (q == a || q == b) return true;
    if (a == b) return false;
    return strictly_between(a, q, b);
}

}  // namespace

bool edges_compatible(const Point& p1, const Point& q1, const Point& p2, const Point& q2) {
    if (p1 == q1 || p2 == q2) {
        throw PreconditionViolated("edges_compatible: segments need distinct endpoints");
    }
    bool share_p1 = (p1 == p2 || p1 == q2);
    bool share_q1 = (q1 == p2 || q1 == q2);
    if (share_p1 && share_q1) return false;  // identical segments overlap

    int o1 = orientation(p1, q1, p2);
    int o2 = orientation(p1, q1, q2);
    int o3 = orientation(p2, q2, p1);
    int o4 = orientation(p2, q2, q1);

    if (o1 == 0 && o2 == 0) {
        // All points collinear: any overlap beyond a shared endpoint is out.
        if (share_p1 || share_q1) {
            const Point& shared = share_p1 ? p1 : q1;
            const Point& free1 = share_p1 ? q1 : p1;
            const Point& free2 = (p2 == shared) ? q2 : p2;
            // Both segments emanate from the shared point along one line; they
            // avoid overlap exactly when they point opposite ways.
            return strictly_between(free1, shared, free2);
        }
        bool disjoint = !on_closed_segment(p1, q1, p2) && !on_closed_segment(p1, q1, q2) &&
                        !on_closed_segment(p2, q2, p1) && !on_closed_segment(p2, q2, q1);
        return disjoint;
    }

    if (share_p1 || share_q1) {
        // One shared endpoint and not collinear overall: the only residual
        // conflict is the free endpoint of one lying inside the other.
        const Point& shared = share_p1 ? p1 : q1;
        const Point& free1 = share_p1 ? q1 : p1;
        const Point& free2 = (p2 == shared) ? q2 : p2;
        if (strictly_between(shared, free2, free1)) return false;
        if (strictly_between(shared, free1, free2)) return false;
        return true;
    }

    // Endpoint interior to the other segment.
    if (o1 == 0 && strictly_between(p1, p2, q1)) return false;
    if (o2 == 0 && strictly_between(p1, q2, q1)) return false;
    if (o3 == 0 && strictly_between(p2, p1, q2)) return false;
    if (o4 == 0 && strictly_between(p2, q1, q2)) return false;

    // Proper crossing.
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return false;
    return true;
}

std::vector<int> convex_hull(const PointSet& ps) {
    const int n = ps.size();
    if (n == 0) throw PreconditionViolated("convex_hull: empty point set");
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return ps[i] < ps[j]; });

    if (n == 1) return idx;

    // Andrew monotone chain with strict turns, so collinear non-corner points drop out.
    auto build = [&](const std::vector<int>& order) {
        std::vector<int> h;
        for (int i : order) {
            while (h.size() >= 2 &&
                   orientation(ps[h[h.size() - 2]], ps[h[h.size() - 1]], ps[i]) <= 0) {
                h.pop_back();
            }
            h.push_back(i);
        }
        return h;
    };
    std::vector<int> lower = build(idx);
    std::vector<int> rev(idx.rbegin(), idx.rend());
    std::vector<int> upper = build(rev);

    // For a fully collinear set both chains collapse to the two extremes.
    std::vector<int> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    return hull;
}

Line Line::normalized(const Scalar& a, const Scalar& b, const Scalar& c) {
    if (a == 0 && b == 0) throw PreconditionViolated("Line: (a,b) must be nonzero");
    Integer da = denominator(a), db = denominator(b), dc = denominator(c);
    Integer l = lcm(lcm(da, db), dc);
    Integer ia = numerator(Scalar(a * l));
    Integer ib = numerator(Scalar(b * l));
    Integer ic = numerator(Scalar(c * l));
    Integer g = gcd(gcd(abs(ia), abs(ib)), abs(ic));
    if (g == 0) g = 1;
    ia /= g;
    ib /= g;
    ic /= g;
    bool flip = (ia != 0) ? (ia < 0) : (ib < 0);
    if (flip) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return Line{ia, ib, ic};
}

Line Line::through(const Point& p, const Point& q) {
    if (p == q) throw PreconditionViolated("Line::through: identical points");
    Scalar a = q.y - p.y;
    Scalar b = p.x - q.x;
    Scalar c = a * p.x + b * p.y;
    return normalized(a, b, c);
}

int Line::side(const Point& p) const {
    Scalar v = Scalar(a) * p.x + Scalar(b) * p.y - Scalar(c);
    return sign(v);
}

bool Line::operator<(const Line& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

namespace {

Scalar sq_dist(const Point& p, const Point& q) {
    Scalar dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

// Closest point on the closed segment ab to p, exact.
Point closest_on_segment(const Point& a, const Point& b, const Point& p) {
    if (a == b) return a;
    Scalar dx = b.x - a.x, dy = b.y - a.y;
    Scalar t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
    if (t <= 0) return a;
    if (t >= 1) return b;
    return Point{a.x + t * dx, a.y + t * dy};
}

}  // namespace

Line separating_line(const PointSet& s1, const PointSet& s2) {
    if (s1.empty() || s2.empty()) {
        throw PreconditionViolated("separating_line: empty input set");
    }
    // Closest pair between the two hulls; attained at a vertex of one set and a
    // point of a segment of the other, so scanning point-vs-segment both ways
    // is exhaustive. Degenerate segments cover the point-point case.
    std::optional<Scalar> best;
    Point bp, bq;  // bp from s1 side, bq from s2 side
    auto consider = [&](const Point& p, const Point& q, bool p_in_s1) {
        Scalar d = sq_dist(p, q);
        if (!best || d < *best) {
            best = d;
            bp = p_in_s1 ? p : q;
            bq = p_in_s1 ? q : p;
        }
    };
    for (const Point& p : s1) {
        for (int i = 0; i < s2.size(); ++i) {
            for (int j = i; j < s2.size(); ++j) {
                consider(p, closest_on_segment(s2[i], s2[j], p), true);
            }
        }
    }
    for (const Point& q : s2) {
        for (int i = 0; i < s1.size(); ++i) {
            for (int j = i; j < s1.size(); ++j) {
                consider(q, closest_on_segment(s1[i], s1[j], q), false);
            }
        }
    }
    if (*best == 0) throw HullsIntersect();

    // Perpendicular bisector of the closest pair between the hulls. For
    // disjoint compact convex sets this separates strictly; a verification
    // failure means the hulls intersect (e.g. one nested in the other).
    Scalar a = bq.x - bp.x;
    Scalar b = bq.y - bp.y;
    Point mid{(bp.x + bq.x) / 2, (bp.y + bq.y) / 2};
    Scalar c = a * mid.x + b * mid.y;
    Line line = Line::normalized(a, b, c);
    if (line.side(bp) == 0) throw HullsIntersect();
    if (line.side(bp) > 0) line = Line{-line.a, -line.b, -line.c};  // s1 goes negative
    for (const Point& p : s1) {
        if (line.side(p) != -1) throw HullsIntersect();
    }
    for (const Point& q : s2) {
        if (line.side(q) != 1) throw HullsIntersect();
    }
    return line;
}

}  // namespace visconn
