#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "visconn/errors.hpp"

namespace visconn {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Kept in canonical reduced form (gcd 1, positive
/// denominator) by the backing type; equality is structural.
using Scalar = boost::multiprecision::cpp_rational;

struct Point {
    Scalar x;
    Scalar y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    /// Lexicographic (x, then y); the library-wide tie-break order.
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

/// Ordered sequence of pairwise distinct points; index doubles as vertex id.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts);
    PointSet(std::initializer_list<Point> pts) : PointSet(std::vector<Point>(pts)) {}

    int size() const { return static_cast<int>(points_.size()); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& points() const { return points_; }

    bool contains(const Point& p) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::vector<Point> points_;
};

/// Line a*x + b*y = c with integer coefficients in lowest terms, (a,b) != (0,0),
/// first nonzero of (a,b) positive.
struct Line {
    Integer a;
    Integer b;
    Integer c;

    static Line through(const Point& p, const Point& q);
    static Line normalized(const Scalar& a, const Scalar& b, const Scalar& c);

    /// Sign of a*x + b*y - c at p: -1, 0 or +1.
    int side(const Point& p) const;
    bool contains(const Point& p) const { return side(p) == 0; }

    bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Line& o) const;
};

/// Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

/// True iff q lies in the open segment pr. Requires p != r.
bool strictly_between(const Point& p, const Point& q, const Point& r);

/// True iff the closed segments p1q1 and p2q2 may coexist in a non-crossing
/// geometric graph: sharing an endpoint is fine; proper crossings, an endpoint
/// interior to the other segment, and collinear overlap of positive length are not.
bool edges_compatible(const Point& p1, const Point& q1, const Point& p2, const Point& q2);

/// Counterclockwise hull corner indices; collinear points interior to hull edges
/// are excluded. A fully collinear set yields its two extreme points, a
/// singleton yields one.
std::vector<int> convex_hull(const PointSet& ps);

/// A line with all of s1 strictly on the negative side and all of s2 strictly
/// on the positive side. Throws HullsIntersect if no strict separator exists.
Line separating_line(const PointSet& s1, const PointSet& s2);

}  // namespace visconn
