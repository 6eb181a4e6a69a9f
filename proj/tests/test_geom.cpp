#include <doctest.h>

#include "visconn/generators.hpp"
#include "visconn/geom.hpp"

using namespace visconn;

namespace {

Point pt(int x, int y) { return {Scalar(x), Scalar(y)}; }

}  // namespace

TEST_CASE("orientation signs") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(1, -1)) == -1);
}

TEST_CASE("orientation is antisymmetric under argument swaps") {
    GenConfig cfg{11, 9, 20, {}};
    PointSet ps = random_point_set(cfg);
    for (int i = 0; i < ps.size(); ++i) {
        for (int j = 0; j < ps.size(); ++j) {
            for (int k = 0; k < ps.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                int o = orientation(ps[i], ps[j], ps[k]);
                CHECK(orientation(ps[j], ps[i], ps[k]) == -o);
                CHECK(orientation(ps[i], ps[k], ps[j]) == -o);
            }
        }
    }
}

TEST_CASE("strictly_between") {
    CHECK(strictly_between(pt(0, 0), pt(1, 1), pt(2, 2)));
    CHECK_FALSE(strictly_between(pt(0, 0), pt(0, 0), pt(2, 2)));  // endpoint not interior
    CHECK_FALSE(strictly_between(pt(0, 0), pt(1, 2), pt(2, 2)));  // off the line
    CHECK_THROWS_AS(strictly_between(pt(1, 1), pt(0, 0), pt(1, 1)), PreconditionViolated);
}

TEST_CASE("strictly_between implies collinear interior point") {
    GenConfig cfg{12, 8, 10, {}};
    PointSet ps = random_point_set(cfg);
    for (int i = 0; i < ps.size(); ++i) {
        for (int j = 0; j < ps.size(); ++j) {
            for (int k = 0; k < ps.size(); ++k) {
                if (i == k || i == j || j == k) continue;
                if (strictly_between(ps[i], ps[j], ps[k])) {
                    CHECK(orientation(ps[i], ps[j], ps[k]) == 0);
                }
            }
        }
    }
}

TEST_CASE("edges_compatible") {
    // Diagonals of the unit square cross.
    CHECK_FALSE(edges_compatible(pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)));
    // Shared endpoint is fine.
    CHECK(edges_compatible(pt(0, 0), pt(1, 0), pt(1, 0), pt(1, 1)));
    // Collinear overlap of positive length is not.
    CHECK_FALSE(edges_compatible(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)));
    // Collinear overlap through a shared endpoint is not, either.
    CHECK_FALSE(edges_compatible(pt(0, 0), pt(2, 0), pt(0, 0), pt(1, 0)));
    // Endpoint interior to the other segment is not.
    CHECK_FALSE(edges_compatible(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1)));
    // Disjoint segments are fine.
    CHECK(edges_compatible(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));
}

TEST_CASE("edges_compatible is symmetric") {
    GenConfig cfg{13, 8, 12, {}};
    PointSet ps = random_point_set(cfg);
    for (int a = 0; a < ps.size(); ++a) {
        for (int b = a + 1; b < ps.size(); ++b) {
            for (int c = 0; c < ps.size(); ++c) {
                for (int d = c + 1; d < ps.size(); ++d) {
                    CHECK(edges_compatible(ps[a], ps[b], ps[c], ps[d]) ==
                          edges_compatible(ps[c], ps[d], ps[a], ps[b]));
                }
            }
        }
    }
}

TEST_CASE("convex_hull corners") {
    PointSet square{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)};
    auto hull = convex_hull(square);
    REQUIRE(hull.size() == 4);
    // Counterclockwise corners only; the centre is excluded.
    for (int idx : hull) CHECK(idx != 4);

    PointSet line{pt(0, 0), pt(1, 0), pt(2, 0)};
    auto lh = convex_hull(line);
    REQUIRE(lh.size() == 2);
    CHECK(line[lh[0]] == pt(0, 0));
    CHECK(line[lh[1]] == pt(2, 0));

    PointSet tri{pt(0, 0), pt(3, 0), pt(1, 2)};
    CHECK(convex_hull(tri).size() == 3);

    PointSet single{pt(5, 5)};
    CHECK(convex_hull(single).size() == 1);
}

TEST_CASE("hull edges support the point set") {
    GenConfig cfg{14, 10, 15, {}};
    PointSet ps = random_point_set(cfg);
    auto hull = convex_hull(ps);
    for (std::size_t k = 0; k < hull.size(); ++k) {
        const Point& p = ps[hull[k]];
        const Point& q = ps[hull[(k + 1) % hull.size()]];
        if (p == q) continue;  // size-1 hull
        for (int i = 0; i < ps.size(); ++i) {
            CHECK(orientation(p, q, ps[i]) >= 0);  // CCW hull: nothing strictly right
        }
    }
}

TEST_CASE("separating_line splits disjoint clusters") {
    Line l = separating_line(PointSet{pt(0, 0)}, PointSet{pt(2, 0)});
    CHECK(l.side(pt(0, 0)) == -1);
    CHECK(l.side(pt(2, 0)) == 1);

    CHECK_THROWS_AS(separating_line(PointSet{pt(0, 0), pt(2, 0)}, PointSet{pt(1, 0)}),
                    HullsIntersect);

    // Random clusters, verified point by point.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenConfig cfg{seed, 6, 10, {}};
        PointSet s1 = random_point_set(cfg);
        cfg.seed = seed + 1000;
        PointSet raw = random_point_set(cfg);
        std::vector<Point> shifted;
        for (const Point& p : raw) shifted.push_back({p.x + 100, p.y});
        PointSet s2(shifted);
        Line sep = separating_line(s1, s2);
        for (const Point& p : s1) CHECK(sep.side(p) == -1);
        for (const Point& p : s2) CHECK(sep.side(p) == 1);
    }
}

TEST_CASE("separating_line rejects nested hulls") {
    PointSet outer{pt(0, 0), pt(10, 0), pt(10, 10), pt(0, 10)};
    PointSet inner{pt(4, 4), pt(6, 6)};
    CHECK_THROWS_AS(separating_line(outer, inner), HullsIntersect);
}

TEST_CASE("Line normalization") {
    Line l = Line::through(pt(0, 0), pt(2, 2));  // y = x
    CHECK(l.contains(pt(1, 1)));
    // Lowest terms, first nonzero of (a,b) positive.
    Line m1 = Line::through(pt(0, 0), pt(2, 2));
    Line m2 = Line::through(pt(3, 3), pt(-1, -1));
    CHECK(m1 == m2);
    CHECK((m1.a > 0 || (m1.a == 0 && m1.b > 0)));
    CHECK_THROWS_AS(Line::normalized(Scalar(0), Scalar(0), Scalar(1)), PreconditionViolated);
}

TEST_CASE("PointSet rejects duplicates") {
    CHECK_THROWS_AS(PointSet({pt(1, 1), pt(1, 1)}), Error);
}
