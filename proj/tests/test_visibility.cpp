#include <doctest.h>

#include <map>
#include <set>

#include "visconn/connectivity.hpp"
#include "visconn/generators.hpp"
#include "visconn/visibility.hpp"

using namespace visconn;

namespace {

Point pt(int x, int y) { return {Scalar(x), Scalar(y)}; }

PointSet square_centre() {
    return PointSet{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)};
}

}  // namespace

TEST_CASE("is_visible") {
    PointSet ps = square_centre();
    CHECK_FALSE(is_visible(ps, 0, 2));  // blocked by the centre
    CHECK(is_visible(ps, 0, 1));
    PointSet line{pt(0, 0), pt(1, 0), pt(2, 0)};
    CHECK_FALSE(is_visible(line, 0, 2));
    CHECK_THROWS_AS(is_visible(ps, 0, 0), PreconditionViolated);
    CHECK_THROWS_AS(is_visible(ps, 0, 9), IndexOutOfRange);
}

TEST_CASE("visibility_graph small cases") {
    Graph path = visibility_graph(PointSet{pt(0, 0), pt(1, 0), pt(2, 0)});
    CHECK(path.edge_count() == 2);
    CHECK(path.has_edge(0, 1));
    CHECK(path.has_edge(1, 2));

    Graph tri = visibility_graph(PointSet{pt(0, 0), pt(3, 0), pt(1, 2)});
    CHECK(tri.edge_count() == 3);

    // The wheel: 4 sides + 4 spokes, both diagonals blocked.
    Graph wheel = visibility_graph(square_centre());
    std::set<Edge> expected{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
    CHECK(wheel.edges() == expected);
}

TEST_CASE("bivisibility_graph") {
    GeomGraph g1 = bivisibility_graph(PointSet{pt(0, 0)}, PointSet{pt(1, 0)});
    CHECK(g1.edges.size() == 1);

    GeomGraph g2 = bivisibility_graph(PointSet{pt(0, 0), pt(2, 0)}, PointSet{pt(1, 0)});
    CHECK(g2.edges.size() == 2);

    GeomGraph g3 = bivisibility_graph(PointSet{pt(2, 0), pt(4, 0), pt(1, 1)}, PointSet{pt(0, 0)});
    CHECK(g3.edges.size() == 2);
    // (4,0) is isolated: its sight of (0,0) is blocked by (2,0).
    int iso = 0;
    for (const auto& [i, j] : g3.edges) {
        CHECK(i != 1);
        CHECK(j != 1);
        (void)iso;
    }

    CHECK_THROWS_AS(bivisibility_graph(PointSet{pt(0, 0)}, PointSet{pt(0, 0)}), OverlappingSets);
}

TEST_CASE("bivisibility edges are bichromatic visibility edges") {
    GenConfig cfg{31, 10, 12, {}};
    PointSet all = random_point_set(cfg);
    std::vector<Point> av(all.begin(), all.begin() + 5), bv(all.begin() + 5, all.end());
    PointSet a(av), b(bv);
    GeomGraph bg = bivisibility_graph(a, b);
    Graph vg = visibility_graph(bg.base);
    for (const auto& [i, j] : bg.edges) {
        CHECK(vg.has_edge(i, j));
        CHECK(bg.colour[i] != bg.colour[j]);
    }
}

TEST_CASE("max_collinear") {
    CHECK(max_collinear(square_centre()) == 3);
    CHECK(max_collinear(PointSet{pt(0, 0), pt(1, 0), pt(2, 0), pt(5, 0)}) == 4);

    // 3x3 grid: oracle by exhaustive line enumeration.
    std::vector<Point> grid;
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) grid.push_back(pt(x, y));
    }
    PointSet g(grid);
    int oracle = 0;
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            int cnt = 0;
            for (int k = 0; k < g.size(); ++k) {
                if (orientation(g[i], g[j], g[k]) == 0) ++cnt;
            }
            oracle = std::max(oracle, cnt);
        }
    }
    CHECK(oracle == 3);
    CHECK(max_collinear(g) == oracle);
}

TEST_CASE("max_collinear_ab") {
    CHECK(max_collinear_ab(PointSet{pt(0, 0)}, PointSet{pt(1, 0)}) == 2);
    CHECK(max_collinear_ab(PointSet{pt(0, 0), pt(2, 0)}, PointSet{pt(1, 0)}) == 3);
}

TEST_CASE("visibility graph structural properties on seeded instances") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        GenConfig cfg{seed, 4 + static_cast<int>(seed % 6), 12, {}};
        PointSet ps = random_point_set(cfg);
        Graph g = visibility_graph(ps);
        auto d = diameter(g);
        REQUIRE(d.has_value());  // always connected

        bool collinear = true;
        for (int k = 2; k < ps.size(); ++k) {
            if (orientation(ps[0], ps[1], ps[k]) != 0) collinear = false;
        }
        if (!collinear) CHECK(*d <= 2);

        // No edge contains a vertex in its interior.
        for (const auto& [i, j] : g.edges()) {
            for (int k = 0; k < ps.size(); ++k) {
                if (k != i && k != j) CHECK_FALSE(strictly_between(ps[i], ps[k], ps[j]));
            }
        }

        // Degree lower bound from the collinearity number.
        int ell = max_collinear(ps);
        int delta = degree_stats(g).min_degree;
        CHECK(delta * (ell - 1) >= ps.size() - 1);
    }
}
