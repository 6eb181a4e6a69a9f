#include <doctest.h>

#include <set>

#include "visconn/connectivity.hpp"
#include "visconn/generators.hpp"
#include "visconn/visibility.hpp"

using namespace visconn;

namespace {

const EllipticCurve kCurve{Scalar(-2), Scalar(0)};  // y^2 = x^3 - 2x
const ECPoint kG = ECPoint::affine(Scalar(-1), Scalar(1));

Scalar frac(long p, long q) { return Scalar(p) / Scalar(q); }

}  // namespace

TEST_CASE("elliptic curve group law") {
    CHECK(kCurve.discriminant() != 0);
    CHECK(on_curve(kCurve, kG));
    CHECK(on_curve(kCurve, ECPoint::infinity()));
    CHECK_FALSE(on_curve(kCurve, ECPoint::affine(Scalar(1), Scalar(1))));

    // Identity and inverses.
    CHECK(ec_add(kCurve, kG, ECPoint::infinity()) == kG);
    CHECK(ec_add(kCurve, ECPoint::infinity(), kG) == kG);
    CHECK(ec_add(kCurve, kG, ec_negate(kG)) == ECPoint::infinity());

    // Tangent doubling, checked against the curve equation and known value.
    ECPoint g2 = ec_add(kCurve, kG, kG);
    CHECK(on_curve(kCurve, g2));
    CHECK(g2 == ECPoint::affine(frac(9, 4), frac(-21, 8)));

    // Commutativity and associativity on sample multiples.
    ECPoint g3 = ec_add(kCurve, g2, kG);
    CHECK(on_curve(kCurve, g3));
    CHECK(ec_add(kCurve, kG, g2) == g3);
    ECPoint g4a = ec_add(kCurve, g3, kG);
    ECPoint g4b = ec_add(kCurve, g2, g2);
    CHECK(g4a == g4b);
    CHECK(on_curve(kCurve, g4a));

    CHECK_THROWS_AS(ec_add(kCurve, ECPoint::affine(Scalar(1), Scalar(1)), kG), PointNotOnCurve);
}

TEST_CASE("ec_multiple") {
    CHECK(ec_multiple(kCurve, kG, 0) == ECPoint::infinity());
    CHECK(ec_multiple(kCurve, kG, 1) == kG);
    CHECK(ec_multiple(kCurve, kG, 2) == ec_add(kCurve, kG, kG));
    ECPoint g5 = ec_multiple(kCurve, kG, 5);
    CHECK(on_curve(kCurve, g5));
    CHECK(ec_add(kCurve, ec_multiple(kCurve, kG, 3), ec_multiple(kCurve, kG, 2)) == g5);
}

TEST_CASE("elliptic_config m=1 sizes and betweenness") {
    TripleConfig t = default_elliptic_config(1);
    CHECK(t.a.size() == 1);
    CHECK(t.b.size() == 1);
    CHECK(t.c.size() == 1);
    CHECK(strictly_between(t.a[0], t.c[0], t.b[0]));
}

TEST_CASE("default_elliptic_config m=2 realizes the tight bound") {
    TripleConfig t = default_elliptic_config(2);
    CHECK(t.a.size() == 2);
    CHECK(t.b.size() == 2);
    CHECK(t.c.size() == 3);
    std::vector<Point> all(t.a.begin(), t.a.end());
    all.insert(all.end(), t.b.begin(), t.b.end());
    all.insert(all.end(), t.c.begin(), t.c.end());
    PointSet ps(all);
    CHECK(max_collinear(ps) == 3);
    Graph g = visibility_graph(ps);
    CHECK(degree_stats(g).min_degree == 3 * 2 - 2);       // delta = 3m-2
    CHECK(vertex_connectivity(g) == 2 * 2 - 1);           // kappa = 2m-1
}

TEST_CASE("pencil_config") {
    {
        PointSet p = pencil_config(3, 4);
        CHECK(p.size() == 4 * 2 + 1);
        CHECK(max_collinear(p) == 3);
        Graph g = visibility_graph(p);
        CHECK(g.degree(0) == 4);  // apex sees one point per ray
        CHECK(g.degree(0) == (p.size() - 1) / (3 - 1));
    }
    {
        PointSet p = pencil_config(2, 3);
        CHECK(p.size() == 4);
        CHECK(max_collinear(p) == 2);
        CHECK(visibility_graph(p).degree(0) == 3);
    }
    {
        PointSet p = pencil_config(4, 2);
        CHECK(p.size() == 7);
        CHECK(max_collinear(p) == 4);
        CHECK(visibility_graph(p).degree(0) == 2);
    }
    CHECK_THROWS_AS(pencil_config(1, 3), PreconditionViolated);
}

TEST_CASE("random_point_set determinism and bounds") {
    GenConfig cfg{42, 9, 11, {}};
    PointSet p1 = random_point_set(cfg);
    PointSet p2 = random_point_set(cfg);
    CHECK(p1.size() == 9);
    for (int k = 0; k < p1.size(); ++k) {
        CHECK(p1[k] == p2[k]);
        CHECK(p1[k].x >= 0);
        CHECK(p1[k].x <= 11);
        CHECK(p1[k].y >= 0);
        CHECK(p1[k].y <= 11);
    }
    std::set<std::pair<Scalar, Scalar>> distinct;
    for (const Point& p : p1) distinct.insert({p.x, p.y});
    CHECK(distinct.size() == p1.size());

    cfg.seed = 43;
    PointSet p3 = random_point_set(cfg);
    bool same = true;
    for (int k = 0; k < p1.size(); ++k) {
        if (!(p1[k] == p3[k])) same = false;
    }
    CHECK_FALSE(same);
}

TEST_CASE("random_point_set pigeonhole and collinearity cap") {
    GenConfig impossible{1, 10, 2, {}};  // 3x3 grid cannot hold 10 points
    CHECK_THROWS_AS(random_point_set(impossible), Unsatisfiable);

    GenConfig capped{7, 8, 6, 3};
    PointSet p = random_point_set(capped);
    CHECK(max_collinear(p) <= 3);
}

TEST_CASE("Lcg stream is the documented recurrence") {
    Lcg lcg(1);
    std::uint64_t s = 1;
    for (int k = 0; k < 5; ++k) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        CHECK(lcg.next() == static_cast<std::uint32_t>(s >> 32));
    }
    Lcg r(99);
    for (int k = 0; k < 100; ++k) CHECK(r.below(6) <= 6);
}
