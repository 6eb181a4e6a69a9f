#include <doctest.h>

#include "visconn/verify.hpp"

using namespace visconn;

namespace {

Point pt(int x, int y) { return {Scalar(x), Scalar(y)}; }

PointSet square_centre() {
    return PointSet{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)};
}

}  // namespace

TEST_CASE("check_instance on the wheel") {
    Report r = check_instance(square_centre());
    CHECK(r.n == 5);
    CHECK(r.ell == 3);
    CHECK(r.delta == 3);
    CHECK(r.kappa == 3);
    CHECK(r.lambda == 3);
    CHECK(r.diam == 2);
    CHECK_FALSE(r.has_failure());
    for (const char* id : {"a", "b", "c", "d", "e", "f", "h", "i"}) {
        CHECK(r.claim(id).status == ClaimStatus::Pass);
    }
    CHECK(r.claim("a").details == "collinear=0");
    CHECK(r.claim("g").details == "holds=1");
    CHECK_THROWS_AS(r.claim("zz"), Error);
}

TEST_CASE("check_instance on a collinear set") {
    std::vector<Point> line;
    for (int k = 0; k < 5; ++k) line.push_back(pt(k, 0));
    Report r = check_instance(PointSet(line));
    CHECK(r.ell == 5);
    CHECK(r.delta == 1);
    CHECK(r.kappa == 1);
    CHECK(r.lambda == 1);
    CHECK(r.claim("a").details == "collinear=1");
    for (const char* id : {"b", "c", "d", "e", "f", "g", "h", "i"}) {
        CHECK(r.claim(id).status == ClaimStatus::NotApplicable);
    }
    CHECK_FALSE(r.has_failure());
    CHECK_THROWS_AS(check_instance(PointSet{pt(0, 0)}), PreconditionViolated);
}

TEST_CASE("check_instance on the tight configuration m=3") {
    TripleConfig t = default_elliptic_config(3);
    std::vector<Point> all(t.a.begin(), t.a.end());
    all.insert(all.end(), t.b.begin(), t.b.end());
    all.insert(all.end(), t.c.begin(), t.c.end());
    Report r = check_instance(PointSet(all));
    CHECK(r.n == 11);
    CHECK(r.ell == 3);
    CHECK(r.delta == 7);
    CHECK(r.kappa == 5);
    CHECK(3 * r.kappa == 2 * r.delta + 1);  // the bound is attained exactly
    CHECK(r.claim("f").status == ClaimStatus::Pass);
    CHECK_FALSE(r.has_failure());
}

TEST_CASE("check_bivisibility") {
    {
        Report r = check_bivisibility(PointSet{pt(0, 0), pt(2, 0)}, PointSet{pt(1, 1)});
        CHECK_FALSE(r.has_failure());
        CHECK(r.claim("bv-component").status == ClaimStatus::Pass);
        CHECK(r.claim("bv-corollary").status == ClaimStatus::Pass);
        CHECK(r.claim("bv-triangle").status == ClaimStatus::Pass);
    }
    {
        // (4,0) is isolated, so the graph is disconnected but still has at
        // most one edge-bearing component.
        Report r = check_bivisibility(PointSet{pt(2, 0), pt(4, 0), pt(1, 1)}, PointSet{pt(0, 0)});
        CHECK(r.claim("bv-component").status == ClaimStatus::Pass);
        CHECK(r.claim("bv-corollary").status == ClaimStatus::Pass);
    }
    CHECK_THROWS_AS(check_bivisibility(PointSet{pt(0, 0), pt(2, 0)}, PointSet{pt(1, 0)}),
                    PreconditionViolated);

    for (std::uint64_t seed = 900; seed < 930; ++seed) {
        GenConfig cfg{seed, 8, 10, {}};
        PointSet all = random_point_set(cfg);
        std::vector<Point> av(all.begin(), all.begin() + 4), bv(all.begin() + 4, all.end());
        Report r = check_bivisibility(PointSet(av), PointSet(bv));
        CHECK_FALSE(r.has_failure());
    }
}

TEST_CASE("check_observation_bound") {
    PointSet sq = square_centre();
    SeparatorPartition part{{0}, {2}, {1, 3, 4}};
    // No A-B edge exists; the vacuous family satisfies the bound.
    CHECK(check_observation_bound(sq, part, {}));

    CHECK_THROWS_AS(check_observation_bound(sq, {{0}, {1}, {2, 3, 4}}, {}),
                    PreconditionViolated);  // not a separator: 0 and 1 adjacent
    CHECK_THROWS_AS(check_observation_bound(sq, part, {make_edge(0, 1)}),
                    PreconditionViolated);  // edge not between A and B
    CHECK_THROWS_AS(check_observation_bound(sq, part, {make_edge(0, 2), make_edge(0, 2)}),
                    PreconditionViolated);  // duplicate segments overlap

    // The 0-2 diagonal is blocked by the centre, which lies in C.
    CHECK(check_observation_bound(sq, part, {make_edge(0, 2)}));
}

TEST_CASE("hunt is deterministic and aggregates per claim") {
    HuntConfig cfg;
    cfg.trials = 100;
    cfg.base = GenConfig{12345, 6, 10, {}};
    HuntOutcome o1 = hunt(cfg);
    cfg.threads = 4;
    HuntOutcome o2 = hunt(cfg);
    REQUIRE(o1.summary.claims.size() == o2.summary.claims.size());
    for (std::size_t k = 0; k < o1.summary.claims.size(); ++k) {
        CHECK(o1.summary.claims[k].id == o2.summary.claims[k].id);
        CHECK(o1.summary.claims[k].details == o2.summary.claims[k].details);
        CHECK(o1.summary.claims[k].status == ClaimStatus::Pass);
    }
    CHECK(o1.candidates.size() == o2.candidates.size());
    CHECK(o1.candidates.empty());  // no conjecture violation in this stream

    HuntConfig sub = cfg;
    sub.claim_subset = {"b", "c"};
    HuntOutcome o3 = hunt(sub);
    CHECK(o3.summary.claims.size() == 2);

    HuntConfig bad;
    bad.trials = 0;
    CHECK_THROWS_AS(hunt(bad), PreconditionViolated);
}
