#include "visconn/generators.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "visconn/visibility.hpp"

namespace visconn {

Scalar EllipticCurve::discriminant() const {
    return Scalar(-16) * (4 * alpha * alpha * alpha + 27 * beta * beta);
}

bool on_curve(const EllipticCurve& c, const ECPoint& p) {
    if (p.identity) return true;
    return p.y * p.y == p.x * p.x * p.x + c.alpha * p.x + c.beta;
}

ECPoint ec_negate(const ECPoint& p) {
    if (p.identity) return p;
    return ECPoint::affine(p.x, -p.y);
}

ECPoint ec_add(const EllipticCurve& c, const ECPoint& p, const ECPoint& q) {
    if (c.discriminant() == 0) throw PreconditionViolated("ec_add: singular curve");
    if (!on_curve(c, p) || !on_curve(c, q)) throw PointNotOnCurve();
    if (p.identity) return q;
    if (q.identity) return p;
    if (p.x == q.x && p.y == -q.y) return ECPoint::infinity();  // vertical chord
    Scalar lambda;
    if (p == q) {
        lambda = (3 * p.x * p.x + c.alpha) / (2 * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    Scalar x3 = lambda * lambda - p.x - q.x;
    Scalar y3 = lambda * (p.x - x3) - p.y;
    return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint ec_multiple(const EllipticCurve& c, const ECPoint& p, int k) {
    if (k < 0) throw PreconditionViolated("ec_multiple: k >= 0 required");
    if (!on_curve(c, p)) throw PointNotOnCurve();
    ECPoint acc = ECPoint::infinity();
    ECPoint base = p;
    for (; k > 0; k >>= 1) {
        if (k & 1) acc = ec_add(c, acc, base);
        if (k > 1) base = ec_add(c, base, base);
    }
    return acc;
}

namespace {

Point to_point(const ECPoint& p) { return Point{p.x, p.y}; }

}  // namespace

TripleConfig elliptic_config(int m, const EllipticCurve& c, const ECPoint& a, const ECPoint& b,
                             const ECPoint& e) {
    if (m < 1) throw PreconditionViolated("elliptic_config: m >= 1 required");
    if (a.identity || b.identity || e.identity) {
        throw PreconditionViolated("elliptic_config: a, b, e must be affine");
    }
    ECPoint neg_sum = ec_negate(ec_add(c, a, b));
    if (neg_sum.identity || a == b || a == neg_sum || b == neg_sum) {
        throw PreconditionViolated("elliptic_config: a, b, -(a+b) must be distinct affine points");
    }

    std::vector<ECPoint> ea, eb, ec;
    ECPoint cur = a;
    for (int i = 0; i < m; ++i, cur = ec_add(c, cur, e)) ea.push_back(cur);
    cur = b;
    for (int j = 0; j < m; ++j, cur = ec_add(c, cur, e)) eb.push_back(cur);
    cur = ec_add(c, a, b);
    for (int k = 0; k <= 2 * m - 2; ++k, cur = ec_add(c, cur, e)) ec.push_back(ec_negate(cur));

    std::vector<Point> pa, pb, pc;
    for (const auto& grp : {&ea, &eb, &ec}) {
        for (const ECPoint& p : *grp) {
            if (p.identity) throw SideConditionsFailed("a point of the configuration is the identity");
        }
    }
    for (const ECPoint& p : ea) pa.push_back(to_point(p));
    for (const ECPoint& p : eb) pb.push_back(to_point(p));
    for (const ECPoint& p : ec) pc.push_back(to_point(p));

    std::vector<Point> all(pa);
    all.insert(all.end(), pb.begin(), pb.end());
    all.insert(all.end(), pc.begin(), pc.end());
    {
        std::set<std::pair<Scalar, Scalar>> seen;
        for (const Point& p : all) {
            if (!seen.insert({p.x, p.y}).second) {
                throw SideConditionsFailed("configuration points are not pairwise distinct");
            }
        }
    }

    // Each C point blocks its A/B pair from the middle.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (!strictly_between(pa[i], pc[i + j], pb[j])) {
                throw SideConditionsFailed("blocker not strictly between its A/B pair");
            }
        }
    }
    // No collinear triple within a class.
    for (const auto* grp : {&pa, &pb, &pc}) {
        const auto& g = *grp;
        for (std::size_t x = 0; x < g.size(); ++x) {
            for (std::size_t y = x + 1; y < g.size(); ++y) {
                for (std::size_t z = y + 1; z < g.size(); ++z) {
                    if (orientation(g[x], g[y], g[z]) == 0) {
                        throw SideConditionsFailed("collinear triple within a class");
                    }
                }
            }
        }
    }
    if (all.size() >= 4 && max_collinear(PointSet(all)) > 3) {
        throw SideConditionsFailed("more than 3 collinear points overall");
    }
    return {PointSet(pa), PointSet(pb), PointSet(pc)};
}

TripleConfig default_elliptic_config(int m) {
    EllipticCurve c{Scalar(-2), Scalar(0)};
    ECPoint g = ECPoint::affine(Scalar(-1), Scalar(1));

    // Non-torsion evidence: the first 16 multiples are pairwise distinct.
    std::vector<ECPoint> mult;
    for (int k = 1; k <= 16; ++k) mult.push_back(ec_multiple(c, g, k));
    for (std::size_t i = 0; i < mult.size(); ++i) {
        for (std::size_t j = i + 1; j < mult.size(); ++j) {
            if (mult[i] == mult[j]) throw Error("default base point has small order");
        }
    }

    ECPoint a = ec_negate(ec_multiple(c, g, 8));
    ECPoint b = ec_negate(ec_multiple(c, g, 7));
    // Escalate over candidate multiples for e until the side conditions hold;
    // -6g is the first that works for every m up to 4.
    std::string last;
    for (int k : {6, 12, 18, 24, 30}) {
        ECPoint e = ec_negate(ec_multiple(c, g, k));
        try {
            return elliptic_config(m, c, a, b, e);
        } catch (const SideConditionsFailed& ex) {
            last = ex.what();
        }
    }
    throw SideConditionsFailed("no default e candidate worked; last: " + last);
}

namespace {

bool pencil_ok(const std::vector<Point>& pts, int ell) {
    PointSet ps(pts);
    const Point& apex = pts[0];
    // Any 3 points not on a common apex ray must be affinely independent.
    for (int i = 1; i < ps.size(); ++i) {
        for (int j = i + 1; j < ps.size(); ++j) {
            for (int k = j + 1; k < ps.size(); ++k) {
                if (orientation(ps[i], ps[j], ps[k]) == 0 &&
                    orientation(apex, ps[i], ps[j]) != 0) {
                    return false;
                }
            }
        }
    }
    return max_collinear(ps) == ell;
}

}  // namespace

PointSet pencil_config(int ell, int rays) {
    if (ell < 2 || rays < 1) throw PreconditionViolated("pencil_config: ell >= 2, rays >= 1");
    // Seeded rejection: distinct random slopes per ray, distinct random x
    // positions per point; generic draws avoid off-ray collinear triples.
    for (int attempt = 0; attempt < 64; ++attempt) {
        Lcg rng(1000ULL * attempt + 31ULL * ell + 7ULL * rays + 1);
        std::set<std::uint32_t> slope_set;
        while (static_cast<int>(slope_set.size()) < rays) {
            slope_set.insert(rng.below(static_cast<std::uint32_t>(8 * rays * ell)));
        }
        std::vector<Point> pts;
        pts.push_back({Scalar(0), Scalar(0)});  // apex
        for (std::uint32_t slope : slope_set) {
            std::set<std::uint32_t> xs;
            while (static_cast<int>(xs.size()) < ell - 1) {
                xs.insert(1 + rng.below(static_cast<std::uint32_t>(8 * ell)));
            }
            for (std::uint32_t x : xs) {
                pts.push_back({Scalar(x), Scalar(Integer(x) * slope)});
            }
        }
        std::set<std::pair<Scalar, Scalar>> seen;
        bool distinct = true;
        for (const Point& p : pts) {
            if (!seen.insert({p.x, p.y}).second) distinct = false;
        }
        if (distinct && (ell == 2 && rays == 1 ? true : pencil_ok(pts, ell))) {
            return PointSet(pts);
        }
    }
    throw Error("pencil_config: no generic slope assignment found");
}

std::uint32_t Lcg::below(std::uint32_t bound) {
    // Uniform on [0, bound] by rejection.
    std::uint64_t range = static_cast<std::uint64_t>(bound) + 1;
    std::uint64_t limit = (1ULL << 32) - ((1ULL << 32) % range);
    while (true) {
        std::uint64_t v = next();
        if (v < limit) return static_cast<std::uint32_t>(v % range);
    }
}

PointSet random_point_set(const GenConfig& cfg) {
    if (cfg.n < 1 || cfg.coord_bound < 1) {
        throw PreconditionViolated("random_point_set: n >= 1 and coord_bound >= 1 required");
    }
    const std::uint64_t grid =
        static_cast<std::uint64_t>(cfg.coord_bound + 1) * (cfg.coord_bound + 1);
    if (static_cast<std::uint64_t>(cfg.n) > grid) throw Unsatisfiable("grid too small");
    if (cfg.max_collinear_cap && *cfg.max_collinear_cap < 2 && cfg.n >= 2) {
        throw Unsatisfiable("max-collinear cap below 2");
    }

    Lcg rng(cfg.seed);
    const int set_budget = 1000;
    for (int attempt = 0; attempt < set_budget; ++attempt) {
        std::vector<Point> pts;
        std::set<std::pair<std::uint32_t, std::uint32_t>> used;
        long draws = 0;
        const long draw_budget = 1000L * cfg.n + 1000;
        while (static_cast<int>(pts.size()) < cfg.n && draws < draw_budget) {
            ++draws;
            std::uint32_t x = rng.below(static_cast<std::uint32_t>(cfg.coord_bound));
            std::uint32_t y = rng.below(static_cast<std::uint32_t>(cfg.coord_bound));
            if (used.insert({x, y}).second) {
                pts.push_back({Scalar(x), Scalar(y)});
            }
        }
        if (static_cast<int>(pts.size()) < cfg.n) continue;
        PointSet ps(pts);
        if (cfg.max_collinear_cap && cfg.n >= 2 && max_collinear(ps) > *cfg.max_collinear_cap) {
            continue;
        }
        return ps;
    }
    throw Unsatisfiable("random_point_set: retry budget exhausted");
}

}  // namespace visconn
