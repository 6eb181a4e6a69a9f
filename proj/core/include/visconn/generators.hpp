#pragma once

#include <cstdint>
#include <optional>

#include "visconn/geom.hpp"

namespace visconn {

/// y^2 = x^3 + alpha*x + beta; usable only when the discriminant
/// -16(4 alpha^3 + 27 beta^2) is nonzero.
struct EllipticCurve {
    Scalar alpha;
    Scalar beta;

    Scalar discriminant() const;
};

/// A rational point of the curve group: the identity (point at infinity) or an
/// affine point.
struct ECPoint {
    bool identity = true;
    Scalar x;
    Scalar y;

    static ECPoint infinity() { return {}; }
    static ECPoint affine(Scalar px, Scalar py) { return {false, std::move(px), std::move(py)}; }

    bool operator==(const ECPoint& o) const {
        if (identity || o.identity) return identity == o.identity;
        return x == o.x && y == o.y;
    }
    bool operator!=(const ECPoint& o) const { return !(*this == o); }
};

bool on_curve(const EllipticCurve& c, const ECPoint& p);

ECPoint ec_negate(const ECPoint& p);

/// Chord/tangent group addition; vertical chords map to the identity.
ECPoint ec_add(const EllipticCurve& c, const ECPoint& p, const ECPoint& q);

/// k-fold sum by double-and-add; k >= 0.
ECPoint ec_multiple(const EllipticCurve& c, const ECPoint& p, int k);

/// The three classes of the tight construction: A = {a+ie}, B = {b+je}
/// (0 <= i,j < m) and C = {-(a+b+ke) : 0 <= k <= 2m-2}.
struct TripleConfig {
    PointSet a;
    PointSet b;
    PointSet c;
};

/// Builds the triple configuration and verifies every geometric side
/// condition: all points distinct and affine, each C point strictly between
/// its A/B pair, no collinear triple inside a class, and at most 3 collinear
/// overall. Throws SideConditionsFailed naming the first violation; the
/// caller should retry with a different (larger) multiple e.
TripleConfig elliptic_config(int m, const EllipticCurve& c, const ECPoint& a, const ECPoint& b,
                             const ECPoint& e);

/// The default curve y^2 = x^3 - 2x with base point g = (-1,1); retries
/// escalating multiples of g for e until the side conditions hold.
TripleConfig default_elliptic_config(int m);

/// Apex plus rays*(ell-1) points, ell-1 per ray in generic directions:
/// n = rays*(ell-1)+1, max_collinear = ell, deg(apex) = rays in the
/// visibility graph. The apex is the first point.
PointSet pencil_config(int ell, int rays);

struct GenConfig {
    std::uint64_t seed = 0;
    int n = 0;
    int coord_bound = 1;
    std::optional<int> max_collinear_cap;
};

/// Documented linear congruential generator (constants from Knuth's MMIX:
/// state' = state * 6364136223846793005 + 1442695040888963407, output the
/// upper 32 bits), so streams reproduce across implementations.
struct Lcg {
    std::uint64_t state;

    explicit Lcg(std::uint64_t seed) : state(seed) {}

    std::uint32_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state >> 32);
    }
    /// Uniform draw from [0, bound] via rejection on the top 32 bits.
    std::uint32_t below(std::uint32_t bound);
};

/// n distinct integer points in [0, coord_bound]^2, deterministic in the
/// seed; rejection-samples whole sets against the optional max-collinear cap.
/// Throws Unsatisfiable when the grid or the retry budget is exhausted.
PointSet random_point_set(const GenConfig& cfg);

}  // namespace visconn
