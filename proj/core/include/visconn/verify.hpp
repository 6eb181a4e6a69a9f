#pragma once

#include <string>

#include "visconn/connectivity.hpp"
#include "visconn/generators.hpp"
#include "visconn/visibility.hpp"

namespace visconn {

enum class ClaimStatus { Pass, Fail, NotApplicable };

struct ClaimResult {
    std::string id;
    ClaimStatus status;
    std::string details;
};

/// Per-instance measurement plus one entry per claim of the fixed registry.
struct Report {
    std::string descriptor;
    int n = 0;
    int ell = 0;
    int delta = 0;
    int kappa = 0;
    int lambda = 0;
    int diam = -1;  // -1: undefined (disconnected)
    std::vector<ClaimResult> claims;

    bool has_failure() const;
    const ClaimResult& claim(const std::string& id) const;
};

/// Evaluates the visibility-graph claims (a)-(i) with exact oracles:
/// (a) collinearity record; for non-collinear P: (b) diameter <= 2,
/// (c) lambda = delta, (d) kappa*(ell-1) >= n-1, (e) 2*kappa >= delta+2,
/// (f) 3*kappa >= 2*delta+1 when ell <= 4, (g) conjecture status
/// 3*kappa >= 2*delta+1 (informational, never Fail), (h) for n <= 16 every
/// minimum edge cut is the star of a minimum-degree vertex, (i) the
/// connectivity equivalence chains at thresholds 2 and 3.
Report check_instance(const PointSet& p);

/// Bivisibility claims: at most one edge-bearing component, connectedness
/// iff no isolated vertices, and triangle spot-checks (for sampled triangles
/// abc, a or b has a neighbour inside the triangle off the side ab).
Report check_bivisibility(const PointSet& a, const PointSet& b);

/// For a verified separator (A, B, C) of visibility_graph(P) and pairwise
/// non-crossing A-B edges E: every E-edge's open segment holds a C point and
/// |C| >= |E|.
bool check_observation_bound(const PointSet& p, const SeparatorPartition& part,
                             const std::vector<Edge>& e_edges);

struct HuntConfig {
    int trials = 1;
    GenConfig base;                        // trial t uses seed base.seed + t
    std::vector<std::string> claim_subset; // empty: all claims
    int threads = 1;
};

/// One preserved conjecture candidate: the instance, its config and report.
struct HuntCandidate {
    GenConfig cfg;
    PointSet points;
    Report report;
};

struct HuntOutcome {
    Report summary;  // per-claim pass/fail/na counts in the details fields
    std::vector<HuntCandidate> candidates;
};

/// Runs check_instance over seeded trials; theorem-claim failures mark the
/// summary claim Fail, conjecture violations become preserved candidates.
/// Deterministic in the base seed regardless of thread count.
HuntOutcome hunt(const HuntConfig& cfg);

}  // namespace visconn
