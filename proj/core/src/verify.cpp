#include "visconn/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <thread>

namespace visconn {

bool Report::has_failure() const {
    return std::any_of(claims.begin(), claims.end(),
                       [](const ClaimResult& c) { return c.status == ClaimStatus::Fail; });
}

const ClaimResult& Report::claim(const std::string& id) const {
    for (const ClaimResult& c : claims) {
        if (c.id == id) return c;
    }
    throw Error("report: unknown claim id " + id);
}

namespace {

ClaimStatus as_status(bool ok) { return ok ? ClaimStatus::Pass : ClaimStatus::Fail; }

bool points_collinear(const PointSet& ps) {
    for (int k = 2; k < ps.size(); ++k) {
        if (orientation(ps[0], ps[1], ps[k]) != 0) return false;
    }
    return true;
}

}  // namespace

Report check_instance(const PointSet& p) {
    if (p.size() < 2) throw PreconditionViolated("check_instance: need at least 2 points");
    Report r;
    r.n = p.size();
    r.ell = max_collinear(p);
    Graph g = visibility_graph(p);
    r.delta = degree_stats(g).min_degree;
    r.kappa = vertex_connectivity(g);
    r.lambda = edge_connectivity(g);
    auto d = diameter(g);
    r.diam = d ? *d : -1;

    const bool collinear = points_collinear(p);
    r.claims.push_back({"a", ClaimStatus::Pass, collinear ? "collinear=1" : "collinear=0"});

    auto gated = [&](const std::string& id, bool applicable, bool ok, std::string details) {
        r.claims.push_back({id, applicable ? as_status(ok) : ClaimStatus::NotApplicable,
                            std::move(details)});
    };
    const bool nc = !collinear;
    gated("b", nc, r.diam >= 0 && r.diam <= 2, "diameter=" + std::to_string(r.diam));
    gated("c", nc, r.lambda == r.delta, "lambda=" + std::to_string(r.lambda));
    gated("d", nc, r.kappa * (r.ell - 1) >= r.n - 1,
          "kappa*(ell-1)=" + std::to_string(r.kappa * (r.ell - 1)));
    gated("e", nc, 2 * r.kappa >= r.delta + 2, "2kappa=" + std::to_string(2 * r.kappa));
    gated("f", nc && r.ell <= 4, 3 * r.kappa >= 2 * r.delta + 1,
          "3kappa=" + std::to_string(3 * r.kappa));
    {
        bool holds = 3 * r.kappa >= 2 * r.delta + 1;
        r.claims.push_back({"g", nc ? ClaimStatus::Pass : ClaimStatus::NotApplicable,
                            holds ? "holds=1" : "holds=0"});
    }
    if (nc && r.n <= 16) {
        bool all_stars = true;
        auto cuts = min_edge_cuts_by_bipartition(g);
        for (const CutRecord& c : cuts) {
            if (c.side.size() != 1 || g.degree(c.side[0]) != r.delta) {
                all_stars = false;
                break;
            }
        }
        gated("h", true, all_stars, "min_cuts=" + std::to_string(cuts.size()));
    } else {
        gated("h", false, true, "gated");
    }
    {
        bool c2 = ((r.kappa >= 2) == (r.lambda >= 2)) && ((r.lambda >= 2) == (r.delta >= 2)) &&
                  ((r.delta >= 2) == nc);
        bool c3 = ((r.kappa >= 3) == (r.lambda >= 3)) && ((r.lambda >= 3) == (r.delta >= 3));
        gated("i", nc, c2 && c3, "chain2=" + std::to_string(c2) + " chain3=" + std::to_string(c3));
    }
    return r;
}

namespace {

// Closed triangle membership.
bool in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    int o1 = orientation(a, b, p);
    int o2 = orientation(b, c, p);
    int o3 = orientation(c, a, p);
    bool non_neg = o1 >= 0 && o2 >= 0 && o3 >= 0;
    bool non_pos = o1 <= 0 && o2 <= 0 && o3 <= 0;
    return non_neg || non_pos;
}

bool on_closed_seg(const Point& p, const Point& a, const Point& b) {
    return p == a || p == b || strictly_between(a, p, b);
}

}  // namespace

Report check_bivisibility(const PointSet& a, const PointSet& b) {
    GeomGraph bg = bivisibility_graph(a, b);
    if (points_collinear(bg.base)) {
        throw PreconditionViolated("check_bivisibility: union is collinear");
    }
    Report r;
    r.n = bg.n();
    r.ell = max_collinear(bg.base);
    r.delta = 0;
    r.kappa = 0;
    r.lambda = 0;
    r.diam = -1;

    // Component analysis over all vertices.
    std::vector<int> comp(static_cast<std::size_t>(bg.n()), -1);
    int ncomp = 0;
    for (int s = 0; s < bg.n(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [x, y] : bg.edges) {
                int v = (x == u) ? y : (y == u ? x : -1);
                if (v >= 0 && comp[v] < 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    std::set<int> edge_comps;
    for (const auto& [x, y] : bg.edges) edge_comps.insert(comp[x]);
    r.claims.push_back({"bv-component", as_status(edge_comps.size() <= 1),
                        "edge_components=" + std::to_string(edge_comps.size())});

    std::vector<int> deg(static_cast<std::size_t>(bg.n()), 0);
    for (const auto& [x, y] : bg.edges) {
        ++deg[x];
        ++deg[y];
    }
    bool isolated = std::any_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
    bool connected = ncomp == 1;
    r.claims.push_back({"bv-corollary", as_status(connected == !isolated),
                        std::string("connected=") + (connected ? "1" : "0") +
                            " isolated=" + (isolated ? "1" : "0")});

    // Triangle lemma spot-checks: for sampled triangles abc, a or b has a
    // bivisibility neighbour inside the closed triangle off the side ab.
    int checked = 0, failed = 0;
    const int sample_budget = 50;
    auto adj = [&](int u, int v) { return bg.edges.count(make_edge(u, v)) > 0; };
    for (int ia = 0; ia < a.size() && checked < sample_budget; ++ia) {
        for (int jb = 0; jb < b.size() && checked < sample_budget; ++jb) {
            int vb = a.size() + jb;
            for (int c = 0; c < bg.n() && checked < sample_budget; ++c) {
                if (c == ia || c == vb) continue;
                const Point &pa = bg.base[ia], &pb = bg.base[vb], &pc = bg.base[c];
                if (orientation(pa, pb, pc) == 0) continue;
                ++checked;
                bool ok = false;
                for (int w = 0; w < bg.n() && !ok; ++w) {
                    if (w == ia || w == vb) continue;
                    const Point& pw = bg.base[w];
                    if (!in_triangle(pw, pa, pb, pc) || on_closed_seg(pw, pa, pb)) continue;
                    if (adj(ia, w) || adj(vb, w)) ok = true;
                }
                if (!ok) ++failed;
            }
        }
    }
    r.claims.push_back({"bv-triangle", as_status(failed == 0),
                        "checked=" + std::to_string(checked) +
                            " failed=" + std::to_string(failed)});
    return r;
}

bool check_observation_bound(const PointSet& p, const SeparatorPartition& part,
                             const std::vector<Edge>& e_edges) {
    Graph g = visibility_graph(p);
    if (!verify_separator(g, part)) {
        throw PreconditionViolated("check_observation_bound: invalid separator");
    }
    std::set<int> in_a(part.a.begin(), part.a.end());
    std::set<int> in_b(part.b.begin(), part.b.end());
    for (const auto& [u, v] : e_edges) {
        bool bichrome = (in_a.count(u) && in_b.count(v)) || (in_a.count(v) && in_b.count(u));
        if (!bichrome) {
            throw PreconditionViolated("check_observation_bound: edge not between A and B");
        }
    }
    for (std::size_t i = 0; i < e_edges.size(); ++i) {
        for (std::size_t j = i + 1; j < e_edges.size(); ++j) {
            if (!edges_compatible(p[e_edges[i].first], p[e_edges[i].second],
                                  p[e_edges[j].first], p[e_edges[j].second])) {
                throw PreconditionViolated("check_observation_bound: crossing edges");
            }
        }
    }
    if (part.c.size() < e_edges.size()) return false;
    for (const auto& [u, v] : e_edges) {
        bool blocked = false;
        for (int cv : part.c) {
            if (strictly_between(p[u], p[cv], p[v])) {
                blocked = true;
                break;
            }
        }
        if (!blocked) return false;
    }
    return true;
}

HuntOutcome hunt(const HuntConfig& cfg) {
    if (cfg.trials < 1) throw PreconditionViolated("hunt: trial count >= 1 required");
    const int threads = std::max(1, cfg.threads);

    struct TrialResult {
        Report report;
        bool candidate = false;
        GenConfig gen;
        PointSet points;
    };
    std::vector<TrialResult> results(static_cast<std::size_t>(cfg.trials));

    auto run_range = [&](int lo, int hi) {
        for (int t = lo; t < hi; ++t) {
            GenConfig gen = cfg.base;
            gen.seed = cfg.base.seed + static_cast<std::uint64_t>(t);
            PointSet pts = random_point_set(gen);
            TrialResult& tr = results[static_cast<std::size_t>(t)];
            tr.report = check_instance(pts);
            tr.report.descriptor = "seed=" + std::to_string(gen.seed);
            tr.gen = gen;
            tr.points = pts;
            tr.candidate = 3 * tr.report.kappa < 2 * tr.report.delta + 1;
        }
    };
    if (threads == 1) {
        run_range(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        int chunk = (cfg.trials + threads - 1) / threads;
        for (int k = 0; k < threads; ++k) {
            int lo = k * chunk, hi = std::min(cfg.trials, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // Order-independent aggregation: counts per claim id, candidates by trial.
    HuntOutcome out;
    out.summary.descriptor = "hunt seed=" + std::to_string(cfg.base.seed) +
                             " trials=" + std::to_string(cfg.trials);
    std::map<std::string, std::array<int, 3>> tally;  // pass, fail, na
    for (const TrialResult& tr : results) {
        for (const ClaimResult& c : tr.report.claims) {
            if (!cfg.claim_subset.empty() &&
                std::find(cfg.claim_subset.begin(), cfg.claim_subset.end(), c.id) ==
                    cfg.claim_subset.end()) {
                continue;
            }
            auto& t = tally[c.id];
            if (c.status == ClaimStatus::Pass) ++t[0];
            else if (c.status == ClaimStatus::Fail) ++t[1];
            else ++t[2];
        }
        if (tr.candidate) out.candidates.push_back({tr.gen, tr.points, tr.report});
    }
    out.summary.n = cfg.trials;
    for (const auto& [id, t] : tally) {
        out.summary.claims.push_back({id, t[1] == 0 ? ClaimStatus::Pass : ClaimStatus::Fail,
                                      "pass=" + std::to_string(t[0]) +
                                          " fail=" + std::to_string(t[1]) +
                                          " na=" + std::to_string(t[2])});
    }
    return out;
}

}  // namespace visconn
