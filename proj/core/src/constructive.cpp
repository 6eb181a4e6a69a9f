#include "visconn/constructive.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace visconn {

int PathSystem::max_length() const {
    int m = 0;
    for (const auto& p : paths) {
        m = std::max(m, static_cast<int>(p.size()) - 1);
    }
    return m;
}

bool PathSystem::edge_disjoint_in(const Graph& host) const {
    std::set<Edge> used;
    for (const auto& path : paths) {
        if (path.size() < 2) return false;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            if (!host.has_edge(path[k], path[k + 1])) return false;
            if (!used.insert(make_edge(path[k], path[k + 1])).second) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// four_paths (diameter-2 edge-disjoint short paths)
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> paths_between_nonadjacent(const Graph& g, int v, int w, int d) {
    std::vector<std::vector<int>> paths;
    auto nv = g.neighbours(v);
    auto nw = g.neighbours(w);
    std::set<int> nvs(nv.begin(), nv.end()), nws(nw.begin(), nw.end());

    std::vector<int> common;
    for (int c : nv) {
        if (nws.count(c)) common.push_back(c);
    }
    for (int c : common) paths.push_back({v, c, w});

    const int need = d - static_cast<int>(common.size());
    std::set<int> cs(common.begin(), common.end());
    std::vector<int> sa, sb;
    for (int x : nv) {
        if (!cs.count(x) && x != w && static_cast<int>(sa.size()) < need) sa.push_back(x);
    }
    for (int x : nw) {
        if (!cs.count(x) && x != v && static_cast<int>(sb.size()) < need) sb.push_back(x);
    }

    // Maximal matching between sa and sb, greedily by ascending index.
    std::set<int> matched_b;
    std::vector<std::pair<int, int>> m1;
    std::set<int> matched_a;
    for (int a : sa) {
        for (int b : sb) {
            if (!matched_b.count(b) && g.has_edge(a, b)) {
                m1.push_back({a, b});
                matched_a.insert(a);
                matched_b.insert(b);
                break;
            }
        }
    }
    for (auto [a, b] : m1) paths.push_back({v, a, b, w});

    std::vector<int> a2, b2;
    for (int a : sa) {
        if (!matched_a.count(a)) a2.push_back(a);
    }
    for (int b : sb) {
        if (!matched_b.count(b)) b2.push_back(b);
    }
    std::set<int> a2s(a2.begin(), a2.end()), b2s(b2.begin(), b2.end());
    for (std::size_t k = 0; k < a2.size(); ++k) {
        int a = a2[k], b = b2[k];
        // Lowest-index common neighbour; by maximality of m1 it avoids
        // a2, b2, v and w automatically, but we assert it for safety.
        int x = -1;
        for (int cand : g.neighbours(a)) {
            if (g.has_edge(cand, b)) {
                x = cand;
                break;
            }
        }
        if (x < 0 || x == v || x == w || a2s.count(x) || b2s.count(x)) {
            throw Error("four_paths: no valid middle vertex found");
        }
        paths.push_back({v, a, x, b, w});
    }
    return paths;
}

}  // namespace

PathSystem four_paths(const Graph& g, int v, int w) {
    if (v == w || v < 0 || w < 0 || v >= g.n() || w >= g.n()) {
        throw PreconditionViolated("four_paths: need distinct valid vertices");
    }
    auto diam = diameter(g);
    if (!diam || *diam > 2) throw DiameterTooLarge();

    const int d = std::min(g.degree(v), g.degree(w));
    PathSystem sys;
    if (g.has_edge(v, w)) {
        sys.paths.push_back({v, w});
        Graph reduced(g.n());
        for (const Edge& e : g.edges()) {
            if (e != make_edge(v, w)) reduced.add_edge(e.first, e.second);
        }
        auto rest = paths_between_nonadjacent(reduced, v, w, d - 1);
        sys.paths.insert(sys.paths.end(), rest.begin(), rest.end());
    } else {
        sys.paths = paths_between_nonadjacent(g, v, w, d);
    }
    return sys;
}

// ---------------------------------------------------------------------------
// one_bend_paths (pencil matching)
// ---------------------------------------------------------------------------

namespace {

// Kuhn's augmenting-path maximum matching for a bipartite adjacency list.
struct BipartiteMatcher {
    const std::vector<std::vector<int>>& adj;  // left -> right lists
    std::vector<int> match_r;                  // right -> left or -1
    std::vector<bool> seen;

    explicit BipartiteMatcher(const std::vector<std::vector<int>>& a, int nr)
        : adj(a), match_r(static_cast<std::size_t>(nr), -1) {}

    bool augment(int l) {
        for (int r : adj[l]) {
            if (!seen[r]) {
                seen[r] = true;
                if (match_r[r] < 0 || augment(match_r[r])) {
                    match_r[r] = l;
                    return true;
                }
            }
        }
        return false;
    }

    int run() {
        int total = 0;
        for (std::size_t l = 0; l < adj.size(); ++l) {
            seen.assign(match_r.size(), false);
            if (augment(static_cast<int>(l))) ++total;
        }
        return total;
    }
};

// All indices of ps lying on the closed segment pq, sorted by distance from p.
std::vector<int> indices_on_segment(const PointSet& ps, const Point& p, const Point& q) {
    std::vector<int> out;
    for (int k = 0; k < ps.size(); ++k) {
        if (ps[k] == p || ps[k] == q || strictly_between(p, ps[k], q)) out.push_back(k);
    }
    auto key = [&](int k) {
        Scalar dx = ps[k].x - p.x, dy = ps[k].y - p.y;
        return Scalar(dx * dx + dy * dy);
    };
    std::sort(out.begin(), out.end(), [&](int i, int j) { return key(i) < key(j); });
    return out;
}

}  // namespace

PencilMatch pencil_matching(const PointSet& ps, int v, int w) {
    if (v == w || v < 0 || w < 0 || v >= ps.size() || w >= ps.size()) {
        throw PreconditionViolated("pencil_matching: need distinct valid indices");
    }
    PencilMatch pm;
    Line vw = Line::through(ps[v], ps[w]);
    std::map<Line, int> lidx, midx;
    std::vector<std::pair<std::pair<int, int>, int>> incidences;  // ((L,M), witness)
    for (int x = 0; x < ps.size(); ++x) {
        if (x == v || x == w || vw.contains(ps[x])) continue;
        Line lv = Line::through(ps[v], ps[x]);
        Line lw = Line::through(ps[w], ps[x]);
        auto [itl, newl] = lidx.try_emplace(lv, static_cast<int>(pm.lines_v.size()));
        if (newl) pm.lines_v.push_back(lv);
        auto [itm, newm] = midx.try_emplace(lw, static_cast<int>(pm.lines_w.size()));
        if (newm) pm.lines_w.push_back(lw);
        incidences.push_back({{itl->second, itm->second}, x});
    }
    std::vector<std::vector<int>> adj(pm.lines_v.size());
    std::map<std::pair<int, int>, int> witness;
    for (auto& [lm, x] : incidences) {
        adj[lm.first].push_back(lm.second);
        witness[lm] = x;  // L and M meet in one point, so the witness is unique
    }
    BipartiteMatcher matcher(adj, static_cast<int>(pm.lines_w.size()));
    matcher.run();
    for (int r = 0; r < static_cast<int>(matcher.match_r.size()); ++r) {
        int l = matcher.match_r[r];
        if (l >= 0) pm.matched.push_back({l, r, witness.at({l, r})});
    }
    std::sort(pm.matched.begin(), pm.matched.end(),
              [](const auto& x, const auto& y) { return std::get<2>(x) < std::get<2>(y); });
    return pm;
}

PathSystem one_bend_paths(const PointSet& ps, int v, int w) {
    if (ps.size() < 2) throw PreconditionViolated("one_bend_paths: need at least 2 points");
    if (v == w || v < 0 || w < 0 || v >= ps.size() || w >= ps.size()) {
        throw PreconditionViolated("one_bend_paths: need distinct valid indices");
    }
    PathSystem sys;
    // Straight polyline along the line vw.
    sys.paths.push_back(indices_on_segment(ps, ps[v], ps[w]));

    // One path per matched pencil witness: straight to the witness, then
    // straight to w. Distinct lines per side keep these edge-disjoint.
    PencilMatch pm = pencil_matching(ps, v, w);
    for (const auto& [li, mi, x] : pm.matched) {
        std::vector<int> leg1 = indices_on_segment(ps, ps[v], ps[x]);
        std::vector<int> leg2 = indices_on_segment(ps, ps[x], ps[w]);
        leg1.insert(leg1.end(), leg2.begin() + 1, leg2.end());
        sys.paths.push_back(std::move(leg1));
    }
    return sys;
}

// ---------------------------------------------------------------------------
// ham_sandwich
// ---------------------------------------------------------------------------

namespace {

bool ham_sandwich_ok(const Line& l, const PointSet& a, const PointSet& b) {
    auto ok_for = [&](const PointSet& s) {
        int lo = 0, hi = 0;
        for (const Point& p : s) {
            int sd = l.side(p);
            if (sd <= 0) ++lo;
            if (sd >= 0) ++hi;
        }
        int need = (s.size() + 1) / 2;
        return lo >= need && hi >= need;
    };
    return ok_for(a) && ok_for(b);
}

}  // namespace

Line ham_sandwich(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty()) throw PreconditionViolated("ham_sandwich: empty class");
    for (const Point& p : a) {
        if (b.contains(p)) throw PreconditionViolated("ham_sandwich: classes must be disjoint");
    }
    PointSet all = union_points(a, b);
    // Some valid cut passes through two of the points: any cut can be
    // translated to a first point and rotated about it to a second without a
    // closed-side count ever dropping.
    for (int i = 0; i < all.size(); ++i) {
        for (int j = i + 1; j < all.size(); ++j) {
            Line l = Line::through(all[i], all[j]);
            if (ham_sandwich_ok(l, a, b)) return l;
        }
    }
    for (int i = 0; i < all.size(); ++i) {
        Line l = Line::normalized(1, 0, all[i].x);  // vertical through the point
        if (ham_sandwich_ok(l, a, b)) return l;
    }
    throw Error("ham_sandwich: no candidate line succeeded");
}

// ---------------------------------------------------------------------------
// join_separated_graphs (the key lemma, realised as exhaustive search)
// ---------------------------------------------------------------------------

std::pair<int, int> join_separated_graphs(const GeomGraph& g1, const GeomGraph& g2) {
    if (g1.edges.empty() || g2.edges.empty()) {
        throw PreconditionViolated("join: both graphs need at least one edge");
    }
    if (!g1.is_properly_coloured() || !g2.is_properly_coloured()) {
        throw PreconditionViolated("join: both graphs must be properly coloured");
    }
    if (!g1.is_noncrossing() || !g2.is_noncrossing()) {
        throw PreconditionViolated("join: both graphs must be non-crossing");
    }
    try {
        separating_line(g1.base, g2.base);
    } catch (const HullsIntersect&) {
        throw PreconditionViolated("join: convex hulls intersect");
    }
    PointSet all = union_points(g1.base, g2.base);
    bool collinear = true;
    for (int k = 2; k < all.size() && collinear; ++k) {
        if (orientation(all[0], all[1], all[k]) != 0) collinear = false;
    }
    if (all.size() >= 2 && collinear) {
        throw PreconditionViolated("join: union of vertex sets is collinear");
    }

    for (int i = 0; i < g1.n(); ++i) {
        for (int j = 0; j < g2.n(); ++j) {
            if (g1.colour[i] == g2.colour[j]) continue;
            const Point& p = g1.base[i];
            const Point& q = g2.base[j];
            bool clean = true;
            for (const Point& x : all) {
                if (x != p && x != q && strictly_between(p, x, q)) {
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (const auto& [u, w] : g1.edges) {
                if (!edges_compatible(p, q, g1.base[u], g1.base[w])) {
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (const auto& [u, w] : g2.edges) {
                if (!edges_compatible(p, q, g2.base[u], g2.base[w])) {
                    clean = false;
                    break;
                }
            }
            if (clean) return {i, j};
        }
    }
    // The lemma guarantees a joining edge whenever the preconditions hold.
    throw Error("join: exhaustive search found no joining edge");
}

// ---------------------------------------------------------------------------
// Shared plumbing for the geometric tree builders
// ---------------------------------------------------------------------------

namespace {

using PEdge = std::pair<Point, Point>;

PEdge make_pedge(const Point& p, const Point& q) { return p < q ? PEdge{p, q} : PEdge{q, p}; }

GeomGraph to_bigraph(const PointSet& a, const PointSet& b, const std::vector<PEdge>& edges) {
    GeomGraph g;
    g.base = union_points(a, b);
    g.colour.assign(static_cast<std::size_t>(g.base.size()), 0);
    for (int i = a.size(); i < g.base.size(); ++i) g.colour[i] = 1;
    std::map<Point, int> idx;
    for (int i = 0; i < g.base.size(); ++i) idx[g.base[i]] = i;
    for (const auto& [p, q] : edges) {
        g.edges.insert(make_edge(idx.at(p), idx.at(q)));
    }
    return g;
}

GeomGraph points_to_geom(const std::vector<Point>& pts, const std::vector<int>& colour,
                         const std::vector<PEdge>& edges) {
    GeomGraph g;
    g.base = PointSet(pts);
    g.colour = colour;
    std::map<Point, int> idx;
    for (int i = 0; i < g.base.size(); ++i) idx[g.base[i]] = i;
    for (const auto& [p, q] : edges) {
        g.edges.insert(make_edge(idx.at(p), idx.at(q)));
    }
    return g;
}

Scalar sq_dist(const Point& p, const Point& q) {
    Scalar dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

// Points of `pool` on the closed segment pq (endpoints included when present),
// sorted from p.
std::vector<Point> points_on_segment(const std::vector<Point>& pool, const Point& p,
                                     const Point& q) {
    std::vector<Point> out;
    for (const Point& x : pool) {
        if (x == p || x == q || strictly_between(p, x, q)) out.push_back(x);
    }
    std::sort(out.begin(), out.end(),
              [&](const Point& s, const Point& t) { return sq_dist(p, s) < sq_dist(p, t); });
    return out;
}

struct Dsu {
    std::map<Point, Point> parent;
    Point find(const Point& x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) {
            parent[x] = x;
            return x;
        }
        Point root = find(it->second);
        parent[x] = root;
        return root;
    }
    bool unite(const Point& x, const Point& y) {
        Point a = find(x), b = find(y);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Recursive core of the line-anchored spanning tree (induction of the
// hull-corner peeling proof). `a_pts` all on `l`, `b_pts` all off it.
std::vector<PEdge> anchored_tree_edges(std::vector<Point> a_pts, std::vector<Point> b_pts,
                                       const Line& l) {
    if (b_pts.size() == 1) {
        std::vector<PEdge> out;
        for (const Point& a : a_pts) out.push_back(make_pedge(a, b_pts[0]));
        return out;
    }

    std::vector<Point> b_pos, b_neg;
    for (const Point& b : b_pts) {
        (l.side(b) > 0 ? b_pos : b_neg).push_back(b);
    }
    if (!b_pos.empty() && !b_neg.empty()) {
        auto e1 = anchored_tree_edges(a_pts, b_pos, l);
        auto e2 = anchored_tree_edges(a_pts, b_neg, l);
        // The union spans and is connected; prune cycles deterministically.
        std::vector<PEdge> all(e1);
        all.insert(all.end(), e2.begin(), e2.end());
        Dsu dsu;
        std::vector<PEdge> out;
        for (const auto& [p, q] : all) {
            if (dsu.unite(p, q)) out.push_back({p, q});
        }
        return out;
    }

    // B entirely on one side: peel the hull-corner ear {a, b}.
    std::sort(a_pts.begin(), a_pts.end());
    Point a = a_pts.front();  // an extreme of A along l, a hull corner

    std::vector<Point> everything(a_pts);
    everything.insert(everything.end(), b_pts.begin(), b_pts.end());
    PointSet all_ps(everything);
    std::vector<int> hull = convex_hull(all_ps);
    int pos = -1;
    for (std::size_t k = 0; k < hull.size(); ++k) {
        if (all_ps[hull[k]] == a) pos = static_cast<int>(k);
    }
    if (pos < 0) throw Error("anchored tree: extreme point missing from hull");
    // The hull neighbour of a off the line l; the nearest set point on that
    // hull edge is a B point visible from a.
    Point corner_prev = all_ps[hull[(pos + hull.size() - 1) % hull.size()]];
    Point corner_next = all_ps[hull[(pos + 1) % hull.size()]];
    Point off = l.contains(corner_next) ? corner_prev : corner_next;
    if (l.contains(off)) throw Error("anchored tree: no off-line hull neighbour");
    std::vector<Point> on_edge = points_on_segment(everything, a, off);
    Point b = on_edge.at(1);  // nearest set point after a itself

    std::vector<Point> ra, rb;
    for (const Point& p : a_pts) {
        if (p != a) ra.push_back(p);
    }
    for (const Point& p : b_pts) {
        if (p != b) rb.push_back(p);
    }
    std::vector<PEdge> rest = anchored_tree_edges(ra, rb, l);

    std::vector<Point> rest_pts(ra);
    rest_pts.insert(rest_pts.end(), rb.begin(), rb.end());
    std::vector<int> rest_col;
    for (std::size_t k = 0; k < ra.size(); ++k) rest_col.push_back(0);
    for (std::size_t k = 0; k < rb.size(); ++k) rest_col.push_back(1);
    GeomGraph g_rest = points_to_geom(rest_pts, rest_col, rest);
    GeomGraph g_ear = points_to_geom({a, b}, {0, 1}, {make_pedge(a, b)});

    auto [ri, ei] = join_separated_graphs(g_rest, g_ear);
    std::vector<PEdge> out(rest);
    out.push_back(make_pedge(a, b));
    out.push_back(make_pedge(g_rest.base[ri], g_ear.base[ei]));
    return out;
}

}  // namespace

GeomGraph line_anchored_tree(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty() || a.size() < b.size()) {
        throw PreconditionViolated("line_anchored_tree: need |A| >= |B| >= 1");
    }
    if (a.size() == 1) {
        // |B| = 1 as well; the single cross edge is the tree.
        return to_bigraph(a, b, {make_pedge(a[0], b[0])});
    }
    Line l = Line::through(a[0], a[1]);
    for (const Point& p : a) {
        if (!l.contains(p)) throw PreconditionViolated("line_anchored_tree: A not collinear");
    }
    for (const Point& p : b) {
        if (l.contains(p)) throw PreconditionViolated("line_anchored_tree: B touches the line");
    }
    std::vector<Point> av(a.begin(), a.end()), bv(b.begin(), b.end());
    return to_bigraph(a, b, anchored_tree_edges(av, bv, l));
}

// ---------------------------------------------------------------------------
// large_noncrossing_subgraph (ham-sandwich recursion)
// ---------------------------------------------------------------------------

namespace {

struct BiInstance {
    std::vector<Point> a;
    std::vector<Point> b;

    std::vector<Point> all() const {
        std::vector<Point> out(a);
        out.insert(out.end(), b.begin(), b.end());
        return out;
    }
    bool in_a(const Point& p) const { return std::find(a.begin(), a.end(), p) != a.end(); }
};

bool all_collinear(const std::vector<Point>& pts) {
    for (std::size_t k = 2; k < pts.size(); ++k) {
        if (orientation(pts[0], pts[1], pts[k]) != 0) return false;
    }
    return pts.size() >= 2;
}

bool compatible_with_all(const PEdge& e, const std::vector<PEdge>& edges) {
    for (const auto& [p, q] : edges) {
        if (!edges_compatible(e.first, e.second, p, q)) return false;
    }
    return true;
}

// Replace an edge by its first bichromatic consecutive sub-pair along the
// segment, judged against the instance's full point set. Identity for edges
// that are already unblocked.
PEdge globalize_edge(const BiInstance& inst, const std::vector<Point>& pool, const PEdge& e) {
    std::vector<Point> on = points_on_segment(pool, e.first, e.second);
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
        if (inst.in_a(on[k]) != inst.in_a(on[k + 1])) return make_pedge(on[k], on[k + 1]);
    }
    throw Error("globalize_edge: no bichromatic consecutive pair on segment");
}

std::vector<PEdge> globalize(const BiInstance& inst, const std::vector<PEdge>& edges) {
    std::vector<Point> pool = inst.all();
    std::set<PEdge> seen;
    std::vector<PEdge> out;
    for (const PEdge& e : edges) {
        PEdge g = globalize_edge(inst, pool, e);
        if (seen.insert(g).second) out.push_back(g);
    }
    return out;
}

// Visible bichromatic pairs of the instance, in deterministic order.
std::vector<PEdge> all_bivis_edges(const BiInstance& inst) {
    std::vector<Point> pool = inst.all();
    std::vector<PEdge> out;
    for (const Point& p : inst.a) {
        for (const Point& q : inst.b) {
            bool vis = true;
            for (const Point& x : pool) {
                if (x != p && x != q && strictly_between(p, x, q)) {
                    vis = false;
                    break;
                }
            }
            if (vis) out.push_back(make_pedge(p, q));
        }
    }
    return out;
}

void grow_to(const BiInstance& inst, std::vector<PEdge>& edges, std::size_t target) {
    if (edges.size() >= target) return;
    std::vector<PEdge> candidates = all_bivis_edges(inst);
    for (const PEdge& c : candidates) {
        if (edges.size() >= target) return;
        if (std::find(edges.begin(), edges.end(), c) != edges.end()) continue;
        if (compatible_with_all(c, edges)) edges.push_back(c);
    }
    if (edges.size() < target) {
        throw Error("non-crossing subgraph fell short of its guaranteed size");
    }
}

// Position of p along the line direction (used for "left to right" on a line).
Scalar along(const Line& l, const Point& p) {
    return Scalar(-l.b) * p.x + Scalar(l.a) * p.y;
}

// First consecutive bichromatic pair along the line's point sequence that is
// compatible with the current edges.
std::optional<PEdge> edge_along_line(const BiInstance& inst, const Line& l,
                                     const std::vector<PEdge>& edges) {
    std::vector<Point> on;
    for (const Point& p : inst.all()) {
        if (l.contains(p)) on.push_back(p);
    }
    std::sort(on.begin(), on.end(),
              [&](const Point& p, const Point& q) { return along(l, p) < along(l, q); });
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
        if (inst.in_a(on[k]) != inst.in_a(on[k + 1])) {
            PEdge e = make_pedge(on[k], on[k + 1]);
            if (compatible_with_all(e, edges)) return e;
        }
    }
    return std::nullopt;
}

std::vector<PEdge> lns_rec(const BiInstance& inst);

// Case (i): some line l carries at least n points of the union.
std::vector<PEdge> lns_line_heavy(const BiInstance& inst, const Line& l) {
    const std::size_t n = inst.a.size();
    std::vector<Point> a0, a1, b0, b1;
    for (const Point& p : inst.a) {
        (l.contains(p) ? a0 : a1).push_back(p);
    }
    for (const Point& p : inst.b) {
        (l.contains(p) ? b0 : b1).push_back(p);
    }
    if (a0.size() < b0.size()) {
        std::swap(a0, b0);
        std::swap(a1, b1);
    }

    std::vector<PEdge> edges;
    if (a0.size() > b0.size()) {
        edges = globalize(inst, anchored_tree_edges(a0, b1, l));
        if (edges.size() < n + 1) {
            if (auto e = edge_along_line(inst, l, edges)) edges.push_back(*e);
        }
        grow_to(inst, edges, n + 1);
        return edges;
    }

    // |A0| = |B0|, both nonempty.
    std::vector<Point> b1_pos, b1_neg, a1_pos, a1_neg;
    for (const Point& p : b1) {
        (l.side(p) > 0 ? b1_pos : b1_neg).push_back(p);
    }
    for (const Point& p : a1) {
        (l.side(p) > 0 ? a1_pos : a1_neg).push_back(p);
    }
    bool pos_mixed = !a1_pos.empty() && !b1_pos.empty();
    bool neg_mixed = !a1_neg.empty() && !b1_neg.empty();

    if (!pos_mixed && !neg_mixed) {
        // l separates A1 from B1: anchored trees on both sides plus one edge on l.
        edges = globalize(inst, anchored_tree_edges(a0, b1, l));
        auto other = globalize(inst, anchored_tree_edges(b0, a1, l));
        edges.insert(edges.end(), other.begin(), other.end());
        if (auto e = edge_along_line(inst, l, edges)) edges.push_back(*e);
        grow_to(inst, edges, n + 1);
        return edges;
    }

    // A half-plane holds points of both A1 and B1: anchored tree from the side
    // whose farthest off-line point wins, one edge on l, and one more along
    // the far-point segment.
    auto dist_key = [&](const Point& p) {
        Scalar v = Scalar(l.a) * p.x + Scalar(l.b) * p.y - Scalar(l.c);
        return v < 0 ? Scalar(-v) : v;
    };
    auto farthest = [&](const std::vector<Point>& pts) {
        Point best = pts.front();
        for (const Point& p : pts) {
            Scalar dp = dist_key(p), db = dist_key(best);
            if (dp > db || (dp == db && p < best)) best = p;
        }
        return best;
    };
    const std::vector<Point>& side_a1 = pos_mixed ? a1_pos : a1_neg;
    const std::vector<Point>& side_b1 = pos_mixed ? b1_pos : b1_neg;
    Point far_a = farthest(side_a1);
    Point far_b = farthest(side_b1);

    if (dist_key(far_a) >= dist_key(far_b)) {
        edges = globalize(inst, anchored_tree_edges(a0, b1, l));
    } else {
        edges = globalize(inst, anchored_tree_edges(b0, a1, l));
    }
    if (auto e = edge_along_line(inst, l, edges)) edges.push_back(*e);
    // The far-point segment contains a bichromatic consecutive pair that the
    // anchored edges cannot cross.
    std::vector<Point> on_far = points_on_segment(inst.all(), far_a, far_b);
    for (std::size_t k = 0; k + 1 < on_far.size(); ++k) {
        if (inst.in_a(on_far[k]) != inst.in_a(on_far[k + 1])) {
            PEdge e = make_pedge(on_far[k], on_far[k + 1]);
            if (std::find(edges.begin(), edges.end(), e) == edges.end() &&
                compatible_with_all(e, edges)) {
                edges.push_back(e);
                break;
            }
        }
    }
    grow_to(inst, edges, n + 1);
    return edges;
}

// Case (ii): ham-sandwich split with overlap-aware on-line assignment.
std::vector<PEdge> lns_split(const BiInstance& inst) {
    const std::size_t n = inst.a.size();
    Line h = ham_sandwich(PointSet(inst.a), PointSet(inst.b));
    const std::size_t half = (n + 1) / 2;

    // Each of A+, A-, B+, B- receives exactly ceil(n/2) points; for odd n one
    // point of each class sits in both halves.
    auto split_class = [&](const std::vector<Point>& pts, bool leftmost_up) {
        std::vector<Point> up, down, on;
        for (const Point& p : pts) {
            int s = h.side(p);
            if (s > 0) up.push_back(p);
            else if (s < 0) down.push_back(p);
            else on.push_back(p);
        }
        std::sort(on.begin(), on.end(), [&](const Point& p, const Point& q) {
            return along(h, p) < along(h, q);
        });
        std::size_t need_up = half - up.size();
        std::size_t need_down = half - down.size();
        for (std::size_t k = 0; k < on.size(); ++k) {
            bool to_up;
            if (leftmost_up) to_up = k < need_up;
            else to_up = k >= on.size() - need_up;
            if (to_up) up.push_back(on[k]);
            bool to_down;
            if (leftmost_up) to_down = k >= on.size() - need_down;
            else to_down = k < need_down;
            if (to_down) down.push_back(on[k]);
        }
        return std::pair{up, down};
    };
    auto [a_up, a_down] = split_class(inst.a, true);
    auto [b_up, b_down] = split_class(inst.b, false);

    BiInstance up{a_up, b_up}, down{a_down, b_down};
    std::vector<PEdge> e_up = lns_rec(up);
    std::vector<PEdge> e_down = lns_rec(down);

    // Drop the edges lying on h from both halves, merge, then re-add every
    // compatible consecutive bichromatic pair along h; by the assignment rule
    // one half loses at most one edge this way.
    std::set<PEdge> merged;
    auto on_h = [&](const PEdge& e) { return h.contains(e.first) && h.contains(e.second); };
    for (const PEdge& e : e_up) {
        if (!on_h(e)) merged.insert(e);
    }
    for (const PEdge& e : e_down) {
        if (!on_h(e)) merged.insert(e);
    }
    std::vector<PEdge> edges(merged.begin(), merged.end());
    while (true) {
        auto e = edge_along_line(inst, h, edges);
        if (!e || std::find(edges.begin(), edges.end(), *e) != edges.end()) break;
        edges.push_back(*e);
    }
    grow_to(inst, edges, n + 1);
    return edges;
}

std::vector<PEdge> lns_rec(const BiInstance& inst) {
    const std::size_t n = inst.a.size();
    if (n < 2) throw Error("lns_rec: instance too small");
    if (n == 2) {
        // Brute force the best pairwise-compatible subset of the (at most
        // four) bichromatic visible pairs; a triangulation argument puts the
        // optimum at three or more.
        std::vector<PEdge> cand = all_bivis_edges(inst);
        std::vector<PEdge> best;
        for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
            std::vector<PEdge> pick;
            for (std::size_t k = 0; k < cand.size(); ++k) {
                if ((mask >> k) & 1u) pick.push_back(cand[k]);
            }
            bool ok = true;
            for (std::size_t i = 0; i < pick.size() && ok; ++i) {
                for (std::size_t j = i + 1; j < pick.size(); ++j) {
                    if (!edges_compatible(pick[i].first, pick[i].second, pick[j].first,
                                          pick[j].second)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok && pick.size() > best.size()) best = pick;
        }
        if (best.size() < n + 1) throw Error("lns_rec: base case below three edges");
        return best;
    }

    // Heaviest line of the union decides the case split.
    std::vector<Point> pool = inst.all();
    PointSet ps(pool);
    std::size_t heaviest = 0;
    Line heavy_line = Line::normalized(1, 0, 0);
    for (int i = 0; i < ps.size(); ++i) {
        for (int j = i + 1; j < ps.size(); ++j) {
            Line l = Line::through(ps[i], ps[j]);
            std::size_t cnt = 0;
            for (const Point& p : pool) {
                if (l.contains(p)) ++cnt;
            }
            if (cnt > heaviest) {
                heaviest = cnt;
                heavy_line = l;
            }
        }
    }
    if (heaviest >= n) return lns_line_heavy(inst, heavy_line);
    return lns_split(inst);
}

}  // namespace

GeomGraph large_noncrossing_subgraph(const PointSet& a, const PointSet& b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw PreconditionViolated("large_noncrossing_subgraph: need |A| = |B| >= 2");
    }
    std::vector<Point> av(a.begin(), a.end()), bv(b.begin(), b.end());
    BiInstance inst{av, bv};
    if (all_collinear(inst.all())) {
        throw PreconditionViolated("large_noncrossing_subgraph: union is collinear");
    }
    return to_bigraph(a, b, lns_rec(inst));
}

// ---------------------------------------------------------------------------
// ray_cover_forest (disjoint segment cover)
// ---------------------------------------------------------------------------

namespace {

// Reduced integer direction, sign preserved (directed rays).
struct Dir {
    Integer x;
    Integer y;

    bool operator==(const Dir& o) const { return x == o.x && y == o.y; }
    bool operator<(const Dir& o) const { return x < o.x || (x == o.x && y < o.y); }
};

Dir direction(const Point& from, const Point& to) {
    Scalar dx = to.x - from.x, dy = to.y - from.y;
    Integer l = lcm(denominator(dx), denominator(dy));
    Integer ix = numerator(Scalar(dx * l)), iy = numerator(Scalar(dy * l));
    Integer g = gcd(abs(ix), abs(iy));
    if (g != 0) {
        ix /= g;
        iy /= g;
    }
    return {ix, iy};
}

Integer cross(const Dir& a, const Dir& b) { return a.x * b.y - a.y * b.x; }

// Strict angular order starting at the positive x-axis, counterclockwise.
bool angle_less(const Dir& a, const Dir& b) {
    auto half = [](const Dir& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

}  // namespace

GeomGraph ray_cover_forest(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty()) {
        throw PreconditionViolated("ray_cover_forest: both classes must be nonempty");
    }
    std::vector<Point> av(a.begin(), a.end()), bv(b.begin(), b.end());
    BiInstance inst{av, bv};
    std::vector<Point> pool = inst.all();

    Point seed = *std::min_element(av.begin(), av.end());

    // Group every other point by its directed ray from the seed.
    std::map<Dir, std::vector<Point>> groups;
    for (const Point& p : pool) {
        if (p == seed) continue;
        groups[direction(seed, p)].push_back(p);
    }
    for (auto& [d, pts] : groups) {
        std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
            return sq_dist(seed, p) < sq_dist(seed, q);
        });
    }

    std::vector<Dir> ray_dirs;
    for (const auto& [d, pts] : groups) {
        for (const Point& p : pts) {
            if (!inst.in_a(p)) {
                ray_dirs.push_back(d);
                break;
            }
        }
    }
    std::sort(ray_dirs.begin(), ray_dirs.end(), angle_less);
    const int k = static_cast<int>(ray_dirs.size());

    std::set<PEdge> edges;

    // Ray elements: consecutive bichromatic pairs along [seed, members...].
    for (const Dir& d : ray_dirs) {
        const auto& pts = groups.at(d);
        Point prev = seed;
        bool prev_in_a = true;
        for (const Point& p : pts) {
            bool p_in_a = inst.in_a(p);
            if (p_in_a != prev_in_a) edges.insert(make_pedge(prev, p));
            prev = p;
            prev_in_a = p_in_a;
        }
    }

    // Anchor of each ray: its nearest B point.
    std::vector<Point> anchors;
    for (const Dir& d : ray_dirs) {
        for (const Point& p : groups.at(d)) {
            if (!inst.in_a(p)) {
                anchors.push_back(p);
                break;
            }
        }
    }

    // Sector elements: every off-ray point lies strictly between two
    // consecutive B-rays and is assigned an anchor; wide sectors are split at
    // the direction opposite their counterclockwise start.
    std::map<std::pair<Point, Dir>, std::vector<Point>> segments;  // (anchor, dir from anchor)
    for (const auto& [d, pts] : groups) {
        if (std::binary_search(ray_dirs.begin(), ray_dirs.end(), d, angle_less)) continue;
        // Predecessor ray in cyclic angular order.
        int lo = 0;
        {
            int idx = static_cast<int>(
                std::upper_bound(ray_dirs.begin(), ray_dirs.end(), d, angle_less) -
                ray_dirs.begin());
            lo = (idx + k - 1) % k;
        }
        int hi = (lo + 1) % k;
        const Dir& start = ray_dirs[lo];
        const Dir& end = ray_dirs[hi];
        // Counterclockwise span from start to end exceeds pi iff the turn is
        // clockwise or the rays are identical (single-ray full circle).
        Integer c = cross(start, end);
        bool wide = (k == 1) || c < 0;
        Point anchor;
        if (!wide) {
            anchor = anchors[hi];
        } else {
            // Span from start up to and including the opposite of start goes
            // to the start anchor; the rest to the end anchor. Points exactly
            // opposite the start ray would be collinear with a same-line
            // anchor, so they join the end piece (and are skipped entirely in
            // the single-ray case, where the line element already holds an edge).
            Integer cs = cross(start, d);
            Integer dot = start.x * d.x + start.y * d.y;
            bool opposite = (cs == 0 && dot < 0);
            if (opposite) {
                if (k == 1) continue;
                anchor = anchors[hi];
            } else if (cs > 0) {
                anchor = anchors[lo];
            } else {
                anchor = anchors[hi];
            }
        }
        for (const Point& p : pts) {
            segments[{anchor, direction(anchor, p)}].push_back(p);
        }
    }
    for (auto& [key, pts] : segments) {
        const Point& anchor = key.first;
        Point nearest = pts.front();
        for (const Point& p : pts) {
            if (sq_dist(anchor, p) < sq_dist(anchor, nearest)) nearest = p;
        }
        edges.insert(make_pedge(anchor, nearest));
    }

    return to_bigraph(a, b, std::vector<PEdge>(edges.begin(), edges.end()));
}

// ---------------------------------------------------------------------------
// noncrossing_spanning_tree (at most 3 per AB-line)
// ---------------------------------------------------------------------------

namespace {

std::vector<PEdge> nst_rec(const std::vector<Point>& a_pts, const std::vector<Point>& b_pts) {
    const std::size_t n = a_pts.size();
    if (n == 1) return {make_pedge(a_pts[0], b_pts[0])};

    Line h = ham_sandwich(PointSet(a_pts), PointSet(b_pts));
    const std::size_t up_n = (n + 1) / 2;

    struct OnPoint {
        Point p;
        bool in_a;
        bool up;
    };

    auto classify = [&](const std::vector<Point>& pts, bool leftmost_up, std::vector<Point>& up,
                        std::vector<Point>& down, std::vector<OnPoint>& on_all) {
        std::vector<Point> on;
        for (const Point& p : pts) {
            int s = h.side(p);
            if (s > 0) up.push_back(p);
            else if (s < 0) down.push_back(p);
            else on.push_back(p);
        }
        std::sort(on.begin(), on.end(), [&](const Point& p, const Point& q) {
            return along(h, p) < along(h, q);
        });
        std::size_t need_up = up_n - up.size();
        for (std::size_t k = 0; k < on.size(); ++k) {
            bool to_up = leftmost_up ? (k < need_up) : (k >= on.size() - need_up);
            on_all.push_back({on[k], leftmost_up, to_up});
        }
    };

    std::vector<Point> a_up, a_down, b_up, b_down;
    std::vector<OnPoint> on_pts;
    classify(a_pts, true, a_up, a_down, on_pts);
    classify(b_pts, false, b_up, b_down, on_pts);
    std::sort(on_pts.begin(), on_pts.end(),
              [&](const OnPoint& x, const OnPoint& y) { return along(h, x.p) < along(h, y.p); });

    auto alternations = [&]() {
        int alt = 0;
        for (std::size_t k = 0; k + 1 < on_pts.size(); ++k) {
            if (on_pts[k].up != on_pts[k + 1].up) ++alt;
        }
        return alt;
    };

    bool figure5 = false;
    if (alternations() >= 2) {
        // Both classes sit on h, so h is an AB-line with exactly three points.
        if (on_pts.size() != 3) throw Error("nst: unexpected on-line configuration");
        if (on_pts[0].in_a == on_pts[1].in_a) {
            std::swap(on_pts[0].up, on_pts[1].up);
        } else if (on_pts[1].in_a == on_pts[2].in_a) {
            std::swap(on_pts[1].up, on_pts[2].up);
        } else {
            figure5 = true;  // lone-class point between the other two
        }
    }

    // Rebuild the on-line assignment into the four groups.
    for (const OnPoint& op : on_pts) {
        auto& vec = op.in_a ? (op.up ? a_up : a_down) : (op.up ? b_up : b_down);
        vec.push_back(op.p);
    }

    std::vector<PEdge> e_up = nst_rec(a_up, b_up);
    std::vector<PEdge> e_down = nst_rec(a_down, b_down);
    std::vector<PEdge> out(e_up);
    out.insert(out.end(), e_down.begin(), e_down.end());

    if (!figure5) {
        std::vector<int> col_up, col_down;
        std::vector<Point> up_pts(a_up);
        up_pts.insert(up_pts.end(), b_up.begin(), b_up.end());
        for (std::size_t i = 0; i < a_up.size(); ++i) col_up.push_back(0);
        for (std::size_t i = 0; i < b_up.size(); ++i) col_up.push_back(1);
        std::vector<Point> down_pts(a_down);
        down_pts.insert(down_pts.end(), b_down.begin(), b_down.end());
        for (std::size_t i = 0; i < a_down.size(); ++i) col_down.push_back(0);
        for (std::size_t i = 0; i < b_down.size(); ++i) col_down.push_back(1);
        GeomGraph g_up = points_to_geom(up_pts, col_up, e_up);
        GeomGraph g_down = points_to_geom(down_pts, col_down, e_down);
        auto [i, j] = join_separated_graphs(g_up, g_down);
        out.push_back(make_pedge(g_up.base[i], g_down.base[j]));
    } else {
        // The two subtrees have no edge on h; the middle on-line point joins
        // its left neighbour along h.
        out.push_back(make_pedge(on_pts[0].p, on_pts[1].p));
    }
    return out;
}

}  // namespace

GeomGraph noncrossing_spanning_tree(const PointSet& a, const PointSet& b) {
    if (a.size() != b.size() || a.empty()) {
        throw PreconditionViolated("noncrossing_spanning_tree: need |A| = |B| >= 1");
    }
    if (a.size() + b.size() > 2 && max_collinear_ab(a, b) > 3) {
        throw PreconditionViolated("noncrossing_spanning_tree: more than 3 points on an AB-line");
    }
    std::vector<Point> av(a.begin(), a.end()), bv(b.begin(), b.end());
    return to_bigraph(a, b, nst_rec(av, bv));
}

}  // namespace visconn
