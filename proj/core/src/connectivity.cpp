#include "visconn/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace visconn {

DegreeStats degree_stats(const Graph& g) {
    if (g.n() < 1) throw PreconditionViolated("degree_stats: empty graph");
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    for (const auto& [i, j] : g.edges()) {
        ++deg[i];
        ++deg[j];
    }
    return {*std::min_element(deg.begin(), deg.end()), deg};
}

std::optional<int> diameter(const Graph& g) {
    if (g.n() < 1) throw PreconditionViolated("diameter: empty graph");
    auto adj = g.adjacency();
    int diam = 0;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
            }
        }
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

namespace {

// Unit-capacity max-flow (BFS augmenting paths) on a directed residual graph.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int n) : arcs(static_cast<std::size_t>(n)) {}

    void add(int u, int v, int cap) {
        arcs[u].push_back({v, cap, static_cast<int>(arcs[v].size())});
        arcs[v].push_back({u, 0, static_cast<int>(arcs[u].size()) - 1});
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (true) {
            std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
            std::queue<int> q;
            q.push(s);
            pred[s] = {s, -1};
            while (!q.empty() && pred[t].first < 0) {
                int u = q.front();
                q.pop();
                for (int k = 0; k < static_cast<int>(arcs[u].size()); ++k) {
                    const Arc& a = arcs[u][k];
                    if (a.cap > 0 && pred[a.to].first < 0) {
                        pred[a.to] = {u, k};
                        q.push(a.to);
                    }
                }
            }
            if (pred[t].first < 0) return flow;
            for (int v = t; v != s;) {
                auto [u, k] = pred[v];
                arcs[u][k].cap -= 1;
                arcs[v][arcs[u][k].rev].cap += 1;
                v = u;
            }
            ++flow;
        }
    }
};

int edge_flow(const Graph& g, int s, int t) {
    FlowNet net(g.n());
    for (const auto& [i, j] : g.edges()) {
        net.add(i, j, 1);
        net.add(j, i, 1);
    }
    return net.max_flow(s, t);
}

// Vertex-split network: each vertex v becomes in-node v and out-node v+n with
// unit internal capacity (infinite for the terminals).
int vertex_flow(const Graph& g, int s, int t) {
    const int n = g.n();
    const int inf = std::numeric_limits<int>::max() / 2;
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v) {
        net.add(v, v + n, (v == s || v == t) ? inf : 1);
    }
    for (const auto& [i, j] : g.edges()) {
        net.add(i + n, j, inf);
        net.add(j + n, i, inf);
    }
    return net.max_flow(s, t + n);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw PreconditionViolated("vertex_connectivity: need n >= 2");
    int best = n - 1;  // complete-graph value, by Menger
    bool any_nonadjacent = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) {
                any_nonadjacent = true;
                best = std::min(best, vertex_flow(g, i, j));
            }
        }
    }
    return any_nonadjacent ? best : n - 1;
}

int edge_connectivity(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw PreconditionViolated("edge_connectivity: need n >= 2");
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < n; ++t) {
        best = std::min(best, edge_flow(g, 0, t));
    }
    return best;
}

std::vector<CutRecord> min_edge_cuts_by_bipartition(const Graph& g) {
    const int n = g.n();
    if (n > 20) throw TooLarge("min_edge_cuts_by_bipartition: n > 20");
    if (n < 2) throw PreconditionViolated("min_edge_cuts_by_bipartition: need n >= 2");
    if (!diameter(g).has_value()) {
        throw PreconditionViolated("min_edge_cuts_by_bipartition: graph must be connected");
    }

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    int best = std::numeric_limits<int>::max();
    std::vector<CutRecord> records;
    // Vertex 0 pinned to one side; masks run over the remaining n-1 vertices.
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<bool> in_side(static_cast<std::size_t>(n), false);
        for (int v = 1; v < n; ++v) {
            in_side[v] = (mask >> (v - 1)) & 1u;
        }
        std::vector<Edge> cut;
        for (const Edge& e : edges) {
            if (in_side[e.first] != in_side[e.second]) cut.push_back(e);
        }
        int sz = static_cast<int>(cut.size());
        if (sz > best) continue;
        std::vector<int> side, other;
        for (int v = 0; v < n; ++v) {
            (in_side[v] ? side : other).push_back(v);
        }
        if (other.size() < side.size() || (other.size() == side.size() && other < side)) {
            side.swap(other);
        }
        if (sz < best) {
            best = sz;
            records.clear();
        }
        records.push_back(CutRecord{std::move(side), std::move(cut), sz});
    }
    // Deterministic order: by recorded side, ascending.
    std::sort(records.begin(), records.end(),
              [](const CutRecord& x, const CutRecord& y) { return x.side < y.side; });
    return records;
}

namespace {

bool is_partition(int n, const std::vector<int>& a, const std::vector<int>& b,
                  const std::vector<int>& c) {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto* part : {&a, &b, &c}) {
        for (int v : *part) {
            if (v < 0 || v >= n) return false;
            if (seen[v]++) return false;
        }
    }
    return a.size() + b.size() + c.size() == static_cast<std::size_t>(n);
}

}  // namespace

bool check_deltacut_structure(const Graph& g, const std::vector<int>& a,
                              const std::vector<int>& b, const std::vector<int>& c) {
    if (!is_partition(g.n(), a, b, c)) throw NotAPartition();
    if (a.empty()) throw NotAPartition("check_deltacut_structure: A must be nonempty");
    const int delta = degree_stats(g).min_degree;

    // G[A] complete of size delta, |B ∪ C| >= delta.
    if (static_cast<int>(a.size()) != delta) return false;
    if (static_cast<int>(b.size() + c.size()) < delta) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (!g.has_edge(a[i], a[j])) return false;
        }
    }
    // Each A-vertex: exactly one neighbour in B, none in C.
    for (int v : a) {
        int in_b = 0;
        for (int u : b) {
            if (g.has_edge(v, u)) ++in_b;
        }
        for (int u : c) {
            if (g.has_edge(v, u)) return false;
        }
        if (in_b != 1) return false;
    }
    // Each B-vertex has a neighbour in A.
    for (int v : b) {
        bool any = false;
        for (int u : a) {
            if (g.has_edge(v, u)) {
                any = true;
                break;
            }
        }
        if (!any) return false;
    }
    // B x C complete.
    for (int v : b) {
        for (int u : c) {
            if (!g.has_edge(v, u)) return false;
        }
    }
    return true;
}

bool verify_separator(const Graph& g, const SeparatorPartition& part) {
    if (!is_partition(g.n(), part.a, part.b, part.c)) return false;
    if (part.a.empty() || part.b.empty()) return false;
    for (int u : part.a) {
        for (int v : part.b) {
            if (g.has_edge(u, v)) return false;
        }
    }
    return true;
}

}  // namespace visconn
