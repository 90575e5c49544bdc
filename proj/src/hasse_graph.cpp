#include "hasse/hasse_graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace hasse {

VertexKey vertex_key(const IncidenceStructure& s, std::pair<int, int> incidence) {
    const Point& p = s.points[incidence.first];
    const Line& l = s.lines[incidence.second];
    return VertexKey{p.x, p.y, l.slope, l.intercept};
}

OrderedGraph build_hasse_graph(const IncidenceStructure& s) {
    const int n = static_cast<int>(s.incidences.size());
    // Canonical structures list incidences sorted by (point, line) index,
    // which coincides with the VertexKey order because points and lines are
    // themselves lex-sorted.
    for (int v = 1; v < n; ++v)
        assert(vertex_key(s, s.incidences[v - 1]) < vertex_key(s, s.incidences[v]));

    std::vector<std::vector<int>> lines_of(s.points.size()), points_on(s.lines.size());
    for (auto [pi, li] : s.incidences) {
        lines_of[pi].push_back(li);
        points_on[li].push_back(pi);
    }
    // vertex id lookup: incidences are grouped by point, lines ascending
    std::vector<int> first_vertex(s.points.size() + 1, 0);
    {
        int v = 0;
        for (int pi = 0; pi < static_cast<int>(s.points.size()); ++pi) {
            first_vertex[pi] = v;
            v += static_cast<int>(lines_of[pi].size());
        }
        first_vertex[s.points.size()] = v;
    }
    auto vertex_id = [&](int pi, int li) {
        const auto& ls = lines_of[pi];
        auto it = std::lower_bound(ls.begin(), ls.end(), li);
        assert(it != ls.end() && *it == li);
        return first_vertex[pi] + static_cast<int>(it - ls.begin());
    };

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        auto [pi2, li2] = s.incidences[v];
        const Point& p2 = s.points[pi2];
        const Line& l2 = s.lines[li2];
        for (int li : lines_of[pi2]) {
            if (!(s.lines[li].slope < l2.slope)) continue;
            for (int pi : points_on[li]) {
                if (s.points[pi].x < p2.x) edges.emplace_back(vertex_id(pi, li), v);
            }
        }
    }
    OrderedGraph g;
    g.graph = Graph(n, std::move(edges));
    g.labels = s.incidences;
    return g;
}

namespace {

// forward neighbors = neighbors with a larger index
std::vector<std::vector<int>> forward_adjacency(const Graph& g) {
    std::vector<std::vector<int>> fwd(g.num_vertices());
    for (auto [u, v] : g.edges()) fwd[u].push_back(v);
    return fwd;
}

// reach_star(v) = {v} plus everything reachable from v along forward edges
BitMatrix reach_star(const Graph& g, const std::vector<std::vector<int>>& fwd) {
    const int n = g.num_vertices();
    BitMatrix r(n);
    for (int v = n - 1; v >= 0; --v) {
        r.set(v, v);
        for (int w : fwd[v]) r.or_row(v, w);
    }
    return r;
}

// shortest forward path u -> ... -> w that does not start with the direct
// edge; returns the full vertex sequence
std::vector<int> shortest_violating_path(const std::vector<std::vector<int>>& fwd, int u, int w) {
    std::vector<int> parent(fwd.size(), -1);
    std::queue<int> q;
    for (int x : fwd[u]) {
        if (x == w) continue;
        if (parent[x] == -1) {
            parent[x] = u;
            q.push(x);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == w) break;
        for (int x : fwd[v])
            if (parent[x] == -1) {
                parent[x] = v;
                q.push(x);
            }
    }
    std::vector<int> path;
    for (int v = w; v != -1; v = v == u ? -1 : parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

MonotoneCycleCertificate verify_no_monotone_cycle(const OrderedGraph& g) {
    const auto fwd = forward_adjacency(g.graph);
    const BitMatrix reach = reach_star(g.graph, fwd);
    for (auto [u, w] : g.graph.edges()) {
        for (int x : fwd[u]) {
            if (x == w || !reach.test(x, w)) continue;
            MonotoneCycleCertificate cert;
            cert.pass = false;
            cert.witness = shortest_violating_path(fwd, u, w);
            assert(cert.witness.size() >= 3 && cert.witness.front() == u && cert.witness.back() == w);
            return cert;
        }
    }
    return {};
}

PosetClosure to_poset(const OrderedGraph& g) {
    const auto cert = verify_no_monotone_cycle(g);
    if (!cert.pass)
        throw std::invalid_argument("graph contains a monotone cycle under its order; not presented as a Hasse diagram");

    const int n = g.graph.num_vertices();
    const auto fwd = forward_adjacency(g.graph);

    PosetClosure pc;
    pc.n = n;
    pc.less = BitMatrix(n);
    // strict reachability, built in reverse index order (index order is
    // topological for the forward orientation)
    for (int u = n - 1; u >= 0; --u)
        for (int w : fwd[u]) {
            pc.less.set(u, w);
            pc.less.or_row(u, w);
        }

    // covers(u) = reachable(u) minus anything reachable through an intermediate
    for (int u = 0; u < n; ++u) {
        std::vector<int> rch;
        pc.less.for_each_in_row(u, [&](int z) { rch.push_back(z); });
        std::vector<bool> twohop(n, false);
        for (int z : rch)
            pc.less.for_each_in_row(z, [&](int w) { twohop[w] = true; });
        for (int w : rch)
            if (!twohop[w]) pc.covers.emplace_back(u, w);
    }
    std::sort(pc.covers.begin(), pc.covers.end());
    return pc;
}

OrderedGraph shift_graph(int n) {
    if (n < 2) throw std::invalid_argument("shift_graph requires n >= 2");
    OrderedGraph g;
    std::vector<std::vector<int>> id(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            id[i][j] = static_cast<int>(g.labels.size());
            g.labels.emplace_back(i, j);
        }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) edges.emplace_back(id[i][j], id[j][k]);
    g.graph = Graph(static_cast<int>(g.labels.size()), std::move(edges));
    return g;
}

}  // namespace hasse
