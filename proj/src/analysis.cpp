#include "hasse/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

#include "hasse/cycles.hpp"
#include "hasse/errors.hpp"
#include "hasse/hasse_graph.hpp"

namespace hasse {

BipartiteIncidenceGraph bipartite_graph(const IncidenceStructure& s) {
    BipartiteIncidenceGraph b;
    b.num_points = static_cast<int>(s.points.size());
    b.num_lines = static_cast<int>(s.lines.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(s.incidences.size());
    for (auto [pi, li] : s.incidences) edges.emplace_back(pi, b.num_points + li);
    b.graph = Graph(b.num_points + b.num_lines, std::move(edges));
    return b;
}

TriangleCheck is_triangle_free(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        // sorted lists: one pass over both
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] == nv[j]) {
                TriangleCheck t;
                t.triangle_free = false;
                t.witness = {u, v, nu[i]};
                std::sort(t.witness.begin(), t.witness.end());
                return t;
            }
            nu[i] < nv[j] ? ++i : ++j;
        }
    }
    return {};
}

GirthResult girth(const Graph& g) {
    const int n = g.num_vertices();
    int best = -1;
    int best_root = -1, best_u = -1, best_w = -1;
    std::vector<int> dist(n), parent(n);

    for (int root = 0; root < n; ++root) {
        if (g.degree(root) < 2) continue;  // not on any cycle
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            if (best >= 0 && 2 * dist[u] >= best) break;  // can't improve from here
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    // closed walk through root; its length bounds a cycle
                    const int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) {
                        best = len;
                        best_root = root;
                        best_u = u;
                        best_w = w;
                    }
                }
            }
        }
        if (best == 3) break;
    }

    GirthResult res;
    if (best < 0) return res;  // forest
    res.girth = best;

    // rebuild the BFS tree of the winning root and splice a simple cycle at
    // the deepest common ancestor of u and w
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[best_root] = 0;
    std::queue<int> q;
    q.push(best_root);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                q.push(w);
            }
    }
    std::vector<int> pu, pw;
    for (int v = best_u; v != -1; v = parent[v]) pu.push_back(v);
    for (int v = best_w; v != -1; v = parent[v]) pw.push_back(v);
    while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
        pu.pop_back();
        pw.pop_back();
    }
    // pu = u..z, pw = w..z with the same last element z and disjoint otherwise
    assert(pu.back() == pw.back());
    std::vector<int> cycle(pu.rbegin(), pu.rend());  // z .. u
    cycle.insert(cycle.end(), pw.begin(), pw.end() - 1);  // w .. (child of z)
    assert(static_cast<int>(cycle.size()) <= best);
    res.girth = static_cast<int>(cycle.size());
    res.witness = canonical_cycle(std::move(cycle));
    assert(*res.girth == best);
    return res;
}

std::uint64_t count_cycles_bipartite(const BipartiteIncidenceGraph& b, int r,
                                     const SearchBudget& budget, int max_r) {
    if (r < 2 || r > max_r) throw std::invalid_argument("cycle half-length out of range");
    std::uint64_t count = 0;
    for_each_cycle(b.graph, 2 * r, budget.max_nodes, [&](const std::vector<int>& cyc) {
        if (static_cast<int>(cyc.size()) == 2 * r) ++count;
    });
    return count;
}

std::optional<SPathWitness> find_ordered_path_S(const BipartiteIncidenceGraph& b,
                                                const std::vector<std::pair<int, int>>& subset,
                                                const std::vector<int>& point_rank,
                                                const std::vector<int>& line_rank) {
    auto prank = [&](int p) { return point_rank.empty() ? p : point_rank[p]; };
    auto lrank = [&](int l) { return line_rank.empty() ? l : line_rank[l]; };

    std::vector<std::vector<int>> lines_of(b.num_points);
    std::vector<int> min_point(b.num_lines, -1);  // point of minimal rank on each line, within J
    for (auto [p, l] : subset) {
        lines_of[p].push_back(l);
        if (min_point[l] < 0 || prank(p) < prank(min_point[l])) min_point[l] = p;
    }
    for (auto [p2, l2] : subset) {
        for (int l1 : lines_of[p2]) {
            if (!(lrank(l1) < lrank(l2))) continue;
            const int p1 = min_point[l1];
            if (p1 >= 0 && prank(p1) < prank(p2)) return SPathWitness{p1, p2, l1, l2};
        }
    }
    return std::nullopt;
}

AnalysisReport analyze_graph(const Graph& g, const SearchBudget& budget, int two_n) {
    AnalysisReport rep;
    rep.n = g.num_vertices();
    rep.edges = g.num_edges();
    rep.triangle_free = is_triangle_free(g).triangle_free;
    rep.girth = girth(g).girth;

    const AlphaResult alpha = independence_number(g, budget);
    rep.alpha = {alpha.status, alpha.lower, alpha.upper};
    rep.alpha_certificate = alpha.certificate;

    const ChiResult chi = chromatic_number(g, budget);
    rep.chi = {chi.status, chi.lower, chi.upper};
    rep.chi_coloring = chi.coloring;

    if (two_n > 0) rep.chi_incidence_lower = (rep.n + two_n - 1) / two_n;
    return rep;
}

AnalysisReport analyze_structure(const IncidenceStructure& s, const SearchBudget& budget) {
    const OrderedGraph g = build_hasse_graph(s);
    return analyze_graph(g.graph, budget,
                         static_cast<int>(s.points.size() + s.lines.size()));
}

}  // namespace hasse
