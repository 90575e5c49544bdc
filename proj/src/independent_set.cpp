#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hasse/analysis.hpp"
#include "solver_util.hpp"

namespace hasse {

namespace {

// Branch and bound over a shrinking vertex set with undo journaling.
// Reductions: degree-0 and degree-1 vertices are always taken (some maximum
// independent set contains them). Upper bound: greedy clique cover made of
// matched edges plus singletons, i.e. |alive| - |maximal matching|.
struct MisSolver {
    const Graph& g;
    detail::BudgetMeter meter;
    std::vector<char> alive;
    std::vector<int> deg;
    std::vector<int> chosen;
    std::vector<int> best;
    bool complete = true;

    MisSolver(const Graph& graph, const SearchBudget& budget)
        : g(graph), meter(budget), alive(graph.num_vertices(), 1), deg(graph.num_vertices()) {
        for (int v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
    }

    void remove(int v, std::vector<int>& journal) {
        alive[v] = 0;
        journal.push_back(v);
        for (int w : g.neighbors(v))
            if (alive[w]) --deg[w];
    }

    void restore(const std::vector<int>& journal) {
        for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
            alive[*it] = 1;
            for (int w : g.neighbors(*it))
                if (alive[w]) ++deg[w];
        }
    }

    int matching_bound() const {
        // alive count minus a greedy maximal matching on the alive subgraph
        int alive_count = 0;
        for (int v = 0; v < g.num_vertices(); ++v) alive_count += alive[v];
        std::vector<char> matched(g.num_vertices(), 0);
        int matching = 0;
        for (const auto& [u, v] : g.edges()) {
            if (!alive[u] || !alive[v] || matched[u] || matched[v]) continue;
            matched[u] = matched[v] = 1;
            ++matching;
        }
        return alive_count - matching;
    }

    void search() {
        if (!meter.tick()) {
            complete = false;
            return;
        }
        std::vector<int> journal;
        std::size_t chosen_mark = chosen.size();

        // reduction loop
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.num_vertices(); ++v) {
                if (!alive[v] || deg[v] > 1) continue;
                chosen.push_back(v);
                remove(v, journal);
                for (int w : g.neighbors(v))
                    if (alive[w]) {
                        remove(w, journal);
                        break;  // deg was <= 1
                    }
                changed = true;
            }
        }

        int branch = -1, branch_deg = -1;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (alive[v] && deg[v] > branch_deg) {
                branch = v;
                branch_deg = deg[v];
            }

        if (branch < 0) {
            if (chosen.size() > best.size()) best = chosen;
        } else if (static_cast<int>(chosen.size()) + matching_bound() >
                   static_cast<int>(best.size())) {
            {  // include branch vertex
                std::vector<int> j2;
                chosen.push_back(branch);
                remove(branch, j2);
                for (int w : g.neighbors(branch))
                    if (alive[w]) remove(w, j2);
                search();
                restore(j2);
                chosen.pop_back();
            }
            {  // exclude it
                std::vector<int> j2;
                remove(branch, j2);
                search();
                restore(j2);
            }
        }

        restore(journal);
        chosen.resize(chosen_mark);
    }
};

std::vector<int> greedy_independent_set(const Graph& g) {
    std::vector<char> alive(g.num_vertices(), 1);
    std::vector<int> deg(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
    std::vector<int> out;
    for (;;) {
        int pick = -1;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (alive[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        if (pick < 0) break;
        out.push_back(pick);
        alive[pick] = 0;
        for (int w : g.neighbors(pick)) {
            if (!alive[w]) continue;
            alive[w] = 0;
            for (int x : g.neighbors(w))
                if (alive[x]) --deg[x];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_independent_set(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.has_edge(vertices[i], vertices[j])) return false;
    for (int v : vertices)
        if (v < 0 || v >= g.num_vertices()) return false;
    return true;
}

AlphaResult independence_number(const Graph& g, const SearchBudget& budget) {
    MisSolver solver(g, budget);
    solver.best = greedy_independent_set(g);
    const int root_upper = solver.matching_bound();
    solver.search();

    AlphaResult res;
    res.nodes = solver.meter.nodes();
    res.certificate = solver.best;
    std::sort(res.certificate.begin(), res.certificate.end());
    res.lower = static_cast<int>(res.certificate.size());
    if (solver.complete) {
        res.status = SolveStatus::exact;
        res.upper = res.lower;
    } else {
        res.status = SolveStatus::bounded;
        res.upper = std::max(root_upper, res.lower);
    }
    if (!is_independent_set(g, res.certificate))
        throw std::logic_error("independence solver produced an invalid certificate");
    return res;
}

}  // namespace hasse
