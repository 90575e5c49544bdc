#include "hasse/cycles.hpp"

#include <algorithm>

#include "hasse/errors.hpp"

namespace hasse {

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    const std::size_t k = cycle.size();
    std::vector<int> best = cycle;
    auto consider = [&](const std::vector<int>& seq) {
        for (std::size_t shift = 0; shift < k; ++shift) {
            bool smaller = false, decided = false;
            for (std::size_t i = 0; i < k && !decided; ++i) {
                int a = seq[(shift + i) % k], b = best[i];
                if (a != b) {
                    smaller = a < b;
                    decided = true;
                }
            }
            if (decided && smaller) {
                std::vector<int> rot(k);
                for (std::size_t i = 0; i < k; ++i) rot[i] = seq[(shift + i) % k];
                best = rot;
            }
        }
    };
    consider(cycle);
    std::reverse(cycle.begin(), cycle.end());
    consider(cycle);
    return best;
}

namespace {

struct CycleDfs {
    const Graph& g;
    int max_len;
    std::uint64_t max_nodes;
    const std::function<void(const std::vector<int>&)>& sink;
    std::vector<char> on_path;
    std::vector<int> path;
    std::uint64_t nodes = 0;
    std::uint64_t found = 0;

    void extend(int v) {
        if (++nodes > max_nodes)
            throw BudgetExceeded("cycle enumeration budget exceeded", found);
        const int root = path.front();
        on_path[v] = 1;
        path.push_back(v);
        const int len = static_cast<int>(path.size());
        if (len >= 3 && path[1] < path.back() && g.has_edge(v, root)) {
            ++found;
            sink(path);  // already canonical: starts at min vertex, direction fixed
        }
        if (len < max_len) {
            for (int w : g.neighbors(v)) {
                if (w <= root || on_path[w]) continue;
                extend(w);
            }
        }
        path.pop_back();
        on_path[v] = 0;
    }
};

}  // namespace

std::uint64_t for_each_cycle(const Graph& g, int max_len, std::uint64_t max_nodes,
                             const std::function<void(const std::vector<int>&)>& sink) {
    CycleDfs dfs{g, max_len, max_nodes, sink, std::vector<char>(g.num_vertices(), 0), {}, 0, 0};
    for (int root = 0; root < g.num_vertices(); ++root) {
        dfs.path.assign(1, root);
        dfs.on_path[root] = 1;
        for (int w : g.neighbors(root)) {
            if (w <= root) continue;
            dfs.extend(w);
        }
        dfs.on_path[root] = 0;
    }
    return dfs.nodes;
}

}  // namespace hasse
