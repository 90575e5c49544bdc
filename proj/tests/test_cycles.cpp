#include <doctest.h>

#include <set>

#include "hasse/analysis.hpp"
#include "hasse/cycles.hpp"
#include "hasse/errors.hpp"
#include "hasse/geometry.hpp"
#include "hasse/rng.hpp"
#include "oracles.hpp"

using namespace hasse;

namespace {

Graph random_graph(Rng& rng, int n, int percent) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform_index(100) < static_cast<std::uint64_t>(percent)) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

std::set<std::vector<int>> collect(const Graph& g, int max_len) {
    std::set<std::vector<int>> out;
    for_each_cycle(g, max_len, UINT64_MAX, [&](const std::vector<int>& c) {
        CHECK(out.insert(c).second);  // no duplicates across the enumeration
        CHECK(c == canonical_cycle(c));
    });
    return out;
}

}  // namespace

TEST_CASE("canonical_cycle") {
    const std::vector<int> canon{0, 2, 5, 3};
    CHECK(canonical_cycle({5, 3, 0, 2}) == canon);
    CHECK(canonical_cycle({3, 5, 2, 0}) == canon);
    CHECK(canonical_cycle({0, 3, 5, 2}) == canon);
    CHECK(canonical_cycle({1, 2, 3}) == std::vector<int>{1, 2, 3});
    CHECK(canonical_cycle({1, 3, 2}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("for_each_cycle agrees with the naive enumerator") {
    Rng rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(rng, 10 + static_cast<int>(trial % 5), 25);
        CHECK(collect(g, 8) == oracles::cycles_naive(g, 8));
    }
}

TEST_CASE("triple agreement: DFS enumerator, naive oracle, matrix walk") {
    Rng rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = random_graph(rng, 9 + static_cast<int>(trial % 4), 30);
        const auto dfs = collect(g, 8);
        const auto naive = oracles::cycles_naive(g, 8);
        REQUIRE(dfs == naive);
        for (int len = 3; len <= 8; ++len) {
            std::int64_t by_len = 0;
            for (const auto& c : dfs)
                if (std::ssize(c) == len) ++by_len;
            CHECK(by_len == oracles::cycle_count_matrix_walk(g, len));
        }
    }
}

TEST_CASE("matrix walk on known graphs") {
    SUBCASE("K33 has nine 4-cycles and six 6-cycles") {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) e.emplace_back(u, v);
        const Graph k33(6, std::move(e));
        CHECK(oracles::cycle_count_matrix_walk(k33, 4) == 9);
        CHECK(oracles::cycle_count_matrix_walk(k33, 6) == 6);
        CHECK(oracles::cycle_count_matrix_walk(k33, 5) == 0);
    }
    SUBCASE("triangle") {
        const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
        CHECK(oracles::cycle_count_matrix_walk(k3, 3) == 1);
        CHECK(oracles::cycle_count_matrix_walk(k3, 4) == 0);
    }
}

TEST_CASE("budget is honored and reports a partial count") {
    const auto b = bipartite_graph(standard_config(3));
    try {
        for_each_cycle(b.graph, 8, 100, [](const std::vector<int>&) {});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.partial_count <= 46);  // 12 six-cycles + 34 eight-cycles in total
    }
}
