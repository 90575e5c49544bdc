#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "hasse/geometry.hpp"
#include "hasse/graph.hpp"

namespace hasse {

// Exceeding a budget downgrades a result from exact to bounds; it is never
// silently wrong.
struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = std::numeric_limits<double>::infinity();
};

// Two-part graph B with points 0..P-1 and lines P..P+L-1 as graph vertices.
struct BipartiteIncidenceGraph {
    int num_points = 0;
    int num_lines = 0;
    Graph graph;

    int point_vertex(int pi) const { return pi; }
    int line_vertex(int li) const { return num_points + li; }
};

BipartiteIncidenceGraph bipartite_graph(const IncidenceStructure& s);

struct TriangleCheck {
    bool triangle_free = true;
    std::array<int, 3> witness{-1, -1, -1};
};

TriangleCheck is_triangle_free(const Graph& g);

struct GirthResult {
    std::optional<int> girth;  // nullopt = acyclic (infinite girth)
    std::vector<int> witness;  // a shortest cycle when finite

    bool at_least(int k) const { return !girth || *girth >= k; }
};

GirthResult girth(const Graph& g);

// Exact number of 2r-cycles (deduplicated canonical forms), for
// 2 <= r <= max_r. Throws BudgetExceeded with the partial count when the
// enumeration cap is hit.
std::uint64_t count_cycles_bipartite(const BipartiteIncidenceGraph& b, int r,
                                     const SearchBudget& budget = {}, int max_r = 6);

enum class SolveStatus { exact, bounded };

struct AlphaResult {
    SolveStatus status = SolveStatus::exact;
    int lower = 0;                 // size of the best independent set found
    int upper = 0;                 // == lower when exact
    std::vector<int> certificate;  // the independent set itself
    std::uint64_t nodes = 0;

    int value() const { return lower; }
};

AlphaResult independence_number(const Graph& g, const SearchBudget& budget = {});

struct ChiResult {
    SolveStatus status = SolveStatus::exact;
    int lower = 1;
    int upper = 1;                  // == lower when exact
    std::vector<int> coloring;      // proper coloring with `upper` colors
    std::uint64_t nodes = 0;
    std::uint64_t infeasibility_nodes = 0;  // exhaustion proof size for upper-1

    int value() const { return upper; }
};

ChiResult chromatic_number(const Graph& g, const SearchBudget& budget = {});

// Certificate checkers, independent of the solvers.
bool is_independent_set(const Graph& g, const std::vector<int>& vertices);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

// Ordered path S inside an edge subset J of B: points p < p' and lines
// l < l' with (p,l), (p',l), (p',l') all in J. Ranks default to index order
// (the canonical geometric order).
struct SPathWitness {
    int p, p_prime, l, l_prime;
};

std::optional<SPathWitness> find_ordered_path_S(const BipartiteIncidenceGraph& b,
                                                const std::vector<std::pair<int, int>>& subset,
                                                const std::vector<int>& point_rank = {},
                                                const std::vector<int>& line_rank = {});

struct ValueOrBounds {
    SolveStatus status = SolveStatus::exact;
    int lower = 0;
    int upper = 0;
};

struct AnalysisReport {
    int n = 0;
    int edges = 0;
    bool triangle_free = true;
    std::optional<int> girth;
    ValueOrBounds alpha;
    ValueOrBounds chi;
    int chi_incidence_lower = 0;  // ceil(n / 2N); 0 when not incidence-derived
    std::vector<int> alpha_certificate;
    std::vector<int> chi_coloring;
};

// Full report for an arbitrary ordered graph. `two_n` is 2N for graphs built
// from an N-point/N-line structure, 0 otherwise.
AnalysisReport analyze_graph(const Graph& g, const SearchBudget& budget = {}, int two_n = 0);

// Builds G from the structure and analyzes it.
AnalysisReport analyze_structure(const IncidenceStructure& s, const SearchBudget& budget = {});

}  // namespace hasse
