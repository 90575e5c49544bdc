#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hasse/graph.hpp"

namespace hasse {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// y = slope*x + intercept. Vertical lines are not representable; the
// generators never need one, and hand-built structures live with it.
struct Line {
    std::int64_t slope = 0;
    std::int64_t intercept = 0;
    friend auto operator<=>(const Line&, const Line&) = default;
};

// Membership test with overflow-checked arithmetic.
bool incident(const Point& p, const Line& l);

// Canonical form throughout: points sorted lex by (x, y), lines sorted lex by
// (slope, intercept), incidence pairs (point index, line index) sorted. All
// generated and loaded structures are kept canonical so outputs are
// bit-reproducible.
struct IncidenceStructure {
    std::vector<Point> points;
    std::vector<Line> lines;
    std::vector<std::pair<int, int>> incidences;

    friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

// All incident (point index, line index) pairs for the given vectors, sorted
// and duplicate-free. Requires distinct points and distinct lines.
std::vector<std::pair<int, int>> compute_incidences(const std::vector<Point>& points,
                                                    const std::vector<Line>& lines);

// Sorts points and lines into canonical order and computes the incidence
// list, so the result does not depend on the input order.
IncidenceStructure make_structure(std::vector<Point> points, std::vector<Line> lines);

// The m^3-point, m^3-line grid configuration: P = [0,m) x [0,m^2),
// lines y = a x + b with a in [0,m), b in [0,m^2). Incidence count is
// m^4 - (m(m-1)/2)^2.
IncidenceStructure standard_config(std::int64_t m);

// Checks every type invariant: canonical order, distinctness, soundness and
// completeness of the incidence list. Throws std::invalid_argument.
void validate(const IncidenceStructure& s);

// Graph H on point indices: p ~ p' iff some line of the structure contains
// both.
struct CollinearityGraph {
    Graph graph;
};

CollinearityGraph collinearity_graph(const IncidenceStructure& s);

struct CommonNeighborStats {
    std::pair<int, int> pair{-1, -1};  // point indices; (-1,-1) when |V| <= 1
    int count = 0;
};

// Maximizing pair and its common-neighbor count in H. Reported for scaling
// inspection; nothing asserts a bound on it.
CommonNeighborStats max_common_neighbors(const CollinearityGraph& h);

}  // namespace hasse
