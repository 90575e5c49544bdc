#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hasse/geometry.hpp"
#include "hasse/graph.hpp"

namespace hasse {

// Graph with a total vertex order; the order is the index order (vertex i is
// the i-th smallest). `labels` optionally records the (point, line) pair a
// vertex came from; for shift graphs it holds the (i, j) pair instead.
struct OrderedGraph {
    Graph graph;
    std::vector<std::pair<int, int>> labels;
};

// Lexicographic vertex key (x(p), y(p), s(l), b(l)). Distinct incidences get
// distinct keys, so the order is total without any perturbation of the
// configuration.
struct VertexKey {
    std::int64_t x, y, slope, intercept;
    friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

VertexKey vertex_key(const IncidenceStructure& s, std::pair<int, int> incidence);

// One vertex per incidence, sorted by VertexKey. (p,l) ~ (p',l') iff
// x(p) < x(p'), s(l) < s(l') and p' lies on l.
OrderedGraph build_hasse_graph(const IncidenceStructure& s);

struct MonotoneCycleCertificate {
    bool pass = true;
    // ascending vertex list v1 < ... < vk (k >= 3) with edges v1vk and all
    // consecutive pairs; empty on pass. Minimal length for the first failing
    // edge in sorted edge order.
    std::vector<int> witness;
};

// Orients every edge from lower to higher index and reports PASS iff no edge
// (u,w) has a directed u->w path of length >= 2.
MonotoneCycleCertificate verify_no_monotone_cycle(const OrderedGraph& g);

struct PosetClosure {
    int n = 0;
    BitMatrix less;                            // less(u,w) iff u < w in the order
    std::vector<std::pair<int, int>> covers;   // sorted, first < second
};

// Reachability order over the forward orientation. Rejects graphs that fail
// the monotone-cycle check; when it passes, the cover pairs reproduce the
// input edges exactly.
PosetClosure to_poset(const OrderedGraph& g);

// Shift graph: vertices (i,j) with 1 <= i < j <= n, ordered lex, edges
// (i,j)~(j,k).
OrderedGraph shift_graph(int n);

}  // namespace hasse
