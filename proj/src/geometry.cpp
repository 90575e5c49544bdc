#include "hasse/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hasse/checked.hpp"

namespace hasse {

bool incident(const Point& p, const Line& l) {
    return p.y == checked_add(checked_mul(l.slope, p.x), l.intercept);
}

namespace {

void require_distinct_sorted(const std::vector<Point>& points, const std::vector<Line>& lines) {
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1] < points[i]))
            throw std::invalid_argument("points not strictly increasing");
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (!(lines[i - 1] < lines[i]))
            throw std::invalid_argument("lines not strictly increasing");
}

}  // namespace

std::vector<std::pair<int, int>> compute_incidences(const std::vector<Point>& points,
                                                    const std::vector<Line>& lines) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("duplicate point");
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (lines[i] == lines[j]) throw std::invalid_argument("duplicate line");

    std::vector<std::pair<int, int>> out;
    for (int pi = 0; pi < static_cast<int>(points.size()); ++pi)
        for (int li = 0; li < static_cast<int>(lines.size()); ++li)
            if (incident(points[pi], lines[li])) out.emplace_back(pi, li);
    // already sorted by construction order, but keep the contract explicit
    std::sort(out.begin(), out.end());
    return out;
}

IncidenceStructure make_structure(std::vector<Point> points, std::vector<Line> lines) {
    std::sort(points.begin(), points.end());
    std::sort(lines.begin(), lines.end());
    IncidenceStructure s;
    s.incidences = compute_incidences(points, lines);
    s.points = std::move(points);
    s.lines = std::move(lines);
    return s;
}

IncidenceStructure standard_config(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("standard_config requires m >= 1");
    const std::int64_t m2 = checked_mul(m, m);
    checked_mul(m2, m2);  // m^4 must be representable
    const std::int64_t n = checked_mul(m, m2);
    if (n > (std::int64_t(1) << 31) - 2) throw std::overflow_error("standard_config too large to index");

    IncidenceStructure s;
    s.points.reserve(n);
    s.lines.reserve(n);
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m2; ++b) {
            s.points.push_back(Point{a, b});
            s.lines.push_back(Line{a, b});
        }
    std::sort(s.points.begin(), s.points.end());
    std::sort(s.lines.begin(), s.lines.end());

    // (x,y) lies on y = a x + b iff b = y - a x lands in [0, m^2); the line
    // index is then a*m^2 + b. Ascending in a, so the list comes out sorted.
    for (int pi = 0; pi < n; ++pi) {
        const Point& p = s.points[pi];
        for (std::int64_t a = 0; a < m; ++a) {
            const std::int64_t b = p.y - a * p.x;
            if (b < 0 || b >= m2) continue;
            s.incidences.emplace_back(pi, static_cast<int>(a * m2 + b));
        }
    }
    return s;
}

void validate(const IncidenceStructure& s) {
    require_distinct_sorted(s.points, s.lines);
    // soundness + ordering of the listed incidences
    for (std::size_t i = 0; i < s.incidences.size(); ++i) {
        auto [pi, li] = s.incidences[i];
        if (pi < 0 || li < 0 || pi >= static_cast<int>(s.points.size()) ||
            li >= static_cast<int>(s.lines.size()))
            throw std::invalid_argument("incidence index out of range");
        if (!incident(s.points[pi], s.lines[li]))
            throw std::invalid_argument("listed incidence is not geometrically incident");
        if (i > 0 && !(s.incidences[i - 1] < s.incidences[i]))
            throw std::invalid_argument("incidence list not strictly sorted");
    }
    // completeness against a full pair scan
    std::size_t count = 0;
    for (const Point& p : s.points)
        for (const Line& l : s.lines)
            if (incident(p, l)) ++count;
    if (count != s.incidences.size())
        throw std::invalid_argument("incidence list incomplete");
}

CollinearityGraph collinearity_graph(const IncidenceStructure& s) {
    std::vector<std::vector<int>> on_line(s.lines.size());
    for (auto [pi, li] : s.incidences) on_line[li].push_back(pi);
    std::vector<std::pair<int, int>> edges;
    for (const auto& pts : on_line)
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                edges.emplace_back(pts[i], pts[j]);
    return CollinearityGraph{Graph(static_cast<int>(s.points.size()), std::move(edges))};
}

CommonNeighborStats max_common_neighbors(const CollinearityGraph& h) {
    const Graph& g = h.graph;
    const int n = g.num_vertices();
    CommonNeighborStats best;
    if (n <= 1) return best;
    best.pair = {0, 1};
    // wedge count: every middle vertex w contributes one common neighbor to
    // each pair of its neighbors
    std::unordered_map<std::int64_t, int> common;
    for (int w = 0; w < n; ++w) {
        const auto& nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                ++common[static_cast<std::int64_t>(nb[i]) * n + nb[j]];
    }
    for (const auto& [key, cnt] : common) {
        const std::pair<int, int> pr{static_cast<int>(key / n), static_cast<int>(key % n)};
        if (cnt > best.count || (cnt == best.count && pr < best.pair)) {
            best.count = cnt;
            best.pair = pr;
        }
    }
    return best;
}

}  // namespace hasse
