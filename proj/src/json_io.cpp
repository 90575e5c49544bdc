#include "hasse/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace hasse {

using nlohmann::json;

namespace {

json value_or_bounds(const ValueOrBounds& v) {
    if (v.status == SolveStatus::exact) return json{{"status", "exact"}, {"value", v.lower}};
    return json{{"status", "bounded"}, {"lb", v.lower}, {"ub", v.upper}};
}

json girth_value(const std::optional<int>& g) {
    if (g) return *g;
    return "inf";
}

}  // namespace

json to_json(const IncidenceStructure& s) {
    json points = json::array(), lines = json::array(), incidences = json::array();
    for (const Point& p : s.points) points.push_back({p.x, p.y});
    for (const Line& l : s.lines) lines.push_back({l.slope, l.intercept});
    for (auto [pi, li] : s.incidences) incidences.push_back({pi, li});
    return json{{"points", points}, {"lines", lines}, {"incidences", incidences}};
}

IncidenceStructure structure_from_json(const json& j) {
    IncidenceStructure s;
    for (const auto& p : j.at("points"))
        s.points.push_back(Point{p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
    for (const auto& l : j.at("lines"))
        s.lines.push_back(Line{l.at(0).get<std::int64_t>(), l.at(1).get<std::int64_t>()});
    for (const auto& i : j.at("incidences"))
        s.incidences.emplace_back(i.at(0).get<int>(), i.at(1).get<int>());
    validate(s);
    return s;
}

json to_json(const OrderedGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.graph.edges()) edges.push_back({u, v});
    json out{{"n", g.graph.num_vertices()}, {"edges", edges}};
    if (!g.labels.empty()) {
        json labels = json::array();
        for (auto [a, b] : g.labels) labels.push_back({a, b});
        out["labels"] = labels;
    }
    return out;
}

json to_json(const AnalysisReport& rep) {
    return json{{"n", rep.n},
                {"edges", rep.edges},
                {"triangle_free", rep.triangle_free},
                {"girth", girth_value(rep.girth)},
                {"alpha", value_or_bounds(rep.alpha)},
                {"chi", value_or_bounds(rep.chi)},
                {"chi_incidence_lower", rep.chi_incidence_lower}};
}

json to_json(const SparsifyReport& rep) {
    return json{{"attempts", rep.attempts},
                {"sizes", {{"p_sampled", rep.points_sampled}, {"l_sampled", rep.lines_sampled}}},
                {"event_a",
                 {rep.event_a.size_window, rep.event_a.max_degree, rep.event_a.degree_concentration}},
                {"short_cycles", rep.short_cycles},
                {"deleted", rep.deleted},
                {"n0", rep.n0},
                {"incidences", rep.incidences},
                {"girth_b", girth_value(rep.girth_b)},
                {"girth_g", girth_value(rep.girth_g)},
                {"seed", rep.seed},
                {"q", rep.q}};
}

json to_json(const GridWitness& w) {
    json points = json::array();
    for (const auto& row : w.points) points.push_back(row);
    return json{{"pattern", "grid"},
                {"k", w.k},
                {"lines", w.lines},
                {"lines_prime", w.lines_prime},
                {"points", points}};
}

json to_json(const FanWitness& w) {
    return json{{"pattern", "fan"}, {"k", w.k},     {"p0", w.p0},
                {"l0", w.l0},       {"points", w.points}, {"lines", w.lines}};
}

json to_json(const PatternFreeReport& rep) {
    return json{{"attempts", rep.attempts},
                {"pattern", rep.pattern == PatternKind::grid ? "grid" : "fan"},
                {"k", rep.k},
                {"sizes", {{"p_sampled", rep.points_sampled}, {"l_sampled", rep.lines_sampled}}},
                {"witnesses", rep.witnesses},
                {"passes", rep.passes},
                {"deleted", rep.deleted},
                {"n0", rep.n0},
                {"incidences", rep.incidences},
                {"seed", rep.seed},
                {"q", rep.q}};
}

std::string canonical_dump(const json& j) {
    return j.dump(2) + "\n";
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << canonical_dump(j);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    return json::parse(in);  // throws json::parse_error on malformed input
}

}  // namespace hasse
