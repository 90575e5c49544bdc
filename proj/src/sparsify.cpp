#include "hasse/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hasse/cycles.hpp"
#include "hasse/errors.hpp"
#include "hasse/hasse_graph.hpp"

namespace hasse {

double default_q(std::int64_t n_source, int k, double c_q) {
    if (k < 5) throw std::invalid_argument("girth target requires k >= 5");
    if (n_source < 2) throw std::invalid_argument("default_q requires N >= 2");
    const double exponent = -double(2 * k - 7) / double(6 * k - 15);
    const double q = c_q * std::pow(double(n_source), exponent);
    return std::min(q, 1.0);
}

IncidenceStructure sample_subconfig(const IncidenceStructure& source, double q, Rng& rng) {
    if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("q must lie in (0, 1]");
    std::vector<Point> points;
    for (const Point& p : source.points)
        if (rng.bernoulli(q)) points.push_back(p);
    std::vector<Line> lines;
    for (const Line& l : source.lines)
        if (rng.bernoulli(q)) lines.push_back(l);
    return make_structure(std::move(points), std::move(lines));
}

EventAFlags check_event_a(const IncidenceStructure& sampled, double q, std::int64_t n_source) {
    const double qn = q * double(n_source);
    const double qn3 = q * std::cbrt(double(n_source));
    const double p_count = double(sampled.points.size());
    const double l_count = double(sampled.lines.size());

    EventAFlags flags;
    flags.size_window = qn / 2 < p_count && p_count < 2 * qn && qn / 2 < l_count && l_count < 2 * qn;

    std::vector<int> pdeg(sampled.points.size(), 0), ldeg(sampled.lines.size(), 0);
    for (auto [pi, li] : sampled.incidences) {
        ++pdeg[pi];
        ++ldeg[li];
    }
    flags.max_degree = true;
    for (int d : pdeg) flags.max_degree &= double(d) <= 2 * qn3;
    for (int d : ldeg) flags.max_degree &= double(d) <= 2 * qn3;

    auto concentrated = [&](const std::vector<int>& degs) {
        std::int64_t c = 0;
        for (int d : degs)
            if (qn3 / 4 <= double(d) && double(d) <= 2 * qn3) ++c;
        return double(c) >= qn / 4;
    };
    flags.degree_concentration = concentrated(pdeg) && concentrated(ldeg);
    return flags;
}

std::vector<std::vector<int>> enumerate_short_cycles(const BipartiteIncidenceGraph& b, int maxlen,
                                                     std::uint64_t cap) {
    if (maxlen < 6) return {};
    std::vector<std::vector<int>> cycles;
    for_each_cycle(b.graph, maxlen, cap, [&](const std::vector<int>& c) {
        if (c.size() >= 6) cycles.push_back(c);  // genuine incidence graphs have none shorter
    });
    return cycles;
}

IncidenceStructure remove_short_cycles(const IncidenceStructure& s,
                                       const std::vector<std::vector<int>>& cycles, int maxlen,
                                       std::uint64_t cap) {
    const int num_points = static_cast<int>(s.points.size());
    std::set<int> doomed;
    for (const auto& cyc : cycles) doomed.insert(cyc.front());  // canonical form leads with the min vertex

    std::vector<Point> points;
    for (int pi = 0; pi < num_points; ++pi)
        if (!doomed.count(pi)) points.push_back(s.points[pi]);
    std::vector<Line> lines;
    for (int li = 0; li < static_cast<int>(s.lines.size()); ++li)
        if (!doomed.count(num_points + li)) lines.push_back(s.lines[li]);
    IncidenceStructure out = make_structure(std::move(points), std::move(lines));

    // one deletion can serve several cycles, so confirm nothing survived
    if (!enumerate_short_cycles(bipartite_graph(out), maxlen, cap).empty())
        throw std::logic_error("short cycle survived surgery");
    return out;
}

IncidenceStructure trim_to_n0(const IncidenceStructure& s, int n0, Rng& rng) {
    if (n0 < 0 || n0 > static_cast<int>(s.points.size()) || n0 > static_cast<int>(s.lines.size()))
        throw std::invalid_argument("trim target exceeds a part size");
    auto pick = [&](int universe) {
        std::vector<int> ids(universe);
        for (int i = 0; i < universe; ++i) ids[i] = i;
        for (int i = 0; i < n0; ++i) {
            const int j = i + static_cast<int>(rng.uniform_index(universe - i));
            std::swap(ids[i], ids[j]);
        }
        ids.resize(n0);
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    std::vector<Point> points;
    for (int pi : pick(static_cast<int>(s.points.size()))) points.push_back(s.points[pi]);
    std::vector<Line> lines;
    for (int li : pick(static_cast<int>(s.lines.size()))) lines.push_back(s.lines[li]);
    return make_structure(std::move(points), std::move(lines));
}

std::optional<int> n0_in_window(double qn) {
    // window endpoints are exclusive
    auto above = [](double x) {
        const double c = std::ceil(x);
        return static_cast<std::int64_t>(c == x ? c + 1 : c);
    };
    auto below = [](double x) {
        const double f = std::floor(x);
        return static_cast<std::int64_t>(f == x ? f - 1 : f);
    };
    const std::int64_t lo = above(qn / 8), hi = below(qn / 4);
    if (lo > hi || hi < 1) return std::nullopt;
    return static_cast<int>(std::clamp(static_cast<std::int64_t>(std::ceil(3 * qn / 16)), lo, hi));
}

std::pair<IncidenceStructure, SparsifyReport> sparsify(const IncidenceStructure& source,
                                                       const SparsifyParams& params) {
    if (params.k < 5) throw std::invalid_argument("sparsify requires k >= 5");
    if (params.max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");
    if (source.points.size() != source.lines.size())
        throw std::invalid_argument("sparsify expects |P| = |L|");
    const std::int64_t n_source = static_cast<std::int64_t>(source.points.size());
    const double q = params.q ? *params.q : default_q(n_source, params.k, params.c_q);
    if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("q must lie in (0, 1]");
    const int maxlen = 2 * params.k - 4;

    Rng rng(params.seed);
    SparsifyReport report;
    report.seed = params.seed;
    report.q = q;

    for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
        report.attempts = attempt;
        auto fail = [&](const std::string& why) { report.failure_reasons.push_back(why); };

        const std::uint64_t draws0 = rng.draws();
        const IncidenceStructure sampled = sample_subconfig(source, q, rng);
        const std::uint64_t draws_sampling = rng.draws() - draws0;
        if (sampled.points.empty() || sampled.lines.empty()) {
            fail("empty_sample");
            continue;
        }

        const EventAFlags flags = check_event_a(sampled, q, n_source);
        if (params.strict_event_a && !flags.all()) {
            fail("event_a");
            continue;
        }

        std::vector<std::vector<int>> cycles;
        try {
            cycles = enumerate_short_cycles(bipartite_graph(sampled), maxlen, params.cycle_cap);
        } catch (const BudgetExceeded&) {
            fail("cycle_cap_exceeded");
            continue;
        }
        report.short_cycles_per_attempt.push_back(cycles.size());

        const IncidenceStructure surgered =
            remove_short_cycles(sampled, cycles, maxlen, params.cycle_cap);

        // N0 sits strictly inside (qN/8, qN/4); aim for the midpoint
        const std::optional<int> n0 = n0_in_window(q * double(n_source));
        if (!n0) {
            fail("n0_window_empty");
            continue;
        }
        if (static_cast<int>(surgered.points.size()) < *n0 ||
            static_cast<int>(surgered.lines.size()) < *n0) {
            fail("part_smaller_than_n0");
            continue;
        }

        const std::uint64_t draws1 = rng.draws();
        const IncidenceStructure final_structure = trim_to_n0(surgered, *n0, rng);

        // unconditional success postconditions
        const GirthResult gb = girth(bipartite_graph(final_structure).graph);
        if (!gb.at_least(2 * params.k - 2))
            throw std::logic_error("sparsify produced an incidence graph below the girth target");
        const OrderedGraph g = build_hasse_graph(final_structure);
        const GirthResult gg = girth(g.graph);
        if (!gg.at_least(params.k))
            throw std::logic_error("sparsify produced a Hasse graph below the girth target");
        if (!verify_no_monotone_cycle(g).pass)
            throw std::logic_error("sparsify produced a graph with a monotone cycle");

        report.points_sampled = static_cast<int>(sampled.points.size());
        report.lines_sampled = static_cast<int>(sampled.lines.size());
        report.event_a = flags;
        report.short_cycles = cycles.size();
        report.deleted = static_cast<int>(sampled.points.size() + sampled.lines.size() -
                                          surgered.points.size() - surgered.lines.size());
        report.n0 = *n0;
        report.incidences = static_cast<int>(final_structure.incidences.size());
        report.girth_b = gb.girth;
        report.girth_g = gg.girth;
        report.rng_draws_sampling = draws_sampling;
        report.rng_draws_trim = rng.draws() - draws1;
        return {final_structure, report};
    }
    throw AttemptsExhausted("sparsify: no attempt succeeded", report.failure_reasons);
}

}  // namespace hasse
