#include "hasse/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>
#include <stdexcept>

#include "hasse/checked.hpp"
#include "hasse/errors.hpp"

namespace hasse {

namespace {

std::optional<Point> line_intersection(const Line& a, const Line& b) {
    if (a.slope == b.slope) return std::nullopt;  // parallel or equal
    const std::int64_t num = checked_sub(b.intercept, a.intercept);
    const std::int64_t den = checked_sub(a.slope, b.slope);
    if (num % den != 0) return std::nullopt;  // meets off the integer grid
    const std::int64_t x = num / den;
    return Point{x, checked_add(checked_mul(a.slope, x), a.intercept)};
}

int point_index(const IncidenceStructure& s, const Point& p) {
    auto it = std::lower_bound(s.points.begin(), s.points.end(), p);
    if (it == s.points.end() || !(*it == p)) return -1;
    return static_cast<int>(it - s.points.begin());
}

// meet(l1,l2) = index of the structure point where the lines cross, or -1
struct LineMeets {
    int num_lines = 0;
    std::vector<int> table;

    explicit LineMeets(const IncidenceStructure& s)
        : num_lines(static_cast<int>(s.lines.size())),
          table(std::size_t(num_lines) * num_lines, -1) {
        for (int i = 0; i < num_lines; ++i)
            for (int j = i + 1; j < num_lines; ++j) {
                const auto cross = line_intersection(s.lines[i], s.lines[j]);
                if (!cross) continue;
                const int pi = point_index(s, *cross);
                if (pi < 0) continue;
                at(i, j) = pi;
                at(j, i) = pi;
            }
    }

    int& at(int i, int j) { return table[std::size_t(i) * num_lines + j]; }
    int at(int i, int j) const { return table[std::size_t(i) * num_lines + j]; }
};

struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool test(int i) const { return w[i / 64] >> (i % 64) & 1; }
    void and_with(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t bits = w[i];
            while (bits) {
                f(static_cast<int>(i * 64 + __builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }
};

// Backtracking over row sets and column sets. Rows and columns play
// symmetric roles, so completeness is kept while requiring min(rows) to be
// the smallest line of the witness. `emit` returns true to stop the search.
struct GridSearch {
    const IncidenceStructure& s;
    const LineMeets& meets;
    int k;
    std::uint64_t max_nodes;
    std::function<bool(const GridWitness&)> emit;

    std::uint64_t nodes = 0;
    bool truncated = false;
    bool stopped = false;
    int num_lines = 0;
    std::vector<Bitset> meet_bits;
    std::vector<int> rows, cols, used_points;

    GridSearch(const IncidenceStructure& str, const LineMeets& m, int kk, std::uint64_t cap,
               std::function<bool(const GridWitness&)> sink)
        : s(str), meets(m), k(kk), max_nodes(cap), emit(std::move(sink)),
          num_lines(static_cast<int>(str.lines.size())) {
        meet_bits.assign(num_lines, Bitset(num_lines));
        for (int i = 0; i < num_lines; ++i)
            for (int j = 0; j < num_lines; ++j)
                if (meets.at(i, j) >= 0) meet_bits[i].set(j);
    }

    bool tick() {
        if (++nodes > max_nodes) truncated = true;
        return !truncated && !stopped;
    }

    void run() {
        for (int r1 = 0; r1 + 1 < num_lines && !truncated && !stopped; ++r1) {
            rows.assign(1, r1);
            Bitset cand(num_lines);
            bool any = false;
            meet_bits[r1].for_each([&](int l) {
                if (l > r1) {
                    cand.set(l);
                    any = true;
                }
            });
            if (any) extend_rows(cand);
        }
    }

    void extend_rows(const Bitset& cand) {
        if (cand.count() < k) return;
        if (static_cast<int>(rows.size()) == k) {
            cols.clear();
            used_points.clear();
            choose_cols(cand, rows.front());
            return;
        }
        for (int r = rows.back() + 1; r < num_lines; ++r) {
            if (!tick()) return;
            Bitset next = cand;  // rows need not meet each other; columns must meet them all
            next.and_with(meet_bits[r]);
            rows.push_back(r);
            extend_rows(next);
            rows.pop_back();
            if (truncated || stopped) return;
        }
    }

    void choose_cols(const Bitset& cand, int min_from) {
        if (static_cast<int>(cols.size()) == k) {
            GridWitness w;
            w.k = k;
            w.lines = rows;
            w.lines_prime = cols;
            w.points.assign(k, std::vector<int>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) w.points[i][j] = meets.at(rows[i], cols[j]);
            if (emit(w)) stopped = true;
            return;
        }
        const int start = cols.empty() ? min_from + 1 : cols.back() + 1;
        for (int c = start; c < num_lines; ++c) {
            if (!cand.test(c)) continue;
            if (!tick()) return;
            if (std::find(rows.begin(), rows.end(), c) != rows.end()) continue;
            bool ok = true;
            std::size_t added = 0;
            for (int i = 0; i < k && ok; ++i) {
                const int p = meets.at(rows[i], c);
                if (std::find(used_points.begin(), used_points.end(), p) != used_points.end()) {
                    ok = false;
                    break;
                }
                used_points.push_back(p);
                ++added;
            }
            if (ok) {
                cols.push_back(c);
                choose_cols(cand, min_from);
                cols.pop_back();
            }
            used_points.resize(used_points.size() - added);
            if (truncated || stopped) return;
        }
    }
};

std::vector<std::vector<int>> lines_through_points(const IncidenceStructure& s) {
    std::vector<std::vector<int>> lines_of(s.points.size());
    for (auto [pi, li] : s.incidences) lines_of[pi].push_back(li);
    return lines_of;
}

}  // namespace

GridSearchResult find_grid(const IncidenceStructure& s, int k, const SearchBudget& budget) {
    if (k < 2) throw std::invalid_argument("grid detection requires k >= 2");
    GridSearchResult res;
    const LineMeets meets(s);
    GridSearch search(s, meets, k, budget.max_nodes, [&](const GridWitness& w) {
        res.witness = w;
        return true;
    });
    search.run();
    res.exhaustive = !search.truncated;
    res.nodes = search.nodes;
    if (res.witness) verify_witness(s, *res.witness);
    return res;
}

FanSearchResult find_fan(const IncidenceStructure& s, int k) {
    if (k < 2) throw std::invalid_argument("fan detection requires k >= 2");
    FanSearchResult res;
    const LineMeets meets(s);
    const auto lines_of = lines_through_points(s);
    for (int p0 = 0; p0 < static_cast<int>(s.points.size()); ++p0) {
        for (int l0 = 0; l0 < static_cast<int>(s.lines.size()); ++l0) {
            if (incident(s.points[p0], s.lines[l0])) continue;
            FanWitness w;
            w.k = k;
            w.p0 = p0;
            w.l0 = l0;
            for (int l : lines_of[p0]) {
                const int meet = meets.at(l, l0);
                if (meet < 0) continue;
                w.lines.push_back(l);
                w.points.push_back(meet);
                if (static_cast<int>(w.lines.size()) == k) break;
            }
            if (static_cast<int>(w.lines.size()) == k) {
                verify_witness(s, w);
                res.witness = w;
                return res;
            }
        }
    }
    return res;
}

void verify_witness(const IncidenceStructure& s, const GridWitness& w) {
    const int k = w.k;
    if (static_cast<int>(w.lines.size()) != k || static_cast<int>(w.lines_prime.size()) != k)
        throw std::logic_error("grid witness has wrong line counts");
    std::set<int> all_lines(w.lines.begin(), w.lines.end());
    all_lines.insert(w.lines_prime.begin(), w.lines_prime.end());
    if (static_cast<int>(all_lines.size()) != 2 * k)
        throw std::logic_error("grid witness lines not distinct");
    std::set<int> pts;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const int p = w.points.at(i).at(j);
            pts.insert(p);
            if (!incident(s.points.at(p), s.lines.at(w.lines[i])) ||
                !incident(s.points.at(p), s.lines.at(w.lines_prime[j])))
                throw std::logic_error("grid witness membership fails");
        }
    if (static_cast<int>(pts.size()) != k * k)
        throw std::logic_error("grid witness points not distinct");
}

void verify_witness(const IncidenceStructure& s, const FanWitness& w) {
    const int k = w.k;
    if (static_cast<int>(w.lines.size()) != k || static_cast<int>(w.points.size()) != k)
        throw std::logic_error("fan witness has wrong sizes");
    std::set<int> lines(w.lines.begin(), w.lines.end());
    lines.insert(w.l0);
    std::set<int> pts(w.points.begin(), w.points.end());
    pts.insert(w.p0);
    if (static_cast<int>(lines.size()) != k + 1 || static_cast<int>(pts.size()) != k + 1)
        throw std::logic_error("fan witness entries not distinct");
    if (incident(s.points.at(w.p0), s.lines.at(w.l0)))
        throw std::logic_error("fan witness apex lies on l0");
    for (int i = 0; i < k; ++i) {
        if (!incident(s.points.at(w.p0), s.lines.at(w.lines[i])))
            throw std::logic_error("fan witness apex off a spoke");
        if (!incident(s.points.at(w.points[i]), s.lines.at(w.l0)) ||
            !incident(s.points.at(w.points[i]), s.lines.at(w.lines[i])))
            throw std::logic_error("fan witness rim membership fails");
    }
}

namespace {

// One surgery pass: all witnesses (canonical enumeration order), each
// contributing its lowest point index to the deletion set.
std::pair<std::set<int>, int> pattern_deletions(const IncidenceStructure& s, PatternKind pattern,
                                                int k, std::uint64_t cap) {
    std::set<int> doomed;
    int witnesses = 0;
    if (pattern == PatternKind::grid) {
        const LineMeets meets(s);
        GridSearch search(s, meets, k, cap, [&](const GridWitness& w) {
            int low = static_cast<int>(s.points.size());
            for (const auto& row : w.points)
                low = std::min(low, *std::min_element(row.begin(), row.end()));
            doomed.insert(low);
            ++witnesses;
            return false;
        });
        search.run();
        if (search.truncated)
            throw BudgetExceeded("grid witness enumeration budget exceeded", witnesses);
    } else {
        const LineMeets meets(s);
        const auto lines_of = lines_through_points(s);
        for (int p0 = 0; p0 < static_cast<int>(s.points.size()); ++p0)
            for (int l0 = 0; l0 < static_cast<int>(s.lines.size()); ++l0) {
                if (incident(s.points[p0], s.lines[l0])) continue;
                int low = p0, found = 0;
                for (int l : lines_of[p0]) {
                    const int meet = meets.at(l, l0);
                    if (meet < 0) continue;
                    low = std::min(low, meet);
                    if (++found == k) break;
                }
                if (found == k) {
                    doomed.insert(low);
                    ++witnesses;
                }
            }
    }
    return {doomed, witnesses};
}

IncidenceStructure delete_points(const IncidenceStructure& s, const std::set<int>& doomed) {
    std::vector<Point> points;
    for (int pi = 0; pi < static_cast<int>(s.points.size()); ++pi)
        if (!doomed.count(pi)) points.push_back(s.points[pi]);
    return make_structure(std::move(points), s.lines);
}

bool pattern_present(const IncidenceStructure& s, PatternKind pattern, int k, std::uint64_t cap,
                     bool& exhaustive) {
    if (pattern == PatternKind::grid) {
        const auto res = find_grid(s, k, SearchBudget{.max_nodes = cap});
        exhaustive = res.exhaustive;
        return res.witness.has_value();
    }
    const auto res = find_fan(s, k);
    exhaustive = res.exhaustive;
    return res.witness.has_value();
}

}  // namespace

std::pair<IncidenceStructure, PatternFreeReport> pattern_free_sparsify(
    const IncidenceStructure& source, PatternKind pattern, int k, const SparsifyParams& params) {
    if (k < 2) throw std::invalid_argument("pattern_free_sparsify requires k >= 2");
    if (source.points.size() != source.lines.size())
        throw std::invalid_argument("pattern_free_sparsify expects |P| = |L|");
    const std::int64_t n_source = static_cast<std::int64_t>(source.points.size());
    // girth 10 starves 2x2 grids (they are 8-cycles of B); girth 8 starves 2-fans
    const int girth_k = pattern == PatternKind::grid ? 6 : 5;
    const double q = params.q ? *params.q : default_q(n_source, girth_k, params.c_q);
    if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("q must lie in (0, 1]");

    Rng rng(params.seed);
    PatternFreeReport report;
    report.pattern = pattern;
    report.k = k;
    report.seed = params.seed;
    report.q = q;

    for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
        report.attempts = attempt;
        auto fail = [&](const std::string& why) { report.failure_reasons.push_back(why); };

        IncidenceStructure current = sample_subconfig(source, q, rng);
        if (current.points.empty() || current.lines.empty()) {
            fail("empty_sample");
            continue;
        }
        const int p_sampled = static_cast<int>(current.points.size());
        const int l_sampled = static_cast<int>(current.lines.size());

        int witnesses = 0, passes = 0, deleted = 0;
        bool surgery_ok = true;
        for (;;) {
            std::pair<std::set<int>, int> batch;
            try {
                batch = pattern_deletions(current, pattern, k, params.cycle_cap);
            } catch (const BudgetExceeded&) {
                fail("witness_cap_exceeded");
                surgery_ok = false;
                break;
            }
            if (batch.second == 0) break;
            ++passes;
            witnesses += batch.second;
            deleted += static_cast<int>(batch.first.size());
            current = delete_points(current, batch.first);
        }
        if (!surgery_ok) continue;

        const double qn = q * double(n_source);
        const std::optional<int> n0 = n0_in_window(qn);
        if (!n0) {
            fail("n0_window_empty");
            continue;
        }
        if (static_cast<int>(current.points.size()) < *n0 ||
            static_cast<int>(current.lines.size()) < *n0) {
            fail("part_smaller_than_n0");
            continue;
        }
        IncidenceStructure final_structure = trim_to_n0(current, *n0, rng);

        bool exhaustive = true;
        if (pattern_present(final_structure, pattern, k, params.cycle_cap, exhaustive))
            throw std::logic_error("pattern survived surgery");
        if (!exhaustive) {
            fail("final_detector_budget");
            continue;
        }

        report.points_sampled = p_sampled;
        report.lines_sampled = l_sampled;
        report.witnesses = witnesses;
        report.passes = passes;
        report.deleted = deleted;
        report.n0 = *n0;
        report.incidences = static_cast<int>(final_structure.incidences.size());
        return {final_structure, report};
    }
    throw AttemptsExhausted("pattern_free_sparsify: no attempt succeeded", report.failure_reasons);
}

}  // namespace hasse
