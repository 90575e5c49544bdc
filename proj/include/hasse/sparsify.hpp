#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hasse/analysis.hpp"
#include "hasse/geometry.hpp"
#include "hasse/rng.hpp"

namespace hasse {

struct SparsifyParams {
    int k = 5;                      // target Hasse girth, >= 5
    std::optional<double> q;        // sampling probability; derived when absent
    double c_q = 1.0;               // multiplier on the derived q
    int max_attempts = 50;
    std::uint64_t seed = 1;
    bool strict_event_a = false;    // gate attempts on event A instead of recording it
    std::uint64_t cycle_cap = 50'000'000;  // enumeration expansions per attempt
};

// The three bullets of the sampling event: part sizes inside (qN/2, 2qN),
// max degree at most 2qN^(1/3), and at least qN/4 points and lines with
// degree in [qN^(1/3)/4, 2qN^(1/3)].
struct EventAFlags {
    bool size_window = false;
    bool max_degree = false;
    bool degree_concentration = false;
    bool all() const { return size_window && max_degree && degree_concentration; }
};

struct SparsifyReport {
    int attempts = 0;
    int points_sampled = 0;  // sizes after sampling, successful attempt
    int lines_sampled = 0;
    EventAFlags event_a;
    std::uint64_t short_cycles = 0;  // cycles of length <= 2k-4 found
    int deleted = 0;                 // vertices removed by cycle surgery
    int n0 = 0;
    int incidences = 0;
    std::optional<int> girth_b;  // nullopt = infinite
    std::optional<int> girth_g;
    std::uint64_t seed = 0;
    double q = 0.0;
    // bookkeeping beyond the serialized schema
    std::uint64_t rng_draws_sampling = 0;
    std::uint64_t rng_draws_trim = 0;
    std::vector<std::string> failure_reasons;             // one per failed attempt
    std::vector<std::uint64_t> short_cycles_per_attempt;  // includes failures
};

// q = c_q * N^(-(2k-7)/(6k-15)), clamped into (0, 1]. The paper-level o(1)
// factor is dropped and absorbed into c_q.
double default_q(std::int64_t n_source, int k, double c_q = 1.0);

// ceil(3qN/16) clamped strictly inside the window (qN/8, qN/4); nullopt when
// the window contains no positive integer.
std::optional<int> n0_in_window(double qn);

// Independent Bernoulli(q) keep-draws, points first (canonical order) then
// lines; induced incidences recomputed.
IncidenceStructure sample_subconfig(const IncidenceStructure& source, double q, Rng& rng);

EventAFlags check_event_a(const IncidenceStructure& sampled, double q, std::int64_t n_source);

// All cycles of length 6..maxlen in canonical form (genuine incidence graphs
// have none shorter). Throws BudgetExceeded past `cap` expansions.
std::vector<std::vector<int>> enumerate_short_cycles(const BipartiteIncidenceGraph& b, int maxlen,
                                                     std::uint64_t cap = 50'000'000);

// Deletes the lowest canonical vertex of each listed cycle (graph ids:
// points before lines), rebuilds the structure, and re-verifies that no
// cycle of length <= maxlen survived.
IncidenceStructure remove_short_cycles(const IncidenceStructure& s,
                                       const std::vector<std::vector<int>>& cycles, int maxlen,
                                       std::uint64_t cap = 50'000'000);

// Uniformly random n0-subsets of each part; induced incidences.
IncidenceStructure trim_to_n0(const IncidenceStructure& s, int n0, Rng& rng);

// Full pipeline: sample, check event A, enumerate and delete short cycles,
// trim to N0 inside (qN/8, qN/4), and certify girth(B) >= 2k-2 plus
// girth(G) >= k with a passing monotone-cycle check. Throws
// AttemptsExhausted after max_attempts failed tries.
std::pair<IncidenceStructure, SparsifyReport> sparsify(const IncidenceStructure& source,
                                                       const SparsifyParams& params);

}  // namespace hasse
