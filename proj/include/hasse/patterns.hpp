#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hasse/analysis.hpp"
#include "hasse/geometry.hpp"
#include "hasse/sparsify.hpp"

namespace hasse {

enum class PatternKind { grid, fan };

// k x k grid: rows l_1..l_k and columns l'_1..l'_k, all 2k lines distinct,
// with k^2 distinct points p[i][j] on l_i and l'_j.
struct GridWitness {
    int k = 0;
    std::vector<int> lines;        // rows
    std::vector<int> lines_prime;  // columns
    std::vector<std::vector<int>> points;
};

// k-fan: p_0 on l_1..l_k, each l_i meeting l_0 at a further point p_i, with
// p_0 off l_0.
struct FanWitness {
    int k = 0;
    int p0 = -1;
    int l0 = -1;
    std::vector<int> points;  // p_1..p_k
    std::vector<int> lines;   // l_1..l_k
};

struct GridSearchResult {
    std::optional<GridWitness> witness;
    bool exhaustive = true;  // false when the node budget cut the search short
    std::uint64_t nodes = 0;
};

struct FanSearchResult {
    std::optional<FanWitness> witness;
    bool exhaustive = true;  // the fan scan is polynomial; always completes
};

GridSearchResult find_grid(const IncidenceStructure& s, int k, const SearchBudget& budget = {});
FanSearchResult find_fan(const IncidenceStructure& s, int k);

// Re-checks every membership (and the fan's one non-membership) by direct
// arithmetic; throws std::logic_error on any violation.
void verify_witness(const IncidenceStructure& s, const GridWitness& w);
void verify_witness(const IncidenceStructure& s, const FanWitness& w);

struct PatternFreeReport {
    PatternKind pattern = PatternKind::grid;
    int k = 0;
    int attempts = 0;
    int points_sampled = 0;
    int lines_sampled = 0;
    int witnesses = 0;  // total witnesses enumerated across surgery passes
    int passes = 0;
    int deleted = 0;  // points removed by surgery
    int n0 = 0;
    int incidences = 0;
    std::uint64_t seed = 0;
    double q = 0.0;
    std::vector<std::string> failure_reasons;
};

// Pattern analogue of the girth pipeline: sample with probability q,
// enumerate witnesses, delete the lowest canonical point of each, repeat
// until clean, then trim. The default q is the girth-pipeline q with the
// girth target that kills the pattern (10 for grids, 8 for fans, i.e. k=6
// resp. k=5); params.q / params.c_q override it. The output is re-checked
// pattern-free by the detector.
std::pair<IncidenceStructure, PatternFreeReport> pattern_free_sparsify(
    const IncidenceStructure& source, PatternKind pattern, int k, const SparsifyParams& params);

}  // namespace hasse
