#include <doctest.h>

#include <algorithm>

#include "hasse/analysis.hpp"
#include "hasse/json_io.hpp"
#include "hasse/patterns.hpp"
#include "hasse/sparsify.hpp"
#include "oracles.hpp"

using namespace hasse;

namespace {

// rows y=0, y=1 and columns y=x, y=-x+1 through the four unit-square corners
IncidenceStructure unit_square_grid() {
    return make_structure({Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}},
                          {Line{0, 0}, Line{0, 1}, Line{1, 0}, Line{-1, 1}});
}

// apex (0,0) on y=x and y=3x, both meeting l0: y=-x+4 at grid points
IncidenceStructure two_fan() {
    return make_structure({Point{0, 0}, Point{2, 2}, Point{1, 3}},
                          {Line{1, 0}, Line{3, 0}, Line{-1, 4}});
}

}  // namespace

TEST_CASE("find_grid") {
    SUBCASE("fewer than two lines") {
        const auto s = make_structure({Point{0, 0}}, {Line{0, 0}});
        CHECK_FALSE(find_grid(s, 2).witness.has_value());
    }
    SUBCASE("hand-built 2x2 grid is found and verified") {
        const auto res = find_grid(unit_square_grid(), 2);
        REQUIRE(res.witness.has_value());
        CHECK(res.exhaustive);
        CHECK(res.witness->k == 2);
        CHECK(oracles::grid2_exhaustive(unit_square_grid()));
    }
    SUBCASE("standard_config(3) contains a grid") {
        const auto res = find_grid(standard_config(3), 2);
        CHECK(res.witness.has_value());
        CHECK(oracles::grid2_exhaustive(standard_config(3)));
    }
    SUBCASE("larger k on a rich configuration") {
        const auto res = find_grid(standard_config(3), 3);
        if (res.witness) CHECK_NOTHROW(verify_witness(standard_config(3), *res.witness));
    }
    SUBCASE("budget truncation is reported") {
        const auto res = find_grid(standard_config(4), 2, SearchBudget{.max_nodes = 3});
        CHECK_FALSE(res.exhaustive);
    }
}

TEST_CASE("find_fan") {
    SUBCASE("fewer than k+1 lines") {
        const auto s = make_structure({Point{0, 0}, Point{1, 1}}, {Line{1, 0}, Line{0, 0}});
        CHECK_FALSE(find_fan(s, 2).witness.has_value());
    }
    SUBCASE("hand-built 2-fan is found and verified") {
        const auto res = find_fan(two_fan(), 2);
        REQUIRE(res.witness.has_value());
        CHECK(res.exhaustive);
        CHECK(res.witness->k == 2);
        CHECK(oracles::fan2_exhaustive(two_fan()));
    }
    SUBCASE("witness JSON mirrors the type fields") {
        const auto res = find_fan(two_fan(), 2);
        REQUIRE(res.witness.has_value());
        const auto j = to_json(*res.witness);
        CHECK(j.at("pattern") == "fan");
        CHECK(j.at("k") == 2);
        CHECK(j.at("p0") == res.witness->p0);
        CHECK(j.at("l0") == res.witness->l0);
        CHECK(j.at("points").size() == 2);
        CHECK(j.at("lines").size() == 2);
    }
}

TEST_CASE("detectors agree with exhaustive oracles on 100 random structures") {
    Rng rng(20240401);
    int grid_hits = 0, fan_hits = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = oracles::random_structure(rng, 12, 12);
        const auto grid = find_grid(s, 2);
        REQUIRE(grid.exhaustive);
        CHECK(grid.witness.has_value() == oracles::grid2_exhaustive(s));
        const auto fan = find_fan(s, 2);
        CHECK(fan.witness.has_value() == oracles::fan2_exhaustive(s));
        grid_hits += grid.witness.has_value();
        fan_hits += fan.witness.has_value();
    }
    MESSAGE("positives over 100 random structures: grid=", grid_hits, " fan=", fan_hits);
    // the corpus must exercise both answers for both detectors
    CHECK(grid_hits > 0);
    CHECK(grid_hits < 100);
    CHECK(fan_hits > 0);
    CHECK(fan_hits < 100);
}

TEST_CASE("structural implications from girth") {
    // a 2-fan is a 6-cycle of B and a 2x2 grid an 8-cycle, so high girth
    // forbids them
    const auto source = standard_config(6);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SparsifyParams p;
        p.seed = seed;
        p.k = 5;  // girth(B) >= 8
        const auto out = sparsify(source, p).first;
        REQUIRE(girth(bipartite_graph(out).graph).at_least(8));
        CHECK_FALSE(find_fan(out, 2).witness.has_value());

        p.k = 6;  // girth(B) >= 10
        const auto out10 = sparsify(source, p).first;
        REQUIRE(girth(bipartite_graph(out10).graph).at_least(10));
        CHECK_FALSE(find_grid(out10, 2).witness.has_value());
    }
}

TEST_CASE("pattern_free_sparsify") {
    const auto source = standard_config(6);
    SUBCASE("fan-free output at m=6") {
        SparsifyParams p;
        p.seed = 1;
        const auto [out, rep] = pattern_free_sparsify(source, PatternKind::fan, 2, p);
        CHECK_FALSE(find_fan(out, 2).witness.has_value());
        CHECK(out.points.size() == static_cast<std::size_t>(rep.n0));
        CHECK(rep.q == doctest::Approx(default_q(216, 5)));
    }
    SUBCASE("grid-free output at m=6") {
        SparsifyParams p;
        p.seed = 1;
        const auto [out, rep] = pattern_free_sparsify(source, PatternKind::grid, 2, p);
        const auto check = find_grid(out, 2);
        CHECK(check.exhaustive);
        CHECK_FALSE(check.witness.has_value());
        CHECK(rep.q == doctest::Approx(default_q(216, 6)));
    }
    SUBCASE("deterministic") {
        SparsifyParams p;
        p.seed = 77;
        const auto a = pattern_free_sparsify(source, PatternKind::fan, 2, p);
        const auto b = pattern_free_sparsify(source, PatternKind::fan, 2, p);
        CHECK(a.first == b.first);
        CHECK(canonical_dump(to_json(a.second)) == canonical_dump(to_json(b.second)));
    }
    SUBCASE("q=1 on a tiny structure: surgery deletes the witness") {
        // two_fan padded to 9 points and 9 lines with inert far-away entries
        std::vector<Point> points{Point{0, 0}, Point{2, 2}, Point{1, 3}};
        std::vector<Line> lines{Line{1, 0}, Line{3, 0}, Line{-1, 4}};
        for (int i = 0; i < 6; ++i) {
            points.push_back(Point{100 + i, 1000});
            lines.push_back(Line{50 + i, 7000});
        }
        const auto tiny = make_structure(points, lines);
        REQUIRE(find_fan(tiny, 2).witness.has_value());
        SparsifyParams p;
        p.seed = 1;
        p.q = 1.0;
        const auto [out, rep] = pattern_free_sparsify(tiny, PatternKind::fan, 2, p);
        CHECK(rep.passes == 1);
        CHECK(rep.deleted == 1);  // the shared apex is the lowest point of every witness
        CHECK_FALSE(find_fan(out, 2).witness.has_value());
    }
    SUBCASE("parameter validation") {
        SparsifyParams p;
        CHECK_THROWS_AS(pattern_free_sparsify(source, PatternKind::fan, 1, p),
                        std::invalid_argument);
    }
}
