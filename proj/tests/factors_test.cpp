#include <doctest.h>

#include <algorithm>
#include <random>

#include "opsr/factors.hpp"
#include "opsr/pathfind.hpp"
#include "oracles.hpp"
#include "test_lots.hpp"

using namespace opsr;
using nlohmann::json;

TEST_CASE("fuzzy_normalize") {
    CHECK(fuzzy_normalize(41.8, 41.8) == doctest::Approx(1.0));
    CHECK(fuzzy_normalize(0.0, 41.8) == doctest::Approx(0.0));
    CHECK(fuzzy_normalize(20.9, 41.8) == doctest::Approx(0.5));
    CHECK_THROWS_AS(static_cast<void>(fuzzy_normalize(2.0, 1.0)), LotError);
    CHECK_THROWS_AS(static_cast<void>(fuzzy_normalize(1.0, 0.0)), LotError);
    CHECK_THROWS_AS(static_cast<void>(fuzzy_normalize(-1.0, 1.0)), LotError);
}

TEST_CASE("fuzzy_normalize is monotone and homogeneous") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double max = unit(rng) * 100 + 1;
        const double a = unit(rng) * max;
        const double b = unit(rng) * max;
        const double c = unit(rng) * 10 + 0.1;
        if (a <= b) CHECK(fuzzy_normalize(a, max) <= fuzzy_normalize(b, max));
        CHECK(fuzzy_normalize(c * a, c * max) ==
              doctest::Approx(fuzzy_normalize(a, max)).epsilon(1e-12));
    }
}

TEST_CASE("reference_distances") {
    SUBCASE("reference lot hits the 41.8 m maxima") {
        const LotGraph g = test::reference_lot();
        const auto [x_max, l_max] =
            reference_distances(g, g.entrances().front(), g.exits());
        CHECK(x_max == doctest::Approx(41.8).epsilon(1e-12));
        CHECK(l_max == doctest::Approx(41.8).epsilon(1e-12));
    }
    SUBCASE("single space 6 m from entrance, 10 m from exit") {
        const json doc = {
            {"nodes",
             {{{"id", "e"}, {"kind", "entrance"}, {"x", 0.0}, {"y", 0.0}},
              {{"id", "p"}, {"kind", "space"}, {"x", 6.0}, {"y", 0.0}},
              {{"id", "x"}, {"kind", "exit"}, {"x", 16.0}, {"y", 0.0}}}},
            {"edges",
             {{{"a", "e"}, {"b", "p"}, {"length", 6.0}},
              {{"a", "p"}, {"b", "x"}, {"length", 10.0}}}}};
        const LotGraph g = LotGraph::load(doc);
        const auto [x_max, l_max] = reference_distances(g, "e", g.exits());
        CHECK(x_max == doctest::Approx(6.0));
        CHECK(l_max == doctest::Approx(10.0));
    }
    SUBCASE("random lots match the brute-force Dijkstra maxima") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 15; ++trial) {
            const LotGraph g = LotGraph::load(test::random_lot_doc(rng, 30, 80));
            const auto from_e = test::oracle_dijkstra(g, g.entrances().front());
            const auto from_x = test::oracle_dijkstra(g, g.exits().front());
            double ox = 0.0, ol = 0.0;
            for (const auto& s : g.spaces()) {
                ox = std::max(ox, from_e.at(s));
                ol = std::max(ol, from_x.at(s));
            }
            const auto [x_max, l_max] =
                reference_distances(g, g.entrances().front(), g.exits());
            CHECK(x_max == doctest::Approx(ox).epsilon(1e-9));
            CHECK(l_max == doctest::Approx(ol).epsilon(1e-9));
        }
    }
}

TEST_CASE("build_factor_matrix rows match per-space oracle recomputation") {
    const LotGraph g = test::reference_lot();
    const auto& entrance = g.entrances().front();
    const OccupancyState state = g.all_vacant();
    const FactorMatrix m = build_factor_matrix(g, state, entrance, g.exits());
    REQUIRE(m.rows.size() == 20);
    CHECK(std::is_sorted(m.rows.begin(), m.rows.end(),
                         [](const FactorRow& a, const FactorRow& b) {
                             return a.space < b.space;
                         }));

    const auto from_e = test::oracle_dijkstra(g, entrance);
    const auto from_x = test::oracle_dijkstra(g, g.exits().front());
    for (const FactorRow& row : m.rows) {
        CHECK(row.x == doctest::Approx(from_e.at(row.space) / m.x_max).epsilon(1e-9));
        CHECK(row.l == doctest::Approx(from_x.at(row.space) / m.l_max).epsilon(1e-9));
        CHECK(row.s == doctest::Approx(1.0 / 3.0));  // all vacant -> S = 1
        CHECK(row.x >= 0.0);
        CHECK(row.x <= 1.0);
        CHECK(row.l >= 0.0);
        CHECK(row.l <= 1.0);
        CHECK(row.s >= 0.0);
        CHECK(row.s <= 1.0);
    }
}

TEST_CASE("build_factor_matrix: S column normalized by 3") {
    const LotGraph g = test::mini_lot();
    OccupancyState s = g.all_vacant();
    s = set_occupancy(g, std::move(s), "P1", true);
    s = set_occupancy(g, std::move(s), "P5", true);
    const FactorMatrix m = build_factor_matrix(g, s, g.entrances().front(), g.exits());
    for (const FactorRow& row : m.rows) {
        if (row.space == "P3") CHECK(row.s == doctest::Approx(1.0));  // S = 3
        if (row.space == "P7") CHECK(row.s == doctest::Approx(2.0 / 3.0));
        if (row.space == "P2") CHECK(row.s == doctest::Approx(1.0 / 3.0));
    }
}

TEST_CASE("no vacant spaces is an error") {
    const LotGraph g = test::mini_lot();
    OccupancyState s = g.all_vacant();
    for (const auto& id : g.spaces()) s = set_occupancy(g, std::move(s), id, true);
    CHECK_THROWS_AS(
        static_cast<void>(build_factor_matrix(g, s, g.entrances().front(), g.exits())),
        LotError);
}

TEST_CASE("occupancy locality: toggling a space only moves its neighbors' S") {
    const LotGraph g = test::mini_lot();
    const auto& entrance = g.entrances().front();
    const OccupancyState before = g.all_vacant();
    const FactorMatrix base = build_factor_matrix(g, before, entrance, g.exits());

    const OccupancyState after = set_occupancy(g, before, "P4", true);
    const FactorMatrix toggled = build_factor_matrix(g, after, entrance, g.exits());

    CHECK(toggled.x_max == base.x_max);  // maxima ignore occupancy
    CHECK(toggled.l_max == base.l_max);
    const auto& nbrs = g.space_neighbors("P4");
    for (const FactorRow& row : toggled.rows) {
        const auto it = std::find_if(base.rows.begin(), base.rows.end(),
                                     [&](const FactorRow& r) { return r.space == row.space; });
        REQUIRE(it != base.rows.end());
        CHECK(row.x == it->x);
        CHECK(row.l == it->l);
        const bool is_neighbor = std::find(nbrs.begin(), nbrs.end(), row.space) != nbrs.end();
        if (!is_neighbor) CHECK(row.s == it->s);
    }
}
