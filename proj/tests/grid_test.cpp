#include <doctest.h>

#include <algorithm>
#include <set>

#include "octagrid/grid.hpp"
#include "octagrid/subgraph.hpp"
#include "support/oracles.hpp"

using namespace octagrid;

TEST_CASE("neighbors returns the 8 king moves") {
    const auto nb = neighbors({0, 0});
    const std::set<Vertex> got(nb.begin(), nb.end());
    const std::set<Vertex> want = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                   {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
    CHECK(got == want);
    CHECK(got.size() == 8);

    const auto far = neighbors({5, -3});
    const std::set<Vertex> far_set(far.begin(), far.end());
    CHECK(far_set.size() == 8);
    CHECK(far_set.contains({4, -4}));
    CHECK(far_set.contains({6, -2}));
}

TEST_CASE("vertex adjacency matches the Chebyshev rule") {
    CHECK(adjacent({0, 0}, {1, 1}));
    CHECK(adjacent({0, 0}, {0, -1}));
    CHECK_FALSE(adjacent({0, 0}, {0, 0}));
    CHECK_FALSE(adjacent({0, 0}, {2, 0}));
    CHECK_FALSE(adjacent({0, 0}, {2, 1}));
}

TEST_CASE("edges are canonical and classified by displacement") {
    CHECK(Edge({0, 0}, {1, 0}) == Edge({1, 0}, {0, 0}));
    CHECK(Edge({0, 0}, {1, 0}).cls() == EdgeClass::Horizontal);
    CHECK(Edge({0, 0}, {1, 1}).cls() == EdgeClass::RightSlanting);
    CHECK(Edge({0, 0}, {0, 1}).cls() == EdgeClass::Vertical);
    CHECK(Edge({1, 0}, {0, 1}).cls() == EdgeClass::LeftSlanting);
    CHECK(Edge({0, 1}, {1, 0}).anchor() == Vertex{0, 1});
    CHECK_THROWS_AS(Edge({0, 0}, {2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Edge({0, 0}, {0, 0}), std::invalid_argument);

    // edge_at inverts (anchor, class)
    for (EdgeClass cls : {EdgeClass::Horizontal, EdgeClass::Vertical, EdgeClass::RightSlanting,
                          EdgeClass::LeftSlanting}) {
        const Edge e = edge_at({3, -2}, cls);
        CHECK(e.anchor() == Vertex{3, -2});
        CHECK(e.cls() == cls);
    }
}

TEST_CASE("edge distance basics") {
    const Edge e1({0, 0}, {1, 0});
    CHECK(edge_distance(e1, e1) == 0);
    CHECK(edge_distance(e1, Edge({1, 0}, {1, 1})) == 1);
    CHECK(edge_distance(e1, Edge({2, 1}, {3, 1})) == 2);
}

TEST_CASE("edge distance equals BFS in the line graph of full windows") {
    for (int w = 2; w <= 6; ++w) {
        for (int h = 2; h <= 6; ++h) {
            const EdgeSet window = full_window(w, h, {-2, -1});
            const auto dist = oracle::line_graph_distances(window);
            const auto& edges = window.edges();
            for (std::size_t i = 0; i < edges.size(); ++i) {
                for (std::size_t j = 0; j < edges.size(); ++j) {
                    REQUIRE(dist[i][j] == edge_distance(edges[i], edges[j]));
                }
            }
        }
    }
}

TEST_CASE("edge distance is symmetric and satisfies the triangle inequality") {
    const auto& edges = full_window(5, 5).edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i; j < edges.size(); ++j) {
            CHECK(edge_distance(edges[i], edges[j]) == edge_distance(edges[j], edges[i]));
        }
    }
    // every third edge, to keep the cubic loop quick
    for (std::size_t i = 0; i < edges.size(); i += 3) {
        for (std::size_t j = 0; j < edges.size(); j += 3) {
            for (std::size_t k = 0; k < edges.size(); k += 3) {
                CHECK(edge_distance(edges[i], edges[k]) <=
                      edge_distance(edges[i], edges[j]) + edge_distance(edges[j], edges[k]));
            }
        }
    }
}

TEST_CASE("distances and angles are invariant under translation and the dihedral group") {
    const auto& edges = full_window(4, 4).edges();
    const Vertex shift{17, -9};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            const Edge ti(edges[i].a + shift, edges[i].b + shift);
            const Edge tj(edges[j].a + shift, edges[j].b + shift);
            CHECK(edge_distance(ti, tj) == edge_distance(edges[i], edges[j]));
            for (const auto& g : oracle::dihedral_group()) {
                CHECK(edge_distance(g(edges[i]), g(edges[j])) ==
                      edge_distance(edges[i], edges[j]));
            }
            if (i != j && edge_distance(edges[i], edges[j]) == 1) {
                const auto angle = angular_distance(edges[i], edges[j]);
                CHECK(angular_distance(ti, tj) == angle);
                for (const auto& g : oracle::dihedral_group()) {
                    CHECK(angular_distance(g(edges[i]), g(edges[j])) == angle);
                }
            }
        }
    }
}

TEST_CASE("angular distance of adjacent edges") {
    const Edge h1({0, 0}, {1, 0});
    CHECK(angular_distance(h1, Edge({1, 0}, {2, 0})) == AngularDistance::deg180);
    CHECK(angular_distance(h1, Edge({1, 0}, {2, 1})) == AngularDistance::deg135);
    CHECK(angular_distance(h1, Edge({1, 0}, {1, 1})) == AngularDistance::deg90);
    CHECK(angular_distance(h1, Edge({1, 0}, {0, 1})) == AngularDistance::deg45);

    CHECK_THROWS_AS(angular_distance(h1, h1), std::invalid_argument);
    CHECK_THROWS_AS(angular_distance(h1, Edge({3, 3}, {4, 4})), std::invalid_argument);

    // every adjacent pair folds into {45, 90, 135, 180}
    const auto& edges = full_window(4, 4).edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edge_distance(edges[i], edges[j]) != 1) continue;
            const int deg = static_cast<int>(angular_distance(edges[i], edges[j]));
            CHECK((deg == 45 || deg == 90 || deg == 135 || deg == 180));
        }
    }
}
