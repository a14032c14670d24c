#pragma once

// Independent test oracles. These deliberately avoid the library's
// closed-form distance and fast clique paths: distances come from BFS in
// an explicitly built line graph, cliques from brute-force subset checks.

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

#include "octagrid/grid.hpp"
#include "octagrid/subgraph.hpp"

namespace octagrid::oracle {

/// All-pairs line-graph distances of a region by BFS, with adjacency
/// defined directly as "shares an endpoint". dist[i][j] == -1 when
/// unreachable inside the region.
inline std::vector<std::vector<int>> line_graph_distances(const EdgeSet& region) {
    const auto& edges = region.edges();
    const std::size_t m = edges.size();
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool share = edges[i].a == edges[j].a || edges[i].a == edges[j].b ||
                               edges[i].b == edges[j].a || edges[i].b == edges[j].b;
            if (share) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    std::vector<std::vector<int>> dist(m, std::vector<int>(m, -1));
    for (std::size_t s = 0; s < m; ++s) {
        dist[s][s] = 0;
        std::queue<std::size_t> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            const std::size_t cur = frontier.front();
            frontier.pop();
            for (std::size_t nxt : adj[cur]) {
                if (dist[s][nxt] == -1) {
                    dist[s][nxt] = dist[s][cur] + 1;
                    frontier.push(nxt);
                }
            }
        }
    }
    return dist;
}

/// All 4-cliques of the region's vertex set under king adjacency, by
/// checking every 4-subset. Each clique is returned sorted.
inline std::vector<std::array<Vertex, 4>> brute_force_k4(const std::vector<Vertex>& vertices) {
    std::vector<std::array<Vertex, 4>> cliques;
    const std::size_t n = vertices.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!adjacent(vertices[a], vertices[b])) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!adjacent(vertices[a], vertices[c]) || !adjacent(vertices[b], vertices[c])) {
                    continue;
                }
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (adjacent(vertices[a], vertices[d]) && adjacent(vertices[b], vertices[d]) &&
                        adjacent(vertices[c], vertices[d])) {
                        cliques.push_back({vertices[a], vertices[b], vertices[c], vertices[d]});
                    }
                }
            }
        }
    }
    return cliques;
}

// The 8 symmetries of the square lattice as coordinate maps.
struct Transform {
    int xx, xy, yx, yy;
    Vertex operator()(Vertex v) const { return {xx * v.x + xy * v.y, yx * v.x + yy * v.y}; }
    Edge operator()(const Edge& e) const { return Edge((*this)(e.a), (*this)(e.b)); }
};

inline const std::array<Transform, 8>& dihedral_group() {
    static const std::array<Transform, 8> group = {{
        {1, 0, 0, 1},    // identity
        {0, -1, 1, 0},   // rotate 90
        {-1, 0, 0, -1},  // rotate 180
        {0, 1, -1, 0},   // rotate 270
        {-1, 0, 0, 1},   // mirror x
        {1, 0, 0, -1},   // mirror y
        {0, 1, 1, 0},    // mirror diagonal
        {0, -1, -1, 0},  // mirror anti-diagonal
    }};
    return group;
}

}  // namespace octagrid::oracle
