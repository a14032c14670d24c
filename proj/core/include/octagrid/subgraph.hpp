#pragma once

// Finite subgraphs of T8: K4 sites (unit 2x2 blocks, the only 4-cliques
// of the king graph), edge sets, the closed edge neighborhood G_S of a
// K4, its two-hop closure G, and K3/K4 enumeration.

#include <array>
#include <span>
#include <vector>

#include "octagrid/grid.hpp"

namespace octagrid {

// A K4 of T8, identified by its minimum-coordinate corner.
struct K4Site {
    Vertex anchor;

    std::array<Vertex, 4> vertex_set() const {
        return {{anchor,
                 {anchor.x + 1, anchor.y},
                 {anchor.x, anchor.y + 1},
                 {anchor.x + 1, anchor.y + 1}}};
    }

    /// The 6 induced edges: 4 sides then the 2 diagonals.
    std::array<Edge, 6> edges() const;

    friend auto operator<=>(const K4Site&, const K4Site&) = default;
};

// A finite edge collection with its vertex support, both kept sorted in
// canonical order so iteration, reports and certificates are reproducible.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges, std::vector<Vertex> isolated_vertices = {});

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    bool contains(const Edge& e) const;
    bool contains_vertex(Vertex v) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  private:
    std::vector<Edge> edges_;      // sorted, unique
    std::vector<Vertex> vertices_; // sorted, unique; endpoints plus isolated
};

/// Union of king-neighborhoods of the members of S (may intersect S).
std::vector<Vertex> neighborhood(std::span<const Vertex> s);

/// G_S: all edges of T8 incident to at least one vertex of the site's K4;
/// vertices S ∪ N(S). 26 edges, 16 vertices, any two edges within d' <= 2.
EdgeSet build_gs(const K4Site& site);

/// G: with S' = S ∪ N(S) ∪ N(N(S)), all edges of T8 incident to at least
/// one vertex of S'. Contains 25 K4 sites including the central one.
EdgeSet build_g(const K4Site& site);

/// All K4 sites whose 4 vertices and 6 induced edges lie in the region.
std::vector<K4Site> enumerate_k4(const EdgeSet& region);

/// All 3-cliques whose 3 induced edges lie in the region, as sorted
/// vertex triples.
std::vector<std::array<Vertex, 3>> enumerate_k3(const EdgeSet& region);

/// Every edge with both endpoints inside the w x h vertex window whose
/// minimum corner is `origin`.
EdgeSet full_window(int w, int h, Vertex origin = {0, 0});

}  // namespace octagrid
