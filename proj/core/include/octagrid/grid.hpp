#pragma once

// Model of the infinite octagonal grid T8 (king graph on the integer
// lattice): vertices, the eight-neighbor adjacency, edge orientation
// classes, angular distance between adjacent edges, and line-graph
// edge distance d'.

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace octagrid {

struct Vertex {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex operator+(Vertex a, Vertex b) { return {a.x + b.x, a.y + b.y}; }
inline Vertex operator-(Vertex a, Vertex b) { return {a.x - b.x, a.y - b.y}; }

/// Chebyshev distance; equals the graph distance between vertices of T8.
inline int chebyshev(Vertex a, Vertex b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

/// Two vertices of T8 are adjacent iff distinct and within a king move.
inline bool adjacent(Vertex a, Vertex b) { return a != b && chebyshev(a, b) == 1; }

/// The 8 king-neighbors of v, in fixed counterclockwise order from (x+1,y).
std::array<Vertex, 8> neighbors(Vertex v);

enum class EdgeClass : std::uint8_t {
    Horizontal,     // displacement (1,0)
    Vertical,       // displacement (0,1)
    RightSlanting,  // displacement (1,1)
    LeftSlanting,   // displacement (1,-1) from the canonical endpoint
};

constexpr int kEdgeClassCount = 4;

inline bool is_slanting(EdgeClass c) {
    return c == EdgeClass::RightSlanting || c == EdgeClass::LeftSlanting;
}

char edge_class_letter(EdgeClass c);  // 'H', 'V', 'R', 'L'

// A geometric edge of T8 in canonical form: a < b lexicographically on
// (x, y), so each edge has exactly one representation and edge sets
// deduplicate by construction. The canonical displacements b - a are
// (1,0) H, (0,1) V, (1,1) R and (1,-1) L; `a` is the anchor.
struct Edge {
    Vertex a;
    Vertex b;

    Edge() = default;
    /// Builds the canonical edge {u, v}. Throws std::invalid_argument
    /// unless u and v are adjacent in T8.
    Edge(Vertex u, Vertex v);

    EdgeClass cls() const;
    Vertex anchor() const { return a; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Anchor + class representation, inverse of Edge::anchor()/Edge::cls().
Edge edge_at(Vertex anchor, EdgeClass cls);

inline EdgeClass edge_class(const Edge& e) { return e.cls(); }

/// Line-graph distance between edges of T8: 0 for e1 == e2, else
/// 1 + min over endpoint pairs of their Chebyshev distance.
int edge_distance(const Edge& e1, const Edge& e2);

enum class AngularDistance : int {
    deg45 = 45,
    deg90 = 90,
    deg135 = 135,
    deg180 = 180,
};

/// Angle between two distinct adjacent edges, measured between their
/// direction vectors outgoing from the shared vertex and folded into
/// {45, 90, 135, 180}. Throws std::invalid_argument unless
/// edge_distance(e1, e2) == 1.
AngularDistance angular_distance(const Edge& e1, const Edge& e2);

std::string to_string(Vertex v);
std::string to_string(const Edge& e);

}  // namespace octagrid

template <>
struct std::hash<octagrid::Vertex> {
    std::size_t operator()(const octagrid::Vertex& v) const noexcept {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.x)) << 32) |
            static_cast<std::uint32_t>(v.y));
    }
};

template <>
struct std::hash<octagrid::Edge> {
    std::size_t operator()(const octagrid::Edge& e) const noexcept {
        std::size_t h1 = std::hash<octagrid::Vertex>{}(e.a);
        std::size_t h2 = std::hash<octagrid::Vertex>{}(e.b);
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};
