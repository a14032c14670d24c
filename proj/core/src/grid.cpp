#include "octagrid/grid.hpp"

#include <stdexcept>

namespace octagrid {

std::array<Vertex, 8> neighbors(Vertex v) {
    return {{
        {v.x + 1, v.y},
        {v.x + 1, v.y + 1},
        {v.x, v.y + 1},
        {v.x - 1, v.y + 1},
        {v.x - 1, v.y},
        {v.x - 1, v.y - 1},
        {v.x, v.y - 1},
        {v.x + 1, v.y - 1},
    }};
}

char edge_class_letter(EdgeClass c) {
    switch (c) {
        case EdgeClass::Horizontal: return 'H';
        case EdgeClass::Vertical: return 'V';
        case EdgeClass::RightSlanting: return 'R';
        case EdgeClass::LeftSlanting: return 'L';
    }
    return '?';
}

Edge::Edge(Vertex u, Vertex v) {
    if (!adjacent(u, v)) {
        throw std::invalid_argument("not a T8 edge: " + to_string(u) + "-" + to_string(v));
    }
    if (v < u) std::swap(u, v);
    a = u;
    b = v;
}

EdgeClass Edge::cls() const {
    const Vertex d = b - a;
    if (d.y == 0) return EdgeClass::Horizontal;
    if (d.x == 0) return EdgeClass::Vertical;
    return d.y > 0 ? EdgeClass::RightSlanting : EdgeClass::LeftSlanting;
}

Edge edge_at(Vertex anchor, EdgeClass cls) {
    switch (cls) {
        case EdgeClass::Horizontal: return Edge(anchor, {anchor.x + 1, anchor.y});
        case EdgeClass::Vertical: return Edge(anchor, {anchor.x, anchor.y + 1});
        case EdgeClass::RightSlanting: return Edge(anchor, {anchor.x + 1, anchor.y + 1});
        case EdgeClass::LeftSlanting: return Edge(anchor, {anchor.x + 1, anchor.y - 1});
    }
    throw std::invalid_argument("bad edge class");
}

int edge_distance(const Edge& e1, const Edge& e2) {
    if (e1 == e2) return 0;
    int best = chebyshev(e1.a, e2.a);
    best = std::min(best, chebyshev(e1.a, e2.b));
    best = std::min(best, chebyshev(e1.b, e2.a));
    best = std::min(best, chebyshev(e1.b, e2.b));
    return 1 + best;
}

namespace {

// Octant index of a king-move direction, counterclockwise from (1,0).
int octant(Vertex d) {
    static constexpr std::array<Vertex, 8> dirs = {{
        {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
    }};
    for (int i = 0; i < 8; ++i) {
        if (dirs[static_cast<std::size_t>(i)] == d) return i;
    }
    throw std::logic_error("not a unit king direction");
}

}  // namespace

AngularDistance angular_distance(const Edge& e1, const Edge& e2) {
    if (e1 == e2) {
        throw std::invalid_argument("angular distance undefined for identical edges");
    }
    Vertex shared;
    bool found = false;
    for (Vertex u : {e1.a, e1.b}) {
        for (Vertex w : {e2.a, e2.b}) {
            if (u == w) {
                shared = u;
                found = true;
            }
        }
    }
    if (!found) {
        throw std::invalid_argument("angular distance undefined for non-adjacent edges " +
                                    to_string(e1) + ", " + to_string(e2));
    }
    const Vertex d1 = (e1.a == shared ? e1.b : e1.a) - shared;
    const Vertex d2 = (e2.a == shared ? e2.b : e2.a) - shared;
    int diff = std::abs(octant(d1) - octant(d2));
    diff = std::min(diff, 8 - diff);
    return static_cast<AngularDistance>(45 * diff);
}

std::string to_string(Vertex v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string to_string(const Edge& e) {
    return to_string(e.a) + "-" + to_string(e.b);
}

}  // namespace octagrid
