#include "octagrid/subgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace octagrid {

std::array<Edge, 6> K4Site::edges() const {
    const auto v = vertex_set();  // {a, a+(1,0), a+(0,1), a+(1,1)}
    return {{
        Edge(v[0], v[1]),  // bottom side
        Edge(v[1], v[3]),  // right side
        Edge(v[2], v[3]),  // top side
        Edge(v[0], v[2]),  // left side
        Edge(v[0], v[3]),  // right-slanting diagonal
        Edge(v[1], v[2]),  // left-slanting diagonal
    }};
}

EdgeSet::EdgeSet(std::vector<Edge> edges, std::vector<Vertex> isolated_vertices) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    vertices_ = std::move(isolated_vertices);
    vertices_.reserve(vertices_.size() + 2 * edges_.size());
    for (const Edge& e : edges_) {
        vertices_.push_back(e.a);
        vertices_.push_back(e.b);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool EdgeSet::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeSet::contains_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Vertex> neighborhood(std::span<const Vertex> s) {
    if (s.empty()) throw std::invalid_argument("neighborhood of empty vertex set");
    std::vector<Vertex> out;
    out.reserve(8 * s.size());
    for (Vertex v : s) {
        const auto nb = neighbors(v);
        out.insert(out.end(), nb.begin(), nb.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<Edge> incident_edges(std::span<const Vertex> support) {
    std::vector<Edge> edges;
    edges.reserve(8 * support.size());
    for (Vertex v : support) {
        for (Vertex u : neighbors(v)) {
            edges.emplace_back(v, u);
        }
    }
    return edges;  // EdgeSet ctor dedupes
}

}  // namespace

EdgeSet build_gs(const K4Site& site) {
    const auto s = site.vertex_set();
    return EdgeSet(incident_edges(s));
}

EdgeSet build_g(const K4Site& site) {
    const auto s = site.vertex_set();
    std::vector<Vertex> closure(s.begin(), s.end());
    for (int hop = 0; hop < 2; ++hop) {
        auto n = neighborhood(closure);
        closure.insert(closure.end(), n.begin(), n.end());
        std::sort(closure.begin(), closure.end());
        closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    }
    return EdgeSet(incident_edges(closure));
}

std::vector<K4Site> enumerate_k4(const EdgeSet& region) {
    std::vector<K4Site> sites;
    for (Vertex v : region.vertices()) {
        const K4Site candidate{v};
        bool ok = true;
        for (const Edge& e : candidate.edges()) {
            if (!region.contains(e)) {
                ok = false;
                break;
            }
        }
        if (ok) sites.push_back(candidate);
    }
    return sites;  // region vertices are sorted, so anchors are too
}

std::vector<std::array<Vertex, 3>> enumerate_k3(const EdgeSet& region) {
    std::vector<std::array<Vertex, 3>> triples;
    for (const Edge& e : region.edges()) {
        // Common king-neighbors of both endpoints, looking only above b
        // so each triangle is reported once with its vertices sorted.
        for (Vertex w : neighbors(e.a)) {
            if (!(e.b < w) || !adjacent(e.b, w)) continue;
            if (region.contains(Edge(e.a, w)) && region.contains(Edge(e.b, w))) {
                triples.push_back({e.a, e.b, w});
            }
        }
    }
    std::sort(triples.begin(), triples.end());
    return triples;
}

EdgeSet full_window(int w, int h, Vertex origin) {
    if (w < 1 || h < 1) throw std::invalid_argument("window dimensions must be positive");
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
    vertices.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    const auto inside = [&](Vertex v) {
        return v.x >= origin.x && v.x < origin.x + w && v.y >= origin.y && v.y < origin.y + h;
    };
    for (int y = origin.y; y < origin.y + h; ++y) {
        for (int x = origin.x; x < origin.x + w; ++x) {
            const Vertex v{x, y};
            vertices.push_back(v);
            for (Vertex u : neighbors(v)) {
                if (v < u && inside(u)) edges.emplace_back(v, u);
            }
        }
    }
    return EdgeSet(std::move(edges), std::move(vertices));
}

}  // namespace octagrid
