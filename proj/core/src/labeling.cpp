#include "octagrid/labeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace octagrid {

namespace {

constexpr std::array<EdgeClass, 4> kClasses = {
    EdgeClass::Horizontal,
    EdgeClass::Vertical,
    EdgeClass::RightSlanting,
    EdgeClass::LeftSlanting,
};

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

int required_gap(int distance, int h, int k) { return distance == 1 ? h : k; }

}  // namespace

std::size_t PeriodicLabeling::label_index(int x, int y, EdgeClass cls, int px, int py) {
    const std::size_t cell =
        static_cast<std::size_t>(mod(y, py)) * static_cast<std::size_t>(px) +
        static_cast<std::size_t>(mod(x, px));
    return cell * 4 + static_cast<std::size_t>(cls);
}

int PeriodicLabeling::label_at(Vertex anchor, EdgeClass cls) const {
    return labels.at(label_index(anchor.x, anchor.y, cls, px, py));
}

int& PeriodicLabeling::label_at(Vertex anchor, EdgeClass cls) {
    return labels.at(label_index(anchor.x, anchor.y, cls, px, py));
}

Labeling PeriodicLabeling::instantiate(int w, int h_window, Vertex origin) const {
    Labeling lab;
    lab.h = h;
    lab.k = k;
    for (const Edge& e : full_window(w, h_window, origin).edges()) {
        lab.assignment.emplace(e, label_at(e.anchor(), e.cls()));
    }
    return lab;
}

std::vector<std::pair<Edge, int>> edges_within_two(const Edge& e) {
    std::vector<std::pair<Edge, int>> out;
    const Vertex base = e.anchor();
    for (int dy = -4; dy <= 4; ++dy) {
        for (int dx = -4; dx <= 4; ++dx) {
            for (EdgeClass cls : kClasses) {
                const Edge other = edge_at({base.x + dx, base.y + dy}, cls);
                if (other == e) continue;
                const int d = edge_distance(e, other);
                if (d <= 2) out.emplace_back(other, d);
            }
        }
    }
    return out;  // anchor scan order, deterministic
}

ViolationReport verify(const EdgeSet& region, const Labeling& lab) {
    for (const Edge& e : region.edges()) {
        if (!lab.assignment.contains(e)) {
            throw std::invalid_argument("region edge " + to_string(e) + " has no assigned color");
        }
    }

    ViolationReport report;
    for (const Edge& e1 : region.edges()) {
        const int c1 = lab.assignment.at(e1);
        for (const auto& [e2, dist] : edges_within_two(e1)) {
            if (!(e1 < e2) || !region.contains(e2)) continue;  // each pair once
            const int c2 = lab.assignment.at(e2);
            const int need = required_gap(dist, lab.h, lab.k);
            const int gap = std::abs(c1 - c2);
            if (gap < need) {
                report.push_back({e1, e2, dist, need, gap});
            }
        }
    }
    std::sort(report.begin(), report.end());
    return report;
}

ViolationReport verify_periodic(const PeriodicLabeling& plab) {
    if (plab.px < 6 || plab.py < 6) {
        throw std::invalid_argument("periodic labeling requires period >= 6 in each axis");
    }
    if (plab.labels.size() != static_cast<std::size_t>(4 * plab.px * plab.py)) {
        throw std::invalid_argument("periodic labeling domain must hold exactly 4*px*py labels");
    }

    // Core anchors [3, 3+px) x [3, 3+py) cover every residue once; all of
    // their distance-<=2 partners exist inside the (2px+4) x (2py+4) window,
    // so by translation invariance every constraint pattern of the infinite
    // labeling is checked at least once. Checking both orientations and
    // deduplicating afterwards keeps patterns whose partner leaves the core.
    const int w = 2 * plab.px + 4;
    const int hh = 2 * plab.py + 4;
    ViolationReport report;
    for (int y = 3; y < 3 + plab.py; ++y) {
        for (int x = 3; x < 3 + plab.px; ++x) {
            for (EdgeClass cls : kClasses) {
                const Edge e1 = edge_at({x, y}, cls);
                const int c1 = plab.label_at(e1.anchor(), e1.cls());
                for (const auto& [e2, dist] : edges_within_two(e1)) {
                    if (e2.a.x < 0 || e2.a.y < 0 || e2.b.x < 0 || e2.b.y < 0 ||
                        e2.a.x >= w || e2.a.y >= hh || e2.b.x >= w || e2.b.y >= hh) {
                        throw std::logic_error("periodic check window too small");
                    }
                    const int c2 = plab.label_at(e2.anchor(), e2.cls());
                    const int need = required_gap(dist, plab.h, plab.k);
                    const int gap = std::abs(c1 - c2);
                    if (gap < need) {
                        report.push_back({std::min(e1, e2), std::max(e1, e2), dist, need, gap});
                    }
                }
            }
        }
    }
    std::sort(report.begin(), report.end());
    report.erase(std::unique(report.begin(), report.end()), report.end());
    return report;
}

SpanResult span(const Labeling& lab) {
    if (lab.assignment.empty()) {
        throw std::invalid_argument("span of an empty labeling is undefined");
    }
    int max_color = 0;
    std::vector<int> colors;
    colors.reserve(lab.assignment.size());
    for (const auto& [e, c] : lab.assignment) {
        max_color = std::max(max_color, c);
        colors.push_back(c);
    }
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return {max_color, static_cast<int>(colors.size())};
}

bool is_color_forbidden(const Edge& e, int color, const Labeling& lab) {
    for (const auto& [e2, c2] : lab.assignment) {
        if (e2 == e) continue;  // no constraint applies to (e, e)
        const int d = edge_distance(e, e2);
        if (d > 2) continue;
        if (std::abs(color - c2) < required_gap(d, lab.h, lab.k)) return true;
    }
    return false;
}

std::vector<int> forbidden_colors(const Edge& e, const Labeling& lab, int max_color) {
    std::vector<int> out;
    for (int c = 0; c <= max_color; ++c) {
        if (is_color_forbidden(e, c, lab)) out.push_back(c);
    }
    return out;
}

}  // namespace octagrid
