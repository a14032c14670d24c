#pragma once

// L(h,k)-edge labelings of T8 regions: labels on edges must differ by at
// least h across line-graph distance 1 and at least k across distance 2.
// Includes total/partial labelings, periodic labelings given by a
// fundamental domain, constraint verification and span computation.

#include <map>
#include <optional>
#include <vector>

#include "octagrid/grid.hpp"
#include "octagrid/subgraph.hpp"

namespace octagrid {

// Total or partial assignment of colors (non-negative integers) to edges.
// Validity is checked by verify(), never assumed.
struct Labeling {
    int h = 1;
    int k = 2;
    std::map<Edge, int> assignment;  // canonical edge order

    std::optional<int> color(const Edge& e) const {
        auto it = assignment.find(e);
        if (it == assignment.end()) return std::nullopt;
        return it->second;
    }
};

// Labels on a px x py fundamental domain, one per edge class per residue
// vertex (edges are identified by the residue of their anchor), repeated
// over T8 by translation. Periods below 6 are rejected by all consumers:
// with px,py >= 6 a translated copy of an edge is never within d' <= 2 of
// itself, so the quotient never aliases a constraint pair onto one edge.
struct PeriodicLabeling {
    int h = 1;
    int k = 2;
    int px = 0;
    int py = 0;
    std::vector<int> labels;  // size 4*px*py, indexed by label_index()

    static std::size_t label_index(int x, int y, EdgeClass cls, int px, int py);

    int label_at(Vertex anchor, EdgeClass cls) const;
    int& label_at(Vertex anchor, EdgeClass cls);

    /// The labeling restricted to every edge whose endpoints lie in the
    /// w x h window at `origin`.
    Labeling instantiate(int w, int h_window, Vertex origin = {0, 0}) const;
};

struct Violation {
    Edge e1;
    Edge e2;
    int distance = 0;      // 1 or 2
    int required_gap = 0;  // h or k
    int actual_gap = 0;

    friend auto operator<=>(const Violation&, const Violation&) = default;
};

// Sorted by canonical edge order; empty iff the checked region satisfies
// every distance-1 and distance-2 constraint.
using ViolationReport = std::vector<Violation>;

struct SpanResult {
    int span = 0;         // max assigned color
    int color_count = 0;  // distinct colors used
};

/// Checks every constrained pair of region edges under lab.h/lab.k.
/// Pairs are measured in the T8 line-graph metric. Assignments outside
/// the region are ignored. Throws std::invalid_argument naming the first
/// region edge that lacks an assignment.
ViolationReport verify(const EdgeSet& region, const Labeling& lab);

/// Instantiates plab on a (2*px+4) x (2*py+4) window and checks every
/// constraint pair whose first edge is anchored in a full-period core
/// block; by translation invariance an empty report certifies the
/// infinite periodic labeling. Throws std::invalid_argument if either
/// period is below 6 or the domain size is wrong.
ViolationReport verify_periodic(const PeriodicLabeling& plab);

/// Max color and distinct color count. Throws std::invalid_argument on an
/// empty assignment.
SpanResult span(const Labeling& lab);

/// True iff assigning `color` to `e` violates a constraint against some
/// already-assigned edge at distance 1 or 2 (e's own entry, if any, is
/// ignored; no constraint applies to the pair (e,e)).
bool is_color_forbidden(const Edge& e, int color, const Labeling& lab);

/// All colors in {0..max_color} whose assignment to `e` would violate a
/// constraint against the partial labeling, in increasing order.
std::vector<int> forbidden_colors(const Edge& e, const Labeling& lab, int max_color);

/// Edges within line-graph distance 1 or 2 of `e`, paired with the
/// distance. Deterministic canonical order.
std::vector<std::pair<Edge, int>> edges_within_two(const Edge& e);

}  // namespace octagrid
