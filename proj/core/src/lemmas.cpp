#include "octagrid/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace octagrid {

namespace {

constexpr int kBaseColor = 100;  // exclusion structure is shift-invariant
constexpr K4Site kCentral{{0, 0}};

void run_indexed(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t worker_count = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += worker_count) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

ClaimResult make_claim(std::string id, long long scenarios, long long found, long long paper_min,
                       bool exact) {
    ClaimResult c;
    c.claim_id = std::move(id);
    c.scenario_count = scenarios;
    c.min_excluded_found = found;
    c.paper_min = paper_min;
    c.exact = exact;
    c.pass = exact ? (found == paper_min) : (found >= paper_min);
    return c;
}

struct AngularCaseInfo {
    std::string id;
    long long major_min;  // stronger side of the paper's split
    long long minor_min;  // weaker side
};

AngularCaseInfo classify_pair(const Edge& e1, const Edge& e2) {
    const AngularDistance angle = angular_distance(e1, e2);
    const bool s1 = is_slanting(e1.cls());
    const bool s2 = is_slanting(e2.cls());
    switch (angle) {
        case AngularDistance::deg180:
            return s1 ? AngularCaseInfo{"lemma1_180_slanting", 3, 3}
                      : AngularCaseInfo{"lemma1_180_nonslanting", 2, 2};
        case AngularDistance::deg135:
            return {"lemma1_135", 3, 2};
        case AngularDistance::deg90:
            return (s1 && s2) ? AngularCaseInfo{"lemma1_90_slanting_slanting", 3, 3}
                              : AngularCaseInfo{"lemma1_90_horizontal_vertical", 2, 2};
        case AngularDistance::deg45:
            return {"lemma1_45", 2, 1};
    }
    throw std::logic_error("unclassifiable adjacent pair");
}

}  // namespace

std::string to_string(TripleShape shape) {
    switch (shape) {
        case TripleShape::K3SlantingMiddle: return "k3_slanting_middle";
        case TripleShape::NonK3SlantingMiddle: return "non_k3_slanting_middle";
        case TripleShape::K3NonSlantingMiddle: return "k3_nonslanting_middle";
        case TripleShape::NonK3NonSlantingMiddle: return "non_k3_nonslanting_middle";
    }
    return "?";
}

Labeling ExclusionScenario::as_labeling() const {
    Labeling lab;
    lab.h = 1;
    lab.k = 2;
    for (const auto& [e, c] : labeled_edges) lab.assignment.emplace(e, c);
    return lab;
}

std::vector<K4Site> excluded_k4s(const ExclusionScenario& scenario, int color) {
    if (scenario.labeled_edges.size() < 2 || scenario.labeled_edges.size() > 3) {
        throw std::invalid_argument("exclusion scenario must label 2 or 3 edges");
    }
    const EdgeSet gs = build_gs(scenario.central_site);
    for (const auto& [e, c] : scenario.labeled_edges) {
        if (!gs.contains(e)) {
            throw std::invalid_argument("scenario edge " + to_string(e) +
                                        " lies outside G_S of the central site");
        }
        if (c < 0) throw std::invalid_argument("scenario colors must be non-negative");
    }

    const Labeling lab = scenario.as_labeling();
    std::vector<K4Site> excluded;
    for (const K4Site& site : enumerate_k4(build_g(scenario.central_site))) {
        if (site == scenario.central_site) continue;
        bool all_forbidden = true;
        for (const Edge& e : build_gs(site).edges()) {
            if (!is_color_forbidden(e, color, lab)) {
                all_forbidden = false;
                break;
            }
        }
        if (all_forbidden) excluded.push_back(site);
    }
    return excluded;
}

LemmaReport check_lemma1(int threads) {
    const EdgeSet gs = build_gs(kCentral);
    const auto& edges = gs.edges();

    // Directed scenarios (c on the first edge, c+1 on the second) for every
    // unordered adjacent pair; both directions are enumerated even though
    // they mirror each other under color complement, so the symmetry is
    // exercised rather than assumed.
    std::vector<std::pair<Edge, Edge>> directed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edge_distance(edges[i], edges[j]) != 1) continue;
            directed.emplace_back(edges[i], edges[j]);
            directed.emplace_back(edges[j], edges[i]);
        }
    }

    std::vector<ScenarioRecord> records(2 * directed.size());
    run_indexed(directed.size(), threads, [&](std::size_t idx) {
        const auto& [first, second] = directed[idx];
        ExclusionScenario sc;
        sc.central_site = kCentral;
        sc.labeled_edges = {{first, kBaseColor}, {second, kBaseColor + 1}};
        sc.angular_case = angular_distance(first, second);
        records[2 * idx] = {sc, kBaseColor, excluded_k4s(sc, kBaseColor)};
        records[2 * idx + 1] = {sc, kBaseColor + 1, excluded_k4s(sc, kBaseColor + 1)};
    });

    struct Agg {
        long long scenarios = 0;
        long long major = -1;
        long long minor = -1;
        long long major_min = 0;
        long long minor_min = 0;
    };
    std::map<std::string, Agg> by_case;
    for (std::size_t idx = 0; idx < directed.size(); ++idx) {
        const auto& [first, second] = directed[idx];
        const AngularCaseInfo info = classify_pair(first, second);
        const auto count_c = static_cast<long long>(records[2 * idx].excluded.size());
        const auto count_c1 = static_cast<long long>(records[2 * idx + 1].excluded.size());
        const long long hi = std::max(count_c, count_c1);
        const long long lo = std::min(count_c, count_c1);
        Agg& agg = by_case[info.id];
        agg.scenarios += 1;
        agg.major = agg.major < 0 ? hi : std::min(agg.major, hi);
        agg.minor = agg.minor < 0 ? lo : std::min(agg.minor, lo);
        agg.major_min = info.major_min;
        agg.minor_min = info.minor_min;
    }

    LemmaReport report;
    report.scenarios = std::move(records);
    for (const auto& [id, agg] : by_case) {
        report.claims.push_back(
            make_claim(id + "_strong_side", agg.scenarios, agg.major, agg.major_min, false));
        report.claims.push_back(
            make_claim(id + "_weak_side", agg.scenarios, agg.minor, agg.minor_min, false));
    }
    report.claims.push_back(make_claim("lemma1_angular_cases_covered",
                                       static_cast<long long>(directed.size()),
                                       static_cast<long long>(by_case.size()), 6, true));
    return report;
}

LemmaReport check_lemma_triples(int threads) {
    const EdgeSet gs = build_gs(kCentral);
    const auto& edges = gs.edges();

    // Valid consecutive triples: both outer edges must sit at distance 1
    // from the middle edge, otherwise the unit color gap already violates
    // the distance-2 rule and the scenario cannot occur in any labeling.
    struct Triple {
        Edge low, mid, high;
        TripleShape shape;
    };
    std::vector<Triple> triples;
    for (const Edge& mid : edges) {
        std::vector<Edge> around;
        for (const Edge& f : edges) {
            if (f != mid && edge_distance(mid, f) == 1) around.push_back(f);
        }
        for (std::size_t i = 0; i < around.size(); ++i) {
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                std::set<Vertex> support;
                for (const Edge& e : {around[i], mid, around[j]}) {
                    support.insert(e.a);
                    support.insert(e.b);
                }
                const bool k3 = support.size() == 3;
                const bool slanting = is_slanting(mid.cls());
                const TripleShape shape =
                    k3 ? (slanting ? TripleShape::K3SlantingMiddle
                                   : TripleShape::K3NonSlantingMiddle)
                       : (slanting ? TripleShape::NonK3SlantingMiddle
                                   : TripleShape::NonK3NonSlantingMiddle);
                triples.push_back({around[i], mid, around[j], shape});
            }
        }
    }

    std::vector<ScenarioRecord> records(triples.size());
    run_indexed(triples.size(), threads, [&](std::size_t idx) {
        const Triple& t = triples[idx];
        ExclusionScenario sc;
        sc.central_site = kCentral;
        sc.labeled_edges = {
            {t.low, kBaseColor - 1}, {t.mid, kBaseColor}, {t.high, kBaseColor + 1}};
        sc.triple_shape = t.shape;
        records[idx] = {sc, kBaseColor, excluded_k4s(sc, kBaseColor)};
    });

    const std::map<TripleShape, long long> paper_min = {
        {TripleShape::K3SlantingMiddle, 1},
        {TripleShape::NonK3SlantingMiddle, 2},
        {TripleShape::K3NonSlantingMiddle, 2},
        {TripleShape::NonK3NonSlantingMiddle, 3},
    };
    std::map<TripleShape, std::pair<long long, long long>> agg;  // shape -> (count, min)
    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
        auto& [count, min_found] = agg[triples[idx].shape];
        const auto found = static_cast<long long>(records[idx].excluded.size());
        min_found = count == 0 ? found : std::min(min_found, found);
        count += 1;
    }

    LemmaReport report;
    report.scenarios = std::move(records);
    for (const auto& [shape, minimum] : paper_min) {
        const auto it = agg.find(shape);
        const long long count = it == agg.end() ? 0 : it->second.first;
        const long long found = it == agg.end() ? -1 : it->second.second;
        report.claims.push_back(
            make_claim("triples_" + to_string(shape), count, found, minimum, false));
    }
    return report;
}

LemmaReport check_observation1() {
    const EdgeSet gs = build_gs(kCentral);
    const auto k3s = enumerate_k3(gs);
    const auto central_edges = kCentral.edges();
    const std::vector<Edge> sides(central_edges.begin(), central_edges.begin() + 4);

    LemmaReport report;
    report.claims.push_back(
        make_claim("obs1_k3_count", 1, static_cast<long long>(k3s.size()), 12, true));

    long long k3_with_side = 0;
    long long k3_one_of_each_class = 0;
    for (const auto& tri : k3s) {
        const std::array<Edge, 3> tri_edges = {
            Edge(tri[0], tri[1]), Edge(tri[0], tri[2]), Edge(tri[1], tri[2])};
        bool has_side = false;
        int horizontal = 0, vertical = 0, slanting = 0;
        for (const Edge& e : tri_edges) {
            if (std::find(sides.begin(), sides.end(), e) != sides.end()) has_side = true;
            switch (e.cls()) {
                case EdgeClass::Horizontal: ++horizontal; break;
                case EdgeClass::Vertical: ++vertical; break;
                default: ++slanting; break;
            }
        }
        if (has_side) ++k3_with_side;
        if (horizontal == 1 && vertical == 1 && slanting == 1) ++k3_one_of_each_class;
    }
    report.claims.push_back(make_claim("obs1_every_k3_contains_side_edge",
                                       static_cast<long long>(k3s.size()), k3_with_side,
                                       static_cast<long long>(k3s.size()), true));
    report.claims.push_back(make_claim("obs1_k3_one_horizontal_one_vertical_one_slanting",
                                       static_cast<long long>(k3s.size()), k3_one_of_each_class,
                                       static_cast<long long>(k3s.size()), true));

    // Per side edge: exactly 4 K3s; their 8 companion edges are pairwise
    // distinct and mutually within distance 2, so in a valid labeling each
    // companion color appears once and only the two colors c±1 can complete
    // a consecutive triple. Cap: 2 per side edge, 8 overall.
    long long per_edge_counts_ok = 0;
    long long companions_ok = 0;
    long long cap_total = 0;
    for (const Edge& side : sides) {
        std::vector<Edge> companions;
        int triangle_count = 0;
        for (const auto& tri : k3s) {
            const std::array<Edge, 3> tri_edges = {
                Edge(tri[0], tri[1]), Edge(tri[0], tri[2]), Edge(tri[1], tri[2])};
            if (std::find(tri_edges.begin(), tri_edges.end(), side) == tri_edges.end()) continue;
            ++triangle_count;
            for (const Edge& e : tri_edges) {
                if (e != side) companions.push_back(e);
            }
        }
        if (triangle_count == 4) ++per_edge_counts_ok;

        std::sort(companions.begin(), companions.end());
        const bool distinct =
            std::adjacent_find(companions.begin(), companions.end()) == companions.end();
        bool mutually_close = true;
        for (std::size_t i = 0; i < companions.size(); ++i) {
            for (std::size_t j = i + 1; j < companions.size(); ++j) {
                if (edge_distance(companions[i], companions[j]) > 2) mutually_close = false;
            }
        }
        if (distinct && companions.size() == 8 && mutually_close) {
            ++companions_ok;
            cap_total += 2;  // at most one companion can carry c-1 and one c+1
        }
    }
    report.claims.push_back(make_claim("obs1_each_side_edge_in_4_k3s", 4, per_edge_counts_ok, 4,
                                       true));
    report.claims.push_back(
        make_claim("obs1_companion_edges_distinct_and_close", 4, companions_ok, 4, true));
    report.claims.push_back(make_claim("obs1_consecutive_triple_cap", 4, cap_total, 8, true));
    return report;
}

PigeonholeAudit pigeonhole_audit(const std::vector<int>& unused_colors, int palette_max) {
    PigeonholeAudit audit;
    audit.palette_max = palette_max;
    audit.unused_colors = unused_colors;
    std::sort(audit.unused_colors.begin(), audit.unused_colors.end());

    for (int c : audit.unused_colors) {
        if (c < 0 || c > palette_max) {
            throw std::invalid_argument("unused color outside the palette");
        }
    }

    switch (palette_max) {
        case 25: {
            if (!audit.unused_colors.empty()) {
                throw std::invalid_argument("palette 25 leaves no unused color");
            }
            // All 26 colors appear in G_S; one consecutive pair on adjacent
            // edges already excludes a color from at least one other site.
            audit.demanded = 1;
            break;
        }
        case 26: {
            if (audit.unused_colors.size() != 1) {
                throw std::invalid_argument("palette 26 leaves exactly one unused color");
            }
            const int skipped = audit.unused_colors.front();
            // Even (or boundary) skipped color: 13 disjoint consecutive
            // pairs, two exclusion sites each. Odd skipped color: 12 pairs
            // plus one extra boundary pair.
            audit.demanded = (skipped % 2 == 1) ? 25 : 26;
            audit.distinct_colors_caveat = false;
            break;
        }
        case 27: {
            if (audit.unused_colors.size() != 2) {
                throw std::invalid_argument("palette 27 leaves exactly two unused colors");
            }
            const int c1 = audit.unused_colors[0];
            const int c2 = audit.unused_colors[1];
            std::set<int> x_set = {0, c1 - 1, c1 + 1, c2 - 1, c2 + 1, 27};
            audit.x_set_distinct = x_set.size() == 6 && *x_set.begin() >= 0 &&
                                   *x_set.rbegin() <= 27 && !x_set.contains(c1) &&
                                   !x_set.contains(c2) && c1 != c2;
            for (long long x = 0; x <= 8; ++x) {
                // 6 single-sided colors, x slanting K3 triples, 8-x slanting
                // non-K3 triples, 8-x non-slanting K3 triples, 4+x
                // non-slanting non-K3 triples.
                audit.demand_by_x.push_back(6 + x + 2 * (8 - x) + 2 * (8 - x) + 3 * (4 + x));
            }
            audit.demanded =
                *std::min_element(audit.demand_by_x.begin(), audit.demand_by_x.end());
            audit.distinct_colors_caveat = true;
            break;
        }
        default:
            throw std::invalid_argument("pigeonhole audit supports palettes 25, 26 and 27");
    }

    audit.implied_missing = static_cast<int>((audit.demanded + audit.holes - 1) / audit.holes);
    audit.implied_lower_bound = 25 + audit.implied_missing;
    return audit;
}

std::vector<PigeonholeAudit> lower_bound_chain() {
    return {
        pigeonhole_audit({}, 25),
        pigeonhole_audit({0}, 26),
        pigeonhole_audit({3}, 26),
        pigeonhole_audit({10, 17}, 27),
    };
}

LemmaReport check_pigeonhole() {
    LemmaReport report;

    const auto sites = enumerate_k4(build_g(kCentral));
    report.claims.push_back(
        make_claim("pigeonhole_k4_sites_in_g", 1, static_cast<long long>(sites.size()), 25, true));
    long long full_gs = 0;
    for (const K4Site& s : sites) {
        if (build_gs(s).size() == 26) ++full_gs;
    }
    report.claims.push_back(make_claim("pigeonhole_every_site_has_26_edge_gs",
                                       static_cast<long long>(sites.size()), full_gs, 25, true));
    report.claims.push_back(make_claim("pigeonhole_holes", 1,
                                       static_cast<long long>(sites.size()) - 1, 24, true));

    const auto chain = lower_bound_chain();
    report.claims.push_back(make_claim("pigeonhole_palette25_demand", 1, chain[0].demanded, 1,
                                       true));
    report.claims.push_back(make_claim("pigeonhole_palette26_demand_even", 1, chain[1].demanded,
                                       26, true));
    report.claims.push_back(make_claim("pigeonhole_palette26_demand_odd", 1, chain[2].demanded,
                                       25, true));

    const auto& thm3 = chain[3];
    const bool constant =
        std::all_of(thm3.demand_by_x.begin(), thm3.demand_by_x.end(),
                    [](long long d) { return d == 50; });
    report.claims.push_back(make_claim("pigeonhole_palette27_demand_constant_50",
                                       static_cast<long long>(thm3.demand_by_x.size()),
                                       constant ? 50 : -1, 50, true));

    report.claims.push_back(make_claim("pigeonhole_chain_lower_bound", 4,
                                       chain.back().implied_lower_bound, 28, true));
    return report;
}

bool LemmaReport::pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

const ClaimResult* LemmaReport::find(const std::string& claim_id) const {
    for (const auto& c : claims) {
        if (c.claim_id == claim_id) return &c;
    }
    return nullptr;
}

}  // namespace octagrid
