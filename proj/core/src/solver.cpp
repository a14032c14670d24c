#include "octagrid/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace octagrid {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Sat: return "SAT";
        case Verdict::UnsatExhausted: return "UNSAT-exhausted";
        case Verdict::UnknownBudget: return "UNKNOWN-budget";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxColors = 512;
constexpr int kWords = kMaxColors / 64;

// Fixed-capacity color set.
struct Bits {
    std::array<std::uint64_t, kWords> w{};

    void fill_upto(int n) {
        for (int i = 0; i <= n; ++i) w[i >> 6] |= 1ULL << (i & 63);
    }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }
    void clear_range(int lo, int hi) {  // clamps to [0, kMaxColors)
        lo = std::max(lo, 0);
        hi = std::min(hi, kMaxColors - 1);
        for (int i = lo; i <= hi; ++i) w[i >> 6] &= ~(1ULL << (i & 63));
    }
    void keep_upto(int n) { clear_range(n + 1, kMaxColors - 1); }
    int count() const {
        int c = 0;
        for (auto word : w) c += __builtin_popcountll(word);
        return c;
    }
    bool none() const {
        for (auto word : w) {
            if (word) return false;
        }
        return true;
    }
    int first() const {
        for (int i = 0; i < kWords; ++i) {
            if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
        }
        return -1;
    }
    int next(int after) const {  // first set bit > after, or -1
        for (int i = after + 1; i < kMaxColors;) {
            std::uint64_t word = w[i >> 6] >> (i & 63);
            if (word) return i + __builtin_ctzll(word);
            i = (i | 63) + 1;
        }
        return -1;
    }
    void or_with(const Bits& o) {
        for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
    }
};

// Pairwise minimum-gap constraints over integer variables; the shared
// search core behind feasible() and periodic_search().
struct GapSystem {
    int var_count = 0;
    std::vector<std::vector<std::pair<int, int>>> adj;  // var -> (other, gap)
    // Variable sets that are pairwise gap >= 1 and therefore need pairwise
    // distinct colors; used for the counting prune that detects pigeonhole
    // infeasibility (e.g. 26 mutually close edges vs 25 colors) without
    // descending into the tree.
    std::vector<std::vector<int>> cliques;

    void add_pair(int a, int b, int gap) {
        adj[static_cast<std::size_t>(a)].emplace_back(b, gap);
        adj[static_cast<std::size_t>(b)].emplace_back(a, gap);
    }

    void finalize() {
        for (auto& list : adj) std::sort(list.begin(), list.end());
        build_cliques();
    }

    int max_clique_size() const {
        std::size_t best = 0;
        for (const auto& c : cliques) best = std::max(best, c.size());
        return static_cast<int>(best);
    }

  private:
    void build_cliques() {
        const auto n = static_cast<std::size_t>(var_count);
        std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
        for (std::size_t v = 0; v < n; ++v) {
            for (const auto& [u, gap] : adj[v]) {
                if (gap >= 1) linked[v][static_cast<std::size_t>(u)] = true;
            }
        }
        std::vector<std::vector<int>> found;
        for (std::size_t seed = 0; seed < n; ++seed) {
            std::vector<int> clique = {static_cast<int>(seed)};
            std::vector<bool> common = linked[seed];
            for (std::size_t u = 0; u < n; ++u) {
                if (!common[u]) continue;
                clique.push_back(static_cast<int>(u));
                for (std::size_t t = 0; t < n; ++t) common[t] = common[t] && linked[u][t];
            }
            if (clique.size() >= 3) {
                std::sort(clique.begin(), clique.end());
                found.push_back(std::move(clique));
            }
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        cliques = std::move(found);
    }
};

struct Budget {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t node_budget = 0;
    Clock::time_point deadline;
    std::atomic<bool> tripped{false};

    // Returns false when the budget is exhausted.
    bool tick() {
        const std::uint64_t seen = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (seen > node_budget) {
            tripped.store(true, std::memory_order_relaxed);
            return false;
        }
        if ((seen & 1023) == 0 && Clock::now() > deadline) {
            tripped.store(true, std::memory_order_relaxed);
            return false;
        }
        return !tripped.load(std::memory_order_relaxed);
    }
};

enum class SubtreeResult { Sat, Exhausted, BudgetCut };

struct Worker {
    const GapSystem& sys;
    int n;
    SearchConfig::VariableOrder order;
    Budget& budget;
    std::atomic<bool>* stop_on_sat = nullptr;  // parallel mode: someone found Sat

    std::vector<Bits> domain;
    std::vector<int> value;
    int unassigned = 0;
    int max_depth = 0;

    struct Undo {
        int var;
        Bits old;
    };
    std::vector<Undo> trail;

    Worker(const GapSystem& s, int max_color, SearchConfig::VariableOrder ord, Budget& b)
        : sys(s), n(max_color), order(ord), budget(b) {
        Bits full;
        full.fill_upto(n);
        domain.assign(static_cast<std::size_t>(sys.var_count), full);
        value.assign(static_cast<std::size_t>(sys.var_count), -1);
        unassigned = sys.var_count;
    }

    bool cliques_ok() const {
        for (const auto& clique : sys.cliques) {
            int open = 0;
            Bits pool;
            for (int v : clique) {
                if (value[static_cast<std::size_t>(v)] >= 0) continue;
                ++open;
                pool.or_with(domain[static_cast<std::size_t>(v)]);
            }
            if (open > 0 && pool.count() < open) return false;
        }
        return true;
    }

    int pick_var() const {
        int best = -1;
        int best_size = kMaxColors + 1;
        for (int v = 0; v < sys.var_count; ++v) {
            if (value[static_cast<std::size_t>(v)] >= 0) continue;
            if (order == SearchConfig::VariableOrder::StaticCanonical) return v;
            const int size = domain[static_cast<std::size_t>(v)].count();
            if (size < best_size) {
                best_size = size;
                best = v;
            }
        }
        return best;
    }

    bool propagate(int var, int color) {
        for (const auto& [u, gap] : sys.adj[static_cast<std::size_t>(var)]) {
            auto& dom = domain[static_cast<std::size_t>(u)];
            if (value[static_cast<std::size_t>(u)] >= 0) continue;
            const int lo = color - gap + 1;
            const int hi = color + gap - 1;
            if (lo > hi) continue;
            trail.push_back({u, dom});
            dom.clear_range(lo, hi);
            if (dom.none()) return false;
        }
        return cliques_ok();
    }

    void rewind(std::size_t mark) {
        while (trail.size() > mark) {
            domain[static_cast<std::size_t>(trail.back().var)] = trail.back().old;
            trail.pop_back();
        }
    }

    SubtreeResult assign_and_descend(int var, int color, int depth) {
        if (!budget.tick()) return SubtreeResult::BudgetCut;
        if (stop_on_sat != nullptr && stop_on_sat->load(std::memory_order_relaxed)) {
            return SubtreeResult::BudgetCut;  // cancelled; certificate comes from the Sat worker
        }
        max_depth = std::max(max_depth, depth);
        const std::size_t mark = trail.size();
        value[static_cast<std::size_t>(var)] = color;
        --unassigned;
        if (propagate(var, color)) {
            const SubtreeResult sub = dfs(depth + 1);
            if (sub != SubtreeResult::Exhausted) return sub;  // keep assignment on Sat
        }
        rewind(mark);
        value[static_cast<std::size_t>(var)] = -1;
        ++unassigned;
        return SubtreeResult::Exhausted;
    }

    SubtreeResult dfs(int depth) {
        if (unassigned == 0) return SubtreeResult::Sat;
        const int var = pick_var();
        const Bits& dom = domain[static_cast<std::size_t>(var)];
        bool cut = false;
        for (int c = dom.first(); c >= 0; c = dom.next(c)) {
            const SubtreeResult sub = assign_and_descend(var, c, depth);
            if (sub == SubtreeResult::Sat) return sub;
            if (sub == SubtreeResult::BudgetCut) {
                cut = true;
                break;
            }
        }
        return cut ? SubtreeResult::BudgetCut : SubtreeResult::Exhausted;
    }
};

struct CoreResult {
    Verdict verdict = Verdict::UnknownBudget;
    std::vector<int> values;  // Sat only
    std::uint64_t nodes = 0;
    int max_depth = 0;
    double elapsed_ms = 0.0;
};

/// The shared deterministic search: MCF (or static) variable order,
/// ascending values, forward gap propagation, clique counting prune,
/// optional complement symmetry breaking on the first branched variable.
CoreResult solve_system(const GapSystem& sys, int max_color, const SearchConfig& cfg) {
    if (max_color < 0) throw std::invalid_argument("max color must be non-negative");
    if (max_color >= kMaxColors) {
        throw std::invalid_argument("max color exceeds engine capacity (" +
                                    std::to_string(kMaxColors - 1) + ")");
    }

    const auto start = Clock::now();
    Budget budget;
    budget.node_budget = cfg.node_budget;
    budget.deadline =
        start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(std::max(cfg.time_budget_seconds, 0.0)));

    CoreResult out;
    const auto finish = [&](Verdict v, const std::vector<int>* vals, int depth) {
        out.verdict = v;
        if (vals != nullptr) out.values = *vals;
        out.nodes = budget.nodes.load();
        out.max_depth = std::max(out.max_depth, depth);
        out.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return out;
    };

    if (sys.var_count == 0) {
        return finish(Verdict::Sat, nullptr, 0);
    }

    Worker root_worker(sys, max_color, cfg.variable_order, budget);
    if (!root_worker.cliques_ok()) {
        // Pigeonhole refutation before any branching: some pairwise-distinct
        // set already has fewer colors than members.
        return finish(Verdict::UnsatExhausted, nullptr, 0);
    }

    const int root_var = root_worker.pick_var();
    if (cfg.symmetry_breaking) {
        root_worker.domain[static_cast<std::size_t>(root_var)].keep_upto(max_color / 2);
    }

    if (cfg.threads <= 1) {
        const SubtreeResult r = root_worker.dfs(0);
        out.max_depth = root_worker.max_depth;
        switch (r) {
            case SubtreeResult::Sat: return finish(Verdict::Sat, &root_worker.value, 0);
            case SubtreeResult::Exhausted: return finish(Verdict::UnsatExhausted, nullptr, 0);
            case SubtreeResult::BudgetCut: return finish(Verdict::UnknownBudget, nullptr, 0);
        }
    }

    // Parallel mode: workers claim first-level branches in ascending order.
    std::vector<int> root_values;
    {
        const Bits& dom = root_worker.domain[static_cast<std::size_t>(root_var)];
        for (int c = dom.first(); c >= 0; c = dom.next(c)) root_values.push_back(c);
    }
    std::atomic<std::size_t> next_branch{0};
    std::atomic<bool> sat_found{false};
    std::atomic<bool> any_cut{false};
    std::mutex result_mutex;
    std::vector<int> sat_values;
    int depth_seen = 0;

    const auto worker_main = [&] {
        Worker w(sys, max_color, cfg.variable_order, budget);
        w.stop_on_sat = &sat_found;
        if (cfg.symmetry_breaking) {
            w.domain[static_cast<std::size_t>(root_var)].keep_upto(max_color / 2);
        }
        for (;;) {
            const std::size_t i = next_branch.fetch_add(1);
            if (i >= root_values.size()) break;
            if (sat_found.load()) break;
            const SubtreeResult r = w.assign_and_descend(root_var, root_values[i], 0);
            if (r == SubtreeResult::Sat) {
                std::lock_guard<std::mutex> lock(result_mutex);
                if (!sat_found.exchange(true)) sat_values = w.value;
                break;
            }
            if (r == SubtreeResult::BudgetCut) {
                if (!sat_found.load()) any_cut.store(true);
                break;
            }
        }
        std::lock_guard<std::mutex> lock(result_mutex);
        depth_seen = std::max(depth_seen, w.max_depth);
    };

    std::vector<std::thread> pool;
    const int thread_count =
        std::max(1, std::min<int>(cfg.threads, static_cast<int>(root_values.size())));
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker_main);
    for (auto& t : pool) t.join();

    if (sat_found.load()) return finish(Verdict::Sat, &sat_values, depth_seen);
    if (any_cut.load() || budget.tripped.load()) {
        return finish(Verdict::UnknownBudget, nullptr, depth_seen);
    }
    return finish(Verdict::UnsatExhausted, nullptr, depth_seen);
}

GapSystem system_from_region(const EdgeSet& region, int h, int k) {
    GapSystem sys;
    sys.var_count = static_cast<int>(region.size());
    sys.adj.resize(region.size());
    const auto& edges = region.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const int d = edge_distance(edges[i], edges[j]);
            if (d > 2) continue;
            const int gap = d == 1 ? h : k;
            if (gap > 0) sys.add_pair(static_cast<int>(i), static_cast<int>(j), gap);
        }
    }
    sys.finalize();
    return sys;
}

Labeling labeling_from_values(const EdgeSet& region, const std::vector<int>& values, int h,
                              int k) {
    Labeling lab;
    lab.h = h;
    lab.k = k;
    const auto& edges = region.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        lab.assignment.emplace(edges[i], values[i]);
    }
    return lab;
}

void validate_hk(int h, int k) {
    if (h < 0 || k < 0) throw std::invalid_argument("h and k must be non-negative");
}

}  // namespace

SearchCertificate feasible(const EdgeSet& region, int max_color, int h, int k,
                           const SearchConfig& cfg) {
    if (region.empty()) throw std::invalid_argument("feasible: empty region");
    validate_hk(h, k);

    const GapSystem sys = system_from_region(region, h, k);
    const CoreResult core = solve_system(sys, max_color, cfg);

    SearchCertificate cert;
    cert.verdict = core.verdict;
    cert.max_color = max_color;
    cert.nodes_explored = core.nodes;
    cert.max_depth = core.max_depth;
    cert.elapsed_ms = core.elapsed_ms;
    if (core.verdict == Verdict::Sat) {
        Labeling witness = labeling_from_values(region, core.values, h, k);
        if (!verify(region, witness).empty()) {
            throw std::logic_error("search produced an invalid witness");
        }
        cert.witness = std::move(witness);
        cert.witness_verified = true;
    }
    return cert;
}

MinSpanResult min_span(const EdgeSet& region, int h, int k, const SearchConfig& cfg) {
    if (region.empty()) throw std::invalid_argument("min_span: empty region");
    validate_hk(h, k);

    const auto start = Clock::now();
    const GapSystem sys = system_from_region(region, h, k);

    MinSpanResult result;
    result.lower_bound = std::max(0, sys.max_clique_size() - 1);

    // Spacing colors by max(h,k) always succeeds, so the sweep terminates.
    const int guaranteed =
        static_cast<int>(region.size() - 1) * std::max({h, k, 1});

    for (int n = result.lower_bound; n <= guaranteed; ++n) {
        SearchConfig step = cfg;
        const double used =
            std::chrono::duration<double>(Clock::now() - start).count();
        step.time_budget_seconds = cfg.time_budget_seconds - used;
        step.node_budget =
            cfg.node_budget > result.total_nodes ? cfg.node_budget - result.total_nodes : 0;
        if (step.time_budget_seconds <= 0.0 || step.node_budget == 0) {
            result.verdict = Verdict::UnknownBudget;
            return result;
        }

        SearchCertificate cert;
        {
            const CoreResult core = solve_system(sys, n, step);
            cert.verdict = core.verdict;
            cert.max_color = n;
            cert.nodes_explored = core.nodes;
            cert.max_depth = core.max_depth;
            cert.elapsed_ms = core.elapsed_ms;
            if (core.verdict == Verdict::Sat) {
                Labeling witness = labeling_from_values(region, core.values, h, k);
                if (!verify(region, witness).empty()) {
                    throw std::logic_error("search produced an invalid witness");
                }
                cert.witness = std::move(witness);
                cert.witness_verified = true;
            }
        }
        result.total_nodes += cert.nodes_explored;

        switch (cert.verdict) {
            case Verdict::Sat:
                result.verdict = Verdict::Sat;
                result.span = n;
                result.upper_bound = n;
                result.certificate = std::move(cert);
                return result;
            case Verdict::UnsatExhausted:
                result.lower_bound = n + 1;
                result.certificate = std::move(cert);
                break;
            case Verdict::UnknownBudget:
                result.verdict = Verdict::UnknownBudget;
                result.certificate = std::move(cert);
                return result;
        }
    }
    throw std::logic_error("min_span sweep passed the guaranteed-feasible bound");
}

PeriodicSearchCertificate periodic_search(int px, int py, int max_color, int h, int k,
                                          const SearchConfig& cfg) {
    if (px < 6 || py < 6) {
        throw std::invalid_argument("periodic search requires period >= 6 in each axis");
    }
    validate_hk(h, k);

    // One variable per fundamental-domain edge; constraints collected from
    // every geometric offset whose instances interact, with the max gap
    // kept when several offsets alias to the same residue pair.
    GapSystem sys;
    sys.var_count = 4 * px * py;
    sys.adj.resize(static_cast<std::size_t>(sys.var_count));
    std::vector<std::unordered_map<int, int>> gap_to(static_cast<std::size_t>(sys.var_count));
    constexpr std::array<EdgeClass, 4> classes = {
        EdgeClass::Horizontal, EdgeClass::Vertical, EdgeClass::RightSlanting,
        EdgeClass::LeftSlanting};
    for (int y = 0; y < py; ++y) {
        for (int x = 0; x < px; ++x) {
            for (EdgeClass t1 : classes) {
                const Edge e1 = edge_at({x, y}, t1);
                const auto v1 =
                    static_cast<int>(PeriodicLabeling::label_index(x, y, t1, px, py));
                for (const auto& [e2, dist] : edges_within_two(e1)) {
                    const int gap = dist == 1 ? h : k;
                    if (gap <= 0) continue;
                    const auto v2 = static_cast<int>(PeriodicLabeling::label_index(
                        e2.anchor().x, e2.anchor().y, e2.cls(), px, py));
                    if (v2 == v1) {
                        throw std::logic_error("period too small: edge aliases onto itself");
                    }
                    auto& slot = gap_to[static_cast<std::size_t>(v1)][v2];
                    slot = std::max(slot, gap);
                }
            }
        }
    }
    for (int v1 = 0; v1 < sys.var_count; ++v1) {
        for (const auto& [v2, gap] : gap_to[static_cast<std::size_t>(v1)]) {
            if (v1 < v2) sys.add_pair(v1, v2, gap);
        }
    }
    sys.finalize();

    const CoreResult core = solve_system(sys, max_color, cfg);

    PeriodicSearchCertificate cert;
    cert.verdict = core.verdict;
    cert.max_color = max_color;
    cert.px = px;
    cert.py = py;
    cert.nodes_explored = core.nodes;
    cert.max_depth = core.max_depth;
    cert.elapsed_ms = core.elapsed_ms;
    if (core.verdict == Verdict::Sat) {
        PeriodicLabeling witness;
        witness.h = h;
        witness.k = k;
        witness.px = px;
        witness.py = py;
        witness.labels = core.values;
        if (!verify_periodic(witness).empty()) {
            throw std::logic_error("periodic search produced an invalid witness");
        }
        cert.witness = std::move(witness);
        cert.witness_verified = true;
    }
    return cert;
}

namespace {

bool brute_extend(const std::vector<Edge>& edges, std::vector<int>& colors, std::size_t index,
                  int n, int h, int k) {
    if (index == edges.size()) return true;
    for (int c = 0; c <= n; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < index; ++j) {
            const int d = edge_distance(edges[index], edges[j]);
            if (d > 2) continue;
            if (std::abs(c - colors[j]) < (d == 1 ? h : k)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            colors[index] = c;
            if (brute_extend(edges, colors, index + 1, n, h, k)) return true;
        }
    }
    return false;
}

}  // namespace

std::optional<int> brute_force_min_span(const EdgeSet& region, int h, int k, int n_cap) {
    if (region.empty()) throw std::invalid_argument("brute_force_min_span: empty region");
    if (region.size() > 12) {
        throw std::invalid_argument("brute_force_min_span: region above the 12-edge guard");
    }
    if (n_cap > 16 || n_cap < 0) {
        throw std::invalid_argument("brute_force_min_span: n_cap outside [0, 16]");
    }
    validate_hk(h, k);

    const auto& edges = region.edges();
    std::vector<int> colors(edges.size(), 0);
    for (int n = 0; n <= n_cap; ++n) {
        if (brute_extend(edges, colors, 0, n, h, k)) return n;
    }
    return std::nullopt;
}

}  // namespace octagrid
