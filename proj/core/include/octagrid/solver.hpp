#pragma once

// Exact search over L(h,k)-edge labelings: feasibility at a fixed color
// bound by branch-and-bound with forward propagation, minimum span by
// upward sweep from a clique lower bound, periodic (toroidal) search for
// upper-bound certificates, and a deliberately plain exhaustive oracle
// for cross-checking on small regions.

#include <cstdint>
#include <optional>
#include <string>

#include "octagrid/labeling.hpp"
#include "octagrid/subgraph.hpp"

namespace octagrid {

enum class Verdict {
    Sat,
    UnsatExhausted,  // search space provably exhausted, never budget-cut
    UnknownBudget,
};

std::string to_string(Verdict v);

struct SearchConfig {
    std::uint64_t node_budget = 100'000'000;
    double time_budget_seconds = 300.0;
    bool symmetry_breaking = true;  // first branched edge capped at n/2 (color complement)
    enum class VariableOrder { MostConstrainedFirst, StaticCanonical };
    VariableOrder variable_order = VariableOrder::MostConstrainedFirst;
    int threads = 1;  // workers splitting the first decision level
};

struct SearchCertificate {
    Verdict verdict = Verdict::UnknownBudget;
    int max_color = 0;  // the bound n that was searched
    std::uint64_t nodes_explored = 0;
    int max_depth = 0;
    double elapsed_ms = 0.0;
    std::optional<Labeling> witness;  // Sat only
    bool witness_verified = false;    // witness re-checked through verify()
};

struct PeriodicSearchCertificate {
    Verdict verdict = Verdict::UnknownBudget;
    int max_color = 0;
    int px = 0;
    int py = 0;
    std::uint64_t nodes_explored = 0;
    int max_depth = 0;
    double elapsed_ms = 0.0;
    std::optional<PeriodicLabeling> witness;
    bool witness_verified = false;  // witness re-checked through verify_periodic()
};

struct MinSpanResult {
    Verdict verdict = Verdict::UnknownBudget;
    int span = -1;                 // valid when verdict == Sat
    int lower_bound = 0;           // best proven lower bound on the span
    std::optional<int> upper_bound;
    std::uint64_t total_nodes = 0;
    SearchCertificate certificate;  // from the deciding feasibility call
};

/// Is there an L(h,k)-edge labeling of the region with colors in
/// {0..max_color}? Throws std::invalid_argument on an empty region or a
/// negative bound. UnsatExhausted is only reported when no budget cut
/// occurred anywhere in the tree.
SearchCertificate feasible(const EdgeSet& region, int max_color, int h, int k,
                           const SearchConfig& cfg = {});

/// Smallest max_color admitting a labeling, swept upward from the clique
/// lower bound. On budget exhaustion returns UnknownBudget with the
/// bracketing interval seen so far.
MinSpanResult min_span(const EdgeSet& region, int h, int k, const SearchConfig& cfg = {});

/// Searches the 4*px*py fundamental-domain labels with wraparound
/// constraints. Sat certifies an upper bound for the whole of T8 (the
/// witness passes verify_periodic); UnsatExhausted applies to that period
/// only. Throws std::invalid_argument for periods below 6.
PeriodicSearchCertificate periodic_search(int px, int py, int max_color, int h, int k,
                                          const SearchConfig& cfg = {});

/// Independent ground truth: plain exhaustive enumeration in canonical
/// edge order with direct pairwise constraint checks (no propagation, no
/// ordering heuristics, no symmetry breaking). Returns the minimum span,
/// or nullopt if it exceeds n_cap. Throws std::invalid_argument when the
/// region has more than 12 edges or n_cap exceeds 16.
std::optional<int> brute_force_min_span(const EdgeSet& region, int h, int k, int n_cap);

}  // namespace octagrid
