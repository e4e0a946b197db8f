#ifndef EDK_BOUNDS_HPP
#define EDK_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "edk/configuration.hpp"
#include "edk/eternal.hpp"
#include "edk/graph.hpp"

namespace edk {

struct PowerCheckReport {
    int k = 0;
    int gamma_graph = 0;  // eternal distance-k number of G
    int gamma_power = 0;  // eternal (distance-1) number of G^k
    bool equal = false;
    /// Every survivor at size gamma on one side survives on the other.
    bool same_families = false;
    std::uint64_t members_checked = 0;
    std::optional<Configuration> mismatch;  // first survivor missing on the other side
    std::string mismatch_side;              // "graph" or "power": where the mismatch survived

    bool ok() const { return equal && same_families; }
};

/// Solves G at distance k and G^k at distance 1, then compares the two
/// greatest fixed points member by member. Throws BudgetExceeded.
PowerCheckReport power_equivalence_check(const Graph& g, int k, const SolveOptions& options = {});

struct SpanningTreeOptions {
    /// Enumerate every spanning tree instead of BFS trees (n <= 8 only).
    bool all_trees = false;
    /// Solve each tree exactly when it fits the budget, otherwise use reduce_tree's upper end.
    bool solve_exact = true;
    SolveOptions solve;
};

struct SpanningTreeBound {
    int bound = 0;
    int trees_tried = 0;
    Graph best_tree;
    bool best_exact = false;  // bound is the best tree's exact value
};

/// min over the tried spanning trees T of an upper bound on the eternal
/// number of T. Throws std::domain_error on a disconnected graph.
SpanningTreeBound spanning_tree_upper_bound(const Graph& g, int k, const SpanningTreeOptions& options = {});

/// Every spanning tree as a sorted edge list. Throws std::invalid_argument above n = 8.
std::vector<std::vector<Edge>> all_spanning_trees(const Graph& g);

struct DecompositionPart {
    Vertex root = 0;
    std::vector<Vertex> vertices;  // sorted
    std::vector<Edge> tree;        // (child, parent) pairs of the witness tree
};

struct Decomposition {
    int k = 0;
    bool exact = false;  // parts count is the true minimum
    std::vector<DecompositionPart> parts;

    int size() const { return static_cast<int>(parts.size()); }
};

enum class DecompositionMode { kExact, kGreedy, kAuto };

/// Largest order the exact partition search accepts.
inline constexpr int kExactDecompositionLimit = 14;

/// Partition of V(G) into parts whose induced subgraph carries a spanning
/// tree of depth at most k from some root. Exact mode runs a subset DP and
/// throws BudgetExceeded past kExactDecompositionLimit; greedy mode carves
/// BFS balls out of the uncovered region; auto picks exact when it fits.
Decomposition depth_rooted_decomposition(const Graph& g, int k, DecompositionMode mode = DecompositionMode::kAuto);

/// Checks the partition and witness trees against the graph.
bool is_valid_decomposition(const Graph& g, const Decomposition& dec);

struct DecompositionBound {
    int bound = 0;
    Decomposition at_k;       // decomposition at depth k (two guards per part)
    Decomposition at_half_k;  // decomposition at depth floor(k/2) (one guard per part)
};

/// min(2 * parts at depth k, parts at depth floor(k/2)).
DecompositionBound decomposition_upper_bound(const Graph& g, int k, DecompositionMode mode = DecompositionMode::kAuto);

nlohmann::json decomposition_to_json(const Graph& g, const Decomposition& dec);

}  // namespace edk

#endif  // EDK_BOUNDS_HPP
