#ifndef EDK_TREE_REDUCTIONS_HPP
#define EDK_TREE_REDUCTIONS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "edk/eternal.hpp"
#include "edk/graph.hpp"

namespace edk {

enum class ReductionKind {
    kEndpath,       // leaf path of length k+1: delete its first k+1 vertices, drops by 1 (k <= 2) or 0..1
    kKPath,         // bare path x..y with a saturated T_x: delete T_x - x, number drops by 1
    kHalfBranch,    // shallow branches at x trimmed to one path of length floor(k/2), unchanged
    kDoubleBranch,  // depth-k branches at x trimmed to two paths of length k, unchanged
    kK2LeafStar,    // k = 2 only: delete L and S around x, number drops by 0 or 1
};

const char* to_string(ReductionKind kind);

/// gamma(before) - gamma(after) lies in [lo, hi].
struct Delta {
    int lo = 0;
    int hi = 0;
    bool exact() const { return lo == hi; }
};

struct ReductionStep {
    struct Anchor {
        std::string role;  // "x", "y", "leaf", "l1", "l2", ...
        Vertex vertex;
    };

    ReductionKind kind = ReductionKind::kEndpath;
    std::vector<Vertex> removed;  // sorted, ids of the tree before the step
    std::vector<Anchor> anchors;  // ids of the tree before the step
    Delta delta;
};

struct Reduction {
    Graph tree;                   // relabelled densely; vertex labels are kept
    ReductionStep step;
    std::vector<Vertex> to_old;   // id in `tree` -> id in the input tree
};

// Each apply_* returns the reduction at the smallest eligible anchor, or
// nullopt when none applies. The find_all_* variants list every distinct
// eligible site. Inputs must be trees (std::invalid_argument otherwise).

std::optional<Reduction> apply_endpath_reduction(const Graph& t, int k);
std::vector<Reduction> find_all_endpath_reductions(const Graph& t, int k);

/// The x..y path has length between 1 and k with internal vertices of degree
/// 2 and end vertices of degree other than 2; T_x and T_y are the sides of
/// x and y once the path's edges are removed. Requires ecc_{T_x}(x) = k,
/// diam(T_x) = 2k and ecc_{T_y}(y) >= k. Pass `strict` to only accept paths
/// of length exactly k.
std::optional<Reduction> apply_kpath_reduction(const Graph& t, int k, bool strict = false);
std::vector<Reduction> find_all_kpath_reductions(const Graph& t, int k, bool strict = false);

std::optional<Reduction> apply_halfbranch_trim(const Graph& t, int k);
std::vector<Reduction> find_all_halfbranch_trims(const Graph& t, int k);

std::optional<Reduction> apply_doublebranch_trim(const Graph& t, int k);
std::vector<Reduction> find_all_doublebranch_trims(const Graph& t, int k);

/// Vertex sets around a non-leaf x at distance exactly 2 from some leaf:
/// L the leaves at distance 2, X the union of their distance-2 spheres, S the
/// neighbours of x that are leaves or adjacent to L, split into A (at least
/// two neighbours in X) and B (exactly one). All sorted.
struct K2Sets {
    std::vector<Vertex> L, X, S, A, B;
};

/// Throws std::invalid_argument when x is a leaf or has no leaf at distance 2.
K2Sets k2_sets(const Graph& t, Vertex x);

/// T - (L u S) with delta {0, 1}. Throws std::invalid_argument when x is
/// ineligible, or when the deletion empties or disconnects the tree.
Reduction k2_reduce(const Graph& t, Vertex x);
std::optional<Reduction> apply_k2_reduction(const Graph& t);
std::vector<Reduction> find_all_k2_reductions(const Graph& t);

/// Every single-step reduction available for k (k2 sites only when k = 2).
std::vector<Reduction> find_all_reductions(const Graph& t, int k);

struct ReduceOptions {
    /// When set, each step picks uniformly among all eligible sites instead
    /// of the fixed greedy order.
    std::mt19937_64* random_order = nullptr;
    /// Solve the core exactly when it fits the budget in `solve`.
    bool solve_core = false;
    SolveOptions solve;
};

struct ReductionTrace {
    int k = 0;
    std::vector<ReductionStep> steps;
    std::vector<Graph> trees;  // trees[i] is the input of steps[i]; trees.back() is the core
    int delta = 0;             // sum of the lower deltas
    int slack = 0;             // sum of (hi - lo)
    int core_lower = 0;
    int core_upper = 0;
    bool core_solved = false;
    int lower = 0;             // bracket on the input tree's eternal number
    int upper = 0;

    const Graph& core() const { return trees.back(); }
};

/// Applies exact reductions to a fixed point in the order endpath,
/// double-branch, half-branch, k-path, then a k = 2 leaf-star step when k = 2,
/// repeating until nothing applies (for k >= 3 endpath is bracketed and goes
/// last); brackets the core by
/// gamma_k <= . <= gamma_{floor(k/2)}, the diameter rule and the two-guard
/// bound for trees of radius <= k.
ReductionTrace reduce_tree(const Graph& t, int k, const ReduceOptions& options = {});

nlohmann::json trace_to_json(const ReductionTrace& trace);

}  // namespace edk

#endif  // EDK_TREE_REDUCTIONS_HPP
