#ifndef EDK_DOMINATION_HPP
#define EDK_DOMINATION_HPP

#include <span>
#include <vector>

#include "edk/graph.hpp"

namespace edk {

struct DominationResult {
    int gamma = 0;
    std::vector<Vertex> witness;  // sorted, |witness| == gamma
};

/// True iff every vertex lies within distance k of some member of `guards`.
/// Multiplicity in `guards` is irrelevant.
bool is_distance_k_dominating(const DistMatrix& d, std::span<const Vertex> guards, int k);

/// Exact distance-k domination number. k = 0 gives n.
///
/// Disconnected graphs are solved per component and the results summed.
/// The search deepens on cardinality, starting from a packing lower bound,
/// and branches on the first undominated vertex over the candidates that
/// can cover it (largest balls first). A greedy cover seeds the upper bound.
DominationResult gamma_k(const Graph& g, int k);
DominationResult gamma_k(const Graph& g, const DistMatrix& d, int k);

/// Greedy distance-k dominating set (largest uncovered ball first, lowest id on ties).
std::vector<Vertex> greedy_dominating_set(const DistMatrix& d, int k);

}  // namespace edk

#endif  // EDK_DOMINATION_HPP
