#ifndef EDK_FAMILIES_HPP
#define EDK_FAMILIES_HPP

#include <cstdint>
#include <random>
#include <span>

#include "edk/graph.hpp"

namespace edk {

// Named graph families. Paths and cycles use ids 0..n-1 in order.

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
/// K_{1,leaves} with the center at id 0.
Graph make_star(int leaves);
/// Center 0 with one pendant path per entry of `legs` (entry = path length).
Graph make_spider(std::span<const int> legs);

/// P_{z(k+1)} with n - z(k+1) extra leaves on the neighbour of its last
/// vertex. Throws std::invalid_argument when n < z(k+1).
Graph make_p_n_ell(int n, int k, int z);

/// K_{1,n} with every edge subdivided k-1 times (legs of length k).
Graph make_subdivided_star(int n, int k);

/// Perfect m-ary tree of depth d, root 0, ids in BFS order.
Graph make_perfect_mary(int m, int d);

/// Uniform random labelled tree via a random Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// Random spanning tree plus each remaining pair independently with probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

}  // namespace edk

#endif  // EDK_FAMILIES_HPP
