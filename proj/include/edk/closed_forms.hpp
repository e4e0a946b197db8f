#ifndef EDK_CLOSED_FORMS_HPP
#define EDK_CLOSED_FORMS_HPP

#include <optional>

#include "edk/graph.hpp"

namespace edk {

/// Eternal distance-k number of P_n: ceil(n / (k+1)).
int path_number(int n, int k);

/// Eternal distance-k number of C_n, equal to gamma_k(C_n): ceil(n / (2k+1)).
int cycle_number(int n, int k);

/// Upper bound ceil(n / (2k+1)) for a Hamiltonian graph on n vertices.
/// Hamiltonicity is the caller's responsibility; it is not checked.
int hamiltonian_upper_bound(int n, int k);

/// 1 when diam(G) <= k (a single guard reaches everything), otherwise nullopt.
/// Throws std::domain_error on a disconnected graph.
std::optional<int> diameter_rule(const Graph& g, int k);

}  // namespace edk

#endif  // EDK_CLOSED_FORMS_HPP
