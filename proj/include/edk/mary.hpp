#ifndef EDK_MARY_HPP
#define EDK_MARY_HPP

#include <cstdint>

#include "edk/graph.hpp"

namespace edk {

struct MaryTreeSpec {
    int m = 2;  // branching factor, >= 2
    int d = 0;  // depth, >= 0

    /// (m^{d+1} - 1) / (m - 1); throws std::overflow_error past int64.
    std::int64_t vertex_count() const;

    /// The unique q with q = d (mod k) and k/2 <= q < 3k/2.
    int residue_depth(int k) const;
};

/// Perfect m-ary tree of the given shape; the root is vertex 0.
Graph build_perfect_mary(const MaryTreeSpec& spec);

/// Eternal distance-k number of the perfect m-ary tree of depth d, k >= 2:
///   d <= k/2             -> 1
///   k/2 < d < k          -> 2
///   k <= d <= 3k/2       -> 1 + m^(d-k)
///   d > 3k/2             -> (m^d - m^q) / (m^k - 1) + value at depth q
/// Exact in 64-bit; throws std::overflow_error when m^d does not fit.
std::int64_t mary_number_recursive(int m, int d, int k);

struct MaryPiecewise {
    std::int64_t value = 0;      // the five-case closed form as printed
    std::int64_t recursive = 0;  // mary_number_recursive
    bool consistent = true;
    int branch = 0;              // which of the five cases applied (1..5)
};

/// Evaluates the five-case closed form and compares it against the
/// recursion. The two disagree only when d > 3k/2 and q = k/2.
MaryPiecewise mary_number_piecewise(int m, int d, int k);

}  // namespace edk

#endif  // EDK_MARY_HPP
