#ifndef EDK_CONFIGURATION_HPP
#define EDK_CONFIGURATION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "edk/graph.hpp"

namespace edk {

/// Guard positions as a canonical multiset: a sorted, non-decreasing list of
/// vertex ids. Two configurations are equal iff their lists are identical,
/// and ordering is lexicographic on the lists.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<Vertex> positions);
    Configuration(std::initializer_list<Vertex> positions)
        : Configuration(std::vector<Vertex>(positions))
    {
    }

    std::size_t size() const { return positions_.size(); }
    std::span<const Vertex> positions() const { return positions_; }
    Vertex operator[](std::size_t i) const { return positions_[i]; }
    bool contains(Vertex v) const;

    auto begin() const { return positions_.begin(); }
    auto end() const { return positions_.end(); }

    auto operator<=>(const Configuration&) const = default;

private:
    std::vector<Vertex> positions_;
};

/// Guard `i` of the source moves to position `target[i]` of the destination.
using MoveAssignment = std::vector<int>;

/// All size-q multisets whose support is distance-k dominating, in
/// lexicographic order.
std::vector<Configuration> enumerate_dominating_configs(const DistMatrix& d, int k, int q);

/// Decides whether `from` can reach `to` with every guard moving at most k,
/// i.e. whether the q x q "within k" grid has a perfect matching. Returns a
/// witnessing assignment on success. Throws std::invalid_argument when the
/// sizes differ.
std::optional<MoveAssignment> transforms(const DistMatrix& d, const Configuration& from,
                                         const Configuration& to, int k);

/// Perfect matching on a bipartite graph given as per-left-vertex bitmasks of
/// right vertices (at most 64 per side). Augmenting paths; `match_of_left`
/// receives the assignment when non-null.
bool has_perfect_matching(std::span<const std::uint64_t> adjacency, std::vector<int>* match_of_left = nullptr);

/// Dense lexicographic ranking of size-q multisets over {0..n-1}.
class MultisetIndex {
public:
    MultisetIndex(int n, int q);

    /// C(n+q-1, q), or std::nullopt-equivalent saturation at UINT64_MAX.
    std::uint64_t count() const { return count_of(n_, q_); }
    std::uint64_t rank(std::span<const Vertex> sorted) const;

    /// Number of size-r multisets over an alphabet of `symbols` letters, saturating.
    static std::uint64_t multiset_count(int symbols, int r);

private:
    std::uint64_t count_of(int symbols, int r) const
    {
        return table_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(symbols)];
    }

    int n_;
    int q_;
    std::vector<std::uint64_t> table_;
};

}  // namespace edk

#endif  // EDK_CONFIGURATION_HPP
