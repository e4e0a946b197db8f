#ifndef EDK_GRAPH_HPP
#define EDK_GRAPH_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edk {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph on dense vertex ids 0..n-1.
///
/// Neighbor lists are kept sorted. Every vertex carries a text label, which
/// defaults to its decimal id; labels survive vertex deletion so results can
/// be reported in terms of the caller's input names.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Self-loops throw; duplicate edges
    /// are merged silently (use GraphBuilder to observe them).
    static Graph from_edges(int n, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> find_label(std::string_view name) const;

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Incremental construction keyed by label, ids assigned in first-appearance order.
class GraphBuilder {
public:
    Vertex add_vertex(std::string_view label);
    /// Returns false when the edge was already present.
    bool add_edge(std::string_view a, std::string_view b);
    bool add_edge(Vertex a, Vertex b);
    Graph build() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// All-pairs hop distances, computed by one BFS per vertex.
class DistMatrix {
public:
    static constexpr int kUnreachable = std::numeric_limits<int>::max();

    DistMatrix() = default;
    explicit DistMatrix(const Graph& g);

    int order() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
    bool within(Vertex u, Vertex v, int k) const { return dist_[index(u, v)] <= k; }
    bool connected() const { return connected_; }

    /// N_k[x] when closed, otherwise the vertices at distance exactly k.
    std::vector<Vertex> neighborhood(Vertex x, int k, bool closed = true) const;

    /// Throws std::domain_error on a disconnected graph.
    int eccentricity(Vertex u) const;
    int diameter() const;

private:
    std::size_t index(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    bool connected_ = true;
    std::vector<int> dist_;
};

/// Single-source BFS distances; unreachable vertices get DistMatrix::kUnreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

inline std::vector<Vertex> neighborhood_k(const DistMatrix& d, Vertex x, int k, bool closed = true)
{
    return d.neighborhood(x, k, closed);
}

/// G^k: uv is an edge iff 1 <= d(u, v) <= k.
Graph graph_power(const Graph& g, int k);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Connected components, each sorted ascending; components ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_new;   // old id -> new id, -1 when deleted
    std::vector<Vertex> to_old;   // new id -> old id
};

/// Removes `removed` and relabels the kept vertices densely, preserving order.
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
/// Subgraph induced by `kept` (kept order follows ascending id).
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept);

/// Throws std::invalid_argument when uv is not an edge.
Graph delete_edge(const Graph& g, Edge e);

}  // namespace edk

#endif  // EDK_GRAPH_HPP
