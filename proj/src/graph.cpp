#include "edk/graph.hpp"

#include <algorithm>
#include <queue>

namespace edk {

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");

    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        degree_sum += nbrs.size();
    }
    g.edge_count_ = degree_sum / 2;

    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            labels.push_back(std::to_string(v));
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<Vertex> Graph::find_label(std::string_view name) const
{
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == name)
            return static_cast<Vertex>(v);
    return std::nullopt;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Vertex GraphBuilder::add_vertex(std::string_view label)
{
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label)
            return static_cast<Vertex>(v);
    labels_.emplace_back(label);
    adjacency_.emplace_back();
    return static_cast<Vertex>(labels_.size() - 1);
}

bool GraphBuilder::add_edge(std::string_view a, std::string_view b)
{
    Vertex u = add_vertex(a);
    Vertex v = add_vertex(b);
    return add_edge(u, v);
}

bool GraphBuilder::add_edge(Vertex a, Vertex b)
{
    if (a == b)
        throw std::invalid_argument("self-loop at vertex '" + labels_[static_cast<std::size_t>(a)] + "'");
    auto& nbrs = adjacency_[static_cast<std::size_t>(a)];
    if (std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end())
        return false;
    nbrs.push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
    return true;
}

Graph GraphBuilder::build() const
{
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (static_cast<Vertex>(u) < v)
                edges.emplace_back(static_cast<Vertex>(u), v);
    return Graph::from_edges(static_cast<int>(labels_.size()), edges, labels_);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), DistMatrix::kUnreachable);
    std::queue<Vertex> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] == DistMatrix::kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

DistMatrix::DistMatrix(const Graph& g) : n_(g.order())
{
    dist_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (Vertex s = 0; s < n_; ++s) {
        auto row = bfs_distances(g, s);
        for (Vertex v = 0; v < n_; ++v) {
            dist_[index(s, v)] = row[static_cast<std::size_t>(v)];
            if (row[static_cast<std::size_t>(v)] == kUnreachable)
                connected_ = false;
        }
    }
}

std::vector<Vertex> DistMatrix::neighborhood(Vertex x, int k, bool closed) const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
        int dv = (*this)(x, v);
        if (closed ? dv <= k : dv == k)
            out.push_back(v);
    }
    return out;
}

int DistMatrix::eccentricity(Vertex u) const
{
    if (!connected_)
        throw std::domain_error("eccentricity of a disconnected graph");
    int ecc = 0;
    for (Vertex v = 0; v < n_; ++v)
        ecc = std::max(ecc, (*this)(u, v));
    return ecc;
}

int DistMatrix::diameter() const
{
    if (!connected_)
        throw std::domain_error("diameter of a disconnected graph");
    int diam = 0;
    for (Vertex u = 0; u < n_; ++u)
        diam = std::max(diam, eccentricity(u));
    return diam;
}

Graph graph_power(const Graph& g, int k)
{
    if (k < 1)
        throw std::invalid_argument("graph power requires k >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (dist[static_cast<std::size_t>(v)] <= k)
                edges.emplace_back(u, v);
    }
    return Graph::from_edges(g.order(), edges, g.labels());
}

std::vector<std::vector<Vertex>> components(const Graph& g)
{
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        auto& members = out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size() - 1);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(s)];
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() <= 1 || components(g).size() == 1;
}

bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept)
{
    Subgraph sub;
    sub.to_new.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> order(kept.begin(), kept.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    std::vector<std::string> labels;
    for (Vertex v : order) {
        sub.to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_old.size());
        sub.to_old.push_back(v);
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex nu = sub.to_new[static_cast<std::size_t>(u)];
        Vertex nv = sub.to_new[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0)
            edges.emplace_back(nu, nv);
    }
    sub.graph = Graph::from_edges(static_cast<int>(sub.to_old.size()), edges, std::move(labels));
    return sub;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed)
{
    std::vector<bool> gone(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : removed)
        gone.at(static_cast<std::size_t>(v)) = true;
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[static_cast<std::size_t>(v)])
            kept.push_back(v);
    return induced_subgraph(g, kept);
}

Graph delete_edge(const Graph& g, Edge e)
{
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("delete_edge: not an edge");
    auto [a, b] = std::minmax(e.first, e.second);
    std::vector<Edge> edges;
    for (auto uv : g.edges())
        if (uv != Edge{a, b})
            edges.push_back(uv);
    return Graph::from_edges(g.order(), edges, g.labels());
}

}  // namespace edk
