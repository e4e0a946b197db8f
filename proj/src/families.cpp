#include "edk/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edk {

Graph make_path(int n)
{
    if (n < 1)
        throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph make_cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph make_complete(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph make_star(int leaves)
{
    if (leaves < 0)
        throw std::invalid_argument("star needs a non-negative leaf count");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

Graph make_spider(std::span<const int> legs)
{
    std::vector<Edge> edges;
    int next = 1;
    for (int len : legs) {
        if (len < 1)
            throw std::invalid_argument("spider legs must have length >= 1");
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(next, edges);
}

Graph make_p_n_ell(int n, int k, int z)
{
    if (k < 1 || z < 1)
        throw std::invalid_argument("P_{n,l} needs k >= 1 and z >= 1");
    const int spine = z * (k + 1);
    if (n < spine)
        throw std::invalid_argument("P_{n,l} needs n >= z(k+1)");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < spine; ++i)
        edges.emplace_back(i, i + 1);
    const Vertex anchor = spine - 2;  // neighbour of the end leaf
    for (int v = spine; v < n; ++v)
        edges.emplace_back(anchor, v);
    return Graph::from_edges(n, edges);
}

Graph make_subdivided_star(int n, int k)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("subdivided star needs n >= 1 and k >= 1");
    std::vector<int> legs(static_cast<std::size_t>(n), k);
    return make_spider(legs);
}

Graph make_perfect_mary(int m, int d)
{
    if (m < 2 || d < 0)
        throw std::invalid_argument("perfect m-ary tree needs m >= 2 and d >= 0");
    std::vector<Edge> edges;
    std::vector<Vertex> level{0};
    int next = 1;
    for (int depth = 0; depth < d; ++depth) {
        std::vector<Vertex> children;
        for (Vertex parent : level) {
            for (int c = 0; c < m; ++c) {
                edges.emplace_back(parent, next);
                children.push_back(next++);
            }
        }
        level = std::move(children);
    }
    return Graph::from_edges(next, edges);
}

Graph random_tree(int n, std::mt19937_64& rng)
{
    if (n < 1)
        throw std::invalid_argument("tree needs n >= 1");
    if (n == 1)
        return Graph::from_edges(1, {});
    if (n == 2) {
        std::vector<Edge> e{{0, 1}};
        return Graph::from_edges(2, e);
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code)
        c = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code)
        ++degree[static_cast<std::size_t>(c)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1)
            leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng)
{
    Graph tree = random_tree(n, rng);
    std::vector<Edge> edges = tree.edges();
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!tree.has_edge(u, v) && coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace edk
