#include "edk/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "edk/tree_reductions.hpp"

namespace edk {

PowerCheckReport power_equivalence_check(const Graph& g, int k, const SolveOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("power check needs k >= 1");
    PowerCheckReport report;
    report.k = k;
    const Graph power = graph_power(g, k);

    SolveReport base = eternal_number(g, k, options);
    SolveReport powered = eternal_number(power, 1, options);
    report.gamma_graph = base.gamma_eternal;
    report.gamma_power = powered.gamma_eternal;
    report.equal = report.gamma_graph == report.gamma_power;

    // Compare the fixed points at each side's size, both directions.
    const DistMatrix d_graph(g);
    const DistMatrix d_power(power);
    auto compare = [&](const std::vector<Configuration>& members, const Graph& other, const DistMatrix& d_other,
                       int other_k, const char* side) {
        if (members.empty())
            return true;
        const int q = static_cast<int>(members.front().size());
        EternalFamily fam = eternal_family(other, d_other, other_k, q, options);
        for (const auto& c : members) {
            ++report.members_checked;
            if (!fam.contains(c)) {
                report.mismatch = c;
                report.mismatch_side = side;
                return false;
            }
        }
        return true;
    };
    report.same_families = compare(base.certificate.family, power, d_power, 1, "graph") &&
                           compare(powered.certificate.family, g, d_graph, k, "power");
    return report;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

void enumerate_trees(const std::vector<Edge>& edges, std::size_t from, int need, Dsu dsu, std::vector<Edge>& chosen,
                     std::vector<std::vector<Edge>>& out)
{
    if (need == 0) {
        out.push_back(chosen);
        return;
    }
    if (edges.size() - from < static_cast<std::size_t>(need))
        return;
    for (std::size_t i = from; i < edges.size(); ++i) {
        Dsu next = dsu;
        if (!next.unite(edges[i].first, edges[i].second))
            continue;
        chosen.push_back(edges[i]);
        enumerate_trees(edges, i + 1, need - 1, std::move(next), chosen, out);
        chosen.pop_back();
    }
}

std::vector<Edge> bfs_tree_edges(const Graph& g, Vertex root)
{
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::vector<Edge> edges;
    std::queue<Vertex> frontier;
    seen[static_cast<std::size_t>(root)] = true;
    frontier.push(root);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                edges.emplace_back(std::min(u, w), std::max(u, w));
                frontier.push(w);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

/// Upper bound on a tree's eternal number, and whether it is exact.
std::pair<int, bool> tree_upper_bound(const Graph& t, int k, const SpanningTreeOptions& options)
{
    ReduceOptions reduce;
    reduce.solve_core = options.solve_exact;
    reduce.solve = options.solve;
    ReductionTrace trace = reduce_tree(t, k, reduce);
    if (trace.lower == trace.upper || !options.solve_exact)
        return {trace.upper, trace.lower == trace.upper};
    try {
        return {eternal_number(t, k, options.solve).gamma_eternal, true};
    } catch (const BudgetExceeded&) {
        return {trace.upper, false};
    }
}

}  // namespace

std::vector<std::vector<Edge>> all_spanning_trees(const Graph& g)
{
    if (g.order() > 8)
        throw std::invalid_argument("spanning tree enumeration is limited to 8 vertices");
    std::vector<std::vector<Edge>> out;
    if (g.order() == 0)
        return out;
    std::vector<Edge> chosen;
    enumerate_trees(g.edges(), 0, g.order() - 1, Dsu(g.order()), chosen, out);
    return out;
}

SpanningTreeBound spanning_tree_upper_bound(const Graph& g, int k, const SpanningTreeOptions& options)
{
    if (g.order() == 0 || !is_connected(g))
        throw std::domain_error("spanning tree bound needs a connected graph");
    std::vector<std::vector<Edge>> candidates;
    if (options.all_trees) {
        candidates = all_spanning_trees(g);
    } else {
        std::set<std::vector<Edge>> unique;
        for (Vertex r = 0; r < g.order(); ++r)
            unique.insert(bfs_tree_edges(g, r));
        candidates.assign(unique.begin(), unique.end());
    }

    SpanningTreeBound best;
    best.bound = g.order() + 1;
    for (const auto& edges : candidates) {
        Graph t = Graph::from_edges(g.order(), edges, g.labels());
        auto [bound, exact] = tree_upper_bound(t, k, options);
        ++best.trees_tried;
        if (bound < best.bound || (bound == best.bound && exact && !best.best_exact)) {
            best.bound = bound;
            best.best_exact = exact;
            best.best_tree = std::move(t);
        }
    }
    return best;
}

namespace {

using Mask = std::uint32_t;

/// BFS inside `allowed` from root; fills parent and returns the covered mask
/// restricted to depth <= k.
Mask ball_in(const Graph& g, Vertex root, Mask allowed, int k, std::vector<Vertex>* parent)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> frontier;
    dist[static_cast<std::size_t>(root)] = 0;
    frontier.push(root);
    Mask covered = Mask{1} << root;
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        if (dist[static_cast<std::size_t>(u)] == k)
            continue;
        for (Vertex w : g.neighbors(u)) {
            if (!((allowed >> w) & 1U) || dist[static_cast<std::size_t>(w)] >= 0)
                continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            if (parent)
                (*parent)[static_cast<std::size_t>(w)] = u;
            covered |= Mask{1} << w;
            frontier.push(w);
        }
    }
    return covered;
}

/// Same as ball_in for arbitrary order, with a boolean region.
std::vector<Vertex> ball_in_region(const Graph& g, Vertex root, const std::vector<bool>& allowed, int k,
                                   std::vector<Vertex>& parent)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> members{root};
    std::queue<Vertex> frontier;
    dist[static_cast<std::size_t>(root)] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        if (dist[static_cast<std::size_t>(u)] == k)
            continue;
        for (Vertex w : g.neighbors(u)) {
            if (!allowed[static_cast<std::size_t>(w)] || dist[static_cast<std::size_t>(w)] >= 0)
                continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            parent[static_cast<std::size_t>(w)] = u;
            members.push_back(w);
            frontier.push(w);
        }
    }
    return members;
}

DecompositionPart make_part(Vertex root, std::vector<Vertex> members, const std::vector<Vertex>& parent)
{
    DecompositionPart part;
    part.root = root;
    for (Vertex v : members)
        if (v != root)
            part.tree.emplace_back(v, parent[static_cast<std::size_t>(v)]);
    std::sort(members.begin(), members.end());
    std::sort(part.tree.begin(), part.tree.end());
    part.vertices = std::move(members);
    return part;
}

Decomposition exact_decomposition(const Graph& g, int k)
{
    const int n = g.order();
    const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
    // root_of[mask] = smallest root whose depth-k tree inside mask spans it, or -1.
    std::vector<signed char> root_of(static_cast<std::size_t>(full) + 1, -1);
    for (Mask mask = 1; mask <= full; ++mask) {
        for (Vertex r = 0; r < n; ++r) {
            if (((mask >> r) & 1U) && ball_in(g, r, mask, k, nullptr) == mask) {
                root_of[mask] = static_cast<signed char>(r);
                break;
            }
        }
    }
    constexpr int kInf = 1 << 20;
    std::vector<int> best(static_cast<std::size_t>(full) + 1, kInf);
    std::vector<Mask> choice(static_cast<std::size_t>(full) + 1, 0);
    best[0] = 0;
    for (Mask mask = 1; mask <= full; ++mask) {
        const Mask low = mask & (~mask + 1);
        const Mask rest = mask ^ low;
        // Every submask of rest, with the lowest vertex added.
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask part = sub | low;
            if (root_of[part] >= 0 && best[mask ^ part] + 1 < best[mask]) {
                best[mask] = best[mask ^ part] + 1;
                choice[mask] = part;
            }
            if (sub == 0)
                break;
        }
    }
    Decomposition dec;
    dec.k = k;
    dec.exact = true;
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    for (Mask mask = full; mask != 0; mask ^= choice[mask]) {
        const Mask part = choice[mask];
        const Vertex root = root_of[part];
        ball_in(g, root, part, k, &parent);
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
            if ((part >> v) & 1U)
                members.push_back(v);
        dec.parts.push_back(make_part(root, std::move(members), parent));
    }
    std::sort(dec.parts.begin(), dec.parts.end(),
              [](const DecompositionPart& a, const DecompositionPart& b) { return a.vertices < b.vertices; });
    return dec;
}

Decomposition greedy_decomposition(const Graph& g, int k)
{
    const int n = g.order();
    std::vector<bool> uncovered(static_cast<std::size_t>(n), true);
    int left = n;
    Decomposition dec;
    dec.k = k;
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    while (left > 0) {
        Vertex best_root = -1;
        std::size_t best_size = 0;
        for (Vertex r = 0; r < n; ++r) {
            if (!uncovered[static_cast<std::size_t>(r)])
                continue;
            std::size_t size = ball_in_region(g, r, uncovered, k, parent).size();
            if (size > best_size) {
                best_size = size;
                best_root = r;
            }
        }
        std::vector<Vertex> members = ball_in_region(g, best_root, uncovered, k, parent);
        for (Vertex v : members)
            uncovered[static_cast<std::size_t>(v)] = false;
        left -= static_cast<int>(members.size());
        dec.parts.push_back(make_part(best_root, std::move(members), parent));
    }
    return dec;
}

}  // namespace

Decomposition depth_rooted_decomposition(const Graph& g, int k, DecompositionMode mode)
{
    if (k < 0)
        throw std::invalid_argument("decomposition depth must be non-negative");
    if (mode == DecompositionMode::kAuto)
        mode = g.order() <= kExactDecompositionLimit ? DecompositionMode::kExact : DecompositionMode::kGreedy;
    if (mode == DecompositionMode::kExact) {
        if (g.order() > kExactDecompositionLimit)
            throw BudgetExceeded("exact decomposition is limited to " + std::to_string(kExactDecompositionLimit) +
                                     " vertices",
                                 1, greedy_decomposition(g, k).size());
        return exact_decomposition(g, k);
    }
    Decomposition dec = greedy_decomposition(g, k);
    dec.exact = k == 0;  // singletons are forced
    return dec;
}

bool is_valid_decomposition(const Graph& g, const Decomposition& dec)
{
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < dec.parts.size(); ++i) {
        const auto& part = dec.parts[i];
        if (part.vertices.empty() || part.tree.size() + 1 != part.vertices.size())
            return false;
        for (Vertex v : part.vertices) {
            if (v < 0 || v >= g.order() || owner[static_cast<std::size_t>(v)] >= 0)
                return false;
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
        if (!std::binary_search(part.vertices.begin(), part.vertices.end(), part.root))
            return false;
        // Witness: every non-root vertex has one parent in the part along a
        // graph edge, and following parents reaches the root within k steps.
        std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
        for (auto [child, up] : part.tree) {
            if (!g.has_edge(child, up) || owner[static_cast<std::size_t>(up)] != static_cast<int>(i) ||
                child == part.root || parent[static_cast<std::size_t>(child)] != -2)
                return false;
            parent[static_cast<std::size_t>(child)] = up;
        }
        for (Vertex v : part.vertices) {
            int steps = 0;
            Vertex cur = v;
            while (cur != part.root && steps < dec.k) {
                cur = parent[static_cast<std::size_t>(cur)];
                if (cur < 0)
                    return false;
                ++steps;
            }
            if (cur != part.root)
                return false;
        }
    }
    return std::all_of(owner.begin(), owner.end(), [](int o) { return o >= 0; });
}

DecompositionBound decomposition_upper_bound(const Graph& g, int k, DecompositionMode mode)
{
    if (k < 1)
        throw std::invalid_argument("decomposition bound needs k >= 1");
    DecompositionBound out;
    out.at_k = depth_rooted_decomposition(g, k, mode);
    out.at_half_k = depth_rooted_decomposition(g, k / 2, mode);
    out.bound = std::min(2 * out.at_k.size(), out.at_half_k.size());
    return out;
}

nlohmann::json decomposition_to_json(const Graph& g, const Decomposition& dec)
{
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : dec.parts) {
        nlohmann::json vertices = nlohmann::json::array();
        for (Vertex v : part.vertices)
            vertices.push_back(g.label(v));
        nlohmann::json tree = nlohmann::json::array();
        for (auto [child, up] : part.tree)
            tree.push_back({g.label(child), g.label(up)});
        parts.push_back({{"root", g.label(part.root)}, {"vertices", std::move(vertices)}, {"tree", std::move(tree)}});
    }
    return parts;
}

}  // namespace edk
