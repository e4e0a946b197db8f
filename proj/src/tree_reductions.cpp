#include "edk/tree_reductions.hpp"

#include <algorithm>
#include <queue>

#include "edk/domination.hpp"

namespace edk {

namespace {

void require_tree(const Graph& t)
{
    if (!is_tree(t))
        throw std::invalid_argument("tree reductions need a tree");
}

/// Vertices reachable from `root` without crossing the edge root-`blocked`,
/// with their distance from root and BFS parent. `blocked` may be -1.
struct Side {
    std::vector<Vertex> members;  // BFS order, root first
    std::vector<int> dist;        // indexed by vertex id, -1 outside
    std::vector<Vertex> parent;   // indexed by vertex id
    int depth = 0;

    bool has(Vertex v) const { return dist[static_cast<std::size_t>(v)] >= 0; }
};

Side explore(const Graph& t, Vertex root, Vertex blocked)
{
    Side side;
    side.dist.assign(static_cast<std::size_t>(t.order()), -1);
    side.parent.assign(static_cast<std::size_t>(t.order()), -1);
    side.dist[static_cast<std::size_t>(root)] = 0;
    if (blocked >= 0)
        side.dist[static_cast<std::size_t>(blocked)] = -2;  // fence
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        side.members.push_back(u);
        side.depth = std::max(side.depth, side.dist[static_cast<std::size_t>(u)]);
        for (Vertex w : t.neighbors(u)) {
            if (side.dist[static_cast<std::size_t>(w)] == -1) {
                side.dist[static_cast<std::size_t>(w)] = side.dist[static_cast<std::size_t>(u)] + 1;
                side.parent[static_cast<std::size_t>(w)] = u;
                frontier.push(w);
            }
        }
    }
    if (blocked >= 0)
        side.dist[static_cast<std::size_t>(blocked)] = -1;
    return side;
}

/// The branch hanging off x through neighbour v, distances measured from x.
Side branch(const Graph& t, Vertex x, Vertex v)
{
    Side side = explore(t, v, x);
    for (Vertex u : side.members)
        ++side.dist[static_cast<std::size_t>(u)];
    side.depth += 1;
    return side;
}

/// Diameter of the subtree spanned by `side` (double sweep).
int side_diameter(const Graph& t, const Side& side)
{
    auto farthest = [&](Vertex from) {
        std::vector<int> dist(static_cast<std::size_t>(t.order()), -1);
        std::queue<Vertex> frontier;
        dist[static_cast<std::size_t>(from)] = 0;
        frontier.push(from);
        Vertex best = from;
        while (!frontier.empty()) {
            Vertex u = frontier.front();
            frontier.pop();
            if (dist[static_cast<std::size_t>(u)] > dist[static_cast<std::size_t>(best)])
                best = u;
            for (Vertex w : t.neighbors(u)) {
                if (side.has(w) && dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    frontier.push(w);
                }
            }
        }
        return std::pair{best, dist[static_cast<std::size_t>(best)]};
    };
    auto [end, unused] = farthest(side.members.front());
    (void)unused;
    return farthest(end).second;
}

/// Vertices on the path from `leaf` back to the branch root (inclusive).
std::vector<Vertex> path_to_root(const Side& side, Vertex leaf)
{
    std::vector<Vertex> path;
    for (Vertex v = leaf; v >= 0; v = side.parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    return path;
}

Vertex smallest_at_depth(const Side& side, int depth)
{
    Vertex best = -1;
    for (Vertex v : side.members)
        if (side.dist[static_cast<std::size_t>(v)] == depth && (best < 0 || v < best))
            best = v;
    return best;
}

Reduction make_reduction(const Graph& t, ReductionKind kind, std::vector<Vertex> removed,
                         std::vector<ReductionStep::Anchor> anchors, Delta delta)
{
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    Subgraph sub = delete_vertices(t, removed);
    Reduction r;
    r.tree = std::move(sub.graph);
    r.to_old = std::move(sub.to_old);
    r.step.kind = kind;
    r.step.removed = std::move(removed);
    r.step.anchors = std::move(anchors);
    r.step.delta = delta;
    return r;
}

template <typename Fn>
std::optional<Reduction> first_of(Fn&& find_all)
{
    auto all = find_all();
    if (all.empty())
        return std::nullopt;
    return std::move(all.front());
}

/// Shared by the half- and double-branch trims: keep `keep_paths` branches
/// reaching exactly `reach` from x as bare paths and drop every other branch
/// whose depth is at most `reach`.
std::vector<Reduction> branch_trims(const Graph& t, int reach, int keep_paths, ReductionKind kind)
{
    std::vector<Reduction> out;
    if (reach < 1)
        return out;
    for (Vertex x = 0; x < t.order(); ++x) {
        std::vector<Side> shallow;
        std::vector<std::size_t> reaching;
        for (Vertex v : t.neighbors(x)) {
            Side b = branch(t, x, v);
            if (b.depth > reach)
                continue;
            if (b.depth == reach)
                reaching.push_back(shallow.size());
            shallow.push_back(std::move(b));
        }
        if (static_cast<int>(reaching.size()) < keep_paths)
            continue;

        // Choose which reaching branches to keep: every (ordered-by-id) combination.
        std::vector<std::vector<std::size_t>> choices;
        if (keep_paths == 1) {
            for (std::size_t i : reaching)
                choices.push_back({i});
        } else {
            for (std::size_t a = 0; a < reaching.size(); ++a)
                for (std::size_t b = a + 1; b < reaching.size(); ++b)
                    choices.push_back({reaching[a], reaching[b]});
        }
        for (const auto& keep : choices) {
            std::vector<bool> kept(static_cast<std::size_t>(t.order()), false);
            std::vector<ReductionStep::Anchor> anchors{{"x", x}};
            int idx = 1;
            for (std::size_t i : keep) {
                Vertex leaf = smallest_at_depth(shallow[i], reach);
                for (Vertex v : path_to_root(shallow[i], leaf))
                    kept[static_cast<std::size_t>(v)] = true;
                std::string suffix = keep_paths == 1 ? "" : std::to_string(idx);
                anchors.push_back({"v" + (suffix.empty() ? std::string("1") : suffix), shallow[i].members.front()});
                anchors.push_back({"l" + suffix, leaf});
                ++idx;
            }
            std::vector<Vertex> removed;
            for (const auto& b : shallow)
                for (Vertex v : b.members)
                    if (!kept[static_cast<std::size_t>(v)])
                        removed.push_back(v);
            if (removed.empty())
                continue;
            out.push_back(make_reduction(t, kind, std::move(removed), std::move(anchors), {0, 0}));
        }
    }
    return out;
}

}  // namespace

const char* to_string(ReductionKind kind)
{
    switch (kind) {
    case ReductionKind::kEndpath:
        return "endpath";
    case ReductionKind::kKPath:
        return "kpath";
    case ReductionKind::kHalfBranch:
        return "halfbranch";
    case ReductionKind::kDoubleBranch:
        return "doublebranch";
    case ReductionKind::kK2LeafStar:
        return "k2-LS";
    }
    return "unknown";
}

std::vector<Reduction> find_all_endpath_reductions(const Graph& t, int k)
{
    require_tree(t);
    std::vector<Reduction> out;
    if (k < 1)
        return out;
    for (Vertex leaf = 0; leaf < t.order(); ++leaf) {
        if (t.degree(leaf) != 1)
            continue;
        // Walk x_0 = leaf, x_1, ..., x_{k+1}; x_1..x_k must have degree 2.
        std::vector<Vertex> path{leaf};
        Vertex prev = -1;
        Vertex cur = leaf;
        bool ok = true;
        for (int i = 1; i <= k + 1 && ok; ++i) {
            Vertex next = -1;
            for (Vertex w : t.neighbors(cur))
                if (w != prev)
                    next = w;
            if (next < 0 || (i <= k && t.degree(next) != 2)) {
                ok = false;
                break;
            }
            prev = cur;
            cur = next;
            path.push_back(cur);
        }
        if (!ok)
            continue;
        Vertex end = path.back();
        path.pop_back();
        // Exact for k <= 2. From k = 3 on some trees keep the same number
        // (e.g. radius 3, diameter 6), so only the retract bracket is safe.
        const Delta delta = k <= 2 ? Delta{1, 1} : Delta{0, 1};
        out.push_back(make_reduction(t, ReductionKind::kEndpath, std::move(path), {{"x0", leaf}, {"x_k+1", end}},
                                     delta));
    }
    return out;
}

std::optional<Reduction> apply_endpath_reduction(const Graph& t, int k)
{
    return first_of([&] { return find_all_endpath_reductions(t, k); });
}

std::vector<Reduction> find_all_kpath_reductions(const Graph& t, int k, bool strict)
{
    require_tree(t);
    std::vector<Reduction> out;
    if (k < 1)
        return out;
    for (Vertex x = 0; x < t.order(); ++x) {
        if (t.degree(x) == 2)
            continue;
        for (Vertex w : t.neighbors(x)) {
            Vertex prev = x;
            Vertex cur = w;
            int length = 1;
            while (t.degree(cur) == 2 && length <= k) {
                Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
                prev = cur;
                cur = next;
                ++length;
            }
            if (t.degree(cur) == 2 || length > k || (strict && length != k))
                continue;
            const Vertex y = cur;
            Side tx = explore(t, x, w);
            if (tx.depth != k || side_diameter(t, tx) != 2 * k)
                continue;
            Side ty = explore(t, y, prev);
            if (ty.depth < k)
                continue;
            std::vector<Vertex> removed(tx.members.begin() + 1, tx.members.end());
            out.push_back(make_reduction(t, ReductionKind::kKPath, std::move(removed), {{"x", x}, {"y", y}}, {1, 1}));
        }
    }
    return out;
}

std::optional<Reduction> apply_kpath_reduction(const Graph& t, int k, bool strict)
{
    return first_of([&] { return find_all_kpath_reductions(t, k, strict); });
}

std::vector<Reduction> find_all_halfbranch_trims(const Graph& t, int k)
{
    require_tree(t);
    return branch_trims(t, k / 2, 1, ReductionKind::kHalfBranch);
}

std::optional<Reduction> apply_halfbranch_trim(const Graph& t, int k)
{
    return first_of([&] { return find_all_halfbranch_trims(t, k); });
}

std::vector<Reduction> find_all_doublebranch_trims(const Graph& t, int k)
{
    require_tree(t);
    return branch_trims(t, k, 2, ReductionKind::kDoubleBranch);
}

std::optional<Reduction> apply_doublebranch_trim(const Graph& t, int k)
{
    return first_of([&] { return find_all_doublebranch_trims(t, k); });
}

K2Sets k2_sets(const Graph& t, Vertex x)
{
    require_tree(t);
    if (x < 0 || x >= t.order())
        throw std::out_of_range("k2_sets: vertex out of range");
    if (t.degree(x) <= 1)
        throw std::invalid_argument("k2_sets: x must not be a leaf");
    DistMatrix d(t);
    K2Sets sets;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1 && d(x, v) == 2)
            sets.L.push_back(v);
    if (sets.L.empty())
        throw std::invalid_argument("k2_sets: x is not at distance 2 from any leaf");

    std::vector<bool> in_x(static_cast<std::size_t>(t.order()), false);
    for (Vertex leaf : sets.L)
        for (Vertex u : d.neighborhood(leaf, 2, false))
            in_x[static_cast<std::size_t>(u)] = true;
    for (Vertex v = 0; v < t.order(); ++v)
        if (in_x[static_cast<std::size_t>(v)])
            sets.X.push_back(v);

    for (Vertex s : t.neighbors(x)) {
        bool touches_leaf = std::any_of(t.neighbors(s).begin(), t.neighbors(s).end(), [&](Vertex w) {
            return std::binary_search(sets.L.begin(), sets.L.end(), w);
        });
        if (t.degree(s) == 1 || touches_leaf)
            sets.S.push_back(s);
    }
    for (Vertex s : sets.S) {
        auto in_set = std::count_if(t.neighbors(s).begin(), t.neighbors(s).end(),
                                    [&](Vertex w) { return in_x[static_cast<std::size_t>(w)]; });
        if (in_set >= 2)
            sets.A.push_back(s);
        else if (in_set == 1)
            sets.B.push_back(s);
    }
    if (!in_x[static_cast<std::size_t>(x)] || sets.A.size() + sets.B.size() != sets.S.size())
        throw std::logic_error("k2_sets: L/X/S structure inconsistent");
    return sets;
}

Reduction k2_reduce(const Graph& t, Vertex x)
{
    K2Sets sets = k2_sets(t, x);
    std::vector<Vertex> removed = sets.L;
    removed.insert(removed.end(), sets.S.begin(), sets.S.end());
    if (removed.size() >= static_cast<std::size_t>(t.order()))
        throw std::invalid_argument("k2_reduce: deletion leaves an empty tree");
    Reduction r = make_reduction(t, ReductionKind::kK2LeafStar, std::move(removed), {{"x", x}}, {0, 1});
    if (!is_connected(r.tree))
        throw std::invalid_argument("k2_reduce: deleting L and S disconnects the tree");
    return r;
}

std::vector<Reduction> find_all_k2_reductions(const Graph& t)
{
    require_tree(t);
    std::vector<Reduction> out;
    DistMatrix d(t);
    for (Vertex x = 0; x < t.order(); ++x) {
        if (t.degree(x) <= 1)
            continue;
        bool eligible = false;
        for (Vertex v = 0; v < t.order() && !eligible; ++v)
            eligible = t.degree(v) == 1 && d(x, v) == 2;
        if (!eligible)
            continue;
        try {
            out.push_back(k2_reduce(t, x));
        } catch (const std::invalid_argument&) {
            // deletion would disconnect the tree at this x
        }
    }
    return out;
}

std::optional<Reduction> apply_k2_reduction(const Graph& t)
{
    return first_of([&] { return find_all_k2_reductions(t); });
}

std::vector<Reduction> find_all_reductions(const Graph& t, int k)
{
    std::vector<Reduction> all = find_all_endpath_reductions(t, k);
    auto append = [&](std::vector<Reduction> more) {
        for (auto& r : more)
            all.push_back(std::move(r));
    };
    append(find_all_doublebranch_trims(t, k));
    append(find_all_halfbranch_trims(t, k));
    append(find_all_kpath_reductions(t, k));
    if (k == 2)
        append(find_all_k2_reductions(t));
    return all;
}

ReductionTrace reduce_tree(const Graph& t, int k, const ReduceOptions& options)
{
    require_tree(t);
    if (k < 1)
        throw std::invalid_argument("reduce_tree needs k >= 1");
    ReductionTrace trace;
    trace.k = k;
    trace.trees.push_back(t);

    auto next_step = [&](const Graph& cur) -> std::optional<Reduction> {
        if (options.random_order) {
            auto all = find_all_reductions(cur, k);
            if (all.empty())
                return std::nullopt;
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            return std::move(all[pick(*options.random_order)]);
        }
        const bool endpath_exact = k <= 2;
        if (endpath_exact)
            if (auto r = apply_endpath_reduction(cur, k))
                return r;
        if (auto r = apply_doublebranch_trim(cur, k))
            return r;
        if (auto r = apply_halfbranch_trim(cur, k))
            return r;
        if (auto r = apply_kpath_reduction(cur, k))
            return r;
        if (!endpath_exact)
            return apply_endpath_reduction(cur, k);
        if (k == 2)
            return apply_k2_reduction(cur);
        return std::nullopt;
    };

    while (auto r = next_step(trace.trees.back())) {
        trace.delta += r->step.delta.lo;
        trace.slack += r->step.delta.hi - r->step.delta.lo;
        trace.steps.push_back(std::move(r->step));
        trace.trees.push_back(std::move(r->tree));
    }

    const Graph& core = trace.trees.back();
    DistMatrix d(core);
    trace.core_lower = gamma_k(core, d, k).gamma;
    trace.core_upper = gamma_k(core, d, k / 2).gamma;
    if (d.diameter() <= k) {
        trace.core_lower = trace.core_upper = 1;
    } else if (k >= 2) {
        for (Vertex v = 0; v < core.order(); ++v)
            if (d.eccentricity(v) <= k)
                trace.core_upper = std::min(trace.core_upper, 2);
    }
    if (options.solve_core && trace.core_lower < trace.core_upper) {
        try {
            int exact = eternal_number(core, k, options.solve).gamma_eternal;
            trace.core_lower = trace.core_upper = exact;
            trace.core_solved = true;
        } catch (const BudgetExceeded& e) {
            trace.core_lower = std::max(trace.core_lower, e.lower());
        }
    }
    trace.lower = trace.delta + trace.core_lower;
    trace.upper = trace.delta + trace.slack + trace.core_upper;
    return trace;
}

nlohmann::json trace_to_json(const ReductionTrace& trace)
{
    nlohmann::json out;
    out["k"] = trace.k;
    out["steps"] = nlohmann::json::array();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        const Graph& before = trace.trees[i];
        nlohmann::json removed = nlohmann::json::array();
        for (Vertex v : step.removed)
            removed.push_back(before.label(v));
        nlohmann::json anchors = nlohmann::json::object();
        for (const auto& a : step.anchors)
            anchors[a.role] = before.label(a.vertex);
        nlohmann::json delta;
        if (step.delta.exact())
            delta = step.delta.lo;
        else
            delta = {step.delta.lo, step.delta.hi};
        out["steps"].push_back({{"kind", to_string(step.kind)},
                                {"removed", std::move(removed)},
                                {"anchors", std::move(anchors)},
                                {"delta", std::move(delta)}});
    }
    const Graph& core = trace.core();
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex v = 0; v < core.order(); ++v)
        vertices.push_back(core.label(v));
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : core.edges())
        edges.push_back({core.label(u), core.label(v)});
    out["core"] = {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
    out["delta"] = trace.delta;
    out["slack"] = trace.slack;
    out["core_bounds"] = {trace.core_lower, trace.core_upper};
    out["core_solved"] = trace.core_solved;
    out["bounds"] = {trace.lower, trace.upper};
    return out;
}

}  // namespace edk
