// Slow reference implementations used to cross-check the library. Nothing
// here calls into edk beyond reading a Graph's adjacency.
#ifndef EDK_TESTS_ORACLE_HPP
#define EDK_TESTS_ORACLE_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "edk/graph.hpp"

namespace oracle {

using Multiset = std::vector<int>;
constexpr int kFar = 1 << 28;

/// Floyd-Warshall on the adjacency relation.
inline std::vector<std::vector<int>> distances(const edk::Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), kFar));
    for (int u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v))
                d[u][v] = 1;
    }
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    return d;
}

inline bool dominates(const std::vector<std::vector<int>>& d, const Multiset& s, int k)
{
    for (std::size_t v = 0; v < d.size(); ++v) {
        bool hit = false;
        for (int x : s)
            hit = hit || d[static_cast<std::size_t>(x)][v] <= k;
        if (!hit)
            return false;
    }
    return true;
}

/// All size-q multisets over 0..n-1 in lexicographic order.
inline std::vector<Multiset> multisets(int n, int q)
{
    std::vector<Multiset> out;
    Multiset cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == q) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v < n; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Smallest dominating set size by checking every subset in order of size.
inline int gamma(const edk::Graph& g, int k)
{
    auto d = distances(g);
    const int n = g.order();
    for (int size = 0; size <= n; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(n), 0);
        std::fill(pick.end() - size, pick.end(), 1);
        do {
            Multiset s;
            for (int v = 0; v < n; ++v)
                if (pick[static_cast<std::size_t>(v)])
                    s.push_back(v);
            if (dominates(d, s, k))
                return size;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n;
}

/// Tries every ordering of `to`.
inline bool transforms(const std::vector<std::vector<int>>& d, const Multiset& from, Multiset to, int k)
{
    if (from.size() != to.size())
        return false;
    std::sort(to.begin(), to.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < from.size() && ok; ++i)
            ok = d[static_cast<std::size_t>(from[i])][static_cast<std::size_t>(to[i])] <= k;
        if (ok)
            return true;
    } while (std::next_permutation(to.begin(), to.end()));
    return false;
}

/// Greatest fixed point by repeated full passes, no indexing.
inline std::set<Multiset> eternal_family(const edk::Graph& g, int k, int q)
{
    auto d = distances(g);
    std::set<Multiset> alive;
    for (auto& s : multisets(g.order(), q))
        if (dominates(d, s, k))
            alive.insert(s);
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<Multiset> next;
        for (const auto& s : alive) {
            bool defended = true;
            for (int v = 0; v < g.order() && defended; ++v) {
                bool found = false;
                for (const auto& t : alive) {
                    if (std::find(t.begin(), t.end(), v) == t.end())
                        continue;
                    if (transforms(d, s, t, k)) {
                        found = true;
                        break;
                    }
                }
                defended = found;
            }
            if (defended)
                next.insert(s);
            else
                changed = true;
        }
        alive.swap(next);
    }
    return alive;
}

inline int eternal_number(const edk::Graph& g, int k)
{
    for (int q = 1; q <= g.order(); ++q)
        if (!oracle::eternal_family(g, k, q).empty())
            return q;
    return g.order();
}

}  // namespace oracle

#endif  // EDK_TESTS_ORACLE_HPP
