#include "edk/domination.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

namespace edk {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> balls(const DistMatrix& d, int k)
{
    const int n = d.order();
    std::vector<Bits> out(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (d.within(u, v, k))
                out[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    return out;
}

std::vector<Vertex> greedy_cover(const std::vector<Bits>& ball, const Bits& target)
{
    Bits uncovered = target;
    std::vector<Vertex> chosen;
    while (uncovered.any()) {
        Vertex best = -1;
        std::size_t best_gain = 0;
        for (std::size_t v = target.find_first(); v != Bits::npos; v = target.find_next(v)) {
            std::size_t gain = (ball[v] & uncovered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<Vertex>(v);
            }
        }
        chosen.push_back(best);
        uncovered -= ball[static_cast<std::size_t>(best)];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

class ExactCover {
public:
    ExactCover(const std::vector<Bits>& ball, const Bits& target) : ball_(ball), target_(target)
    {
        const std::size_t n = ball.size();
        candidates_.resize(n);
        for (std::size_t u = target.find_first(); u != Bits::npos; u = target.find_next(u)) {
            max_ball_ = std::max(max_ball_, ball[u].count());
            for (std::size_t c = ball[u].find_first(); c != Bits::npos; c = ball[u].find_next(c))
                candidates_[u].push_back(static_cast<Vertex>(c));
            std::stable_sort(candidates_[u].begin(), candidates_[u].end(), [&](Vertex a, Vertex b) {
                return ball[static_cast<std::size_t>(a)].count() > ball[static_cast<std::size_t>(b)].count();
            });
        }
    }

    std::vector<Vertex> solve()
    {
        auto best = greedy_cover(ball_, target_);
        std::size_t lower = (target_.count() + max_ball_ - 1) / max_ball_;
        for (std::size_t size = lower; size < best.size(); ++size) {
            chosen_.clear();
            if (search(target_, size)) {
                std::sort(chosen_.begin(), chosen_.end());
                return chosen_;
            }
        }
        return best;
    }

private:
    bool search(const Bits& uncovered, std::size_t remaining)
    {
        std::size_t first = uncovered.find_first();
        if (first == Bits::npos)
            return true;
        if (remaining == 0 || uncovered.count() > remaining * max_ball_)
            return false;
        for (Vertex c : candidates_[first]) {
            chosen_.push_back(c);
            if (search(uncovered - ball_[static_cast<std::size_t>(c)], remaining - 1))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    const std::vector<Bits>& ball_;
    Bits target_;
    std::vector<std::vector<Vertex>> candidates_;
    std::size_t max_ball_ = 1;
    std::vector<Vertex> chosen_;
};

}  // namespace

bool is_distance_k_dominating(const DistMatrix& d, std::span<const Vertex> guards, int k)
{
    for (Vertex v = 0; v < d.order(); ++v) {
        bool covered = std::any_of(guards.begin(), guards.end(), [&](Vertex g) { return d.within(g, v, k); });
        if (!covered)
            return false;
    }
    return true;
}

std::vector<Vertex> greedy_dominating_set(const DistMatrix& d, int k)
{
    Bits all(static_cast<std::size_t>(d.order()));
    all.set();
    return greedy_cover(balls(d, k), all);
}

DominationResult gamma_k(const Graph& g, int k)
{
    return gamma_k(g, DistMatrix(g), k);
}

DominationResult gamma_k(const Graph& g, const DistMatrix& d, int k)
{
    if (k < 0)
        throw std::invalid_argument("gamma_k requires k >= 0");
    auto ball = balls(d, k);
    DominationResult result;
    for (const auto& comp : components(g)) {
        Bits target(static_cast<std::size_t>(g.order()));
        for (Vertex v : comp)
            target.set(static_cast<std::size_t>(v));
        auto part = ExactCover(ball, target).solve();
        result.witness.insert(result.witness.end(), part.begin(), part.end());
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.gamma = static_cast<int>(result.witness.size());
    return result;
}

}  // namespace edk
