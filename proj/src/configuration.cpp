#include "edk/configuration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace edk {

Configuration::Configuration(std::vector<Vertex> positions) : positions_(std::move(positions))
{
    std::sort(positions_.begin(), positions_.end());
}

bool Configuration::contains(Vertex v) const
{
    return std::binary_search(positions_.begin(), positions_.end(), v);
}

namespace {

class DominatingEnumerator {
public:
    DominatingEnumerator(const DistMatrix& d, int k, int q)
        : d_(d), k_(k), q_(q), cover_count_(static_cast<std::size_t>(d.order()), 0),
          last_coverer_(static_cast<std::size_t>(d.order()), -1)
    {
        for (Vertex u = 0; u < d.order(); ++u)
            for (Vertex v = 0; v < d.order(); ++v)
                if (d.within(u, v, k))
                    last_coverer_[static_cast<std::size_t>(u)] = v;
    }

    std::vector<Configuration> run()
    {
        current_.clear();
        extend(0);
        return std::move(out_);
    }

private:
    void extend(Vertex lo)
    {
        const int n = d_.order();
        // A vertex nobody covers yet must be reachable from some id >= lo.
        for (Vertex u = 0; u < n; ++u)
            if (cover_count_[static_cast<std::size_t>(u)] == 0 && last_coverer_[static_cast<std::size_t>(u)] < lo)
                return;
        if (static_cast<int>(current_.size()) == q_) {
            if (std::find(cover_count_.begin(), cover_count_.end(), 0) == cover_count_.end())
                out_.emplace_back(current_);
            return;
        }
        for (Vertex v = lo; v < n; ++v) {
            current_.push_back(v);
            for (Vertex u = 0; u < n; ++u)
                if (d_.within(v, u, k_))
                    ++cover_count_[static_cast<std::size_t>(u)];
            extend(v);
            for (Vertex u = 0; u < n; ++u)
                if (d_.within(v, u, k_))
                    --cover_count_[static_cast<std::size_t>(u)];
            current_.pop_back();
        }
    }

    const DistMatrix& d_;
    int k_;
    int q_;
    std::vector<int> cover_count_;
    std::vector<Vertex> last_coverer_;
    std::vector<Vertex> current_;
    std::vector<Configuration> out_;
};

bool augment(std::span<const std::uint64_t> adjacency, int left, std::uint64_t& visited, std::vector<int>& match_right)
{
    std::uint64_t options = adjacency[static_cast<std::size_t>(left)] & ~visited;
    while (options) {
        int right = __builtin_ctzll(options);
        options &= options - 1;
        visited |= std::uint64_t{1} << right;
        int& owner = match_right[static_cast<std::size_t>(right)];
        if (owner < 0 || augment(adjacency, owner, visited, match_right)) {
            owner = left;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Configuration> enumerate_dominating_configs(const DistMatrix& d, int k, int q)
{
    if (q < 1)
        throw std::invalid_argument("configuration size must be >= 1");
    if (d.order() == 0)
        return {};
    return DominatingEnumerator(d, k, q).run();
}

bool has_perfect_matching(std::span<const std::uint64_t> adjacency, std::vector<int>* match_of_left)
{
    const std::size_t q = adjacency.size();
    if (q > 64)
        throw std::invalid_argument("matching limited to 64 guards");
    std::vector<int> match_right(q, -1);
    for (std::size_t left = 0; left < q; ++left) {
        std::uint64_t visited = 0;
        if (!augment(adjacency, static_cast<int>(left), visited, match_right))
            return false;
    }
    if (match_of_left) {
        match_of_left->assign(q, -1);
        for (std::size_t right = 0; right < q; ++right)
            (*match_of_left)[static_cast<std::size_t>(match_right[right])] = static_cast<int>(right);
    }
    return true;
}

std::optional<MoveAssignment> transforms(const DistMatrix& d, const Configuration& from, const Configuration& to, int k)
{
    if (from.size() != to.size())
        throw std::invalid_argument("transforms: configurations differ in size");
    std::vector<std::uint64_t> adjacency(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i)
        for (std::size_t j = 0; j < to.size(); ++j)
            if (d.within(from[i], to[j], k))
                adjacency[i] |= std::uint64_t{1} << j;
    MoveAssignment assignment;
    if (!has_perfect_matching(adjacency, &assignment))
        return std::nullopt;
    return assignment;
}

std::uint64_t MultisetIndex::multiset_count(int symbols, int r)
{
    return MultisetIndex(symbols, r).count();
}

MultisetIndex::MultisetIndex(int n, int q) : n_(n), q_(q)
{
    if (n < 0 || q < 0)
        throw std::invalid_argument("MultisetIndex: negative size");
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::size_t width = static_cast<std::size_t>(n + 1);
    table_.assign(static_cast<std::size_t>(q + 1) * width, 0);
    for (int s = 0; s <= n; ++s)
        table_[static_cast<std::size_t>(s)] = 1;
    for (int r = 1; r <= q; ++r) {
        for (int s = 1; s <= n; ++s) {
            std::uint64_t a = table_[static_cast<std::size_t>(r) * width + static_cast<std::size_t>(s - 1)];
            std::uint64_t b = table_[static_cast<std::size_t>(r - 1) * width + static_cast<std::size_t>(s)];
            table_[static_cast<std::size_t>(r) * width + static_cast<std::size_t>(s)] = (a > kMax - b) ? kMax : a + b;
        }
    }
}

std::uint64_t MultisetIndex::rank(std::span<const Vertex> sorted) const
{
    std::uint64_t result = 0;
    Vertex lo = 0;
    int remaining = q_;
    for (Vertex x : sorted) {
        result += count_of(n_ - lo, remaining) - count_of(n_ - x, remaining);
        lo = x;
        --remaining;
    }
    return result;
}

}  // namespace edk
