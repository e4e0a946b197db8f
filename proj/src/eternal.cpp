#include "edk/eternal.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "edk/domination.hpp"

namespace edk {

namespace {

constexpr std::uint64_t kDenseRankLimit = std::uint64_t{1} << 27;

/// State space for one size q: every dominating multiset, indexed by its
/// position in lexicographic order, with per-vertex buckets of the states
/// that contain the vertex.
class StateSpace {
public:
    StateSpace(const DistMatrix& d, int k, int q, std::vector<Configuration> configs)
        : n_(d.order()), q_(q), index_(d.order(), q)
    {
        near_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        ball_.resize(static_cast<std::size_t>(n_));
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = 0; v < n_; ++v) {
                bool w = d.within(u, v, k);
                near_[pos(u, v)] = w;
                if (w)
                    ball_[static_cast<std::size_t>(u)].push_back(v);
            }
        }

        positions_.reserve(configs.size() * static_cast<std::size_t>(q));
        bucket_.resize(static_cast<std::size_t>(n_));
        const bool dense = index_.count() <= kDenseRankLimit;
        if (dense)
            dense_lookup_.assign(static_cast<std::size_t>(index_.count()), -1);
        for (std::size_t s = 0; s < configs.size(); ++s) {
            const auto& c = configs[s];
            positions_.insert(positions_.end(), c.begin(), c.end());
            Vertex last = -1;
            for (Vertex v : c) {
                if (v != last)
                    bucket_[static_cast<std::size_t>(v)].push_back(static_cast<int>(s));
                last = v;
            }
            auto r = index_.rank(c.positions());
            if (dense)
                dense_lookup_[static_cast<std::size_t>(r)] = static_cast<int>(s);
            else
                sparse_lookup_.emplace(r, static_cast<int>(s));
        }
        configs_ = std::move(configs);
    }

    int size() const { return static_cast<int>(configs_.size()); }
    int order() const { return n_; }
    int q() const { return q_; }
    const Configuration& config(int s) const { return configs_[static_cast<std::size_t>(s)]; }
    const std::vector<Configuration>& configs() const { return configs_; }
    std::span<const Vertex> guards(int s) const
    {
        return {positions_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(q_),
                static_cast<std::size_t>(q_)};
    }
    const std::vector<int>& bucket(Vertex v) const { return bucket_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& ball(Vertex v) const { return ball_[static_cast<std::size_t>(v)]; }
    bool near(Vertex u, Vertex v) const { return near_[pos(u, v)]; }

    /// State index of a sorted multiset, -1 when it is not dominating.
    int lookup(std::span<const Vertex> sorted) const
    {
        auto r = index_.rank(sorted);
        if (!dense_lookup_.empty())
            return dense_lookup_[static_cast<std::size_t>(r)];
        auto it = sparse_lookup_.find(r);
        return it == sparse_lookup_.end() ? -1 : it->second;
    }

    bool reaches(int from, int to, std::vector<int>* assignment = nullptr) const
    {
        auto a = guards(from);
        auto b = guards(to);
        std::uint64_t adjacency[64];
        for (int i = 0; i < q_; ++i) {
            std::uint64_t mask = 0;
            for (int j = 0; j < q_; ++j)
                if (near(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]))
                    mask |= std::uint64_t{1} << j;
            if (mask == 0)
                return false;
            adjacency[i] = mask;
        }
        return has_perfect_matching(std::span<const std::uint64_t>(adjacency, static_cast<std::size_t>(q_)), assignment);
    }

private:
    std::size_t pos(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_;
    int q_;
    MultisetIndex index_;
    std::vector<bool> near_;
    std::vector<std::vector<Vertex>> ball_;
    std::vector<Configuration> configs_;
    std::vector<Vertex> positions_;
    std::vector<std::vector<int>> bucket_;
    std::vector<int> dense_lookup_;
    std::unordered_map<std::uint64_t, int> sparse_lookup_;
};

/// Greatest-fixed-point elimination over a StateSpace.
class Eliminator {
public:
    Eliminator(const StateSpace& space, const SolveOptions& options)
        : space_(space), options_(options), alive_(static_cast<std::size_t>(space.size()), 1),
          witness_(static_cast<std::size_t>(space.size()) * static_cast<std::size_t>(space.order()), -1)
    {
    }

    EliminationStats run()
    {
        EliminationStats stats;
        stats.q = space_.q();
        stats.states = static_cast<std::uint64_t>(space_.size());
        const bool jacobi = options_.schedule == Schedule::kJacobi || options_.threads > 1;
        std::vector<int> order(static_cast<std::size_t>(space_.size()));
        std::iota(order.begin(), order.end(), 0);
        if (options_.order == SweepOrder::kReverse)
            std::reverse(order.begin(), order.end());

        bool changed = true;
        while (changed) {
            ++stats.rounds;
            changed = jacobi ? jacobi_round(order, stats.checks) : gauss_seidel_round(order, stats.checks);
        }
        stats.survivors = static_cast<std::uint64_t>(std::count(alive_.begin(), alive_.end(), 1));
        return stats;
    }

    bool alive(int s) const { return alive_[static_cast<std::size_t>(s)] != 0; }

private:
    bool gauss_seidel_round(const std::vector<int>& order, std::uint64_t& checks)
    {
        bool changed = false;
        for (int s : order) {
            if (alive_[static_cast<std::size_t>(s)] && !defends_all(s, alive_, checks)) {
                alive_[static_cast<std::size_t>(s)] = 0;
                changed = true;
            }
        }
        return changed;
    }

    bool jacobi_round(const std::vector<int>& order, std::uint64_t& checks)
    {
        const std::vector<char> snapshot = alive_;
        const std::size_t workers = static_cast<std::size_t>(std::max(1, options_.threads));
        std::vector<std::uint64_t> worker_checks(workers, 0);
        auto work = [&](std::size_t w) {
            for (std::size_t i = w; i < order.size(); i += workers) {
                int s = order[i];
                if (snapshot[static_cast<std::size_t>(s)] && !defends_all(s, snapshot, worker_checks[w]))
                    alive_[static_cast<std::size_t>(s)] = 0;
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back(work, w);
            for (auto& t : pool)
                t.join();
        }
        for (auto c : worker_checks)
            checks += c;
        return alive_ != snapshot;
    }

    bool defends_all(int s, const std::vector<char>& view, std::uint64_t& checks)
    {
        auto guards = space_.guards(s);
        for (Vertex v = 0; v < space_.order(); ++v) {
            if (!options_.attack_occupied && std::binary_search(guards.begin(), guards.end(), v))
                continue;
            ++checks;
            if (find_successor(s, v, view) < 0)
                return false;
        }
        return true;
    }

    int find_successor(int s, Vertex v, const std::vector<char>& view)
    {
        int& cached = witness_[static_cast<std::size_t>(s) * static_cast<std::size_t>(space_.order()) +
                               static_cast<std::size_t>(v)];
        if (cached >= 0 && view[static_cast<std::size_t>(cached)])
            return cached;

        // Choose between scanning the states that contain v and generating
        // the configurations reachable from s that put a guard on v.
        auto guards = space_.guards(s);
        const auto& candidates = space_.bucket(v);
        double generate_cost = 0.0;
        for (std::size_t i = 0; i < guards.size(); ++i) {
            if ((i > 0 && guards[i] == guards[i - 1]) || !space_.near(guards[i], v))
                continue;
            double product = 1.0;
            for (std::size_t j = 0; j < guards.size(); ++j)
                if (j != i)
                    product *= static_cast<double>(space_.ball(guards[j]).size());
            generate_cost += product;
        }
        const double scan_cost = static_cast<double>(candidates.size()) * static_cast<double>(guards.size());

        int found = -1;
        if (generate_cost < scan_cost) {
            found = generate(s, v, view);
        } else {
            for (int t : candidates) {
                if (view[static_cast<std::size_t>(t)] && space_.reaches(s, t)) {
                    found = t;
                    break;
                }
            }
        }
        cached = found;
        return found;
    }

    int generate(int s, Vertex v, const std::vector<char>& view)
    {
        auto guards = space_.guards(s);
        const std::size_t q = guards.size();
        std::vector<Vertex> target(q);
        std::vector<Vertex> sorted(q);
        for (std::size_t pinned = 0; pinned < q; ++pinned) {
            if ((pinned > 0 && guards[pinned] == guards[pinned - 1]) || !space_.near(guards[pinned], v))
                continue;
            target[pinned] = v;
            int hit = -1;
            auto recurse = [&](auto&& self, std::size_t j) -> bool {
                if (j == q) {
                    std::copy(target.begin(), target.end(), sorted.begin());
                    std::sort(sorted.begin(), sorted.end());
                    int t = space_.lookup(sorted);
                    if (t >= 0 && view[static_cast<std::size_t>(t)]) {
                        hit = t;
                        return true;
                    }
                    return false;
                }
                if (j == pinned)
                    return self(self, j + 1);
                for (Vertex w : space_.ball(guards[j])) {
                    target[j] = w;
                    if (self(self, j + 1))
                        return true;
                }
                return false;
            };
            if (recurse(recurse, 0))
                return hit;
        }
        return -1;
    }

    const StateSpace& space_;
    const SolveOptions& options_;
    std::vector<char> alive_;
    std::vector<int> witness_;
};

void check_budget(int n, int q, const SolveOptions& options)
{
    if (q > 64)
        throw BudgetExceeded("configuration size " + std::to_string(q) + " exceeds 64 guards", q, -1);
    std::uint64_t states = MultisetIndex::multiset_count(n, q);
    std::uint64_t n64 = static_cast<std::uint64_t>(std::max(n, 1));
    if (states > options.max_checks / n64)
        throw BudgetExceeded("q = " + std::to_string(q) + " needs " + std::to_string(states) +
                                 " states x " + std::to_string(n) + " attacks, budget is " +
                                 std::to_string(options.max_checks),
                             q, -1);
}

EternalFamily solve_size(const DistMatrix& d, int k, int q, const SolveOptions& options)
{
    check_budget(d.order(), q, options);
    StateSpace space(d, k, q, enumerate_dominating_configs(d, k, q));
    Eliminator eliminator(space, options);
    EternalFamily family;
    family.k = k;
    family.q = q;
    family.stats = eliminator.run();
    for (int s = 0; s < space.size(); ++s)
        if (eliminator.alive(s))
            family.survivors.push_back(space.config(s));
    return family;
}

}  // namespace

bool EternalFamily::contains(const Configuration& c) const
{
    return std::binary_search(survivors.begin(), survivors.end(), c);
}

EternalFamily eternal_family(const Graph& g, int k, int q, const SolveOptions& options)
{
    return eternal_family(g, DistMatrix(g), k, q, options);
}

EternalFamily eternal_family(const Graph& g, const DistMatrix& d, int k, int q, const SolveOptions& options)
{
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    if (q < 1)
        throw std::invalid_argument("q must be >= 1");
    if (g.order() == 0)
        throw std::invalid_argument("empty graph");
    return solve_size(d, k, q, options);
}

EternalCertificate build_certificate(const DistMatrix& d, const EternalFamily& family)
{
    if (family.survivors.empty())
        throw std::invalid_argument("cannot certify an empty family");
    EternalCertificate cert;
    cert.k = family.k;
    cert.q = family.q;
    cert.family = family.survivors;
    const int n = d.order();
    const int members = static_cast<int>(cert.family.size());

    // Members that contain each vertex, ascending (= lexicographic order).
    std::vector<std::vector<int>> holding(static_cast<std::size_t>(n));
    for (int t = 0; t < members; ++t) {
        Vertex last = -1;
        for (Vertex v : cert.family[static_cast<std::size_t>(t)]) {
            if (v != last)
                holding[static_cast<std::size_t>(v)].push_back(t);
            last = v;
        }
    }

    for (int s = 0; s < members; ++s) {
        const auto& from = cert.family[static_cast<std::size_t>(s)];
        for (Vertex v = 0; v < n; ++v) {
            bool defended = false;
            for (int t : holding[static_cast<std::size_t>(v)]) {
                const auto& to = cert.family[static_cast<std::size_t>(t)];
                auto assignment = transforms(d, from, to, family.k);
                if (!assignment)
                    continue;
                EternalCertificate::Response r;
                r.state = s;
                r.attack = v;
                r.next = t;
                for (std::size_t i = 0; i < from.size(); ++i)
                    r.moves.emplace_back(from[i], to[static_cast<std::size_t>((*assignment)[i])]);
                cert.responses.push_back(std::move(r));
                defended = true;
                break;
            }
            if (!defended)
                throw std::logic_error("family is not closed under defense");
        }
    }
    return cert;
}

SolveReport eternal_number(const Graph& g, int k, const SolveOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("eternal_number requires k >= 1");
    if (g.order() == 0)
        throw std::invalid_argument("empty graph");
    DistMatrix d(g);
    if (!d.connected())
        throw std::invalid_argument("eternal_number requires a connected graph");

    SolveReport report;
    report.lower_bound = gamma_k(g, d, k).gamma;
    report.upper_bound = gamma_k(g, d, k / 2).gamma;
    int q = std::max(report.lower_bound, options.q_min.value_or(1));
    // Sizes past the upper bound always succeed, so the default stop is the larger of the two.
    const int q_stop = options.q_max.value_or(std::max(q, report.upper_bound));
    for (; q <= q_stop; ++q) {
        EternalFamily family;
        try {
            family = solve_size(d, k, q, options);
        } catch (const BudgetExceeded& e) {
            throw BudgetExceeded(e.what(), q, report.upper_bound);
        }
        report.per_q.push_back(family.stats);
        if (!family.survivors.empty()) {
            report.gamma_eternal = q;
            report.certificate = build_certificate(d, family);
            return report;
        }
    }
    if (!options.q_max)
        throw std::logic_error("no eternal family at the floor(k/2)-domination bound");
    throw BudgetExceeded("no eternal family with at most " + std::to_string(q_stop) + " guards", q,
                         report.upper_bound);
}

int eternal_number_by_components(const Graph& g, int k, const SolveOptions& options)
{
    int total = 0;
    for (const auto& comp : components(g))
        total += eternal_number(induced_subgraph(g, comp).graph, k, options).gamma_eternal;
    return total;
}

bool is_eternal_set(const Graph& g, int k, const Configuration& D, const SolveOptions& options)
{
    if (D.size() == 0)
        throw std::invalid_argument("empty configuration");
    for (Vertex v : D)
        if (v < 0 || v >= g.order())
            throw std::out_of_range("configuration vertex out of range");
    DistMatrix d(g);
    if (!is_distance_k_dominating(d, D.positions(), k))
        return false;
    return solve_size(d, k, static_cast<int>(D.size()), options).contains(D);
}

}  // namespace edk
