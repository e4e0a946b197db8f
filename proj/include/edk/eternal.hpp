#ifndef EDK_ETERNAL_HPP
#define EDK_ETERNAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edk/configuration.hpp"
#include "edk/graph.hpp"

namespace edk {

/// A family of same-size configurations closed under defense, together with
/// one recorded defense for every (member, attacked vertex) pair.
struct EternalCertificate {
    struct Response {
        int state = 0;   // index into family
        Vertex attack = 0;
        int next = 0;    // index into family
        std::vector<std::pair<Vertex, Vertex>> moves;  // (from, to), one per guard
    };

    int k = 0;
    int q = 0;
    std::vector<Configuration> family;
    std::vector<Response> responses;  // sorted by (state, attack)
};

/// How elimination rounds see removals made earlier in the same round.
enum class Schedule {
    kGaussSeidel,  // removals are visible immediately
    kJacobi,       // every check in a round reads the previous round's survivors
};

enum class SweepOrder { kForward, kReverse };

struct SolveOptions {
    std::optional<int> q_min;
    std::optional<int> q_max;
    /// Cap on C(n+q-1, q) * n, the (state, attack) pairs one size may need.
    std::uint64_t max_checks = 5'000'000;
    Schedule schedule = Schedule::kGaussSeidel;
    SweepOrder order = SweepOrder::kForward;
    /// Values above 1 run Jacobi rounds split across threads.
    int threads = 1;
    /// Also test attacks on occupied vertices (always defendable by staying put).
    bool attack_occupied = false;
};

struct EliminationStats {
    int q = 0;
    std::uint64_t states = 0;     // dominating configurations of size q
    int rounds = 0;
    std::uint64_t survivors = 0;
    std::uint64_t checks = 0;     // (state, attack) evaluations
};

/// Greatest fixed point at one size: every size-q dominating configuration
/// that belongs to some eternal family. Survivors are in lexicographic order.
struct EternalFamily {
    int k = 0;
    int q = 0;
    std::vector<Configuration> survivors;
    EliminationStats stats;

    bool contains(const Configuration& c) const;
};

struct SolveReport {
    int gamma_eternal = 0;
    EternalCertificate certificate;
    int lower_bound = 0;  // gamma_k
    int upper_bound = 0;  // gamma_{floor(k/2)}
    std::vector<EliminationStats> per_q;
};

/// Thrown when a size would exceed the state budget or the q range is
/// exhausted. Carries the bracket established so far.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, int lower, int upper)
        : std::runtime_error(what), lower_(lower), upper_(upper)
    {
    }
    /// gamma_eternal >= lower()
    int lower() const { return lower_; }
    /// gamma_eternal <= upper(); -1 when unknown.
    int upper() const { return upper_; }

private:
    int lower_;
    int upper_;
};

EternalFamily eternal_family(const Graph& g, int k, int q, const SolveOptions& options = {});
EternalFamily eternal_family(const Graph& g, const DistMatrix& d, int k, int q, const SolveOptions& options = {});

/// Smallest q with a non-empty fixed point, starting at max(gamma_k, q_min).
/// Rejects disconnected graphs and k < 1.
SolveReport eternal_number(const Graph& g, int k, const SolveOptions& options = {});

/// Sum of eternal numbers over connected components.
int eternal_number_by_components(const Graph& g, int k, const SolveOptions& options = {});

/// Whether `D` survives the size-|D| fixed point.
bool is_eternal_set(const Graph& g, int k, const Configuration& D, const SolveOptions& options = {});

/// Certificate from a non-empty family. For each (member, attack) the
/// lexicographically smallest member reachable and containing the attack is
/// recorded.
EternalCertificate build_certificate(const DistMatrix& d, const EternalFamily& family);

}  // namespace edk

#endif  // EDK_ETERNAL_HPP
