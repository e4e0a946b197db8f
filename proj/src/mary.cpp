#include "edk/mary.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "edk/families.hpp"

namespace edk {

namespace {

using Wide = __int128;
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t checked_pow(int m, int e)
{
    Wide result = 1;
    for (int i = 0; i < e; ++i) {
        result *= m;
        if (result > kMax)
            throw std::overflow_error(std::to_string(m) + "^" + std::to_string(e) + " exceeds 64 bits");
    }
    return static_cast<std::int64_t>(result);
}

void check_args(int m, int d, int k)
{
    if (m < 2)
        throw std::invalid_argument("m-ary tree needs m >= 2");
    if (d < 0)
        throw std::invalid_argument("depth must be non-negative");
    if (k < 2)
        throw std::invalid_argument("m-ary formulas need k >= 2");
}

/// (m^d - m^q) / (m^k - 1) as the exact sum of m^(d - ik), i = 1..(d-q)/k.
std::int64_t level_sum(int m, int d, int q, int k)
{
    Wide total = 0;
    for (int depth = d - k; depth >= q; depth -= k) {
        total += checked_pow(m, depth);
        if (total > kMax)
            throw std::overflow_error("m-ary level sum exceeds 64 bits");
    }
    return static_cast<std::int64_t>(total);
}

}  // namespace

std::int64_t MaryTreeSpec::vertex_count() const
{
    if (m < 2 || d < 0)
        throw std::invalid_argument("m-ary tree needs m >= 2 and d >= 0");
    Wide total = 0;
    for (int depth = 0; depth <= d; ++depth) {
        total += checked_pow(m, depth);
        if (total > kMax)
            throw std::overflow_error("vertex count exceeds 64 bits");
    }
    return static_cast<std::int64_t>(total);
}

int MaryTreeSpec::residue_depth(int k) const
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    const int lo = (k + 1) / 2;  // ceil(k/2)
    int q = d % k;
    while (q < lo)
        q += k;
    return q;
}

Graph build_perfect_mary(const MaryTreeSpec& spec)
{
    if (spec.vertex_count() > 50'000'000)
        throw std::invalid_argument("m-ary tree too large to materialise");
    return make_perfect_mary(spec.m, spec.d);
}

std::int64_t mary_number_recursive(int m, int d, int k)
{
    check_args(m, d, k);
    if (2 * d <= k)
        return 1;
    if (d < k)
        return 2;
    if (2 * d <= 3 * k)
        return 1 + checked_pow(m, d - k);
    const int q = MaryTreeSpec{m, d}.residue_depth(k);
    return level_sum(m, d, q, k) + mary_number_recursive(m, q, k);
}

MaryPiecewise mary_number_piecewise(int m, int d, int k)
{
    check_args(m, d, k);
    MaryPiecewise out;
    out.recursive = mary_number_recursive(m, d, k);
    if (2 * d <= k) {
        out.branch = 1;
        out.value = 1;
    } else if (d < k) {
        out.branch = 2;
        out.value = 2;
    } else if (2 * d <= 3 * k) {
        out.branch = 3;
        out.value = 1 + checked_pow(m, d - k);
    } else {
        const int q = MaryTreeSpec{m, d}.residue_depth(k);
        if (q <= k) {
            out.branch = 4;
            out.value = 2 + level_sum(m, d, q, k);
        } else {
            // (m^d - m^(q-k)) / (m^k - 1) sums m^j for j = d-k, d-2k, ..., q-k.
            out.branch = 5;
            out.value = 1 + level_sum(m, d, q - k, k);
        }
    }
    out.consistent = out.value == out.recursive;
    return out;
}

}  // namespace edk
