#include "edk/closed_forms.hpp"

#include <stdexcept>

namespace edk {

namespace {

int ceil_div(int a, int b)
{
    return (a + b - 1) / b;
}

}  // namespace

int path_number(int n, int k)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("path_number needs n >= 1 and k >= 1");
    return ceil_div(n, k + 1);
}

int cycle_number(int n, int k)
{
    if (n < 3 || k < 1)
        throw std::invalid_argument("cycle_number needs n >= 3 and k >= 1");
    return ceil_div(n, 2 * k + 1);
}

int hamiltonian_upper_bound(int n, int k)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("hamiltonian_upper_bound needs n >= 1 and k >= 1");
    return ceil_div(n, 2 * k + 1);
}

std::optional<int> diameter_rule(const Graph& g, int k)
{
    if (g.order() == 0)
        throw std::invalid_argument("empty graph");
    DistMatrix d(g);
    if (d.diameter() <= k)
        return 1;
    return std::nullopt;
}

}  // namespace edk
