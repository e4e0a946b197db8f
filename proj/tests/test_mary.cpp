#include "doctest.h"

#include "edk/eternal.hpp"
#include "edk/mary.hpp"
#include "edk/tree_reductions.hpp"

using namespace edk;

TEST_SUITE("mary-trees")
{
    TEST_CASE("shape")
    {
        CHECK(build_perfect_mary({2, 2}).order() == 7);
        Graph claw = build_perfect_mary({3, 1});
        CHECK(claw.order() == 4);
        CHECK(claw.degree(0) == 3);
        CHECK(build_perfect_mary({2, 3}).order() == 15);
        CHECK(build_perfect_mary({5, 0}).order() == 1);
        Graph t = build_perfect_mary({3, 3});
        DistMatrix d(t);
        int leaves = 0;
        for (Vertex v = 0; v < t.order(); ++v) {
            if (t.degree(v) == 1) {
                ++leaves;
                CHECK(d(0, v) == 3);
            } else if (v != 0) {
                CHECK(t.degree(v) == 4);
            }
        }
        CHECK(leaves == 27);
        CHECK(MaryTreeSpec{3, 3}.vertex_count() == 40);
        CHECK(MaryTreeSpec{2, 61}.vertex_count() == (std::int64_t{1} << 62) - 1);
        CHECK_THROWS_AS((MaryTreeSpec{2, 63}.vertex_count()), std::overflow_error);
    }

    TEST_CASE("residue depth")
    {
        CHECK(MaryTreeSpec{2, 4}.residue_depth(2) == 2);
        CHECK(MaryTreeSpec{2, 5}.residue_depth(2) == 1);
        CHECK(MaryTreeSpec{2, 7}.residue_depth(3) == 4);
        for (int k = 2; k <= 6; ++k)
            for (int d = 0; d <= 20; ++d) {
                const int q = MaryTreeSpec{2, d}.residue_depth(k);
                CHECK((d - q) % k == 0);
                CHECK(2 * q >= k);
                CHECK(2 * q < 3 * k);
            }
    }

    TEST_CASE("recursive values")
    {
        CHECK(mary_number_recursive(2, 1, 2) == 1);
        CHECK(mary_number_recursive(2, 3, 2) == 3);
        CHECK(mary_number_recursive(2, 4, 2) == 6);
        CHECK(mary_number_recursive(2, 5, 2) == 11);
        CHECK(mary_number_recursive(3, 2, 2) == 2);
        CHECK_THROWS_AS(mary_number_recursive(2, 70, 2), std::overflow_error);
        CHECK_THROWS_AS(mary_number_recursive(1, 3, 2), std::invalid_argument);
        CHECK_THROWS_AS(mary_number_recursive(2, 3, 1), std::invalid_argument);
    }

    TEST_CASE("piecewise form and its boundary")
    {
        MaryPiecewise a = mary_number_piecewise(2, 3, 2);
        CHECK(a.value == 3);
        CHECK(a.branch == 3);
        CHECK(a.consistent);
        MaryPiecewise b = mary_number_piecewise(2, 4, 2);
        CHECK(b.value == 6);
        CHECK(b.branch == 4);
        CHECK(b.consistent);
        MaryPiecewise c = mary_number_piecewise(2, 5, 2);
        CHECK(c.value == 12);
        CHECK(c.recursive == 11);
        CHECK_FALSE(c.consistent);
        for (int m = 2; m <= 4; ++m)
            for (int k = 2; k <= 5; ++k)
                for (int d = 0; d <= 12; ++d) {
                    MaryPiecewise r = mary_number_piecewise(m, d, k);
                    const int q = MaryTreeSpec{m, d}.residue_depth(k);
                    const bool boundary = 2 * d > 3 * k && 2 * q == k;
                    CHECK(r.consistent == !boundary);
                    if (boundary)
                        CHECK(r.value == r.recursive + 1);
                }
    }

    TEST_CASE("recursion matches the solver on small trees")
    {
        int solved = 0;
        for (int m = 2; m <= 4; ++m)
            for (int d = 0; d <= 3; ++d)
                for (int k = 2; k <= 4; ++k) {
                    MaryTreeSpec spec{m, d};
                    if (spec.vertex_count() > 16 || mary_number_recursive(m, d, k) > 3)
                        continue;
                    CHECK(eternal_number(build_perfect_mary(spec), k).gamma_eternal ==
                          mary_number_recursive(m, d, k));
                    ++solved;
                }
        CHECK(solved >= 10);
    }

    TEST_CASE("reductions telescope to the recursive value")
    {
        for (int d = 3; d <= 6; ++d) {
            ReductionTrace t = reduce_tree(build_perfect_mary({2, d}), 2);
            CHECK(t.lower == mary_number_recursive(2, d, 2));
            CHECK(t.upper == mary_number_recursive(2, d, 2));
        }
        ReductionTrace t3 = reduce_tree(build_perfect_mary({3, 4}), 2);
        CHECK(t3.lower == mary_number_recursive(3, 4, 2));
        CHECK(t3.upper == mary_number_recursive(3, 4, 2));
    }

    TEST_CASE("k-path steps at depth d-k remove one level of subtrees each")
    {
        // Depth 5, k = 2: the eight depth-3 vertices each anchor a k-path step
        // worth one guard, leaving the depth-3 tree.
        Graph t = build_perfect_mary({2, 5});
        int steps = 0;
        for (;;) {
            std::optional<Reduction> next;
            for (auto& r : find_all_kpath_reductions(t, 2)) {
                const Vertex x = r.step.anchors[0].vertex;
                DistMatrix d(t);
                if (d(0, x) == 3 && t.degree(x) == 3) {
                    next = std::move(r);
                    break;
                }
            }
            if (!next)
                break;
            t = std::move(next->tree);
            ++steps;
        }
        CHECK(steps == 8);
        CHECK(t.order() == 15);
        CHECK(eternal_number(t, 2).gamma_eternal == 3);
        CHECK(steps + 3 == mary_number_recursive(2, 5, 2));
    }
}
