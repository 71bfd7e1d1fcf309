#include <doctest.h>

#include "c4gb/stratum.hpp"
#include "support.hpp"

using namespace c4gb;
using c4gb::testing::make_set;

TEST_CASE("report on the 4-element example") {
    auto r = stratum_report(make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(r.dimension == 9);  // 4 + 3 + 2
    CHECK(r.irreducible_components == 2);
    CHECK(r.connected_components == 2);
    CHECK(!r.caveat.empty());
}

TEST_CASE("the two 6-element staircases") {
    auto d1 = make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {1, 1, 0}});
    auto r1 = stratum_report(d1);
    CHECK(r1.dimension == 11);
    CHECK(r1.irreducible_components == 1);

    auto d2 = make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 2, 0}});
    auto r2 = stratum_report(d2);
    CHECK(r2.dimension == 12);
    CHECK(r2.irreducible_components == 1);
}

TEST_CASE("dimension bound records") {
    for (int n = 1; n <= 4; ++n) {
        auto b = dimension_vs_nr(StandardSet::point(n));
        CHECK(b.projection_sum == n);
        CHECK(b.nr == n);
        CHECK(b.within);
    }
    for (int r = 1; r <= 6; ++r) {
        std::vector<Exponent> elems;
        for (int i = 0; i < r; ++i) elems.push_back({i});
        auto b = dimension_vs_nr(make_set(1, elems));
        CHECK(b.projection_sum == r);
        CHECK(b.nr == r);
    }
    auto d1 = make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {1, 1, 0}});
    auto b = dimension_vs_nr(d1);
    CHECK(b.projection_sum == 11);
    CHECK(b.nr == 18);
    CHECK(b.within);
}

TEST_CASE("projection bound and slicing consistency, exhaustively") {
    for (int dim = 1; dim <= 4; ++dim) {
        for (int size = 1; size <= 8; ++size) {
            for (const auto& s : all_standard_sets(dim, size)) {
                auto b = dimension_vs_nr(s);
                CHECK(b.within);
                if (dim < 2) continue;
                int total = b.projection_sum;
                for (const auto& dec : enumerate_decompositions(s)) {
                    // parts' projection sums plus the height reassemble the total
                    int lhs = s.height();
                    for (const auto& part : dec.expanded())
                        for (int j = 1; j <= part.dim(); ++j) lhs += static_cast<int>(part.project(j).size());
                    CHECK(lhs == total);
                }
            }
        }
    }
}

TEST_CASE("component count agrees with the admissible-subgraph count") {
    for (int size = 1; size <= 6; ++size) {
        for (const auto& s : all_standard_sets(3, size)) {
            auto r = stratum_report(s);
            CHECK(r.irreducible_components == count_admissible_subgraphs(build_iterated_graph(s)));
        }
    }
}
