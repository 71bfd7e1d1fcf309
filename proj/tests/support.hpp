#pragma once

#include <random>
#include <set>
#include <vector>

#include "c4gb/staircase.hpp"

namespace c4gb::testing {

inline StandardSet make_set(int dim, std::vector<Exponent> elems) {
    return StandardSet::validated(std::move(elems), dim);
}

// Independent corner oracle: enumerate the complement in the bounding box
// [0..max+1]^n and prune non-minimal elements by pairwise divisibility.
inline std::vector<Exponent> brute_force_corners(const StandardSet& s) {
    int n = s.dim();
    std::vector<int> cap(static_cast<std::size_t>(n), 0);
    for (const auto& e : s.elements())
        for (int i = 0; i < n; ++i)
            cap[static_cast<std::size_t>(i)] = std::max(cap[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)] + 1);
    std::vector<Exponent> complement;
    Exponent g(static_cast<std::size_t>(n), 0);
    while (true) {
        if (!s.contains(g)) complement.push_back(g);
        int i = n - 1;
        for (; i >= 0; --i) {
            if (g[static_cast<std::size_t>(i)] < cap[static_cast<std::size_t>(i)]) {
                ++g[static_cast<std::size_t>(i)];
                std::fill(g.begin() + i + 1, g.end(), 0);
                break;
            }
        }
        if (i < 0) break;
    }
    std::vector<Exponent> minimal;
    for (const auto& c : complement) {
        bool keep = true;
        for (const auto& d : complement)
            if (d != c && divides(d, c)) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), LexLess{});
    return minimal;
}

// Random staircase grown corner by corner; every standard set of the target
// size is reachable.
inline StandardSet random_staircase(std::mt19937_64& rng, int dim, int size) {
    StandardSet s = StandardSet::empty(dim);
    while (static_cast<int>(s.size()) < size) {
        auto cs = s.corners();
        std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
        auto elems = s.elements();
        elems.push_back(cs[pick(rng)]);
        s = StandardSet::validated(std::move(elems), dim);
    }
    return s;
}

}  // namespace c4gb::testing
