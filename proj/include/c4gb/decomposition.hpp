#pragma once

#include <map>
#include <vector>

#include "c4gb/staircase.hpp"

namespace c4gb {

// Column-height profile of a nonempty staircase: q^n(beta) -> stacked count.
// Entries are >= 1 and sum to the size of the set.
using HeightVector = std::map<Exponent, int>;

HeightVector height_vector(const StandardSet& s);

// A multiset of (n-1)-dimensional staircases whose embedded sum is the
// parent. Parts are kept in canonical ascending order with multiplicities.
struct Decomposition {
    int parent_dim = 0;
    std::vector<std::pair<StandardSet, int>> parts;

    int part_count() const;                      // with multiplicity; equals height(parent)
    std::vector<StandardSet> expanded() const;   // parts repeated by multiplicity
    StandardSet resum() const;                   // embedded connect-four sum of all parts

    bool operator==(const Decomposition&) const = default;
    bool operator<(const Decomposition& o) const;
};

// The complete duplicate-free list of decompositions of a nonempty staircase,
// in canonical order. Always contains the horizontal slicing.
std::vector<Decomposition> enumerate_decompositions(const StandardSet& s);

// d(Delta): 1 in dimension <= 2, otherwise the binomial-product recursion
// over all decompositions. Memoized on the canonical set.
unsigned long long decomposition_number(const StandardSet& s);

struct DecompositionLimits {
    int max_dim = 4;
    std::size_t max_size = 8;
};

// Rooted tree alternating staircase nodes (integer labels) and decomposition
// nodes (half-integer labels); leaves are dimension-0 points, or, in the
// truncated form, decomposition nodes with label 2 1/2.
struct GraphDecompositionNode;

struct GraphSetNode {
    StandardSet set;
    double label = 0;
    int multiplicity = 1;  // within the parent decomposition
    std::vector<GraphDecompositionNode> decompositions;
};

struct GraphDecompositionNode {
    Decomposition decomposition;
    double label = 0;
    std::vector<GraphSetNode> parts;  // one node per distinct part
};

struct IteratedGraph {
    GraphSetNode root;
    bool truncated = false;

    std::map<double, int> node_census() const;  // label -> node count, occurrences expanded
};

IteratedGraph build_iterated_graph(const StandardSet& s, const DecompositionLimits& limits = {},
                                   bool truncate = false);

// Admissible-subgraph count up to symmetry: the multiset recursion over the
// tree (sum over decomposition children, product of multiset-coefficient
// choices over distinct parts).
unsigned long long count_admissible_subgraphs(const IteratedGraph& g);

}  // namespace c4gb
