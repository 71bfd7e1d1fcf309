#pragma once

#include <map>
#include <vector>

#include "c4gb/errors.hpp"
#include "c4gb/exponent.hpp"

namespace c4gb {

// A finite standard set (monomial staircase) in N^n: a downward-closed finite
// set of exponents. Elements are kept sorted lex-increasing; values are
// immutable after construction.
class StandardSet {
public:
    StandardSet() : dim_(0) {}

    static StandardSet empty(int dim);
    static StandardSet point(int dim);  // {origin}; for dim 0 this is the one-point set {()}
    // Canonicalizes (sorts, dedupes) and checks downward closure.
    static StandardSet validated(std::vector<Exponent> elements, int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return elements_.size(); }
    bool is_empty() const { return elements_.empty(); }
    const std::vector<Exponent>& elements() const { return elements_; }
    bool contains(const Exponent& e) const;

    bool operator==(const StandardSet&) const = default;
    // Total order used for canonical multisets: (dim, size, element list).
    bool operator<(const StandardSet& o) const;

    // Minimal generators of N^n \ Delta, sorted lex-increasing. Nonempty for
    // every finite Delta (the empty set has corner set {origin}).
    std::vector<Exponent> corners() const;
    // (union_i Delta + e_i) \ Delta, sorted lex-increasing.
    std::vector<Exponent> border() const;

    // q_j: keep coordinates j..n (1-based j); q_1 is the identity.
    StandardSet project(int j) const;
    // #q_n(Delta): the number of occupied levels of the last coordinate.
    int height() const;
    // Column map of q^n: (first n-1 coordinates) -> number of stacked
    // elements. Built at construction; addition and decomposition both work
    // column-wise on it.
    const std::map<Exponent, int>& column_heights() const;
    // Delta x {0} in N^{n+1}.
    StandardSet embed() const;
    // The trivial decomposition: Delta_i = q^n(Delta cap {last = i}), i = 0..height-1.
    std::vector<StandardSet> horizontal_slices() const;

    friend StandardSet connect_four_add(const StandardSet& a, const StandardSet& b);

private:
    StandardSet(int dim, std::vector<Exponent> sorted_elements)
        : dim_(dim), elements_(std::move(sorted_elements)) {
        if (dim_ >= 1)
            for (const auto& e : elements_) ++columns_[drop_last(e)];
    }

    int dim_;
    std::vector<Exponent> elements_;   // sorted lex-increasing, duplicate-free
    std::map<Exponent, int> columns_;  // empty in dimension 0

    friend struct StaircaseBuilder;
};

// Column-wise stacking along the last coordinate; both operands must share
// the ambient dimension (>= 1). Size is additive.
StandardSet connect_four_add(const StandardSet& a, const StandardSet& b);

// All standard sets of exactly the given size in N^dim, deterministic order.
std::vector<StandardSet> all_standard_sets(int dim, int size);

// All standard subsets of the given set, including the empty one.
std::vector<StandardSet> sub_standard_sets(const StandardSet& s);

}  // namespace c4gb
