#pragma once

#include <functional>
#include <vector>

#include "c4gb/polynomial.hpp"

namespace c4gb {

// A finite set of distinct affine points over one field.
struct PointSet {
    int dim = 0;
    FieldDesc field;
    std::vector<std::vector<FieldElement>> points;
};

// Validates: uniform field, matching arity, pairwise distinct points.
PointSet make_point_set(int dim, FieldDesc field, std::vector<std::vector<FieldElement>> points);

// Reduced lex Groebner basis of the vanishing ideal I(A). The staircase has
// exactly #A elements; candidate monomials are processed in increasing lex
// order and join the staircase iff their evaluation vector is independent of
// those already chosen.
ReducedGB vanishing_ideal_gb(const PointSet& a);

StandardSet standard_set_of(const PointSet& a);

// Group by the exact last coordinate and drop it; keys sorted canonically.
std::vector<std::pair<FieldElement, PointSet>> slice_last(const PointSet& a);

// Coordinate-wise Frobenius (x -> x^p); identity unless the field is F_{p^2}.
PointSet frobenius(const PointSet& a);

struct IdealSlice {
    ReducedGB basis;     // in n-1 variables
    FieldElement lambda; // evaluation point on the last axis
};

// Reduced lex Groebner basis of the intersection of the ideals
// <J_i> + <x_n - lambda_i>, computed by stacking normal forms of candidate
// monomials in the direct sum of the summand quotients. Independent of the
// interpolation-based construction; serves as its ground truth.
ReducedGB intersect_ideals_gb(const std::vector<IdealSlice>& slices);

// Generic greedy-staircase engine: `vec` maps a monomial to its coordinate
// vector in a D-dimensional space; monomials are scanned in increasing lex
// order, independent ones form the staircase, dependent ones yield basis
// elements. Shared by the two oracles above.
ReducedGB staircase_by_independence(int dim, std::size_t codim, FieldDesc field,
                                    const std::function<std::vector<FieldElement>(const Exponent&)>& vec);

}  // namespace c4gb
