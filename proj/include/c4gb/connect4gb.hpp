#pragma once

#include <optional>
#include <vector>

#include "c4gb/polynomial.hpp"

namespace c4gb {

// One slab of the intersection problem: a monic ideal in n-1 variables with
// staircase delta, placed on the hyperplane x_n = lambda.
struct Summand {
    StandardSet delta;
    ReducedGB basis;
    FieldElement lambda;
};

// The full instance. The summand order is canonicalized (by staircase, then
// evaluation point), which realizes the multiset symmetry: permuting equal
// summands cannot change any output byte.
class SlicedInstance {
public:
    static SlicedInstance make(int n, FieldDesc field, std::vector<Summand> summands);

    int n() const { return n_; }
    const FieldDesc& field() const { return field_; }
    const std::vector<Summand>& summands() const { return summands_; }
    // Connect-four sum of the embedded summand staircases.
    const StandardSet& delta() const { return delta_; }

private:
    SlicedInstance() = default;
    int n_ = 0;
    FieldDesc field_;
    std::vector<Summand> summands_;
    StandardSet delta_;
};

// Partition of the summand index set relative to the column of alpha:
// s holds the summands whose staircase contains q^n(alpha), t the rest.
struct AlphaPartition {
    std::vector<int> s;
    std::vector<int> t;
    // union over t of the staircase elements lex-below the column of alpha
    std::vector<Exponent> gamma;
};

AlphaPartition alpha_partition(const SlicedInstance& inst, const Exponent& alpha);

// Lagrange basis polynomial in x_n for the nodes {lambdas[j]}: value 1 at
// lambdas[which], 0 at the others; degree #lambdas - 1. Returned in `dim`
// variables with support on the last axis only.
LexPolynomial characteristic_poly(const std::vector<FieldElement>& lambdas, std::size_t which, int dim);

// The interpolated generator for the column of alpha: the chi-weighted
// combination of the (extended) summand basis polynomials at that column,
// times prod_{i in s}(x_n - lambda_i). Leading exponent (q^n(alpha), #s);
// evaluating at x_n = lambda_i gives 0 for i in s and the summand polynomial
// for i in t.
LexPolynomial build_phi(const SlicedInstance& inst, const Exponent& alpha);

struct TraceStep {
    Exponent target;
    std::string rule;               // "phi-base" or "shift-axis-<i>"
    std::vector<Exponent> reduced;  // offending exponents eliminated, in order
};

struct CornerTrace {
    Exponent corner;
    std::vector<TraceStep> steps;
};

struct ConnectFourResult {
    StandardSet delta;
    ReducedGB psi;
    std::optional<std::vector<CornerTrace>> trace;
};

// Which predecessor axis the inner recursion steps through when several are
// possible; the final basis is unique either way.
enum class PredecessorRule { SmallestAxis, LargestAxis };

// Assemble the reduced lex Groebner basis of the intersection of the summand
// ideals by the interpolation-and-reduction recursion: corners in increasing
// lex order, each demanded polynomial built from its lex predecessor with
// memoization. Every recursive demand is lex-smaller; a violation raises
// InternalReductionFailure.
ConnectFourResult reduce_to_psi(const SlicedInstance& inst, bool with_trace = false,
                                PredecessorRule rule = PredecessorRule::SmallestAxis);

struct MembershipReport {
    struct Entry {
        Exponent corner;
        int summand;
        bool ok;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
};

// Checks that every basis element lies in every summand ideal: substitute
// x_n = lambda_i, reduce modulo the summand basis, expect zero.
MembershipReport membership_check(const SlicedInstance& inst, const ConnectFourResult& result);

}  // namespace c4gb
