#include "c4gb/random_gen.hpp"

#include <set>

namespace c4gb {

StandardSet random_staircase(Rng& rng, int dim, int size) {
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

PointSet random_point_set(Rng& rng, FieldDesc field, int dim, int count, int coordinate_range) {
    std::uniform_int_distribution<long> coord(0, coordinate_range - 1);
    std::vector<std::vector<FieldElement>> pts;
    int stall = 0;
    while (static_cast<int>(pts.size()) < count) {
        std::vector<FieldElement> pt;
        for (int i = 0; i < dim; ++i) pt.push_back(FieldElement::from_integer(coord(rng), field));
        bool dup = false;
        for (const auto& other : pts) dup = dup || other == pt;
        if (!dup) {
            pts.push_back(std::move(pt));
            stall = 0;
        } else if (++stall > 1000) {
            throw SizeLimitExceeded("coordinate range too small for distinct points");
        }
    }
    return make_point_set(dim, field, std::move(pts));
}

ReducedGB random_monic_univariate(Rng& rng, FieldDesc field, int degree) {
    std::uniform_int_distribution<long> coef(-4, 4);
    LexPolynomial f(1, field);
    f.add_term({degree}, FieldElement::one(field));
    for (int k = 0; k < degree; ++k) f.add_term({k}, FieldElement::from_integer(coef(rng), field));
    std::vector<Exponent> elems;
    for (int k = 0; k < degree; ++k) elems.push_back({k});
    std::map<Exponent, LexPolynomial, LexLess> entries;
    entries.emplace(Exponent{degree}, std::move(f));
    return ReducedGB(StandardSet::validated(elems, 1), field, std::move(entries));
}

namespace {

// Distinct small-integer evaluation points.
std::vector<FieldElement> distinct_lambdas(Rng& rng, FieldDesc field, int count) {
    std::uniform_int_distribution<long> pick(0, 24);
    std::set<FieldElement> used;
    while (static_cast<int>(used.size()) < count) used.insert(FieldElement::from_integer(pick(rng), field));
    return std::vector<FieldElement>(used.begin(), used.end());
}

// A valid monic ideal in `vars` variables, built only from oracle-grade
// constructions.
ReducedGB random_basis(Rng& rng, FieldDesc field, int vars, int max_size) {
    if (max_size < 1) max_size = 1;
    if (vars == 1) {
        std::uniform_int_distribution<int> deg(1, max_size);
        return random_monic_univariate(rng, field, deg(rng));
    }
    switch (rng() % 3) {
        case 0: {
            // vanishing ideal of random points
            std::uniform_int_distribution<int> count(1, max_size);
            return vanishing_ideal_gb(random_point_set(rng, field, vars, count(rng), 7));
        }
        case 1: {
            // intersection of univariate slabs; covers non-radical summands
            std::uniform_int_distribution<int> pieces(1, 3);
            int k = pieces(rng);
            auto lambdas = distinct_lambdas(rng, field, k);
            std::vector<IdealSlice> slices;
            int budget = std::max(1, max_size / k);
            for (int i = 0; i < k; ++i)
                slices.push_back({random_basis(rng, field, vars - 1, budget), lambdas[static_cast<std::size_t>(i)]});
            return intersect_ideals_gb(slices);
        }
        default: {
            std::uniform_int_distribution<int> count(1, max_size);
            return vanishing_ideal_gb(random_point_set(rng, field, vars, count(rng), 5));
        }
    }
}

}  // namespace

SlicedInstance random_instance(Rng& rng, FieldDesc field, int n, int max_total_size) {
    std::uniform_int_distribution<int> pieces(1, 3);
    int k = pieces(rng);
    auto lambdas = distinct_lambdas(rng, field, k);
    int budget = std::max(1, max_total_size / k);
    std::vector<Summand> summands;
    for (int i = 0; i < k; ++i) {
        ReducedGB basis = random_basis(rng, field, n - 1, budget);
        summands.push_back({basis.delta(), basis, lambdas[static_cast<std::size_t>(i)]});
    }
    return SlicedInstance::make(n, field, std::move(summands));
}

}  // namespace c4gb
