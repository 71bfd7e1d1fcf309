#include "c4gb/pointset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace c4gb {

PointSet make_point_set(int dim, FieldDesc field, std::vector<std::vector<FieldElement>> points) {
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != dim) throw DimensionMismatch("point of wrong arity");
        for (const auto& c : pt)
            if (!(c.field() == field)) throw FieldMismatch("point coordinate from wrong field");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw DuplicatePoints("duplicate point in input");
    return PointSet{dim, field, std::move(points)};
}

namespace {

struct Row {
    std::vector<FieldElement> vec;      // reduced vector
    std::size_t pivot = 0;              // first nonzero position
    std::vector<FieldElement> combo;    // expression over chosen monomials
};

}  // namespace

ReducedGB staircase_by_independence(int dim, std::size_t codim, FieldDesc field,
                                    const std::function<std::vector<FieldElement>(const Exponent&)>& vec) {
    std::vector<Exponent> chosen;                 // staircase elements, in discovery (= lex) order
    std::vector<Row> rows;                        // row-reduced evaluation vectors
    std::vector<Exponent> found_corners;
    std::map<Exponent, LexPolynomial, LexLess> entries;
    const FieldElement zero = FieldElement::zero(field);

    auto reduce = [&](std::vector<FieldElement> w) {
        std::vector<FieldElement> combo(chosen.size(), zero);
        for (const auto& row : rows) {
            if (w[row.pivot].is_zero()) continue;
            FieldElement f = w[row.pivot];
            for (std::size_t k = 0; k < codim; ++k) w[k] = w[k] - row.vec[k] * f;
            for (std::size_t k = 0; k < combo.size() && k < row.combo.size(); ++k)
                combo[k] = combo[k] + row.combo[k] * f;
        }
        return std::make_pair(std::move(w), std::move(combo));
    };

    while (true) {
        // Next candidate: the lex-least monomial outside the current
        // staircase that is not a multiple of a found corner. Minimal such
        // monomials are corners of the current staircase.
        StandardSet current = StandardSet::validated(chosen, dim);
        Exponent candidate;
        bool have = false;
        for (const auto& c : current.corners()) {
            bool skip = false;
            for (const auto& fc : found_corners)
                if (divides(fc, c)) {
                    skip = true;
                    break;
                }
            if (!skip) {
                candidate = c;
                have = true;
                break;  // corners come sorted lex-increasing
            }
        }
        if (!have) break;

        auto [residual, combo] = reduce(vec(candidate));
        bool dependent = std::all_of(residual.begin(), residual.end(),
                                     [](const FieldElement& x) { return x.is_zero(); });
        if (dependent) {
            LexPolynomial f = LexPolynomial::monomial(candidate, FieldElement::one(field));
            for (std::size_t k = 0; k < chosen.size(); ++k) f.add_term(chosen[k], -combo[k]);
            found_corners.push_back(candidate);
            entries.emplace(candidate, std::move(f));
        } else {
            std::size_t pivot = 0;
            while (residual[pivot].is_zero()) ++pivot;
            FieldElement inv = residual[pivot].inverse();
            Row row;
            row.pivot = pivot;
            row.vec.reserve(codim);
            for (const auto& x : residual) row.vec.push_back(x * inv);
            // residual = vec(candidate) - combo . vec(chosen)
            row.combo.assign(chosen.size() + 1, zero);
            for (std::size_t k = 0; k < chosen.size(); ++k) row.combo[k] = -(combo[k] * inv);
            row.combo[chosen.size()] = inv;
            rows.push_back(std::move(row));
            chosen.push_back(candidate);
            if (chosen.size() > codim)
                throw InternalReductionFailure("staircase exceeded the quotient dimension");
        }
    }
    if (chosen.size() != codim)
        throw InternalReductionFailure("staircase smaller than the quotient dimension");
    return ReducedGB(StandardSet::validated(chosen, dim), field, std::move(entries));
}

ReducedGB vanishing_ideal_gb(const PointSet& a) {
    if (a.points.empty()) throw DuplicatePoints("vanishing ideal needs at least one point");
    auto vec = [&a](const Exponent& e) {
        std::vector<FieldElement> w;
        w.reserve(a.points.size());
        for (const auto& pt : a.points) {
            FieldElement m = FieldElement::one(a.field);
            for (int i = 0; i < a.dim; ++i)
                m = m * pt[static_cast<std::size_t>(i)].pow(static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]));
            w.push_back(m);
        }
        return w;
    };
    return staircase_by_independence(a.dim, a.points.size(), a.field, vec);
}

StandardSet standard_set_of(const PointSet& a) { return vanishing_ideal_gb(a).delta(); }

std::vector<std::pair<FieldElement, PointSet>> slice_last(const PointSet& a) {
    if (a.dim < 2) throw DimensionMismatch("slicing needs dimension >= 2");
    std::map<FieldElement, std::vector<std::vector<FieldElement>>> groups;
    for (const auto& pt : a.points)
        groups[pt.back()].push_back(std::vector<FieldElement>(pt.begin(), pt.end() - 1));
    std::vector<std::pair<FieldElement, PointSet>> out;
    for (auto& [lambda, pts] : groups)
        out.emplace_back(lambda, make_point_set(a.dim - 1, a.field, std::move(pts)));
    return out;
}

PointSet frobenius(const PointSet& a) {
    PointSet b = a;
    for (auto& pt : b.points)
        for (auto& c : pt) c = c.frobenius();
    return b;
}

ReducedGB intersect_ideals_gb(const std::vector<IdealSlice>& slices) {
    if (slices.empty()) throw DuplicateEvaluationPoints("intersection of an empty family");
    const FieldDesc field = slices[0].basis.field();
    const int base_dim = slices[0].basis.dim();
    std::size_t codim = 0;
    for (const auto& s : slices) {
        if (s.basis.dim() != base_dim) throw DimensionMismatch("summands of mixed arity");
        if (!(s.basis.field() == field) || !(s.lambda.field() == field))
            throw FieldMismatch("summands over mixed fields");
        codim += s.basis.delta().size();
    }
    for (std::size_t i = 0; i < slices.size(); ++i)
        for (std::size_t j = i + 1; j < slices.size(); ++j)
            if (slices[i].lambda == slices[j].lambda)
                throw DuplicateEvaluationPoints("evaluation points must be pairwise distinct");

    const int n = base_dim + 1;
    // Coordinates of x^gamma in the direct sum of the quotients: substitute
    // x_n = lambda_i, reduce modulo the i-th basis, and read coefficients off
    // the monomial basis Delta_i.
    auto vec = [&](const Exponent& gamma) {
        std::vector<FieldElement> w;
        w.reserve(codim);
        Exponent bar = drop_last(gamma);
        for (const auto& s : slices) {
            FieldElement scale = s.lambda.pow(static_cast<std::uint64_t>(gamma.back()));
            LexPolynomial nf(base_dim, field);
            if (s.basis.delta().contains(bar)) {
                nf = LexPolynomial::monomial(bar, scale);
            } else {
                // x^bar - extended(bar) is the normal form's complement
                nf = (LexPolynomial::monomial(bar, FieldElement::one(field)) - s.basis.extended(bar))
                         .scaled(scale);
            }
            for (const auto& beta : s.basis.delta().elements()) w.push_back(nf.coefficient(beta));
        }
        return w;
    };
    return staircase_by_independence(n, codim, field, vec);
}

}  // namespace c4gb
