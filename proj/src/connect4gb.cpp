#include "c4gb/connect4gb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace c4gb {

SlicedInstance SlicedInstance::make(int n, FieldDesc field, std::vector<Summand> summands) {
    if (n < 2) throw DimensionMismatch("sliced instances need ambient dimension >= 2");
    if (summands.empty()) throw DimensionMismatch("instance without summands");
    for (const auto& s : summands) {
        if (s.delta.dim() != n - 1) throw DimensionMismatch("summand staircase of wrong dimension");
        if (s.delta.is_empty()) throw DimensionMismatch("summand with empty staircase");
        if (!(s.basis.delta() == s.delta)) throw DimensionMismatch("summand basis over wrong staircase");
        if (!(s.basis.field() == field) || !(s.lambda.field() == field))
            throw FieldMismatch("summand over wrong field");
    }
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = i + 1; j < summands.size(); ++j)
            if (summands[i].lambda == summands[j].lambda)
                throw DuplicateEvaluationPoints("evaluation points must be pairwise distinct");

    std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
        if (!(a.delta == b.delta)) return a.delta < b.delta;
        return a.lambda < b.lambda;
    });

    SlicedInstance inst;
    inst.n_ = n;
    inst.field_ = field;
    inst.delta_ = StandardSet::empty(n);
    for (const auto& s : summands) inst.delta_ = connect_four_add(inst.delta_, s.delta.embed());
    inst.summands_ = std::move(summands);
    return inst;
}

AlphaPartition alpha_partition(const SlicedInstance& inst, const Exponent& alpha) {
    AlphaPartition part;
    Exponent bar = drop_last(alpha);
    std::set<Exponent, LexLess> gamma;
    for (int i = 0; i < static_cast<int>(inst.summands().size()); ++i) {
        const auto& delta_i = inst.summands()[static_cast<std::size_t>(i)].delta;
        if (delta_i.contains(bar)) {
            part.s.push_back(i);
        } else {
            part.t.push_back(i);
            for (const auto& beta : delta_i.elements())
                if (lex_less(beta, bar)) gamma.insert(beta);
        }
    }
    part.gamma.assign(gamma.begin(), gamma.end());
    return part;
}

LexPolynomial characteristic_poly(const std::vector<FieldElement>& lambdas, std::size_t which, int dim) {
    if (which >= lambdas.size()) throw Error("node index out of range");
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw DuplicateEvaluationPoints("interpolation nodes must be distinct");
    const FieldDesc fd = lambdas[which].field();
    LexPolynomial chi = LexPolynomial::constant(dim, FieldElement::one(fd));
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        if (j == which) continue;
        FieldElement denom = (lambdas[which] - lambdas[j]).inverse();
        chi = chi * LexPolynomial::linear(dim, dim, lambdas[j]).scaled(denom);
    }
    return chi;
}

LexPolynomial build_phi(const SlicedInstance& inst, const Exponent& alpha) {
    if (inst.delta().contains(alpha)) throw Error("phi is only defined outside the staircase");
    const int n = inst.n();
    const FieldDesc fd = inst.field();
    Exponent bar = drop_last(alpha);
    AlphaPartition part = alpha_partition(inst, alpha);

    // theta: 1 when every summand staircase contains the column, otherwise
    // the chi-weighted combination of the summands' basis polynomials at it.
    LexPolynomial theta = LexPolynomial::constant(n, FieldElement::one(fd));
    if (!part.t.empty()) {
        std::vector<FieldElement> nodes;
        for (int i : part.t) nodes.push_back(inst.summands()[static_cast<std::size_t>(i)].lambda);
        theta = LexPolynomial::zero(n, fd);
        for (std::size_t k = 0; k < part.t.size(); ++k) {
            const auto& summand = inst.summands()[static_cast<std::size_t>(part.t[k])];
            LexPolynomial f = summand.basis.extended(bar).lift();
            theta = theta + characteristic_poly(nodes, k, n) * f;
        }
    }
    LexPolynomial phi = theta;
    for (int i : part.s)
        phi = phi * LexPolynomial::linear(n, n, inst.summands()[static_cast<std::size_t>(i)].lambda);
    return phi;
}

namespace {

// Demand-driven reduction for one instance run. Corners are processed in
// increasing lex order; at stage s the forbidden region is the union of the
// cones over the first s+1 corners, and every demanded polynomial has its
// leading exponent in that region with a cleared tail. Memoized entries are
// revalidated against the grown region and recomputed when stale.
class PsiBuilder {
public:
    PsiBuilder(const SlicedInstance& inst, bool with_trace, PredecessorRule rule)
        : inst_(inst), with_trace_(with_trace), rule_(rule), corners_(inst.delta().corners()) {}

    ConnectFourResult run() {
        std::map<Exponent, LexPolynomial, LexLess> entries;
        for (stage_ = 0; stage_ < corners_.size(); ++stage_) {
            if (with_trace_) traces_.push_back(CornerTrace{corners_[stage_], {}});
            entries.emplace(corners_[stage_], demand(corners_[stage_], nullptr));
        }
        ConnectFourResult result{inst_.delta(),
                                 ReducedGB(inst_.delta(), inst_.field(), std::move(entries)),
                                 std::nullopt};
        if (with_trace_) result.trace = std::move(traces_);
        return result;
    }

private:
    const SlicedInstance& inst_;
    bool with_trace_;
    PredecessorRule rule_;
    std::vector<Exponent> corners_;  // increasing lex
    std::size_t stage_ = 0;
    std::map<Exponent, LexPolynomial, LexLess> memo_;
    std::vector<CornerTrace> traces_;

    // Is gamma in the union of the cones of the corners processed so far?
    bool forbidden(const Exponent& gamma) const {
        for (std::size_t j = 0; j <= stage_; ++j)
            if (divides(corners_[j], gamma)) return true;
        return false;
    }

    bool tail_clear(const LexPolynomial& f, const Exponent& lead) const {
        for (const auto& [e, c] : f.terms()) {
            if (e == lead) continue;
            if (forbidden(e)) return false;
        }
        return true;
    }

    // Eliminate, greatest first, every tail exponent of f inside the
    // forbidden region.
    LexPolynomial reduce_tail(LexPolynomial f, const Exponent& lead, TraceStep* step) {
        while (true) {
            const Exponent* off = nullptr;
            for (const auto& [e, c] : f.terms()) {
                if (e == lead) continue;
                if (forbidden(e)) {
                    off = &e;
                    break;  // decreasing iteration: first hit is the greatest
                }
            }
            if (!off) return f;
            Exponent gamma = *off;
            FieldElement c = f.coefficient(gamma);
            if (step) step->reduced.push_back(gamma);
            f = f - demand(gamma, &lead).scaled(c);
        }
    }

    const LexPolynomial& demand(const Exponent& gamma, const Exponent* caller) {
        if (caller && !lex_less(gamma, *caller))
            throw InternalReductionFailure("demand for (" + exponent_key(gamma) +
                                           ") violates the precedence order");
        auto hit = memo_.find(gamma);
        if (hit != memo_.end() && tail_clear(hit->second, gamma)) return hit->second;

        TraceStep step;
        step.target = gamma;
        LexPolynomial f = LexPolynomial::zero(inst_.n(), inst_.field());
        if (gamma == corners_[stage_]) {
            // stage basis: start from the interpolated generator
            step.rule = "phi-base";
            f = reduce_tail(build_phi(inst_, gamma), gamma, with_trace_ ? &step : nullptr);
        } else {
            // inner step: shift the lex predecessor along an axis that stays
            // in the forbidden region
            const int n = inst_.n();
            int axis = -1;
            if (rule_ == PredecessorRule::SmallestAxis) {
                for (int i = 0; i < n && axis < 0; ++i)
                    if (gamma[static_cast<std::size_t>(i)] > 0 &&
                        forbidden(exponent_diff(gamma, unit_exponent(n, i))))
                        axis = i;
            } else {
                for (int i = n - 1; i >= 0 && axis < 0; --i)
                    if (gamma[static_cast<std::size_t>(i)] > 0 &&
                        forbidden(exponent_diff(gamma, unit_exponent(n, i))))
                        axis = i;
            }
            if (axis < 0)
                throw InternalReductionFailure("no predecessor of (" + exponent_key(gamma) +
                                               ") stays in the corner cones");
            step.rule = "shift-axis-" + std::to_string(axis + 1);
            Exponent pred = exponent_diff(gamma, unit_exponent(n, axis));
            LexPolynomial base =
                demand(pred, &gamma).times_monomial(unit_exponent(n, axis), FieldElement::one(inst_.field()));
            f = reduce_tail(std::move(base), gamma, with_trace_ ? &step : nullptr);
        }
        if (f.is_zero() || !(f.leading_exponent() == gamma) || !f.leading_coefficient().is_one())
            throw InternalReductionFailure("reduction lost the leading term of (" + exponent_key(gamma) + ")");
        if (with_trace_ && !traces_.empty()) traces_.back().steps.push_back(std::move(step));
        auto [it, unused] = memo_.insert_or_assign(gamma, std::move(f));
        (void)unused;
        return it->second;
    }
};

}  // namespace

ConnectFourResult reduce_to_psi(const SlicedInstance& inst, bool with_trace, PredecessorRule rule) {
    PsiBuilder builder(inst, with_trace, rule);
    return builder.run();
}

MembershipReport membership_check(const SlicedInstance& inst, const ConnectFourResult& result) {
    MembershipReport report;
    for (const auto& [corner, f] : result.psi.entries()) {
        for (int i = 0; i < static_cast<int>(inst.summands().size()); ++i) {
            const auto& s = inst.summands()[static_cast<std::size_t>(i)];
            LexPolynomial specialized = f.substitute_last(s.lambda);
            bool ok = s.basis.normal_form(specialized).is_zero();
            report.entries.push_back({corner, i, ok});
            report.all_pass = report.all_pass && ok;
        }
    }
    return report;
}

}  // namespace c4gb
