#include "c4gb/decomposition.hpp"

#include <algorithm>
#include <mutex>

namespace c4gb {

HeightVector height_vector(const StandardSet& s) {
    if (s.is_empty()) throw DimensionMismatch("height vector of the empty set");
    return s.column_heights();
}

int Decomposition::part_count() const {
    int n = 0;
    for (const auto& [part, mult] : parts) n += mult;
    return n;
}

std::vector<StandardSet> Decomposition::expanded() const {
    std::vector<StandardSet> out;
    for (const auto& [part, mult] : parts)
        for (int i = 0; i < mult; ++i) out.push_back(part);
    return out;
}

StandardSet Decomposition::resum() const {
    StandardSet acc = StandardSet::empty(parent_dim);
    for (const auto& [part, mult] : parts)
        for (int i = 0; i < mult; ++i) acc = connect_four_add(acc, part.embed());
    return acc;
}

bool Decomposition::operator<(const Decomposition& o) const {
    return parts < o.parts;  // pairs compare by (set, multiplicity); sets canonically
}

namespace {

// Indicator of a part over the parent's column set.
std::map<Exponent, int> indicator(const StandardSet& part) {
    std::map<Exponent, int> m;
    for (const auto& e : part.elements()) m[e] = 1;
    return m;
}

bool fits(const std::map<Exponent, int>& ind, const std::map<Exponent, int>& remaining) {
    for (const auto& [col, v] : ind) {
        auto it = remaining.find(col);
        if (it == remaining.end() || it->second < v) return false;
    }
    return true;
}

void search(const std::vector<StandardSet>& pool, std::size_t from, std::map<Exponent, int>& remaining,
            int remaining_total, std::vector<StandardSet>& chosen, const Exponent& origin,
            std::vector<std::vector<StandardSet>>& out) {
    if (remaining_total == 0) {
        out.push_back(chosen);
        return;
    }
    // Every part contains the origin column, so the origin count is the
    // number of parts still to choose; no column may need more than that.
    int slots = 0;
    auto o = remaining.find(origin);
    if (o != remaining.end()) slots = o->second;
    for (const auto& [col, v] : remaining)
        if (v > slots) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
        auto ind = indicator(pool[i]);
        if (!fits(ind, remaining)) continue;
        for (const auto& [col, v] : ind) remaining[col] -= v;
        chosen.push_back(pool[i]);
        search(pool, i, remaining, remaining_total - static_cast<int>(pool[i].size()), chosen, origin, out);
        chosen.pop_back();
        for (const auto& [col, v] : ind) remaining[col] += v;
    }
}

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const StandardSet& s) {
    if (s.dim() < 1) throw DimensionMismatch("decompositions need dimension >= 1");
    if (s.is_empty()) throw DimensionMismatch("decompositions of the empty set");

    // q^n(s): drop the last coordinate of every element
    std::vector<Exponent> cols;
    for (const auto& e : s.elements()) cols.push_back(drop_last(e));
    std::sort(cols.begin(), cols.end(), LexLess{});
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    StandardSet base = StandardSet::validated(std::move(cols), s.dim() - 1);

    std::vector<StandardSet> pool;
    for (auto& part : sub_standard_sets(base))
        if (!part.is_empty()) pool.push_back(std::move(part));
    // Largest-first choice with non-decreasing pool index yields each
    // multiset exactly once.
    std::sort(pool.begin(), pool.end(), [](const StandardSet& a, const StandardSet& b) { return b < a; });

    HeightVector remaining = height_vector(s);
    Exponent origin(static_cast<std::size_t>(s.dim() - 1), 0);
    std::vector<StandardSet> chosen;
    std::vector<std::vector<StandardSet>> raw;
    search(pool, 0, remaining, static_cast<int>(s.size()), chosen, origin, raw);

    std::vector<Decomposition> out;
    for (auto& multiset : raw) {
        Decomposition d;
        d.parent_dim = s.dim();
        std::sort(multiset.begin(), multiset.end());
        for (auto& part : multiset) {
            if (!d.parts.empty() && d.parts.back().first == part)
                ++d.parts.back().second;
            else
                d.parts.emplace_back(std::move(part), 1);
        }
        if (!(d.resum() == s))
            throw InternalReductionFailure("decomposition candidate does not re-sum to its parent");
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

unsigned long long multiset_coefficient(unsigned long long options, int picks) {
    // C(options + picks - 1, picks)
    unsigned long long num = 1;
    for (int i = 0; i < picks; ++i) {
        num = num * (options + static_cast<unsigned long long>(i));
        num /= static_cast<unsigned long long>(i + 1);  // exact: product of i+1 consecutive integers
    }
    return num;
}

}  // namespace

unsigned long long decomposition_number(const StandardSet& s) {
    if (s.dim() <= 2) return 1;
    static std::mutex mu;
    static std::map<StandardSet, unsigned long long> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
    }
    unsigned long long total = 0;
    for (const auto& dec : enumerate_decompositions(s)) {
        unsigned long long prod = 1;
        for (const auto& [part, mult] : dec.parts)
            prod *= multiset_coefficient(decomposition_number(part), mult);
        total += prod;
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(s, total);
    return total;
}

namespace {

GraphSetNode build_node(const StandardSet& s, double label, int mult, bool truncate) {
    GraphSetNode node{s, label, mult, {}};
    if (label < 1) return node;                 // dimension-0 point
    if (truncate && label < 3) return node;     // nodes below label 2 1/2 are cut
    for (const auto& dec : enumerate_decompositions(s)) {
        GraphDecompositionNode dn{dec, label - 0.5, {}};
        if (!truncate || label - 1 >= 3) {
            for (const auto& [part, m] : dec.parts)
                dn.parts.push_back(build_node(part, label - 1, m, truncate));
        }
        node.decompositions.push_back(std::move(dn));
    }
    return node;
}

void census_walk(const GraphSetNode& n, std::map<double, int>& acc) {
    acc[n.label] += n.multiplicity;
    for (const auto& d : n.decompositions) {
        acc[d.label] += n.multiplicity;
        for (const auto& p : d.parts) {
            // occurrences below a repeated part are counted once per copy
            std::map<double, int> sub;
            census_walk(p, sub);
            for (const auto& [lbl, cnt] : sub) acc[lbl] += cnt * n.multiplicity;
        }
    }
}

}  // namespace

std::map<double, int> IteratedGraph::node_census() const {
    std::map<double, int> acc;
    census_walk(root, acc);
    return acc;
}

IteratedGraph build_iterated_graph(const StandardSet& s, const DecompositionLimits& limits,
                                   bool truncate) {
    if (s.dim() > limits.max_dim)
        throw SizeLimitExceeded("dimension " + std::to_string(s.dim()) + " exceeds limit " +
                                std::to_string(limits.max_dim));
    if (s.size() > limits.max_size)
        throw SizeLimitExceeded("size " + std::to_string(s.size()) + " exceeds limit " +
                                std::to_string(limits.max_size));
    if (s.is_empty()) throw DimensionMismatch("graph of the empty set");
    return IteratedGraph{build_node(s, s.dim(), 1, truncate), truncate};
}

namespace {

unsigned long long count_set_node(const GraphSetNode& n) {
    if (n.decompositions.empty()) return 1;  // dimension-0 point or truncation leaf
    unsigned long long total = 0;
    for (const auto& d : n.decompositions) {
        unsigned long long prod = 1;
        if (d.parts.empty()) {
            // truncated leaf: parts live in dimension <= 2 where the count is 1
            prod = 1;
        } else {
            for (const auto& p : d.parts) prod *= multiset_coefficient(count_set_node(p), p.multiplicity);
        }
        total += prod;
    }
    return total;
}

}  // namespace

unsigned long long count_admissible_subgraphs(const IteratedGraph& g) {
    return count_set_node(g.root);
}

}  // namespace c4gb
