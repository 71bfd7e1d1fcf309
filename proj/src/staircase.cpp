#include "c4gb/staircase.hpp"

#include <algorithm>
#include <set>

namespace c4gb {

namespace {

void check_dim(const Exponent& e, int dim) {
    if (static_cast<int>(e.size()) != dim)
        throw DimensionMismatch("exponent of length " + std::to_string(e.size()) +
                                " in ambient dimension " + std::to_string(dim));
    for (int v : e)
        if (v < 0) throw DimensionMismatch("negative exponent entry");
}

}  // namespace

// Gives internal code access to the trusted constructor; every caller below
// produces sets that are downward closed by construction.
struct StaircaseBuilder {
    static StandardSet make(int dim, std::vector<Exponent> sorted) {
        return StandardSet(dim, std::move(sorted));
    }
};

StandardSet StandardSet::empty(int dim) { return StaircaseBuilder::make(dim, {}); }

StandardSet StandardSet::point(int dim) {
    return StaircaseBuilder::make(dim, {Exponent(static_cast<std::size_t>(dim), 0)});
}

StandardSet StandardSet::validated(std::vector<Exponent> elements, int dim) {
    if (dim < 0) throw DimensionMismatch("negative dimension");
    for (const auto& e : elements) check_dim(e, dim);
    std::sort(elements.begin(), elements.end(), LexLess{});
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    StandardSet s(dim, std::move(elements));
    for (const auto& e : s.elements_) {
        for (int i = 0; i < dim; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            Exponent pred(e);
            --pred[static_cast<std::size_t>(i)];
            if (!s.contains(pred))
                throw ClosureViolation(e, i + 1,
                                       "element (" + exponent_key(e) + ") lacks predecessor on axis " +
                                           std::to_string(i + 1));
        }
    }
    return s;
}

bool StandardSet::contains(const Exponent& e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e, LexLess{});
}

bool StandardSet::operator<(const StandardSet& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    if (elements_.size() != o.elements_.size()) return elements_.size() < o.elements_.size();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] != o.elements_[i]) return lex_less(elements_[i], o.elements_[i]);
    }
    return false;
}

std::vector<Exponent> StandardSet::corners() const {
    // Each corner coordinate is at most 1 + the maximum over Delta, so the
    // box below provably contains every minimal generator.
    std::vector<int> cap(static_cast<std::size_t>(dim_), 0);
    for (const auto& e : elements_)
        for (int i = 0; i < dim_; ++i)
            cap[static_cast<std::size_t>(i)] =
                std::max(cap[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)] + 1);

    std::vector<Exponent> out;
    Exponent g(static_cast<std::size_t>(dim_), 0);
    while (true) {
        if (!contains(g)) {
            bool minimal = true;
            for (int i = 0; i < dim_ && minimal; ++i) {
                if (g[static_cast<std::size_t>(i)] == 0) continue;
                Exponent pred(g);
                --pred[static_cast<std::size_t>(i)];
                if (!contains(pred)) minimal = false;
            }
            if (minimal) out.push_back(g);
        }
        // advance odometer over the box [0..cap_i]
        int i = dim_ - 1;
        for (; i >= 0; --i) {
            if (g[static_cast<std::size_t>(i)] < cap[static_cast<std::size_t>(i)]) {
                ++g[static_cast<std::size_t>(i)];
                std::fill(g.begin() + i + 1, g.end(), 0);
                break;
            }
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::vector<Exponent> StandardSet::border() const {
    std::set<Exponent, LexLess> shifted;
    for (const auto& e : elements_)
        for (int i = 0; i < dim_; ++i) {
            Exponent up(e);
            ++up[static_cast<std::size_t>(i)];
            shifted.insert(up);
        }
    std::vector<Exponent> out;
    for (const auto& e : shifted)
        if (!contains(e)) out.push_back(e);
    return out;
}

StandardSet StandardSet::project(int j) const {
    if (j < 1 || (dim_ > 0 && j > dim_) || (dim_ == 0 && j != 1))
        throw DimensionMismatch("projection index " + std::to_string(j) + " out of range");
    if (j == 1) return *this;
    std::set<Exponent, LexLess> image;
    for (const auto& e : elements_) image.insert(Exponent(e.begin() + (j - 1), e.end()));
    return StaircaseBuilder::make(dim_ - j + 1, std::vector<Exponent>(image.begin(), image.end()));
}

int StandardSet::height() const {
    std::set<int> levels;
    for (const auto& e : elements_) levels.insert(e.back());
    return static_cast<int>(levels.size());
}

const std::map<Exponent, int>& StandardSet::column_heights() const {
    if (dim_ < 1) throw DimensionMismatch("column map needs dimension >= 1");
    return columns_;
}

StandardSet StandardSet::embed() const {
    std::vector<Exponent> lifted;
    lifted.reserve(elements_.size());
    for (const auto& e : elements_) lifted.push_back(with_last(e, 0));
    return StaircaseBuilder::make(dim_ + 1, std::move(lifted));  // lex order is preserved
}

std::vector<StandardSet> StandardSet::horizontal_slices() const {
    if (dim_ < 1) throw DimensionMismatch("slicing needs dimension >= 1");
    std::vector<std::vector<Exponent>> levels(static_cast<std::size_t>(height()));
    for (const auto& e : elements_) levels[static_cast<std::size_t>(e.back())].push_back(drop_last(e));
    std::vector<StandardSet> out;
    for (auto& lv : levels) {
        std::sort(lv.begin(), lv.end(), LexLess{});
        out.push_back(StaircaseBuilder::make(dim_ - 1, std::move(lv)));
    }
    return out;
}

StandardSet connect_four_add(const StandardSet& a, const StandardSet& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("adding standard sets of dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
    if (a.dim() < 1) throw DimensionMismatch("addition needs dimension >= 1");
    std::map<Exponent, int> cols = a.column_heights();
    for (const auto& [col, h] : b.column_heights()) cols[col] += h;
    std::vector<Exponent> elems;
    for (const auto& [col, h] : cols)
        for (int u = 0; u < h; ++u) elems.push_back(with_last(col, u));
    std::sort(elems.begin(), elems.end(), LexLess{});
    return StaircaseBuilder::make(a.dim(), std::move(elems));
}

namespace {

// Prefixes of the lex-increasing element order are downward closed, so
// extending by lex-greater corners generates every standard set exactly once.
void extend_all(int dim, int size, std::vector<Exponent>& current, std::vector<StandardSet>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(StandardSet::validated(current, dim));
        return;
    }
    StandardSet s = StandardSet::validated(current, dim);
    for (const auto& c : s.corners()) {
        if (!current.empty() && !lex_less(current.back(), c)) continue;
        current.push_back(c);
        extend_all(dim, size, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<StandardSet> all_standard_sets(int dim, int size) {
    std::vector<StandardSet> out;
    if (size == 0) {
        out.push_back(StandardSet::empty(dim));
        return out;
    }
    if (dim == 0) {
        if (size == 1) out.push_back(StandardSet::point(0));
        return out;  // N^0 has a single point; nothing of size >= 2
    }
    std::vector<Exponent> cur;
    extend_all(dim, size, cur, out);
    return out;
}

std::vector<StandardSet> sub_standard_sets(const StandardSet& s) {
    // Same chain construction, restricted to corners that lie inside s.
    std::vector<StandardSet> out;
    out.push_back(StandardSet::empty(s.dim()));
    struct Frame {
        std::vector<Exponent> chain;
    };
    std::vector<Frame> stack{{{}}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        StandardSet part = StandardSet::validated(f.chain, s.dim());
        if (!f.chain.empty()) out.push_back(part);
        for (const auto& c : part.corners()) {
            if (!s.contains(c)) continue;
            if (!f.chain.empty() && !lex_less(f.chain.back(), c)) continue;
            Frame g = f;
            g.chain.push_back(c);
            stack.push_back(std::move(g));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace c4gb
