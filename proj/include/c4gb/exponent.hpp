#pragma once

#include <string>
#include <vector>

namespace c4gb {

// A point of N^n. The ambient dimension is the vector length; entries are >= 0.
using Exponent = std::vector<int>;

// Lexicographic term order with x_1 the most significant variable:
// x^a > x^b iff the first differing coordinate of a is larger.
inline bool lex_less(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

struct LexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return lex_less(a, b); }
};

struct LexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return lex_less(b, a); }
};

// Componentwise divisibility: x^a | x^b.
inline bool divides(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponent exponent_sum(const Exponent& a, const Exponent& b) {
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// b must divide a.
inline Exponent exponent_diff(const Exponent& a, const Exponent& b) {
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Exponent unit_exponent(int dim, int axis) {  // axis is 0-based here
    Exponent e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(axis)] = 1;
    return e;
}

inline Exponent drop_last(const Exponent& a) {
    return Exponent(a.begin(), a.end() - 1);
}

inline Exponent with_last(const Exponent& column, int last) {
    Exponent r(column);
    r.push_back(last);
    return r;
}

inline bool is_origin(const Exponent& a) {
    for (int v : a)
        if (v != 0) return false;
    return true;
}

// "a,b,c" — used as the corner key in JSON maps.
inline std::string exponent_key(const Exponent& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s;
}

}  // namespace c4gb
