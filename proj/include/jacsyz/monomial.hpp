#pragma once

#include <vector>

#include "jacsyz/error.hpp"

namespace jacsyz {

/// x^a y^b z^c. The global monomial order is graded lexicographic with
/// x > y > z; bases of the graded pieces S_j are always enumerated in
/// descending order of it, so coefficient vectors are comparable across the
/// whole library.
struct Monomial {
    int a = 0, b = 0, c = 0;

    int degree() const { return a + b + c; }

    int exponent(int var) const { return var == 0 ? a : var == 1 ? b : c; }

    Monomial times(const Monomial& o) const { return {a + o.a, b + o.b, c + o.c}; }

    bool divides(const Monomial& o) const { return a <= o.a && b <= o.b && c <= o.c; }

    Monomial quotient(const Monomial& o) const { return {a - o.a, b - o.b, c - o.c}; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// true when m comes strictly later than n in descending graded-lex order,
/// i.e. m < n as monomials. Used as the map comparator so iteration order is
/// descending graded-lex.
struct GrlexDescending {
    bool operator()(const Monomial& m, const Monomial& n) const {
        if (m.degree() != n.degree()) return m.degree() > n.degree();
        if (m.a != n.a) return m.a > n.a;
        return m.b > n.b;
    }
};

inline int graded_dim(int j) { return j < 0 ? 0 : (j + 1) * (j + 2) / 2; }

/// All monomials of S_j in descending graded-lex order.
inline std::vector<Monomial> graded_basis(int j) {
    std::vector<Monomial> out;
    if (j < 0) return out;
    out.reserve(graded_dim(j));
    for (int a = j; a >= 0; --a)
        for (int b = j - a; b >= 0; --b) out.push_back({a, b, j - a - b});
    return out;
}

/// Index of m within graded_basis(m.degree()).
inline int graded_index(const Monomial& m) {
    int j = m.degree();
    int lead = j - m.a;
    return lead * (lead + 1) / 2 + (j - m.a - m.b);
}

}  // namespace jacsyz
