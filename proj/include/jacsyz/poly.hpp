#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacsyz/monomial.hpp"
#include "jacsyz/scalar.hpp"

namespace jacsyz {

/// Homogeneous polynomial in x, y, z over Q(i). The zero polynomial carries a
/// degree tag so graded bookkeeping stays total. No zero coefficient is ever
/// stored.
class HomPoly {
  public:
    using TermMap = std::map<Monomial, Scalar, GrlexDescending>;

    HomPoly() = default;
    static HomPoly zero(int degree) {
        HomPoly p;
        p.degree_ = degree;
        return p;
    }
    static HomPoly term(const Monomial& m, Scalar c) {
        HomPoly p;
        p.degree_ = m.degree();
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }
    static HomPoly constant(Scalar c) { return term({0, 0, 0}, std::move(c)); }
    static HomPoly variable(int var) {
        return term({var == 0, var == 1, var == 2}, Scalar(1));
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw internal_error("leading term of zero polynomial");
        return terms_.begin()->first;
    }

    HomPoly operator-() const {
        HomPoly p = *this;
        for (auto& [m, c] : p.terms_) c = -c;
        return p;
    }

    HomPoly& operator+=(const HomPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) degree_ = o.degree_;
        if (degree_ != o.degree_)
            throw internal_error("adding homogeneous polynomials of different degrees");
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    HomPoly& operator-=(const HomPoly& o) { return *this += -o; }

    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }

    friend HomPoly operator*(const HomPoly& a, const HomPoly& b) {
        HomPoly p = zero(a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(ma.times(mb), ca * cb);
        return p;
    }
    friend HomPoly operator*(const Scalar& s, const HomPoly& a) {
        HomPoly p = zero(a.degree_);
        if (s.is_zero()) return p;
        for (const auto& [m, c] : a.terms_) p.terms_.emplace(m, s * c);
        return p;
    }

    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Coefficient vector in the descending graded-lex basis of S_degree.
    std::vector<Scalar> to_vector() const {
        std::vector<Scalar> v(graded_dim(degree_));
        for (const auto& [m, c] : terms_) v[graded_index(m)] = c;
        return v;
    }
    static HomPoly from_vector(const std::vector<Scalar>& v, int degree) {
        HomPoly p = zero(degree);
        auto basis = graded_basis(degree);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!v[k].is_zero()) p.terms_.emplace(basis[k], v[k]);
        return p;
    }

    std::string str() const;

  private:
    void add_term(const Monomial& m, const Scalar& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    int degree_ = 0;
    TermMap terms_;
};

/// d/dv. Degree drops by one; the zero polynomial of degree-1 is produced for
/// constants and v-free input.
inline HomPoly partial(const HomPoly& f, int var) {
    HomPoly p = HomPoly::zero(f.degree() > 0 ? f.degree() - 1 : 0);
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(var);
        if (e == 0) continue;
        Monomial n = m;
        (var == 0 ? n.a : var == 1 ? n.b : n.c) -= 1;
        p += HomPoly::term(n, Scalar(e) * c);
    }
    return p;
}

inline std::array<HomPoly, 3> gradient(const HomPoly& f) {
    return {partial(f, 0), partial(f, 1), partial(f, 2)};
}

/// Exact polynomial division; nullopt when q does not divide p.
inline std::optional<HomPoly> exact_divide(const HomPoly& p, const HomPoly& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return HomPoly::zero(std::max(p.degree() - q.degree(), 0));
    if (p.degree() < q.degree()) return std::nullopt;
    HomPoly rem = p;
    HomPoly quot = HomPoly::zero(p.degree() - q.degree());
    const Monomial& lmq = q.leading_monomial();
    const Scalar lcq = q.coeff(lmq);
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!lmq.divides(lm)) return std::nullopt;
        HomPoly t = HomPoly::term(lm.quotient(lmq), rem.coeff(lm) / lcq);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

inline bool divides(const HomPoly& q, const HomPoly& p) {
    return exact_divide(p, q).has_value();
}

/// f(M v): substitute each variable by the linear form given by column v of M.
inline HomPoly apply_linear(const HomPoly& f, const std::array<std::array<Scalar, 3>, 3>& M) {
    std::array<HomPoly, 3> imgs;
    for (int v = 0; v < 3; ++v) {
        imgs[v] = HomPoly::zero(1);
        for (int r = 0; r < 3; ++r) imgs[v] += M[r][v] * HomPoly::variable(r);
    }
    HomPoly out = HomPoly::zero(f.degree());
    for (const auto& [m, c] : f.terms()) {
        HomPoly t = HomPoly::constant(c);
        for (int v = 0; v < 3; ++v) {
            int e = m.exponent(v);
            for (int k = 0; k < e; ++k) t = t * imgs[v];
        }
        out += t;
    }
    return out;
}

// ---------------------------------------------------------------------------

/// Binary form b(s, t) of fixed degree; coefficients()[k] multiplies s^k
/// t^{degree-k}.
class BinaryForm {
  public:
    explicit BinaryForm(int degree) : degree_(degree), c_(degree + 1) {}
    BinaryForm(int degree, std::vector<Scalar> c) : degree_(degree), c_(std::move(c)) {
        if ((int)c_.size() != degree_ + 1) throw internal_error("binary form size mismatch");
    }

    int degree() const { return degree_; }
    const std::vector<Scalar>& coefficients() const { return c_; }
    Scalar& operator[](int k) { return c_[k]; }
    const Scalar& operator[](int k) const { return c_[k]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm p(a.degree_ + b.degree_);
        for (int i = 0; i <= a.degree_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j <= b.degree_; ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return p;
    }
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) {
        if (a.degree_ != b.degree_) throw internal_error("binary form degree mismatch");
        for (int i = 0; i <= a.degree_; ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend BinaryForm operator*(const Scalar& s, BinaryForm a) {
        for (auto& v : a.c_) v = s * v;
        return a;
    }
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

    BinaryForm d_s() const {
        BinaryForm p(degree_ > 0 ? degree_ - 1 : 0);
        for (int k = 1; k <= degree_; ++k) p.c_[k - 1] = Scalar(k) * c_[k];
        return p;
    }
    BinaryForm d_t() const {
        BinaryForm p(degree_ > 0 ? degree_ - 1 : 0);
        for (int k = 0; k < degree_; ++k) p.c_[k] = Scalar(degree_ - k) * c_[k];
        return p;
    }

  private:
    int degree_;
    std::vector<Scalar> c_;
};

namespace detail {

/// Univariate gcd by Euclid, monic result; inputs as coefficient vectors with
/// index = power, trailing zeros allowed.
inline std::vector<Scalar> uni_trim(std::vector<Scalar> p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

inline std::vector<Scalar> uni_rem(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Scalar q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= q * b[k];
        a = uni_trim(std::move(a));
    }
    return a;
}

inline std::vector<Scalar> uni_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        auto r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Scalar lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

}  // namespace detail

/// gcd of two binary forms, monic-normalized (leading s-power coefficient 1).
/// Factors of s and t are split off and handled exactly.
inline BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto split = [](const BinaryForm& f) {
        int lo = 0, hi = f.degree();
        while (f[lo].is_zero()) ++lo;
        while (f[hi].is_zero()) --hi;
        // f = s^lo * t^{degree-hi} * core(s,t), core has nonzero ends
        std::vector<Scalar> core(f.coefficients().begin() + lo,
                                 f.coefficients().begin() + hi + 1);
        return std::make_tuple(lo, f.degree() - hi, core);
    };
    auto [sa, ta, ca] = split(a);
    auto [sb, tb, cb] = split(b);
    auto g = detail::uni_gcd(ca, cb);
    int spow = std::min(sa, sb), tpow = std::min(ta, tb);
    int gdeg = (int)g.size() - 1;
    BinaryForm out(spow + tpow + gdeg);
    for (int k = 0; k <= gdeg; ++k) out[spow + k] = g[k];
    return out;
}

/// Number of distinct roots of a nonzero binary form in P^1 over C:
/// deg b - deg gcd(b, db/ds, db/dt).
inline int distinct_root_count(const BinaryForm& b) {
    if (b.is_zero()) throw input_error("distinct_root_count of the zero form");
    if (b.degree() == 0) return 0;
    BinaryForm g = binary_gcd(binary_gcd(b, b.d_s()), b.d_t());
    return b.degree() - g.degree();
}

/// Deterministic pair of points spanning the line L (degree-1 form): the
/// standard basis vectors are projected off the normal direction in order
/// e1, e2, e3 and the first two independent nonzero projections are kept,
/// scaled so their first nonzero coordinate is 1.
inline std::array<std::array<Scalar, 3>, 2> line_points(const HomPoly& L) {
    if (L.degree() != 1 || L.is_zero()) throw input_error("line must be a nonzero linear form");
    std::array<Scalar, 3> n = {L.coeff({1, 0, 0}), L.coeff({0, 1, 0}), L.coeff({0, 0, 1})};
    Scalar nn = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
    std::array<std::array<Scalar, 3>, 2> pts;
    int found = 0;
    for (int e = 0; e < 3 && found < 2; ++e) {
        std::array<Scalar, 3> p = {Scalar(0), Scalar(0), Scalar(0)};
        p[e] = Scalar(1);
        if (!nn.is_zero()) {
            // subtract the component along n; over Q(i) the "metric" x^2+y^2+z^2
            // can be isotropic (nn == 0), in which case we fall back below
            for (int k = 0; k < 3; ++k) p[k] -= n[e] * n[k] / nn;
        } else {
            // the quadratic form x^2+y^2+z^2 is isotropic on n (possible over
            // Q(i)); use p = e_e x n instead, which always lies on L
            std::array<Scalar, 3> q = {Scalar(0), Scalar(0), Scalar(0)};
            q[(e + 1) % 3] = n[(e + 2) % 3];
            q[(e + 2) % 3] = -n[(e + 1) % 3];
            p = q;
        }
        bool zero = p[0].is_zero() && p[1].is_zero() && p[2].is_zero();
        if (zero) continue;
        // normalize: first nonzero coordinate = 1
        Scalar lead;
        for (const auto& c : p)
            if (!c.is_zero()) {
                lead = c;
                break;
            }
        for (auto& c : p) c = c / lead;
        if (found == 1) {
            // independence with pts[0]: 2x3 rank check via cross products
            const auto& u = pts[0];
            bool dep = (u[0] * p[1] - u[1] * p[0]).is_zero() &&
                       (u[0] * p[2] - u[2] * p[0]).is_zero() &&
                       (u[1] * p[2] - u[2] * p[1]).is_zero();
            if (dep) continue;
        }
        pts[found++] = p;
    }
    if (found < 2) throw internal_error("could not span line by projected basis points");
    return pts;
}

/// Restriction of f to the line L as a binary form of degree deg f, using the
/// deterministic parametrization from line_points. Identically zero iff L | f.
inline BinaryForm restrict_to_line(const HomPoly& f, const HomPoly& L) {
    auto pts = line_points(L);
    std::array<BinaryForm, 3> comps = {BinaryForm(1), BinaryForm(1), BinaryForm(1)};
    for (int v = 0; v < 3; ++v) {
        comps[v][1] = pts[0][v];  // s-coefficient
        comps[v][0] = pts[1][v];  // t-coefficient
    }
    BinaryForm out(f.degree());
    for (const auto& [m, c] : f.terms()) {
        BinaryForm t(0, {c});
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < m.exponent(v); ++k) t = t * comps[v];
        // t has degree = m.degree() = f.degree()
        out = out + t;
    }
    return out;
}

/// Pull f back along a parametrized map P^1 -> P^2 whose components are
/// binary forms of a common degree.
inline BinaryForm pullback(const HomPoly& f, const std::array<BinaryForm, 3>& comps) {
    int cd = comps[0].degree();
    BinaryForm out(f.degree() * cd);
    for (const auto& [m, c] : f.terms()) {
        BinaryForm t(0, {c});
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < m.exponent(v); ++k) t = t * comps[v];
        out = out + t;
    }
    return out;
}

/// Squarefreeness of a nonzero form, decided exactly: move a point with
/// f != 0 to (0:0:1), then f is squarefree iff Res_z(f, f_z) is not
/// identically zero, tested on d(d-1)+1 specializations y = t.
inline bool is_squarefree(const HomPoly& f) {
    if (f.is_zero()) return false;
    int d = f.degree();
    if (d == 0) return true;
    // find a point where f is nonzero
    auto eval = [&f](long px, long py, long pz) {
        Scalar v(0);
        for (const auto& [m, c] : f.terms()) {
            Scalar t = c;
            for (int k = 0; k < m.a; ++k) t *= Scalar(px);
            for (int k = 0; k < m.b; ++k) t *= Scalar(py);
            for (int k = 0; k < m.c; ++k) t *= Scalar(pz);
            v += t;
        }
        return v;
    };
    std::array<long, 3> pt = {0, 0, 0};
    bool foundpt = false;
    for (long h = 0; h <= 2 * d + 2 && !foundpt; ++h)
        for (long px = -h; px <= h && !foundpt; ++px)
            for (long py = -h; py <= h && !foundpt; ++py) {
                if (std::max(std::abs(px), std::abs(py)) != h && h > 0) continue;
                if (!eval(px, py, 1).is_zero()) {
                    pt = {px, py, 1};
                    foundpt = true;
                }
            }
    if (!foundpt) throw internal_error("no affine point off the curve found");
    // coordinate change sending (0:0:1) -> pt; columns are basis images
    std::array<std::array<Scalar, 3>, 3> M = {{{Scalar(1), Scalar(0), Scalar(pt[0])},
                                               {Scalar(0), Scalar(1), Scalar(pt[1])},
                                               {Scalar(0), Scalar(0), Scalar(pt[2])}}};
    HomPoly F = apply_linear(f, M);
    if (d == 1) return true;
    HomPoly Fz = partial(F, 2);
    int bound = d * (d - 1);
    for (long t = 0; t <= bound; ++t) {
        // specialize x = 1, y = t: univariate in z, coefficients by z-power
        auto specialize = [&](const HomPoly& p) {
            std::vector<Scalar> u(p.degree() + 1);
            for (const auto& [m, c] : p.terms()) {
                Scalar v = c;
                for (int k = 0; k < m.b; ++k) v *= Scalar(t);
                u[m.c] += v;
            }
            return detail::uni_trim(std::move(u));
        };
        auto g = detail::uni_gcd(specialize(F), specialize(Fz));
        if (g.size() == 1) return true;
    }
    return false;
}

inline std::string HomPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            int e = m.exponent(v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (v == 0 ? "x" : v == 1 ? "y" : "z");
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string cs;
        bool neg = false;
        if (mono.empty()) {
            cs = c.is_real() ? c.str() : "(" + c.str() + ")";
            if (c.is_real() && c.re() < 0) {
                neg = true;
                cs = (-c).str();
            }
        } else if (c.is_one()) {
            cs = "";
        } else if ((-c).is_one()) {
            neg = true;
            cs = "";
        } else if (c.is_real()) {
            if (c.re() < 0) {
                neg = true;
                cs = to_string(-c.re()) + "*";
            } else {
                cs = to_string(c.re()) + "*";
            }
        } else if (c.re() == 0) {
            Scalar ic = c;
            if (c.im() < 0) {
                neg = true;
                ic = -c;
            }
            cs = (ic.im() == 1 ? std::string("i") : to_string(ic.im()) + "*i") + "*";
        } else {
            cs = "(" + c.str() + ")*";
        }
        if (first) {
            out += (neg ? "-" : "") + cs + mono;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + cs + mono;
        }
    }
    return out;
}

}  // namespace jacsyz
