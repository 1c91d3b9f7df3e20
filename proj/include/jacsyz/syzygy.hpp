#pragma once

#include <algorithm>

#include "jacsyz/grading.hpp"

namespace jacsyz {

namespace detail {

/// v -> var * v where v is a concatenation of graded blocks of the given
/// source degrees.
inline std::vector<Scalar> block_var_shift(const std::vector<Scalar>& v,
                                           const std::vector<int>& src_degs, int var) {
    std::vector<Scalar> out;
    std::size_t off = 0;
    for (int deg : src_degs) {
        std::vector<Scalar> part(v.begin() + off, v.begin() + off + graded_dim(deg));
        auto shifted = var_shift(part, deg, var);
        out.insert(out.end(), shifted.begin(), shifted.end());
        off += graded_dim(deg);
    }
    return out;
}

}  // namespace detail

/// AR(f)_k = D_0(f)_k: kernel of (a,b,c) -> a f_x + b f_y + c f_z from S_k^3
/// to S_{k+d-1}.
inline const Subspace& Curve::ar_piece(int k) {
    auto it = ar_.find(k);
    if (it != ar_.end()) return it->second;
    if (k < 0) return ar_.emplace(k, Subspace::zero(0)).first->second;
    int n = graded_dim(k);
    int tgt = k + d_ - 1;
    Matrix<Scalar> m(graded_dim(tgt), 3 * n);
    auto basis = graded_basis(k);
    for (int comp = 0; comp < 3; ++comp)
        for (int c = 0; c < n; ++c)
            for (const auto& [mon, coef] : grad_[comp].terms())
                m(graded_index(mon.times(basis[c])), comp * n + c) = coef;
    return ar_.emplace(k, Subspace::kernel(m)).first->second;
}

/// Minimal degree of a Jacobian syzygy. The Koszul relations live in degree
/// d-1, so the scan must succeed by then.
inline int Curve::mdr() {
    for (int k = 0; k <= d_ - 1; ++k)
        if (ar_piece(k).dim() > 0) return k;
    throw internal_error("no syzygy found up to degree d-1 (Koszul relations missing)");
}

inline const std::vector<std::pair<int, std::vector<Scalar>>>& Curve::ar_generators() {
    resolution_shape();
    return *gens_;
}

/// Generator degrees d'_i of AR(f) by graded Nakayama counting
/// (dim AR_k - dim S_1 AR_{k-1}), then the relation degrees e_i one
/// homological step up, by the same counting inside the free module on the
/// chosen generators. e_i are reported in the resolution convention of the
/// Milnor algebra, i.e. shifted by d-1 relative to relation degrees in AR.
inline const ResolutionShape& Curve::resolution_shape() {
    if (shape_) return *shape_;
    ResolutionShape shape;
    std::vector<std::pair<int, std::vector<Scalar>>> gens;

    const int cap = std::max(2 * d_ - 3, 0);
    for (int k = 0; k <= cap + 2; ++k) {
        const Subspace& cur = ar_piece(k);
        Subspace grown = Subspace::zero(3 * graded_dim(k));
        if (k > 0 && ar_piece(k - 1).dim() > 0) {
            std::vector<std::vector<Scalar>> rows;
            std::vector<int> degs = {k - 1, k - 1, k - 1};
            for (const auto& b : ar_piece(k - 1).basis())
                for (int var = 0; var < 3; ++var)
                    rows.push_back(detail::block_var_shift(b, degs, var));
            grown = Subspace::span(rows, 3 * graded_dim(k));
        }
        int fresh = cur.dim() - grown.dim();
        if (fresh < 0) throw internal_error("Nakayama count went negative");
        if (fresh > 0) {
            if (k > cap)
                throw internal_error("syzygy generator appeared beyond the 2d-3 bound");
            auto q = quotient_data(cur, grown);
            for (const auto& rep : q.reps) gens.emplace_back(k, rep);
            shape.dprimes.insert(shape.dprimes.end(), fresh, k);
        }
    }
    shape.m = (int)shape.dprimes.size();
    if (shape.m < 2) throw internal_error("fewer than two syzygy generators found");

    if (shape.m > 2) {
        // relation module of the chosen generators, scanned by the same
        // Nakayama technique; it is free of rank m-2 so the scan stops once
        // all m-2 minimal relations appeared
        std::vector<int> gdegs;
        for (const auto& [dk, rep] : gens) gdegs.push_back(dk);
        const int needed = shape.m - 2;
        Subspace prev = Subspace::zero(0);
        std::vector<int> prev_block_degs;
        const int relcap = 2 * (d_ - 1) + 1;
        for (int t = 0; t <= relcap && (int)shape.es.size() < needed; ++t) {
            std::vector<int> block_degs;
            int ncols = 0;
            for (int dk : gdegs) {
                block_degs.push_back(t - dk);
                ncols += graded_dim(t - dk);
            }
            if (ncols == 0) {
                prev = Subspace::zero(0);
                prev_block_degs = block_degs;
                continue;
            }
            Matrix<Scalar> m(3 * graded_dim(t), ncols);
            int off = 0;
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                int dk = gens[gi].first;
                int nsrc = graded_dim(dk);
                auto basis = graded_basis(t - dk);
                for (std::size_t c = 0; c < basis.size(); ++c) {
                    // column = monomial * generator, componentwise
                    for (int comp = 0; comp < 3; ++comp) {
                        for (int s = 0; s < nsrc; ++s) {
                            const Scalar& coef = gens[gi].second[comp * nsrc + s];
                            if (coef.is_zero()) continue;
                            Monomial mm = graded_basis(dk)[s].times(basis[c]);
                            m(comp * graded_dim(t) + graded_index(mm), off + (int)c) += coef;
                        }
                    }
                }
                off += (int)basis.size();
            }
            Subspace ker = Subspace::kernel(m);
            Subspace grown = Subspace::zero(ncols);
            if (prev.dim() > 0) {
                std::vector<std::vector<Scalar>> rows;
                for (const auto& b : prev.basis())
                    for (int var = 0; var < 3; ++var)
                        rows.push_back(detail::block_var_shift(b, prev_block_degs, var));
                grown = Subspace::span(rows, ncols);
            }
            int fresh = ker.dim() - grown.dim();
            if (fresh < 0) throw internal_error("relation Nakayama count went negative");
            shape.es.insert(shape.es.end(), fresh, t + d_ - 1);
            prev = std::move(ker);
            prev_block_degs = block_degs;
        }
        if ((int)shape.es.size() != needed)
            throw internal_error("did not find the expected m-2 second syzygies");
        for (int j = 0; j < needed; ++j) {
            int eps = shape.es[j] - (d_ + shape.dprimes[j + 2] - 1);
            if (eps < 1) throw internal_error("second syzygy shift violates epsilon >= 1");
            shape.epsilons.push_back(eps);
        }
        auto sg = sigma();
        if (!sg || *sg != 3 * (d_ - 1) - shape.es.back())
            throw internal_error("sigma does not match 3(d-1) - e_{m-2}");
    }
    gens_ = std::move(gens);
    shape_ = std::move(shape);
    return *shape_;
}

/// Tag per the (m, degree sums) case analysis, cross-checked against the
/// Tjurina-number characterizations of free and nearly free curves.
inline const Classification& Curve::classification() {
    if (class_) return *class_;
    const ResolutionShape& s = resolution_shape();
    Classification c;
    c.mdr = mdr();
    if (c.mdr != s.dprimes[0]) throw internal_error("mdr differs from d'_1");
    const auto& dp = s.dprimes;
    if (s.m == 2 && dp[0] + dp[1] == d_ - 1)
        c.tag = CurveClass::Free;
    else if (s.m == 3 && dp[0] + dp[1] == d_ && dp[2] == dp[1])
        c.tag = CurveClass::NearlyFree;
    else if (s.m == 3 && dp[0] + dp[1] == d_ && dp[2] > dp[1])
        c.tag = CurveClass::PlusOneGenerated;
    else
        c.tag = CurveClass::MSyzygy;
    if (s.m == 2 && c.tag != CurveClass::Free)
        throw internal_error("two-generator syzygy module with wrong degree sum");

    int r = c.mdr;
    long expected_free = (long)(d_ - 1) * (d_ - 1) - (long)r * (d_ - 1 - r);
    long tau = tjurina();
    if ((tau == expected_free) != (c.tag == CurveClass::Free))
        throw internal_error("freeness does not match the Tjurina identity");
    if ((tau == expected_free - 1) != (c.tag == CurveClass::NearlyFree))
        throw internal_error("near-freeness does not match the Tjurina identity");
    if (c.tag == CurveClass::NearlyFree) {
        auto sg = sigma();
        if (nu() != 1 || !sg || *sg != d_ + dp[0] - 3)
            throw internal_error("nearly free sigma/nu mismatch");
        c.exponents = {dp[0], dp[1]};
    } else {
        c.exponents = dp;
    }
    if (c.tag == CurveClass::PlusOneGenerated) {
        auto sg = sigma();
        if (nu() != dp[2] - dp[1] + 1 || !sg || *sg != 2 * d_ - dp[2] - 3)
            throw internal_error("plus-one generated sigma/nu mismatch");
    }
    class_ = std::move(c);
    return *class_;
}

/// Triple of polynomials (a, b, c) with a f_x + b f_y + c f_z = 0, i.e. an
/// element of AR(f)_k, equivalently the derivation a dx + b dy + c dz.
struct SyzygyVec {
    HomPoly a, b, c;

    int syz_degree() const { return a.degree(); }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

    const HomPoly& operator[](int k) const { return k == 0 ? a : k == 1 ? b : c; }

    /// The derivation applied to g.
    HomPoly operator()(const HomPoly& g) const {
        return a * partial(g, 0) + b * partial(g, 1) + c * partial(g, 2);
    }

    std::vector<Scalar> to_vector() const {
        std::vector<Scalar> v = a.to_vector();
        auto vb = b.to_vector(), vc = c.to_vector();
        v.insert(v.end(), vb.begin(), vb.end());
        v.insert(v.end(), vc.begin(), vc.end());
        return v;
    }
    static SyzygyVec from_vector(const std::vector<Scalar>& v, int k) {
        int n = graded_dim(k);
        SyzygyVec s;
        s.a = HomPoly::from_vector({v.begin(), v.begin() + n}, k);
        s.b = HomPoly::from_vector({v.begin() + n, v.begin() + 2 * n}, k);
        s.c = HomPoly::from_vector({v.begin() + 2 * n, v.begin() + 3 * n}, k);
        return s;
    }
};

/// Basis of AR(f)_k as syzygy triples.
inline std::vector<SyzygyVec> ar_basis(Curve& curve, int k) {
    std::vector<SyzygyVec> out;
    for (const auto& row : curve.ar_piece(k).basis()) out.push_back(SyzygyVec::from_vector(row, k));
    return out;
}

/// Verify membership of a syzygy triple in AR(f).
inline bool is_syzygy_of(const SyzygyVec& s, const Curve& curve) {
    return (s.a * partial(curve.f(), 0) + s.b * partial(curve.f(), 1) +
            s.c * partial(curve.f(), 2))
        .is_zero();
}

}  // namespace jacsyz
