#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jacsyz/poly.hpp"
#include "jacsyz/subspace.hpp"

namespace jacsyz {

/// Matrix of multiplication by g from S_src_deg to S_{src_deg + deg g}, in
/// the global monomial bases.
inline Matrix<Scalar> multiplication_matrix(const HomPoly& g, int src_deg) {
    int dst_deg = src_deg + g.degree();
    Matrix<Scalar> m(graded_dim(dst_deg), graded_dim(src_deg));
    auto basis = graded_basis(src_deg);
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (const auto& [mon, coef] : g.terms()) m(graded_index(mon.times(basis[c])), (int)c) = coef;
    return m;
}

/// Coefficient vector of v * p where p is given by its vector in S_deg.
inline std::vector<Scalar> var_shift(const std::vector<Scalar>& v, int deg, int var) {
    std::vector<Scalar> out(graded_dim(deg + 1));
    auto basis = graded_basis(deg);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (v[k].is_zero()) continue;
        Monomial m = basis[k];
        (var == 0 ? m.a : var == 1 ? m.b : m.c) += 1;
        out[graded_index(m)] = v[k];
    }
    return out;
}

inline Matrix<Scalar> matmul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    if (a.cols() != b.rows()) throw internal_error("matmul shape mismatch");
    Matrix<Scalar> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& av = a(i, k);
            if (av.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += av * b(k, j);
        }
    return out;
}

/// Dimensions by degree, starting at `start`.
struct HilbertTable {
    int start = 0;
    std::vector<int> values;

    int value(int j) const {
        if (j < start || j >= start + (int)values.size()) return 0;
        return values[j - start];
    }
};

enum class CurveClass { Free, NearlyFree, PlusOneGenerated, MSyzygy };

inline const char* to_string(CurveClass c) {
    switch (c) {
        case CurveClass::Free: return "free";
        case CurveClass::NearlyFree: return "nearly_free";
        case CurveClass::PlusOneGenerated: return "plus_one_generated";
        default: return "m_syzygy";
    }
}

/// Degrees appearing in the graded minimal resolution of the Milnor algebra:
/// the m syzygy generator degrees d'_1 <= ... <= d'_m and the second-syzygy
/// degrees e_1 <= ... <= e_{m-2} with epsilon_j = e_j - (d + d'_{j+2} - 1).
struct ResolutionShape {
    int m = 0;
    std::vector<int> dprimes;
    std::vector<int> es;
    std::vector<int> epsilons;
};

struct Classification {
    CurveClass tag = CurveClass::MSyzygy;
    std::vector<int> exponents;  // the pair for free/nearly free, d' list otherwise
    int mdr = 0;
};

/// Per-curve analysis context: the polynomial, its Jacobian ideal data, the
/// saturation, the Jacobian module N(f) and the syzygy module AR(f), all
/// computed degreewise over Q(i) and cached. A context is deterministic and
/// repeatable; confine each instance to one thread (distinct instances share
/// nothing).
class Curve {
  public:
    explicit Curve(HomPoly f, bool check_reduced = true) : f_(std::move(f)) {
        if (f_.is_zero() || f_.degree() < 1) throw input_error("curve must have degree >= 1");
        if (check_reduced && !is_squarefree(f_))
            throw input_error("polynomial is not reduced (it has a repeated factor)");
        grad_ = gradient(f_);
        d_ = f_.degree();
        T_ = 3 * (d_ - 2);
    }

    const HomPoly& f() const { return f_; }
    int degree() const { return d_; }
    int T() const { return T_; }
    const HomPoly& fx() const { return grad_[0]; }
    const HomPoly& fy() const { return grad_[1]; }
    const HomPoly& fz() const { return grad_[2]; }
    const std::array<HomPoly, 3>& grad() const { return grad_; }

    /// J_j: span of the degree-j multiples of the three partials.
    const Subspace& jacobian_piece(int j) {
        auto it = jpieces_.find(j);
        if (it != jpieces_.end()) return it->second;
        std::vector<std::vector<Scalar>> rows;
        if (j >= d_ - 1) {
            for (const auto& m : graded_basis(j - d_ + 1)) {
                HomPoly mono = HomPoly::term(m, Scalar(1));
                for (const auto& fu : grad_) rows.push_back((mono * fu).to_vector());
            }
        }
        return jpieces_.emplace(j, Subspace::span(rows, graded_dim(j))).first->second;
    }

    int milnor_dim(int j) {
        if (j < 0) return 0;
        return graded_dim(j) - jacobian_piece(j).dim();
    }

    /// Total Tjurina number: the stabilized value of milnor_dim. Scanning
    /// starts at T+1 where N(f) vanishes, so two equal consecutive values
    /// certify stabilization (the Hilbert function of the saturated Jacobian
    /// scheme is non-decreasing).
    int tjurina() {
        if (tau_) return *tau_;
        int j = std::max(T_ + 1, 0);
        int cap = std::max(T_, 0) + 2 * d_ + 4;
        while (j < cap) {
            int a = milnor_dim(j), b = milnor_dim(j + 1);
            if (a == b) {
                tau_ = a;
                return a;
            }
            ++j;
        }
        throw internal_error(
            "milnor dimensions did not stabilize; is the input really reduced?");
    }

    /// Saturation piece: (J : m^e)_j with e = T - j + 1, which equals the
    /// full saturated piece because N(f) vanishes in degrees > T.
    const Subspace& saturation_piece(int j) {
        if (j > T_ || j < 0) return jacobian_piece(j);
        auto it = sat_.find(j);
        if (it != sat_.end()) return it->second;
        return sat_.emplace(j, colon_power(T_ - j + 1, j)).first->second;
    }

    /// n(f)_j for j = 0..T, with self-duality and the unimodality pattern
    /// asserted (their failure indicates a bug upstream, never bad input).
    const HilbertTable& module_table() {
        if (ntable_) return *ntable_;
        HilbertTable t;
        t.start = 0;
        for (int j = 0; j <= T_; ++j)
            t.values.push_back(saturation_piece(j).dim() - jacobian_piece(j).dim());
        for (int j = 0; j <= T_; ++j) {
            if (t.values[j] < 0) throw internal_error("negative Jacobian module dimension");
            if (t.values[j] != t.values[T_ - j])
                throw internal_error("Jacobian module self-duality failed");
        }
        int half = T_ >= 0 ? T_ / 2 : 0;
        for (int j = 0; j + 1 <= half; ++j)
            if (t.values[j] > t.values[j + 1]) throw internal_error("unimodality failed (rising part)");
        for (int j = half; j + 1 <= T_; ++j)
            if (t.values[j] < t.values[j + 1]) throw internal_error("unimodality failed (falling part)");
        ntable_ = std::move(t);
        return *ntable_;
    }

    /// sigma = min{ j : n(f)_j != 0 } (nullopt when N(f) = 0, i.e. free
    /// curves) and nu = max_j n(f)_j.
    std::optional<int> sigma() {
        const auto& t = module_table();
        for (int j = 0; j < (int)t.values.size(); ++j)
            if (t.values[j] != 0) return t.start + j;
        return std::nullopt;
    }
    int nu() {
        const auto& t = module_table();
        int mx = 0;
        for (int v : t.values) mx = std::max(mx, v);
        return mx;
    }

    /// N(f)_j as a quotient with canonical representatives.
    const QuotientSpace& module_quotient(int j) {
        auto it = nquot_.find(j);
        if (it != nquot_.end()) return it->second;
        return nquot_.emplace(j, quotient_data(saturation_piece(j), jacobian_piece(j))).first->second;
    }

    // --- syzygy side (definitions in syzygy.hpp) ---
    const Subspace& ar_piece(int k);
    int mdr();
    const ResolutionShape& resolution_shape();
    const Classification& classification();
    /// representatives of the minimal generators, as (degree, vector) pairs
    const std::vector<std::pair<int, std::vector<Scalar>>>& ar_generators();

  private:
    /// (J : m^i)_j computed by iterated colon with (x, y, z).
    Subspace colon_power(int i, int j) {
        if (i == 0) return jacobian_piece(j);
        auto key = std::make_pair(i, j);
        auto it = colon_.find(key);
        if (it != colon_.end()) return it->second;
        Subspace W = colon_power(i - 1, j + 1);
        Subspace result = [&] {
            if (W.dim() == W.ambient()) return Subspace::full(graded_dim(j));
            auto A = W.annihilator();
            std::vector<std::vector<Scalar>> rows;
            for (int var = 0; var < 3; ++var) {
                HomPoly v = HomPoly::variable(var);
                auto C = matmul(A, multiplication_matrix(v, j));
                for (int r = 0; r < C.rows(); ++r) rows.push_back(C.row(r));
            }
            return Subspace::kernel(Matrix<Scalar>::from_rows(rows, graded_dim(j)));
        }();
        return colon_.emplace(key, std::move(result)).first->second;
    }

    HomPoly f_;
    std::array<HomPoly, 3> grad_;
    int d_ = 0, T_ = 0;

    std::map<int, Subspace> jpieces_;
    std::map<std::pair<int, int>, Subspace> colon_;
    std::map<int, Subspace> sat_;
    std::map<int, QuotientSpace> nquot_;
    std::optional<int> tau_;
    std::optional<HilbertTable> ntable_;

    // syzygy-side caches (managed by syzygy.hpp definitions)
    std::map<int, Subspace> ar_;
    std::optional<ResolutionShape> shape_;
    std::optional<Classification> class_;
    std::optional<std::vector<std::pair<int, std::vector<Scalar>>>> gens_;
};

}  // namespace jacsyz
