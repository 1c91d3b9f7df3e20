#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "jacsyz/scalar.hpp"

namespace jacsyz {

/// Dense row-major matrix. T is Scalar for the public surface and GaussInt
/// inside the fraction-free elimination.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        return std::vector<T>(e_.begin() + std::size_t(i) * cols_,
                              e_.begin() + std::size_t(i + 1) * cols_);
    }
    void set_row(int i, const std::vector<T>& r) {
        std::copy(r.begin(), r.end(), e_.begin() + std::size_t(i) * cols_);
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols) {
        Matrix m((int)rows.size(), cols);
        for (int i = 0; i < (int)rows.size(); ++i) m.set_row(i, rows[i]);
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(rows_);
        for (int i = 0; i < rows_; ++i) {
            T acc{};
            for (int j = 0; j < cols_; ++j) {
                const T& a = (*this)(i, j);
                if (!is_zero_entry(a) && !is_zero_entry(v[j])) acc += a * v[j];
            }
            out[i] = acc;
        }
        return out;
    }

  private:
    static bool is_zero_entry(const T& t) { return t.is_zero(); }

    int rows_ = 0, cols_ = 0;
    std::vector<T> e_;
};

namespace detail {

/// Row echelon data produced by fraction-free elimination over Z[i].
struct IntEchelon {
    std::vector<std::vector<GaussInt>> rows;  // one per pivot, staircase shape
    std::vector<int> pivot_cols;              // strictly increasing
    int cols = 0;
    int rank() const { return (int)pivot_cols.size(); }
};

/// Scale a Scalar row to a Z[i] row (multiply by the lcm of denominators,
/// divide by the integer content). Leaves the span of the rows unchanged.
inline std::vector<GaussInt> integerize_row(const std::vector<Scalar>& r) {
    Integer lcm = 1;
    for (const auto& s : r) {
        if (s.re() != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.re().get_den().get_mpz_t());
        if (s.im() != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.im().get_den().get_mpz_t());
    }
    std::vector<GaussInt> out(r.size());
    Integer content = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        Rational re = r[k].re() * lcm;
        Rational im = r[k].im() * lcm;
        out[k] = GaussInt(re.get_num(), im.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[k].re.get_mpz_t());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[k].im.get_mpz_t());
    }
    if (content > 1)
        for (auto& g : out) {
            mpz_divexact(g.re.get_mpz_t(), g.re.get_mpz_t(), content.get_mpz_t());
            mpz_divexact(g.im.get_mpz_t(), g.im.get_mpz_t(), content.get_mpz_t());
        }
    return out;
}

inline std::size_t row_weight(const std::vector<GaussInt>& r) {
    std::size_t w = 0;
    for (const auto& g : r)
        if (!g.is_zero()) w += mpz_sizeinbase(g.re.get_mpz_t(), 2) + mpz_sizeinbase(g.im.get_mpz_t(), 2);
    return w;
}

/// Fraction-free (Bareiss) row echelon form. Pivot columns are always the
/// leftmost available; among candidate rows the lightest is chosen, which
/// keeps intermediate entries small on the sparse matrices produced by
/// monomial multiplication. Divisions by the previous pivot are exact by
/// Sylvester's identity, over Z as well as Z[i].
inline IntEchelon bareiss_echelon(const Matrix<Scalar>& m) {
    IntEchelon ech;
    ech.cols = m.cols();
    std::vector<std::vector<GaussInt>> work;
    work.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        auto r = integerize_row(m.row(i));
        bool zero = true;
        for (const auto& g : r)
            if (!g.is_zero()) {
                zero = false;
                break;
            }
        if (!zero) work.push_back(std::move(r));
    }
    GaussInt prev(1);
    std::size_t done = 0;  // rows already fixed as pivots
    for (int col = 0; col < m.cols() && done < work.size(); ++col) {
        // pick the lightest row with a nonzero entry in this column
        std::size_t best = work.size();
        std::size_t best_w = 0;
        for (std::size_t i = done; i < work.size(); ++i) {
            if (work[i][col].is_zero()) continue;
            std::size_t w = row_weight(work[i]);
            if (best == work.size() || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == work.size()) continue;
        std::swap(work[done], work[best]);
        const GaussInt p = work[done][col];
        for (std::size_t i = done + 1; i < work.size(); ++i) {
            if (work[i][col].is_zero()) {
                // still rescale per Bareiss to keep the minor structure intact
                for (int j = col + 1; j < m.cols(); ++j)
                    if (!work[i][j].is_zero())
                        work[i][j] = GaussInt::exact_div(p * work[i][j], prev);
            } else {
                const GaussInt f = work[i][col];
                for (int j = col + 1; j < m.cols(); ++j) {
                    GaussInt v = p * work[i][j] - f * work[done][j];
                    work[i][j] = v.is_zero() ? GaussInt() : GaussInt::exact_div(v, prev);
                }
                work[i][col] = GaussInt();
            }
        }
        prev = p;
        ech.pivot_cols.push_back(col);
        ++done;
        // drop rows that became zero
        std::size_t keep = done;
        for (std::size_t i = done; i < work.size(); ++i) {
            bool zero = true;
            for (int j = col + 1; j < m.cols(); ++j)
                if (!work[i][j].is_zero()) {
                    zero = false;
                    break;
                }
            if (!zero) {
                if (keep != i) std::swap(work[keep], work[i]);
                ++keep;
            }
        }
        work.resize(keep);
    }
    work.resize(done);
    ech.rows = std::move(work);
    return ech;
}

/// Back-substitute the integer echelon into a canonical reduced row echelon
/// form over Q(i): unit pivots, zeros above pivots.
inline std::vector<std::vector<Scalar>> echelon_to_rref(const IntEchelon& ech) {
    int r = ech.rank(), n = ech.cols;
    std::vector<std::vector<Scalar>> rows(r, std::vector<Scalar>(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j)
            if (!ech.rows[i][j].is_zero()) rows[i][j] = ech.rows[i][j].to_scalar();
    for (int i = r - 1; i >= 0; --i) {
        int p = ech.pivot_cols[i];
        Scalar inv = rows[i][p].inverse();
        for (int j = p; j < n; ++j)
            if (!rows[i][j].is_zero()) rows[i][j] *= inv;
        for (int k = 0; k < i; ++k) {
            Scalar f = rows[k][p];
            if (f.is_zero()) continue;
            for (int j = p; j < n; ++j)
                if (!rows[i][j].is_zero()) rows[k][j] -= f * rows[i][j];
        }
    }
    return rows;
}

}  // namespace detail

inline int rank(const Matrix<Scalar>& m) { return detail::bareiss_echelon(m).rank(); }

/// Canonical basis of the null space of m, one vector per free column,
/// returned in reduced echelon form by the caller (see Subspace::kernel).
inline std::vector<std::vector<Scalar>> kernel_vectors(const Matrix<Scalar>& m) {
    auto ech = detail::bareiss_echelon(m);
    int n = m.cols(), r = ech.rank();
    std::vector<bool> is_pivot(n, false);
    for (int p : ech.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> out;
    out.reserve(n - r);
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n);
        v[f] = Scalar(1);
        for (int i = r - 1; i >= 0; --i) {
            if (ech.pivot_cols[i] > f) continue;
            Scalar acc(0);
            for (int j = ech.pivot_cols[i] + 1; j <= f; ++j)
                if (!ech.rows[i][j].is_zero() && !v[j].is_zero())
                    acc += ech.rows[i][j].to_scalar() * v[j];
            v[ech.pivot_cols[i]] = -acc / ech.rows[i][ech.pivot_cols[i]].to_scalar();
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace jacsyz
