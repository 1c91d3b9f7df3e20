#pragma once

#include <optional>
#include <vector>

#include "jacsyz/matrix.hpp"

namespace jacsyz {

/// Linear subspace of Q(i)^n held in reduced row echelon form. The RREF is a
/// canonical representative, so subspace equality is representation equality
/// no matter how the space was produced.
class Subspace {
  public:
    Subspace() = default;
    static Subspace zero(int ambient) {
        Subspace s;
        s.ambient_ = ambient;
        return s;
    }
    static Subspace full(int ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.rows_.resize(ambient, std::vector<Scalar>(ambient));
        for (int i = 0; i < ambient; ++i) {
            s.rows_[i][i] = Scalar(1);
            s.pivots_.push_back(i);
        }
        return s;
    }
    /// Row space of the given spanning vectors.
    static Subspace span(const std::vector<std::vector<Scalar>>& rows, int ambient) {
        Subspace s;
        s.ambient_ = ambient;
        auto ech = detail::bareiss_echelon(Matrix<Scalar>::from_rows(rows, ambient));
        s.rows_ = detail::echelon_to_rref(ech);
        s.pivots_ = ech.pivot_cols;
        return s;
    }
    /// Null space of m.
    static Subspace kernel(const Matrix<Scalar>& m) {
        return span(kernel_vectors(m), m.cols());
    }

    int ambient() const { return ambient_; }
    int dim() const { return (int)rows_.size(); }
    const std::vector<std::vector<Scalar>>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Remainder of v after reduction by the basis; zero iff v lies in the
    /// subspace.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const {
        for (int i = 0; i < dim(); ++i) {
            const Scalar& f = v[pivots_[i]];
            if (f.is_zero()) continue;
            Scalar c = f;  // pivot entries are 1
            for (int j = pivots_[i]; j < ambient_; ++j)
                if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
        }
        return v;
    }
    bool contains(const std::vector<Scalar>& v) const {
        auto r = reduce(v);
        for (const auto& s : r)
            if (!s.is_zero()) return false;
        return true;
    }
    bool contains(const Subspace& w) const {
        if (w.ambient_ != ambient_) return false;
        for (const auto& r : w.rows_)
            if (!contains(r)) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        std::vector<std::vector<Scalar>> rows = rows_;
        rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
        return span(rows, ambient_);
    }

    Subspace intersect(const Subspace& o) const {
        // v in both spans iff both annihilators kill it
        auto a1 = annihilator();
        auto a2 = o.annihilator();
        std::vector<std::vector<Scalar>> rows;
        for (int i = 0; i < a1.rows(); ++i) rows.push_back(a1.row(i));
        for (int i = 0; i < a2.rows(); ++i) rows.push_back(a2.row(i));
        return kernel(Matrix<Scalar>::from_rows(rows, ambient_));
    }

    /// Matrix whose rows are functionals vanishing exactly on this subspace.
    Matrix<Scalar> annihilator() const {
        if (dim() == 0) {
            Matrix<Scalar> eye(ambient_, ambient_);
            for (int i = 0; i < ambient_; ++i) eye(i, i) = Scalar(1);
            return eye;
        }
        auto vecs = kernel_vectors(Matrix<Scalar>::from_rows(rows_, ambient_));
        return Matrix<Scalar>::from_rows(vecs, ambient_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

  private:
    int ambient_ = 0;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivots_;
};

/// A graded quotient V/W together with representatives completing a basis of
/// W to one of V. Representatives are chosen canonically: the RREF basis
/// vectors of V that are independent modulo W, in order.
struct QuotientSpace {
    Subspace total;                            // V
    Subspace sub;                              // W
    std::vector<std::vector<Scalar>> reps;     // dim V - dim W vectors

    int dim() const { return (int)reps.size(); }
    int ambient() const { return total.ambient(); }
};

inline QuotientSpace quotient_data(const Subspace& V, const Subspace& W) {
    if (!V.contains(W)) throw input_error("quotient_data: W is not contained in V");
    QuotientSpace q;
    q.total = V;
    q.sub = W;
    Subspace acc = W;
    for (const auto& r : V.basis()) {
        if (acc.contains(r)) continue;
        q.reps.push_back(r);
        acc = acc.sum(Subspace::span({r}, V.ambient()));
    }
    if ((int)q.reps.size() != V.dim() - W.dim())
        throw internal_error("quotient_data: dimension bookkeeping failed");
    return q;
}

/// Express v (an element of q.total) in the representative classes of q:
/// returns the rep-coordinate vector of v mod q.sub.
inline std::vector<Scalar> quotient_coords(const QuotientSpace& q, const std::vector<Scalar>& v) {
    // Solve [reps | basis(W)]^T c = v; the columns are independent by
    // construction so pivots land on every column that is used.
    int n = q.ambient();
    int nr = q.dim(), nw = q.sub.dim();
    Matrix<Scalar> aug(n, nr + nw + 1);
    for (int c = 0; c < nr; ++c)
        for (int r = 0; r < n; ++r) aug(r, c) = q.reps[c][r];
    for (int c = 0; c < nw; ++c)
        for (int r = 0; r < n; ++r) aug(r, nr + c) = q.sub.basis()[c][r];
    for (int r = 0; r < n; ++r) aug(r, nr + nw) = v[r];
    auto ech = detail::bareiss_echelon(aug);
    auto rref = detail::echelon_to_rref(ech);
    std::vector<Scalar> coords(nr);
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
        int p = ech.pivot_cols[i];
        if (p == nr + nw)
            throw internal_error("quotient_coords: vector not in the total space");
        if (p < nr) coords[p] = rref[i][nr + nw];
    }
    return coords;
}

/// Result of inducing a linear map on quotients. When the image of a
/// representative leaves dst.total the underlying mathematical hypothesis is
/// violated; that is reported, not thrown.
struct InducedMap {
    Matrix<Scalar> matrix;      // dim(dst) x dim(src)
    bool containment_ok = true;
    std::string violation;      // human-readable when !containment_ok

    int kernel_dim() const { return matrix.cols() - rank(matrix); }
    Subspace kernel() const { return Subspace::kernel(matrix); }
};

/// Matrix of the map induced on src -> dst quotients by the ambient linear
/// map `amb` (dst.ambient x src.ambient). Checks that amb maps src.sub into
/// dst.sub and src.total into dst.total.
inline InducedMap induced_map(const Matrix<Scalar>& amb, const QuotientSpace& src,
                              const QuotientSpace& dst) {
    InducedMap out;
    out.matrix = Matrix<Scalar>(dst.dim(), src.dim());
    for (const auto& w : src.sub.basis()) {
        auto img = amb.apply(w);
        if (!dst.sub.contains(img)) {
            out.containment_ok = false;
            out.violation = "image of the denominator subspace leaves the target denominator";
            return out;
        }
    }
    for (int c = 0; c < src.dim(); ++c) {
        auto img = amb.apply(src.reps[c]);
        if (!dst.total.contains(img)) {
            out.containment_ok = false;
            out.violation = "image of a representative leaves the target space";
            return out;
        }
        auto coords = quotient_coords(dst, img);
        for (int r = 0; r < dst.dim(); ++r) out.matrix(r, c) = coords[r];
    }
    return out;
}

}  // namespace jacsyz
