#pragma once

#include <stdexcept>
#include <vector>

#include "agcodes/rational.hpp"

namespace agcodes {

/// Dense matrix over a finite field; entries are element indices.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(FieldRef F, int rows, int cols)
        : F_(std::move(F)), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static FqMatrix identity(const FieldRef& F, int n) {
        FqMatrix m(F, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const FieldRef& field() const { return F_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    int at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    std::vector<int> row(int i) const {
        return std::vector<int>(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
    }

    FqMatrix transposed() const {
        FqMatrix t(F_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        FqMatrix c(a.F_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                int v = a.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    c.at(i, j) = a.F_->add(c.at(i, j), a.F_->mul(v, b.at(k, j)));
            }
        return c;
    }

    friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ &&
               same_field(a.F_, b.F_);
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c) != 0) { sel = i; break; }
            if (sel < 0) continue;
            if (sel != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            int inv = F_->inv(at(r, c));
            for (int j = 0; j < cols_; ++j) at(r, j) = F_->mul(at(r, j), inv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                int f = at(i, c);
                for (int j = 0; j < cols_; ++j)
                    at(i, j) = F_->sub(at(i, j), F_->mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        FqMatrix m = *this;
        return int(m.rref().size());
    }

    /// Rows with any nonzero entry, after rref: a canonical full-rank
    /// generator of the row space.
    FqMatrix row_basis() const {
        FqMatrix m = *this;
        auto pivots = m.rref();
        FqMatrix out(F_, int(pivots.size()), cols_);
        for (size_t i = 0; i < pivots.size(); ++i)
            for (int j = 0; j < cols_; ++j) out.at(int(i), j) = m.at(int(i), j);
        return out;
    }

    /// Basis of the right nullspace {x : A x = 0}, one solution per column of
    /// the result.
    FqMatrix null_space() const {
        FqMatrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        int free_count = cols_ - int(pivots.size());
        FqMatrix out(F_, cols_, free_count);
        int fc = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            out.at(c, fc) = 1;
            for (size_t r = 0; r < pivots.size(); ++r)
                out.at(pivots[r], fc) = F_->neg(m.at(int(r), c));
            ++fc;
        }
        return out;
    }

private:
    FieldRef F_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> a_;
};

inline bool same_row_space(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols() != b.cols()) return false;
    FqMatrix ra = a.row_basis(), rb = b.row_basis();
    return ra == rb;
}

/// Solve x A = b for a single row vector b (x has a.rows() entries); empty
/// result when the system is inconsistent or underdetermined ambiguity is
/// resolved by requiring full row rank of A.
inline std::vector<int> solve_left(const FqMatrix& A, const std::vector<int>& b) {
    if (int(b.size()) != A.cols()) throw std::invalid_argument("rhs length mismatch");
    const FieldRef& F = A.field();
    // augmented system on the transpose: A^T x^T = b^T
    FqMatrix aug(F, A.cols(), A.rows() + 1);
    for (int i = 0; i < A.cols(); ++i) {
        for (int j = 0; j < A.rows(); ++j) aug.at(i, j) = A.at(j, i);
        aug.at(i, A.rows()) = b[i];
    }
    auto pivots = aug.rref();
    std::vector<int> x(A.rows(), 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == A.rows()) return {};  // inconsistent
        x[pivots[r]] = aug.at(int(r), A.rows());
    }
    if (int(pivots.size()) < A.rows()) return {};  // solution not unique
    return x;
}

/// Dense matrix of rational functions; used for local components of adelic
/// matrices.  Small (r <= 3 in practice), so plain Gaussian elimination with
/// exact arithmetic is fine.
using RatMat = std::vector<std::vector<RationalFunction>>;

inline RatMat rat_identity(const FieldRef& F, int n) {
    RatMat m(n, std::vector<RationalFunction>(n, RationalFunction::zero(F)));
    for (int i = 0; i < n; ++i) m[i][i] = RationalFunction::one(F);
    return m;
}

inline bool rat_is_identity(const RatMat& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            if (i == j && !m[i][j].is_one()) return false;
            if (i != j && !m[i][j].is_zero()) return false;
        }
    return true;
}

inline RatMat rat_transpose(const RatMat& a) {
    if (a.empty()) return a;
    RatMat t(a[0].size(), std::vector<RationalFunction>(a.size(), RationalFunction()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    if (a.empty() || a[0].size() != k) throw std::invalid_argument("matrix dimension mismatch");
    const FieldRef& F = a[0][0].field();
    RatMat c(n, std::vector<RationalFunction>(m, RationalFunction::zero(F)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][l] * b[l][j];
        }
    return c;
}

inline RatMat rat_scale(const RatMat& a, const RationalFunction& s) {
    RatMat c = a;
    for (auto& row : c)
        for (auto& e : row) e = e * s;
    return c;
}

inline RationalFunction rat_det(RatMat m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    const FieldRef& F = m[0][0].field();
    RationalFunction det = RationalFunction::one(F);
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m[sel][c].is_zero()) ++sel;
        if (sel == n) return RationalFunction::zero(F);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        RationalFunction inv = m[c][c].inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            RationalFunction f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

inline RatMat rat_inverse(const RatMat& a) {
    size_t n = a.size();
    if (n == 0) throw std::invalid_argument("inverse of empty matrix");
    const FieldRef& F = a[0][0].field();
    RatMat m = a;
    RatMat inv = rat_identity(F, int(n));
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m[sel][c].is_zero()) ++sel;
        if (sel == n) throw std::domain_error("singular matrix has no inverse");
        if (sel != c) {
            std::swap(m[sel], m[c]);
            std::swap(inv[sel], inv[c]);
        }
        RationalFunction piv = m[c][c].inverse();
        for (size_t j = 0; j < n; ++j) {
            m[c][j] = m[c][j] * piv;
            inv[c][j] = inv[c][j] * piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            RationalFunction f = m[i][c];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] = m[i][j] - f * m[c][j];
                inv[i][j] = inv[i][j] - f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace agcodes
