#pragma once

#include "jetline/gaussian_rational.hpp"
#include "jetline/poly.hpp"

#include <vector>

namespace jetline {

/// Dense matrix over any exact coefficient ring (GaussianRational, Poly,
/// RatFun).  Field-only routines (nullspace, inverse, ...) live below as
/// free functions on Mat = Matrix<GaussianRational>.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, T()) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(GQ(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw UsageError("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
            }
        return m;
    }

    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = s * m.a_[k];
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (int(v.size()) != cols_) throw UsageError("matrix-vector shape mismatch");
        std::vector<T> out(rows_, T());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Kronecker product.
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j)
                for (int p = 0; p < b.rows_; ++p)
                    for (int q = 0; q < b.cols_; ++q)
                        m.at(i * b.rows_ + p, j * b.cols_ + q) = a.at(i, j) * b.at(p, q);
        return m;
    }

    /// Writes `block` with its (0,0) entry at (i0, j0).
    void set_block(int i0, int j0, const Matrix& block) {
        for (int i = 0; i < block.rows_; ++i)
            for (int j = 0; j < block.cols_; ++j) at(i0 + i, j0 + j) = block.at(i, j);
    }

    Matrix block(int i0, int j0, int rows, int cols) const {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = at(i0 + i, j0 + j);
        return m;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch");
    }
    int rows_, cols_;
    std::vector<T> a_;
};

using Mat = Matrix<GaussianRational>;
using PolyMat = Matrix<Poly>;
using RatMat = Matrix<RatFun>;
using Vec = std::vector<GaussianRational>;

PolyMat to_poly_mat(const Mat& m);
Mat eval(const PolyMat& m, const GQ& z);
Mat eval(const RatMat& m, const GQ& z);

/// Exact basis of the right nullspace {v : M v = 0}.  Forward elimination is
/// fraction-free (Bareiss) on the denominator-cleared matrix; basis vectors
/// are scaled so their first nonzero entry is 1.
std::vector<Vec> exact_nullspace(const Mat& m);

int rank(const Mat& m);

/// Square inverse; throws SingularityError if singular.
Mat inverse(const Mat& m);

GQ determinant(const Mat& m);

/// Least structure needed for inhomogeneous systems: returns true and fills
/// `solution` if M x = rhs is solvable (any one solution).
bool solve_linear(const Mat& m, const Vec& rhs, Vec& solution);

}  // namespace jetline
