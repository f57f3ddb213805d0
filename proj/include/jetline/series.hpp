#pragma once

#include "jetline/linalg.hpp"

#include <vector>

namespace jetline {

/// Truncated power series at a base point: Taylor coefficients in
/// (z - base_point), degrees 0..order.  Arithmetic is closed at fixed order;
/// mixing base points or orders is a usage error.
class TruncSeries {
public:
    TruncSeries(GQ base_point, int order)
        : base_(std::move(base_point)), c_(order + 1, GQ(0)) {
        if (order < 0) throw UsageError("series order must be >= 0");
    }
    TruncSeries(GQ base_point, std::vector<GQ> coeffs)
        : base_(std::move(base_point)), c_(std::move(coeffs)) {
        if (c_.empty()) throw UsageError("series needs at least the constant term");
    }

    static TruncSeries constant(const GQ& value, const GQ& base_point, int order);
    /// The series of the coordinate z itself: base + t.
    static TruncSeries coordinate(const GQ& base_point, int order);
    /// Taylor expansion of a polynomial at base_point, truncated.
    static TruncSeries of_poly(const Poly& p, const GQ& base_point, int order);
    /// Taylor expansion of a rational function; throws SingularityError at poles.
    static TruncSeries of_ratfun(const RatFun& f, const GQ& base_point, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const GQ& base_point() const { return base_; }
    const GQ& coeff(int j) const { return c_[j]; }
    GQ& coeff(int j) { return c_[j]; }
    const std::vector<GQ>& coeffs() const { return c_; }

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const GQ& s, const TruncSeries& f);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.base_ == b.base_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string str() const;

private:
    GQ base_;
    std::vector<GQ> c_;
};

/// Cauchy product truncated at the common order.
TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g);

/// Taylor expansion of f o g: f's base point must equal g's constant term;
/// the result carries g's base point.  Orders must agree.
TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g);

/// g with f*g = 1 to the common order; zero constant term is a singularity.
TruncSeries series_reciprocal(const TruncSeries& f);

/// Derivative, one order shorter (order 0 input is a usage error).
TruncSeries series_derivative(const TruncSeries& f);

/// f^e at fixed order (e may be negative; then the constant term must be nonzero).
TruncSeries series_pow(const TruncSeries& f, long e);

/// Matrix-valued truncated series: coefficient list of square matrices.
class MatSeries {
public:
    MatSeries(GQ base_point, int order, int dim)
        : base_(std::move(base_point)), c_(order + 1, Mat(dim, dim)) {}
    MatSeries(GQ base_point, std::vector<Mat> coeffs)
        : base_(std::move(base_point)), c_(std::move(coeffs)) {
        if (c_.empty()) throw UsageError("matrix series needs a constant term");
    }

    static MatSeries identity(const GQ& base_point, int order, int dim);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    int dim() const { return c_[0].rows(); }
    const GQ& base_point() const { return base_; }
    const Mat& coeff(int j) const { return c_[j]; }
    Mat& coeff(int j) { return c_[j]; }

    /// Entry (i, j) as a scalar series.
    TruncSeries entry(int i, int j) const;

    friend MatSeries operator*(const MatSeries& a, const MatSeries& b);
    friend MatSeries operator*(const TruncSeries& s, const MatSeries& a);
    friend bool operator==(const MatSeries& a, const MatSeries& b) {
        return a.base_ == b.base_ && a.c_ == b.c_;
    }

    /// Multiplicative inverse; the constant matrix must be invertible.
    MatSeries inv() const;

    /// Reparametrization A o g for scalar series g with g's constant term
    /// equal to this base point; the result carries g's base point.
    MatSeries compose(const TruncSeries& g) const;

    MatSeries derivative() const;

private:
    GQ base_;
    std::vector<Mat> c_;
};

}  // namespace jetline
