#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace jetline {

/// Raised when an operation is called outside its contract (mismatched
/// orders, bad degrees, malformed input, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation hits a pole or a zero constant term.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a Moebius image leaves the affine chart (cz + d = 0).
struct ChartEscapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact complex scalar re + im*i with arbitrary-precision rational parts.
/// All arithmetic is exact; GMP keeps both parts in canonical reduced form.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int v) : re_(v), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {}
    /// Rational re = num/den.
    GaussianRational(long num, long den);

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    /// Parses the scalar literal syntax "p/q" / "p/q+r/si", e.g. "3/4+1/2i",
    /// "-2", "0+1i".  Throws UsageError on malformed input.
    static GaussianRational parse(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, mpq_class(-im_)}; }
    /// re^2 + im^2 (zero iff the value is zero).
    mpq_class norm() const;
    /// Multiplicative inverse; throws SingularityError on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Integer power (negative exponents invert; 0^0 = 1).
    GaussianRational pow(long e) const;

    /// Scalar literal form, inverse of parse().
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

private:
    mpq_class re_, im_;
};

using GQ = GaussianRational;

}  // namespace jetline
