#pragma once

#include "jetline/gaussian_rational.hpp"

#include <vector>

namespace jetline {

/// Dense univariate polynomial over GaussianRational.  Coefficient j is the
/// coefficient of z^j; the vector carries no trailing zeros, so the zero
/// polynomial has an empty vector and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(const GQ& c) { c_.push_back(c); trim(); }
    explicit Poly(std::vector<GQ> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(GQ(1)); }
    /// The coordinate polynomial z.
    static Poly var() { return Poly(std::vector<GQ>{GQ(0), GQ(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<GQ>& coeffs() const { return c_; }
    GQ coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[j] : GQ(0);
    }
    GQ leading() const { return c_.empty() ? GQ(0) : c_.back(); }

    GQ eval(const GQ& z) const;
    Poly derivative() const;
    /// Coefficients of p(z0 + t) as a polynomial in t.
    Poly shifted(const GQ& z0) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GQ& s, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    /// Monic gcd (1 for coprime inputs, 0 only if both are 0).
    static Poly gcd(Poly a, Poly b);

    /// Leading coefficient 1 (zero stays zero).
    Poly monic() const;

    std::string str() const;  // human-readable, for diagnostics

private:
    void trim() {
        while (!c_.empty() && c_.back() == GQ(0)) c_.pop_back();
    }
    std::vector<GQ> c_;
};

/// Reduced fraction of polynomials: gcd(num, den) = 1 and den is monic.
class RatFun {
public:
    RatFun() : num_(), den_(Poly::one()) {}
    RatFun(const GQ& c) : num_(c), den_(Poly::one()) {}
    RatFun(const Poly& p) : num_(p), den_(Poly::one()) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool has_pole_at(const GQ& z) const { return den_.eval(z).is_zero(); }
    /// Throws SingularityError at a pole.
    GQ eval(const GQ& z) const;

    RatFun derivative() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const;

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace jetline
