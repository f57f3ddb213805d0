#pragma once

#include "jetline/moebius.hpp"

namespace jetline {

/// Element of Sym^k(V) as a binary form in the basis vectors e1, e2:
/// coeffs[j] multiplies the monomial e1^(k-j) e2^j.
class SymVector {
public:
    explicit SymVector(int degree) : c_(degree + 1, GQ(0)) {
        if (degree < 0) throw UsageError("SymVector degree must be >= 0");
    }
    explicit SymVector(std::vector<GQ> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw UsageError("SymVector needs degree >= 0");
    }

    static SymVector e1() { return SymVector(std::vector<GQ>{GQ(1), GQ(0)}); }
    static SymVector e2() { return SymVector(std::vector<GQ>{GQ(0), GQ(1)}); }
    /// Monomial basis element e1^(k-j) e2^j.
    static SymVector monomial(int degree, int j);
    /// (v1 e1 + v2 e2)^k for a degree-1 vector v.
    static SymVector power(const SymVector& v, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const GQ& coeff(int j) const { return c_[j]; }
    GQ& coeff(int j) { return c_[j]; }
    const std::vector<GQ>& coeffs() const { return c_; }
    bool is_zero() const;

    SymVector operator-() const;
    SymVector& operator+=(const SymVector& o);
    SymVector& operator-=(const SymVector& o);
    friend SymVector operator+(SymVector a, const SymVector& b) { return a += b; }
    friend SymVector operator-(SymVector a, const SymVector& b) { return a -= b; }
    friend SymVector operator*(const GQ& s, const SymVector& v);
    friend bool operator==(const SymVector& a, const SymVector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SymVector& a, const SymVector& b) { return !(a == b); }

    /// Product of binary forms (degrees add).
    friend SymVector form_mul(const SymVector& a, const SymVector& b);
    /// Partial derivative with respect to e1 resp. e2 (degree drops by one;
    /// derivative of a degree-0 form is a usage error).
    SymVector d1() const;
    SymVector d2() const;

    std::string str() const;

private:
    std::vector<GQ> c_;
};

/// Matrix of Sym^k(g) in the monomial basis; a homomorphism in g with
/// determinant 1.  sym_rep(1, g) is the matrix of g itself.
Mat sym_rep(int k, const MoebiusMap& g);

/// omega(u, v) = u1 v2 - u2 v1 on degree-1 vectors; omega(e1, e2) = 1.
GQ omega_pair(const SymVector& u, const SymVector& v);

/// The vector v with omega(v, .) = alpha for a functional alpha given by its
/// values (alpha(e1), alpha(e2)).  psi_iso(e2*) = e1, psi_iso(e1*) = -e2.
SymVector psi_iso(const GQ& alpha_e1, const GQ& alpha_e2);

/// Symmetric multiplication by a degree-1 vector.
SymVector mult_line(const SymVector& v, const SymVector& s);

/// Contraction of a degree-j dual form by a degree-1 vector, normalized so
/// that alpha^j -> alpha(v) alpha^(j-1) on rank-one functionals.
SymVector contract_line(const SymVector& v, const SymVector& dual_form);

/// Classical i-th transvectant of binary forms, with the
/// (m-i)! (n-i)! / (m! n!) normalization; then (v^k, u^k)_k = omega(v, u)^k.
SymVector transvectant(int i, const SymVector& f, const SymVector& g);

/// Clebsch-Gordan components (transvectant(0), ..., transvectant(min(m, n)))
/// of a tensor in Sym^m (x) Sym^n, given as an (m+1)(n+1) coefficient vector
/// indexed a*(n+1)+b over monomial pairs.
std::vector<SymVector> clebsch_decompose(int m, int n, const Vec& tensor);

/// Two-sided inverse of clebsch_decompose.
Vec clebsch_compose(int m, int n, const std::vector<SymVector>& components);

/// Invariant pairing on Sym^k (x) Sym^k: the k-th transvectant scalar, with
/// p0_pair(k, v^k, u^k) = omega(v, u)^k.
GQ p0_pair(int k, const SymVector& a, const SymVector& b);

/// The coefficient matrix W with p0_pair(k, x, y) = sum x_i W_ij y_j.
Mat p0_pairing_matrix(int k);

/// Binomial coefficient with integer (possibly negative) upper argument.
GQ binomial(long n, long k);

GQ factorial(long n);

}  // namespace jetline
