#include "jetline/rep.hpp"

namespace jetline {

GQ factorial(long n) {
    if (n < 0) throw UsageError("factorial of a negative number");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return {mpq_class(f)};
}

GQ binomial(long n, long k) {
    if (k < 0) return GQ(0);
    // Falling factorial over k!; valid for negative n as well.
    GQ num = 1;
    for (long j = 0; j < k; ++j) num *= GQ(n - j);
    return num / factorial(k);
}

SymVector SymVector::monomial(int degree, int j) {
    if (j < 0 || j > degree) throw UsageError("monomial index out of range");
    SymVector v(degree);
    v.coeff(j) = GQ(1);
    return v;
}

SymVector SymVector::power(const SymVector& v, int k) {
    if (v.degree() != 1) throw UsageError("power of a non-linear form");
    SymVector acc(std::vector<GQ>{GQ(1)});
    for (int i = 0; i < k; ++i) acc = form_mul(acc, v);
    return acc;
}

bool SymVector::is_zero() const {
    for (const GQ& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

SymVector SymVector::operator-() const {
    SymVector r = *this;
    for (GQ& c : r.c_) c = -c;
    return r;
}

SymVector& SymVector::operator+=(const SymVector& o) {
    if (degree() != o.degree()) throw UsageError("SymVector degree mismatch");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

SymVector& SymVector::operator-=(const SymVector& o) {
    if (degree() != o.degree()) throw UsageError("SymVector degree mismatch");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

SymVector operator*(const GQ& s, const SymVector& v) {
    SymVector r = v;
    for (GQ& c : r.c_) c = s * c;
    return r;
}

SymVector form_mul(const SymVector& a, const SymVector& b) {
    SymVector r(a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
    return r;
}

SymVector SymVector::d1() const {
    const int k = degree();
    if (k == 0) throw UsageError("derivative of a constant form");
    SymVector r(k - 1);
    for (int j = 0; j < k; ++j) r.coeff(j) = GQ(long(k - j)) * c_[j];
    return r;
}

SymVector SymVector::d2() const {
    const int k = degree();
    if (k == 0) throw UsageError("derivative of a constant form");
    SymVector r(k - 1);
    for (int j = 1; j <= k; ++j) r.coeff(j - 1) = GQ(long(j)) * c_[j];
    return r;
}

std::string SymVector::str() const {
    std::string out = "[";
    for (int j = 0; j <= degree(); ++j) {
        if (j) out += ", ";
        out += c_[j].str();
    }
    return out + "]";
}

Mat sym_rep(int k, const MoebiusMap& g) {
    if (k < 0) throw UsageError("sym_rep degree must be >= 0");
    // g e1 = a e1 + c e2, g e2 = b e1 + d e2; column j is the coefficient
    // vector of (a e1 + c e2)^(k-j) (b e1 + d e2)^j.
    const SymVector ge1(std::vector<GQ>{g.a(), g.c()});
    const SymVector ge2(std::vector<GQ>{g.b(), g.d()});
    Mat m(k + 1, k + 1);
    for (int j = 0; j <= k; ++j) {
        SymVector col(std::vector<GQ>{GQ(1)});
        for (int t = 0; t < k - j; ++t) col = form_mul(col, ge1);
        for (int t = 0; t < j; ++t) col = form_mul(col, ge2);
        for (int i = 0; i <= k; ++i) m.at(i, j) = col.coeff(i);
    }
    return m;
}

GQ omega_pair(const SymVector& u, const SymVector& v) {
    if (u.degree() != 1 || v.degree() != 1)
        throw UsageError("omega_pair needs degree-1 vectors");
    return u.coeff(0) * v.coeff(1) - u.coeff(1) * v.coeff(0);
}

SymVector psi_iso(const GQ& alpha_e1, const GQ& alpha_e2) {
    return SymVector(std::vector<GQ>{alpha_e2, -alpha_e1});
}

SymVector mult_line(const SymVector& v, const SymVector& s) {
    if (v.degree() != 1) throw UsageError("mult_line needs a degree-1 vector");
    return form_mul(v, s);
}

SymVector contract_line(const SymVector& v, const SymVector& dual_form) {
    if (v.degree() != 1) throw UsageError("contract_line needs a degree-1 vector");
    const int j = dual_form.degree();
    if (j == 0) throw UsageError("contract_line needs a positive-degree form");
    SymVector r = v.coeff(0) * dual_form.d1() + v.coeff(1) * dual_form.d2();
    return GQ(1, j) * r;
}

SymVector transvectant(int i, const SymVector& f, const SymVector& g) {
    const int m = f.degree(), n = g.degree();
    if (i < 0 || i > m || i > n) throw UsageError("transvectant index out of range");
    // ((m-i)! (n-i)!)/(m! n!) sum_r (-1)^r C(i,r) d1^(i-r) d2^r f * d1^r d2^(i-r) g
    SymVector acc(m + n - 2 * i);
    for (int r = 0; r <= i; ++r) {
        SymVector df = f;
        for (int t = 0; t < i - r; ++t) df = df.d1();
        for (int t = 0; t < r; ++t) df = df.d2();
        SymVector dg = g;
        for (int t = 0; t < r; ++t) dg = dg.d1();
        for (int t = 0; t < i - r; ++t) dg = dg.d2();
        GQ sign = (r % 2 == 0) ? GQ(1) : GQ(-1);
        acc += (sign * binomial(i, r)) * form_mul(df, dg);
    }
    GQ scale = factorial(m - i) * factorial(n - i) / (factorial(m) * factorial(n));
    return scale * acc;
}

std::vector<SymVector> clebsch_decompose(int m, int n, const Vec& tensor) {
    if (m < 0 || n < 0) throw UsageError("clebsch degrees must be >= 0");
    if (int(tensor.size()) != (m + 1) * (n + 1))
        throw UsageError("clebsch tensor has wrong length");
    const int imax = std::min(m, n);
    std::vector<SymVector> out;
    out.reserve(imax + 1);
    for (int i = 0; i <= imax; ++i) {
        SymVector comp(m + n - 2 * i);
        for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= n; ++b) {
                const GQ& t = tensor[std::size_t(a) * (n + 1) + b];
                if (t.is_zero()) continue;
                comp += t * transvectant(i, SymVector::monomial(m, a), SymVector::monomial(n, b));
            }
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// Matrix of clebsch_decompose as a square map C^((m+1)(n+1)) -> stacked
// component coordinates.
Mat clebsch_matrix(int m, int n) {
    const int dim = (m + 1) * (n + 1);
    Mat big(dim, dim);
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= n; ++b) {
            Vec basis(dim, GQ(0));
            basis[std::size_t(a) * (n + 1) + b] = GQ(1);
            auto comps = clebsch_decompose(m, n, basis);
            int row = 0;
            for (const SymVector& c : comps)
                for (int j = 0; j <= c.degree(); ++j)
                    big.at(row++, a * (n + 1) + b) = c.coeff(j);
        }
    return big;
}

}  // namespace

Vec clebsch_compose(int m, int n, const std::vector<SymVector>& components) {
    const int imax = std::min(m, n);
    if (int(components.size()) != imax + 1)
        throw UsageError("clebsch component count mismatch");
    Vec stacked;
    for (int i = 0; i <= imax; ++i) {
        if (components[i].degree() != m + n - 2 * i)
            throw UsageError("clebsch component degree mismatch");
        for (int j = 0; j <= components[i].degree(); ++j)
            stacked.push_back(components[i].coeff(j));
    }
    return inverse(clebsch_matrix(m, n)) * stacked;
}

GQ p0_pair(int k, const SymVector& a, const SymVector& b) {
    if (a.degree() != k || b.degree() != k) throw UsageError("p0_pair degree mismatch");
    SymVector t = transvectant(k, a, b);
    return t.coeff(0);
}

Mat p0_pairing_matrix(int k) {
    Mat w(k + 1, k + 1);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j)
            w.at(i, j) = p0_pair(k, SymVector::monomial(k, i), SymVector::monomial(k, j));
    return w;
}

}  // namespace jetline
