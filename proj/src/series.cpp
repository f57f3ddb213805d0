#include "jetline/series.hpp"

namespace jetline {

namespace {

void check_compatible(const TruncSeries& a, const TruncSeries& b) {
    if (a.base_point() != b.base_point())
        throw UsageError("series base points differ");
    if (a.order() != b.order()) throw UsageError("series orders differ");
}

}  // namespace

TruncSeries TruncSeries::constant(const GQ& value, const GQ& base_point, int order) {
    TruncSeries s(base_point, order);
    s.coeff(0) = value;
    return s;
}

TruncSeries TruncSeries::coordinate(const GQ& base_point, int order) {
    if (order < 1) throw UsageError("coordinate series needs order >= 1");
    TruncSeries s(base_point, order);
    s.coeff(0) = base_point;
    s.coeff(1) = GQ(1);
    return s;
}

TruncSeries TruncSeries::of_poly(const Poly& p, const GQ& base_point, int order) {
    Poly sh = p.shifted(base_point);
    TruncSeries s(base_point, order);
    for (int j = 0; j <= order; ++j) s.coeff(j) = sh.coeff(j);
    return s;
}

TruncSeries TruncSeries::of_ratfun(const RatFun& f, const GQ& base_point, int order) {
    TruncSeries num = of_poly(f.num(), base_point, order);
    TruncSeries den = of_poly(f.den(), base_point, order);
    return series_mul(num, series_reciprocal(den));
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (GQ& c : r.c_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_compatible(*this, o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_compatible(*this, o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

TruncSeries operator*(const GQ& s, const TruncSeries& f) {
    TruncSeries r = f;
    for (int j = 0; j <= r.order(); ++j) r.coeff(j) = s * r.coeff(j);
    return r;
}

std::string TruncSeries::str() const {
    std::string out = "[" + base_.str() + "]";
    for (int j = 0; j <= order(); ++j) out += " " + c_[j].str();
    return out;
}

TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g) {
    check_compatible(f, g);
    const int k = f.order();
    TruncSeries r(f.base_point(), k);
    for (int i = 0; i <= k; ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= k; ++j) r.coeff(i + j) += f.coeff(i) * g.coeff(j);
    }
    return r;
}

TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g) {
    if (f.order() != g.order()) throw UsageError("series orders differ in compose");
    if (f.base_point() != g.coeff(0))
        throw UsageError("compose needs f's base point = g's constant term");
    const int k = f.order();
    // h = g - g(base), zero constant term; evaluate f by Horner in h.
    TruncSeries h = g;
    h.coeff(0) = GQ(0);
    TruncSeries acc = TruncSeries::constant(f.coeff(k), g.base_point(), k);
    for (int j = k - 1; j >= 0; --j) {
        acc = series_mul(acc, h);
        acc.coeff(0) += f.coeff(j);
    }
    return acc;
}

TruncSeries series_reciprocal(const TruncSeries& f) {
    if (f.coeff(0).is_zero())
        throw SingularityError("series reciprocal: zero constant term");
    const int k = f.order();
    TruncSeries r(f.base_point(), k);
    GQ inv0 = f.coeff(0).inverse();
    r.coeff(0) = inv0;
    for (int j = 1; j <= k; ++j) {
        GQ s = 0;
        for (int i = 1; i <= j; ++i) s += f.coeff(i) * r.coeff(j - i);
        r.coeff(j) = -inv0 * s;
    }
    return r;
}

TruncSeries series_derivative(const TruncSeries& f) {
    if (f.order() < 1) throw UsageError("derivative of order-0 series");
    TruncSeries r(f.base_point(), f.order() - 1);
    for (int j = 1; j <= f.order(); ++j) r.coeff(j - 1) = GQ(long(j)) * f.coeff(j);
    return r;
}

TruncSeries series_pow(const TruncSeries& f, long e) {
    if (e < 0) return series_pow(series_reciprocal(f), -e);
    TruncSeries acc = TruncSeries::constant(GQ(1), f.base_point(), f.order());
    TruncSeries base = f;
    while (e > 0) {
        if (e & 1) acc = series_mul(acc, base);
        base = series_mul(base, base);
        e >>= 1;
    }
    return acc;
}

MatSeries MatSeries::identity(const GQ& base_point, int order, int dim) {
    MatSeries s(base_point, order, dim);
    s.c_[0] = Mat::identity(dim);
    return s;
}

TruncSeries MatSeries::entry(int i, int j) const {
    TruncSeries s(base_, order());
    for (int d = 0; d <= order(); ++d) s.coeff(d) = c_[d].at(i, j);
    return s;
}

MatSeries operator*(const MatSeries& a, const MatSeries& b) {
    if (a.base_ != b.base_ || a.order() != b.order() || a.dim() != b.dim())
        throw UsageError("matrix series mismatch");
    const int k = a.order();
    MatSeries r(a.base_, k, a.dim());
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

MatSeries operator*(const TruncSeries& s, const MatSeries& a) {
    if (s.base_point() != a.base_point() || s.order() != a.order())
        throw UsageError("matrix series mismatch");
    const int k = a.order();
    MatSeries r(a.base_point(), k, a.dim());
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) r.coeff(i + j) += s.coeff(i) * a.coeff(j);
    return r;
}

MatSeries MatSeries::inv() const {
    const int k = order();
    Mat inv0 = inverse(c_[0]);
    MatSeries r(base_, k, dim());
    r.c_[0] = inv0;
    for (int j = 1; j <= k; ++j) {
        Mat s(dim(), dim());
        for (int i = 1; i <= j; ++i) s += c_[i] * r.c_[j - i];
        r.c_[j] = -(inv0 * s);
    }
    return r;
}

MatSeries MatSeries::compose(const TruncSeries& g) const {
    if (order() != g.order()) throw UsageError("matrix series compose order mismatch");
    if (base_ != g.coeff(0))
        throw UsageError("matrix series compose base mismatch");
    const int k = order();
    TruncSeries h = g;
    h.coeff(0) = GQ(0);
    MatSeries acc(g.base_point(), k, dim());
    acc.c_[0] = c_[k];
    for (int j = k - 1; j >= 0; --j) {
        acc = h * acc;
        acc.c_[0] += c_[j];
    }
    return acc;
}

MatSeries MatSeries::derivative() const {
    if (order() < 1) throw UsageError("derivative of order-0 matrix series");
    MatSeries r(base_, order() - 1, dim());
    for (int j = 1; j <= order(); ++j) r.c_[j - 1] = GQ(long(j)) * c_[j];
    return r;
}

}  // namespace jetline
