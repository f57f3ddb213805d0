#include "jetline/moebius.hpp"

namespace jetline {

MoebiusMap::MoebiusMap(GQ a, GQ b, GQ c, GQ d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != GQ(1))
        throw UsageError("Moebius map needs determinant 1");
}

bool MoebiusMap::is_identity() const {
    return a_ == GQ(1) && b_ == GQ(0) && c_ == GQ(0) && d_ == GQ(1);
}

GQ MoebiusMap::act(const GQ& z) const {
    GQ den = denom_at(z);
    if (den.is_zero()) throw ChartEscapeError("Moebius image leaves the chart");
    return (a_ * z + b_) / den;
}

GQ MoebiusMap::automorphy(int n, const GQ& z) const {
    GQ den = denom_at(z);
    if (den.is_zero()) throw ChartEscapeError("automorphy factor at a chart-escape point");
    return den.pow(n);
}

TruncSeries MoebiusMap::act_series(const GQ& z0, int order) const {
    GQ den = denom_at(z0);
    if (den.is_zero()) throw ChartEscapeError("Moebius series at a chart-escape point");
    // (a(z0+t) + b) / (c(z0+t) + d) as series in t.
    TruncSeries num(z0, order);
    num.coeff(0) = a_ * z0 + b_;
    if (order >= 1) num.coeff(1) = a_;
    TruncSeries dens(z0, order);
    dens.coeff(0) = den;
    if (order >= 1) dens.coeff(1) = c_;
    return series_mul(num, series_reciprocal(dens));
}

TruncSeries MoebiusMap::automorphy_series(int n, const GQ& z0, int order) const {
    GQ den = denom_at(z0);
    if (den.is_zero()) throw ChartEscapeError("automorphy series at a chart-escape point");
    TruncSeries dens(z0, order);
    dens.coeff(0) = den;
    if (order >= 1) dens.coeff(1) = c_;
    return series_pow(dens, n);
}

MoebiusMap compose(const MoebiusMap& g2, const MoebiusMap& g1) {
    return {g2.a_ * g1.a_ + g2.b_ * g1.c_, g2.a_ * g1.b_ + g2.b_ * g1.d_,
            g2.c_ * g1.a_ + g2.d_ * g1.c_, g2.c_ * g1.b_ + g2.d_ * g1.d_};
}

std::string MoebiusMap::str() const {
    return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

MoebiusMap random_element(Rng& rng, long height) {
    if (height < 1) throw UsageError("height must be >= 1");
    for (;;) {
        GQ a = rng.next_nonzero(height);
        GQ b = rng.next_gaussian_rational(height);
        GQ c = rng.next_gaussian_rational(height);
        GQ d = (GQ(1) + b * c) / a;
        MoebiusMap g(a, b, c, d);
        bool ok = true;
        for (long z = 0; z <= 2 && ok; ++z) ok = g.in_chart(GQ(z));
        if (ok) return g;
    }
}

}  // namespace jetline
